# -*- coding: utf-8 -*-
import django.core.serializers.json
from django.db import models, migrations


class Migration(migrations.Migration):

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationReport',
            fields=[
                ('id', models.AutoField(verbose_name='ID', serialize=False, auto_created=True, primary_key=True)),
                ('experiment', models.CharField(max_length=64, db_index=True)),
                ('replay_key', models.CharField(max_length=64, unique=True)),
                ('fingerprint', models.CharField(max_length=64)),
                ('params', models.JSONField(encoder=django.core.serializers.json.DjangoJSONEncoder)),
                ('seed', models.TextField(null=True)),
                ('attempted', models.IntegerField(default=0)),
                ('passed', models.IntegerField(default=0)),
                ('max_observed', models.IntegerField(null=True)),
                ('fallbacks', models.IntegerField(default=0)),
                ('counterexamples', models.JSONField(default=list, encoder=django.core.serializers.json.DjangoJSONEncoder)),
                ('duration', models.FloatField(null=True)),
                ('time_recorded', models.DateTimeField(auto_now=True)),
            ],
            options={
            },
            bases=(models.Model,),
        ),
    ]
