import logging

from django.core.serializers.json import DjangoJSONEncoder
from django.db import models
from django.db.models import JSONField
from manager_utils import ManagerUtilsManager

from diamondpaths.decorators import transaction_atomic_with_retry


LOG = logging.getLogger(__name__)


class VerificationReportManager(ManagerUtilsManager):
    """
    Stores experiment reports keyed on their replay key, so a replayed run can be compared with
    the recorded one.
    """
    @transaction_atomic_with_retry()
    def record(self, *reports):
        """
        Upserts the given reports and returns the replay keys whose stored fingerprint differed
        from the new one, in the order the reports were given.
        """
        drifted = []
        for report in reports:
            replay_key = report.replay_key
            fingerprint = report.fingerprint

            existing = self.get_or_none(replay_key=replay_key)
            if existing is not None and existing.fingerprint != fingerprint:
                LOG.error(
                    'report %s %s drifted: stored fingerprint %s, replay gave %s',
                    report.experiment, replay_key, existing.fingerprint, fingerprint,
                )
                drifted.append(replay_key)

            fields = {
                'experiment': report.experiment,
                'fingerprint': fingerprint,
                'params': report.params,
                'seed': None if report.seed is None else str(report.seed),
                'attempted': report.attempted,
                'passed': report.passed,
                'max_observed': report.max_observed,
                'fallbacks': report.fallbacks,
                'counterexamples': report.counterexamples,
                'duration': report.duration,
            }
            self.upsert(replay_key=replay_key, defaults=fields, updates=fields)

        return drifted


class VerificationReport(models.Model):
    """
    A recorded experiment run.
    """
    # The experiment name, e.g. lemma1 or f-table
    experiment = models.CharField(max_length=64, db_index=True)

    # sha256 of the experiment name, parameters and seed
    replay_key = models.CharField(max_length=64, unique=True)

    # sha256 of the report body without timing
    fingerprint = models.CharField(max_length=64)

    params = JSONField(encoder=DjangoJSONEncoder)

    # Seeds are unsigned 64-bit values, stored as text
    seed = models.TextField(null=True)

    attempted = models.IntegerField(default=0)
    passed = models.IntegerField(default=0)
    max_observed = models.IntegerField(null=True)
    fallbacks = models.IntegerField(default=0)
    counterexamples = JSONField(default=list, encoder=DjangoJSONEncoder)

    # Wall-clock seconds of the recorded run
    duration = models.FloatField(null=True)

    time_recorded = models.DateTimeField(auto_now=True)

    objects = VerificationReportManager()

    def __str__(self):
        return '{0} {1}/{2}'.format(self.experiment, self.passed, self.attempted)
