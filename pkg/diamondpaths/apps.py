from django.apps import AppConfig


class DiamondPathsConfig(AppConfig):
    name = 'diamondpaths'
    verbose_name = 'Diamond Paths'
    default_auto_field = 'django.db.models.AutoField'

    def ready(self):
        import diamondpaths.formats
        assert diamondpaths
