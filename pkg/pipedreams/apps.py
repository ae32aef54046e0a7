from django.apps import AppConfig


class PipedreamsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'pipedreams'
