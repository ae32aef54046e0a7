from django.apps import AppConfig


class BvpdsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'bvpds'
