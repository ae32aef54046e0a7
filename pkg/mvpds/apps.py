from django.apps import AppConfig


class MvpdsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'mvpds'
