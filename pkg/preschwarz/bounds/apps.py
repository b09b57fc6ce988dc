from django.apps import AppConfig


class BoundsConfig(AppConfig):
    name = 'bounds'
