from django.apps import AppConfig


class MamindaConfig(AppConfig):
    name = 'maminda'
    verbose_name = 'Ma-Minda classes'
