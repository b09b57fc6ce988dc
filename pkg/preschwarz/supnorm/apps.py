from django.apps import AppConfig


class SupnormConfig(AppConfig):
    name = 'supnorm'
