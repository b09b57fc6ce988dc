from django.apps import AppConfig


class AnalyticConfig(AppConfig):
    name = 'analytic'
