from django.apps import AppConfig


class RootfindConfig(AppConfig):
    name = 'rootfind'
