# rootcount/apps.py
from django.apps import AppConfig


class RootcountConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "rootcount"
    verbose_name = "Prime-power root counting"

    def ready(self):
        from .utils import allow_long_decimals

        allow_long_decimals()
