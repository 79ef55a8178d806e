"""
URL configuration for the rootcount project.

Only the JSON/DOT API is routed; everything else is a management command.
"""

from django.urls import include, path

urlpatterns = [
    path("api/", include("rootcount.urls")),
]
