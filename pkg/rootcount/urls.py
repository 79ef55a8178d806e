# rootcount/urls.py
from django.urls import path

from . import views

urlpatterns = [
    path("count/", views.count_view, name="count"),
    path("tree.dot", views.tree_dot_view, name="tree_dot"),
]
