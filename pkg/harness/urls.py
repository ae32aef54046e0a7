from django.urls import path
from . import views

urlpatterns = [
    path("checks/", views.ChecksView.as_view(), name="harness-checks"),
]
