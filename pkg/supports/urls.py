from django.urls import path
from . import views

urlpatterns = [
    path("construct-up/", views.ConstructUpView.as_view(), name="construct-up"),
]
