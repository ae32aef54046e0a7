from django.urls import path
from . import views

urlpatterns = [
    path("poly/", views.PolyView.as_view(), name="pipedream-poly"),
    path("top/", views.TopView.as_view(), name="pipedream-top"),
]
