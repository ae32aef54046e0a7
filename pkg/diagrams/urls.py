from django.urls import path
from . import views

urlpatterns = [
    path("", views.DiagramListView.as_view(), name="diagram-list"),
    path("render/", views.RenderView.as_view(), name="diagram-render"),
    path("map/", views.MapView.as_view(), name="diagram-map"),
]
