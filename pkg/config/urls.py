from django.urls import path, include

urlpatterns = [
    path("api/v1/pipedreams/", include("pipedreams.urls")),
    path("api/v1/diagrams/", include("diagrams.urls")),
    path("api/v1/supports/", include("supports.urls")),
    path("api/v1/harness/", include("harness.urls")),
]
