from pathlib import Path
import os
import environ

# Build paths inside the project like this: BASE_DIR / 'subdir'.

# .env 설정
env = environ.Env(
    DEBUG=(bool, False),
    PIPEDREAM_MAX_N=(int, 7),
    PIPEDREAM_SWEEP_WORKERS=(int, 1),
    PIPEDREAM_CACHE_DIR=(str, ""),
    PIPEDREAM_LOG_LEVEL=(str, "WARNING"),
)

BASE_DIR = Path(__file__).resolve().parent.parent

environ.Env.read_env(env_file=os.path.join(BASE_DIR, ".env"))

SECRET_KEY = env("SECRET_KEY", default="pipedreams-local-development-key")

DEBUG = env("DEBUG")

ALLOWED_HOSTS = ["*"]

# Application definition

THIRD_PARTY_APPS = [
    "rest_framework",
]

CUSTOM_APPS = [
    "permutations.apps.PermutationsConfig",
    "diagrams.apps.DiagramsConfig",
    "polynomials.apps.PolynomialsConfig",
    "pipedreams.apps.PipedreamsConfig",
    "mvpds.apps.MvpdsConfig",
    "bvpds.apps.BvpdsConfig",
    "supports.apps.SupportsConfig",
    "harness.apps.HarnessConfig",
]

SYSTEM_APPS = []

INSTALLED_APPS = SYSTEM_APPS + THIRD_PARTY_APPS + CUSTOM_APPS


MIDDLEWARE = [
    "django.middleware.security.SecurityMiddleware",
    "django.middleware.common.CommonMiddleware",
]

ROOT_URLCONF = "config.urls"

WSGI_APPLICATION = "config.wsgi.application"

# No ORM models: every result is recomputed from the enumeration engines.
DATABASES = {}

REST_FRAMEWORK = {
    "DEFAULT_AUTHENTICATION_CLASSES": [],
    "DEFAULT_PERMISSION_CLASSES": ["rest_framework.permissions.AllowAny"],
    "DEFAULT_RENDERER_CLASSES": ["rest_framework.renderers.JSONRenderer"],
    "DEFAULT_PARSER_CLASSES": ["rest_framework.parsers.JSONParser"],
    "UNAUTHENTICATED_USER": None,
}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = "ko-kr"

TIME_ZONE = "Asia/Seoul"

USE_I18N = True

USE_TZ = True


# Pipe dream engines

# 2^(n(n-1)/2) fillings are swept, so n = 7 is the default ceiling
PIPEDREAM_MAX_N = env("PIPEDREAM_MAX_N")

PIPEDREAM_SWEEP_WORKERS = env("PIPEDREAM_SWEEP_WORKERS")

PIPEDREAM_CACHE_DIR = env("PIPEDREAM_CACHE_DIR") or None

PIPEDREAM_LOG_LEVEL = env("PIPEDREAM_LOG_LEVEL")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "simple": {
            "format": "[{levelname}] {name}: {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        app: {
            "level": PIPEDREAM_LOG_LEVEL,
            "handlers": ["console"],
            "propagate": False,
        }
        for app in (
            "permutations",
            "diagrams",
            "polynomials",
            "pipedreams",
            "mvpds",
            "bvpds",
            "supports",
            "harness",
        )
    },
}
