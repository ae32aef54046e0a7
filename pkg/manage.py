#!/usr/bin/env python
"""
Entry point for the pipe dream tools.

    python manage.py pipedreams poly --w 2,4,1,3
    python manage.py pipedreams check --what thm43 --n 6 --inverse-fireworks-only
    python manage.py runserver
"""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Install requirements.txt into the active environment."
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    main()
