#!/usr/bin/env python
"""
Runs django management commands against the development settings, e.g.

    python manage.py migrate diamondpaths
    python manage.py diamondpaths verify lemma2 --order 3 --record
"""
import sys

# These lines allow nose tests to work in Python 3.10
import collections.abc
collections.Callable = collections.abc.Callable

from settings import configure_settings

if __name__ == '__main__':
    configure_settings()

    from django.core.management import execute_from_command_line

    execute_from_command_line(sys.argv)
