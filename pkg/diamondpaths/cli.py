"""
Entry points of the diamondpaths command outside manage.py.

run_cli drives the management command in-process and turns every failure into an exit status
plus an "error: " line on the diagnostic stream. main is the console script: it configures a
minimal standalone django settings object first.
"""
import json
import os
import sys

import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from diamondpaths.constants import EXIT_OK, EXIT_USAGE


DATABASE_ENVIRONMENT_VARIABLE = 'DIAMONDPATHS_DATABASE'

# Diagnostics of the diamondpaths logger go to standard error
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'diagnostic': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'diagnostic',
        },
    },
    'loggers': {
        'diamondpaths': {
            'handlers': ['console'],
            'level': 'WARNING',
            'propagate': False,
        },
    },
}


def _error_message(error):
    message = str(error)
    return message[len('Error: '):] if message.startswith('Error: ') else message


def run_cli(argv, stdin=None, stdout=None, stderr=None):
    """
    Runs the diamondpaths command with the argument vector argv and returns its exit status.
    Output goes to stdout, diagnostics to stderr; graphs are read from stdin.
    """
    # Imported here since the command module needs the app registry
    from diamondpaths.management.commands.diamondpaths import Command

    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr

    command = Command(stdout=stdout, stderr=stderr, no_color=True)
    command.stdin = stdin
    parser = command.create_parser('diamondpaths', 'diamondpaths')

    try:
        options = parser.parse_args(list(argv))
    except CommandError as e:
        stderr.write('error: {0}\n'.format(_error_message(e)))
        return EXIT_USAGE
    except SystemExit as e:
        # --help and --version
        return e.code or EXIT_OK

    cmd_options = vars(options)
    args = cmd_options.pop('args', ())
    try:
        command.execute(*args, **cmd_options)
    except CommandError as e:
        stderr.write('error: {0}\n'.format(_error_message(e)))
        return e.returncode

    return EXIT_OK


def configure_standalone():
    """
    Configures django for the console script. Reports are recorded in the database named by the
    DIAMONDPATHS_DATABASE environment variable (a JSON database settings dict), or in an
    in-memory sqlite database.
    """
    if not settings.configured:
        database = os.environ.get(DATABASE_ENVIRONMENT_VARIABLE)
        settings.configure(
            SECRET_KEY='*',
            INSTALLED_APPS=['diamondpaths'],
            DATABASES={
                'default': json.loads(database) if database else {
                    'ENGINE': 'django.db.backends.sqlite3',
                    'NAME': ':memory:',
                },
            },
            LOGGING=LOGGING,
            DEFAULT_AUTO_FIELD='django.db.models.AutoField',
        )
    django.setup()


def main(argv=None):
    configure_standalone()
    argv = sys.argv[1:] if argv is None else argv

    if '--record' in argv:
        call_command('migrate', 'diamondpaths', verbosity=0, interactive=False)

    sys.exit(run_cli(argv))
