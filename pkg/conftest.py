"""
Pytest wiring mirroring run_tests.py: configure the standalone settings and
create the test database for the django TestCase suites.
"""
import pytest

from settings import configure_settings

configure_settings()

import django  # noqa: E402

django.setup()


@pytest.fixture(scope='session', autouse=True)
def django_test_environment():
    from django.test.utils import setup_test_environment, teardown_test_environment, setup_databases, \
        teardown_databases

    setup_test_environment()
    old_config = setup_databases(verbosity=0, interactive=False)
    yield
    teardown_databases(old_config, verbosity=0)
    teardown_test_environment()
