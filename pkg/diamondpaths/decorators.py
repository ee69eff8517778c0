"""
Decorators shared by the computational modules and the report store.
"""
import inspect
import logging
from time import perf_counter, sleep

import wrapt
from django import db
from django.db import transaction

from diamondpaths.exceptions import SameEndpointError, VertexNotFoundError


LOG = logging.getLogger(__name__)


def transaction_atomic_with_retry(num_retries=5, backoff=0.1):
    """
    This is a decorator that will wrap the decorated method in an atomic transaction and
    retry the transaction a given number of times

    :param num_retries: How many times should we retry before we give up
    :param backoff: How long should we wait after each try
    """

    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        num_tries = 0
        exception = None

        while num_tries <= num_retries:
            try:
                with transaction.atomic():
                    return wrapped(*args, **kwargs)
            except db.utils.OperationalError as e:
                num_tries += 1
                exception = e
                LOG.debug('retrying %s after %s', wrapped.__name__, e)
                sleep(backoff * num_tries)

        raise exception

    return wrapper


def validate_pair(graph='g', first='u', second='v'):
    """
    Validates the endpoint pair of a pairwise graph query before it runs. The named arguments
    must be two distinct vertices of the named graph argument, otherwise SameEndpointError or
    VertexNotFoundError is raised.

    @validate_pair(first='s', second='t')
    def max_edge_disjoint_paths(g, s, t):
        ...
    """
    @wrapt.decorator
    def wrapper(wrapped, instance, args, kwargs):
        arguments = inspect.signature(wrapped).bind(*args, **kwargs).arguments
        host = arguments[graph]
        first_vertex = arguments[first]
        second_vertex = arguments[second]

        for vertex in (first_vertex, second_vertex):
            if not host.has_vertex(vertex):
                raise VertexNotFoundError(vertex)

        if first_vertex == second_vertex:
            raise SameEndpointError(first_vertex)

        return wrapped(*args, **kwargs)

    return wrapper


@wrapt.decorator
def timed(wrapped, instance, args, kwargs):
    """
    Stores the wall-clock duration of the decorated experiment on the returned report.
    """
    started = perf_counter()
    report = wrapped(*args, **kwargs)
    report.duration = perf_counter() - started
    LOG.info('%s finished in %.3fs', report.experiment, report.duration)
    return report
