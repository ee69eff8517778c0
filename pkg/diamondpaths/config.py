import os

from django.conf import settings


# Defaults for the DIAMONDPATHS settings dictionary
DEFAULTS = {
    # Largest graph the brute-force oracle accepts
    'ORACLE_MAX_VERTICES': 12,
    # Largest diamond order generate_diamond builds (4^10 edges)
    'DIAMOND_MAX_ORDER': 10,
    # Default and hard limits of all-pairs flow scans over diamond graphs
    'ALL_PAIRS_MAX_ORDER': 3,
    'ALL_PAIRS_HARD_MAX_ORDER': 4,
    # Largest diamond order whose f-table upper bound is certified structurally on every pair,
    # larger ones are certified on a seeded sample of STRUCTURAL_SAMPLE_PAIRS pairs
    'STRUCTURAL_SCAN_MAX_ORDER': 4,
    'STRUCTURAL_SAMPLE_PAIRS': 64,
    # Largest diamond order the CLI exports as DOT
    'DOT_MAX_ORDER': 4,
    # Worker threads for verification scans
    'THREADS': 1,
}

THREADS_ENVIRONMENT_VARIABLE = 'DIAMONDPATHS_THREADS'


def get_setting(name):
    """
    Returns a diamondpaths setting. Values in settings.DIAMONDPATHS win over the defaults; when
    django settings are not configured the defaults are used so the library works standalone.
    """
    if name not in DEFAULTS:
        raise KeyError('Unknown diamondpaths setting {0}'.format(name))

    if not settings.configured:
        return DEFAULTS[name]

    return getattr(settings, 'DIAMONDPATHS', {}).get(name, DEFAULTS[name])


def get_thread_count():
    """
    Resolves the number of scan threads. The DIAMONDPATHS_THREADS environment variable caps
    parallelism when present, otherwise the THREADS setting applies.
    """
    raw_value = os.environ.get(THREADS_ENVIRONMENT_VARIABLE)
    if raw_value:
        try:
            return max(1, int(raw_value))
        except ValueError:
            raise ValueError('{0} must be an integer, got {1!r}'.format(THREADS_ENVIRONMENT_VARIABLE, raw_value))

    return max(1, int(get_setting('THREADS')))


class GraphFormat(object):
    """
    Defines a text encoding of a Graph.
    """
    # The name used on the command line and in parse_graph / serialize_graph
    name = None

    # Export-only formats set this to False
    can_parse = True

    def parse(self, text, collapse=False):
        """
        Returns the Graph encoded by text. collapse merges repeated edges instead of rejecting them.
        """
        raise NotImplementedError

    def serialize(self, graph):
        """
        Returns the deterministic text encoding of graph.
        """
        raise NotImplementedError


class FormatRegistry(object):
    """
    Maintains all registered graph formats keyed on their names.
    """
    def __init__(self):
        self._format_registry = {}

    @property
    def format_registry(self):
        return self._format_registry

    @property
    def names(self):
        return sorted(self._format_registry)

    @property
    def parsable_names(self):
        return sorted(name for name, graph_format in self._format_registry.items() if graph_format.can_parse)

    def register_format(self, graph_format):
        """
        Registers a graph format class
        """
        if not isinstance(graph_format, type) or not issubclass(graph_format, GraphFormat):
            raise ValueError('Must register graph format class of subclass GraphFormat')

        if not graph_format.name:
            raise ValueError('Graph format must define name')

        self._format_registry[graph_format.name] = graph_format()

    def get(self, name):
        try:
            return self._format_registry[name]
        except KeyError:
            raise ValueError('Unknown graph format {0!r}, expected one of {1}'.format(name, ', '.join(self.names)))


# Define the global registry variable
format_registry = FormatRegistry()


def register_format():
    """
    Registers the GraphFormat class with diamondpaths:

    @register_format()
    class EdgeListFormat(GraphFormat):
        name = 'edge-list'
    """
    def _graph_format_wrapper(graph_format_class):
        format_registry.register_format(graph_format_class)
        return graph_format_class

    return _graph_format_wrapper
