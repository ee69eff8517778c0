"""
Text encodings of graphs: the edge-list and structured formats parse and serialize, DOT is
export only. Every serializer is deterministic, edges are written sorted by endpoint pair.
"""
import json

from django.core.serializers.json import DjangoJSONEncoder

from diamondpaths.config import GraphFormat, format_registry, register_format
from diamondpaths.constants import DOT, EDGE_LIST, STRUCTURED
from diamondpaths.exceptions import GraphFormatError, ParallelEdgeError, SelfLoopError
from diamondpaths.graph import build_graph, edge_key, validate_vertex


def dump_json(data):
    """
    Renders data as the canonical structured text: sorted keys, two-space indent and a
    trailing newline.
    """
    return json.dumps(data, cls=DjangoJSONEncoder, indent=2, sort_keys=True) + '\n'


def load_json(text):
    try:
        return json.loads(text)
    except ValueError as e:
        raise GraphFormatError('Invalid structured document: {0}'.format(e), line_number=getattr(e, 'lineno', None))


@register_format()
class EdgeListFormat(GraphFormat):
    """
    One edge per line as "<id> <id>", isolated vertices as "<id>". Lines starting with '#' are
    comments and blank lines are ignored.
    """
    name = EDGE_LIST

    def parse(self, text, collapse=False):
        edges = []
        isolated = []
        seen = set()

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith('#'):
                continue

            tokens = line.split()
            for token in tokens:
                validate_vertex(token, line_number=line_number)

            if len(tokens) == 1:
                isolated.append(tokens[0])
            elif len(tokens) == 2:
                a, b = tokens
                if a == b:
                    raise SelfLoopError((a, b), line_number=line_number)

                key = edge_key(a, b)
                if key in seen:
                    if not collapse:
                        raise ParallelEdgeError(key, line_number=line_number)
                    continue

                seen.add(key)
                edges.append(key)
            else:
                raise GraphFormatError(
                    'Expected "<id> <id>" or "<id>", got {0} tokens'.format(len(tokens)), line_number=line_number
                )

        return build_graph(edges, isolated)

    def serialize(self, graph):
        lines = ['{0} {1}'.format(a, b) for a, b in graph.edges]
        lines.extend(graph.isolated_vertices())
        return ''.join('{0}\n'.format(line) for line in lines)


@register_format()
class StructuredFormat(GraphFormat):
    """
    A JSON document {"vertices": [...], "edges": [[a, b], ...]} with sorted ids.
    """
    name = STRUCTURED

    def parse(self, text, collapse=False):
        document = load_json(text)
        if not isinstance(document, dict) or not {'vertices', 'edges'} <= set(document):
            raise GraphFormatError('Structured graph needs "vertices" and "edges" fields')

        for field in ('vertices', 'edges'):
            if not isinstance(document[field], list):
                raise GraphFormatError('Structured graph field "{0}" must be a list'.format(field))

        edges = []
        seen = set()
        for index, pair in enumerate(document['edges']):
            if not isinstance(pair, list) or len(pair) != 2:
                raise GraphFormatError('Edge {0} is not a pair of ids'.format(index))

            a, b = pair
            if a == b:
                raise SelfLoopError((a, b))

            key = edge_key(validate_vertex(a), validate_vertex(b))
            if key in seen:
                if not collapse:
                    raise ParallelEdgeError(key)
                continue

            seen.add(key)
            edges.append(key)

        return build_graph(edges, document['vertices'])

    def serialize(self, graph):
        return dump_json({
            'vertices': list(graph.vertices),
            'edges': [list(edge) for edge in graph.edges],
        })


@register_format()
class DotFormat(GraphFormat):
    """
    Graphviz export: an undirected graph with quoted node ids (backslash and double quote escaped)
    and one edge per statement.
    """
    name = DOT
    can_parse = False

    @staticmethod
    def quote(vertex):
        return '"{0}"'.format(vertex.replace('\\', '\\\\').replace('"', '\\"'))

    def serialize(self, graph):
        lines = ['graph G {']
        lines.extend('  {0};'.format(self.quote(vertex)) for vertex in graph.isolated_vertices())
        lines.extend('  {0} -- {1};'.format(self.quote(a), self.quote(b)) for a, b in graph.edges)
        lines.append('}')
        return '\n'.join(lines) + '\n'


def parse_graph(text, format=EDGE_LIST, collapse=False):
    """
    Parses text in the named format. Repeated edges raise ParallelEdgeError unless collapse is
    True.
    """
    graph_format = format_registry.get(format)
    if not graph_format.can_parse:
        raise ValueError('Format {0!r} is export only'.format(format))

    return graph_format.parse(text, collapse=collapse)


def serialize_graph(g, format=EDGE_LIST):
    return format_registry.get(format).serialize(g)
