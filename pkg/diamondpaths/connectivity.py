"""
Maximum edge-disjoint and independent (internally vertex-disjoint) path systems between two
vertices, their Menger cut certificates, and validators for both.

Edge-disjoint paths come from a unit-capacity flow on the graph itself. Independent paths come
from the vertex-split network: every vertex w other than the endpoints becomes w_in -> w_out with
capacity 1, so each internal vertex carries at most one path.
"""
import logging

from diamondpaths.config import get_setting
from diamondpaths.constants import (
    CERTIFICATE_VARIANTS, DEGREE_BOUND, EDGE_DISJOINT, INDEPENDENT, PATH_SYSTEM_KINDS, VERTEX_CUT,
)
from diamondpaths.decorators import validate_pair
from diamondpaths.exceptions import GraphTooLargeError
from diamondpaths.flow import FlowNetwork
from diamondpaths.graph import component_containing, edge_key


LOG = logging.getLogger(__name__)

# Sides of a split vertex. Endpoints keep a single node keyed with TERMINAL.
TERMINAL = ''
SPLIT_IN = 'in'
SPLIT_OUT = 'out'


def path_edges(path):
    return [edge_key(a, b) for a, b in zip(path, path[1:])]


class PathSystem(object):
    """
    A sequence of paths sharing a source and a sink, tagged with the disjointness it claims.
    """
    def __init__(self, source, sink, paths, kind):
        if kind not in PATH_SYSTEM_KINDS:
            raise ValueError('Unknown path system kind {0!r}'.format(kind))

        self.source = source
        self.sink = sink
        self.paths = tuple(tuple(path) for path in paths)
        self.kind = kind

    def __len__(self):
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def __eq__(self, other):
        return (
            isinstance(other, PathSystem) and
            (self.source, self.sink, self.paths, self.kind) == (other.source, other.sink, other.paths, other.kind)
        )

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<PathSystem {0} {1}->{2} paths={3}>'.format(self.kind, self.source, self.sink, len(self.paths))

    def to_dict(self):
        return {
            'source': self.source,
            'sink': self.sink,
            'kind': self.kind,
            'paths': [list(path) for path in self.paths],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(data['source'], data['sink'], data['paths'], data['kind'])


class UpperBoundCertificate(object):
    """
    A checkable proof that there are at most `bound` independent paths between two vertices.

    vertex-cut: deleting `cut` separates the endpoints. With direct_edge the endpoints are
        adjacent, the cut separates them in the graph minus that edge, and the edge itself
        accounts for one more path, so bound = |cut| + 1.
    degree-bound: the endpoints are adjacent and witness_vertex has degree `bound`.

    fallback marks certificates derived from a flow computation instead of graph structure.
    """
    def __init__(self, variant, bound, cut=(), witness_vertex=None, direct_edge=False, fallback=False):
        if variant not in CERTIFICATE_VARIANTS:
            raise ValueError('Unknown certificate variant {0!r}'.format(variant))

        self.variant = variant
        self.bound = bound
        self.cut = frozenset(cut)
        self.witness_vertex = witness_vertex
        self.direct_edge = direct_edge
        self.fallback = fallback

    def __eq__(self, other):
        return isinstance(other, UpperBoundCertificate) and self.to_dict() == other.to_dict()

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return '<UpperBoundCertificate {0} bound={1}>'.format(self.variant, self.bound)

    def to_dict(self):
        data = {
            'variant': self.variant,
            'bound': self.bound,
            'fallback': self.fallback,
        }
        if self.variant == VERTEX_CUT:
            data['cut'] = sorted(self.cut)
            data['direct_edge'] = self.direct_edge
        else:
            data['witness_vertex'] = self.witness_vertex
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(
            data['variant'],
            data['bound'],
            cut=data.get('cut', ()),
            witness_vertex=data.get('witness_vertex'),
            direct_edge=data.get('direct_edge', False),
            fallback=data.get('fallback', False),
        )


class Verdict(object):
    """
    The outcome of a validation. Truthy iff there are no failures.
    """
    def __init__(self, failures=()):
        self.failures = list(failures)

    @property
    def valid(self):
        return not self.failures

    def __bool__(self):
        return self.valid

    def __repr__(self):
        return '<Verdict valid={0} failures={1}>'.format(self.valid, len(self.failures))

    def to_dict(self):
        return {'valid': self.valid, 'failures': list(self.failures)}


class SplitNetwork(FlowNetwork):
    """
    The vertex-split flow network of a graph for one endpoint pair.
    """
    def __init__(self, g, u, v):
        super(SplitNetwork, self).__init__()
        self.source = (u, TERMINAL)
        self.sink = (v, TERMINAL)
        self.terminals = frozenset((u, v))

        # Edge arcs never bind, the unit vertex arcs do
        edge_capacity = max(1, g.number_of_vertices)

        for vertex in g.vertices:
            if vertex in self.terminals:
                self.add_node((vertex, TERMINAL))
            else:
                self.add_arc((vertex, SPLIT_IN), (vertex, SPLIT_OUT), 1)

        for a, b in g.edges:
            self.add_arc(self.out_node(a), self.in_node(b), edge_capacity)
            self.add_arc(self.out_node(b), self.in_node(a), edge_capacity)

    def in_node(self, vertex):
        return (vertex, TERMINAL) if vertex in self.terminals else (vertex, SPLIT_IN)

    def out_node(self, vertex):
        return (vertex, TERMINAL) if vertex in self.terminals else (vertex, SPLIT_OUT)

    @staticmethod
    def vertex_path(node_path):
        """
        Collapses a path of split nodes back into graph vertices.
        """
        vertices = []
        for vertex, _ in node_path:
            if not vertices or vertices[-1] != vertex:
                vertices.append(vertex)
        return vertices

    def min_cut(self):
        """
        Returns the internal vertices whose in-half is reachable from the source in the residual
        network while their out-half is not. Valid after max_flow.
        """
        reachable = self.reachable(self.source)
        return frozenset(
            vertex
            for vertex, side in reachable
            if side == SPLIT_IN and (vertex, SPLIT_OUT) not in reachable
        )


def split_vertices(g, u, v):
    """
    Builds the directed network whose maximum u -> v flow equals the maximum number of
    independent u-v paths in g.
    """
    return SplitNetwork(g, u, v)


def edge_network(g):
    """
    Builds the unit-capacity network of g: every edge becomes a pair of opposite unit arcs.
    """
    network = FlowNetwork()
    for vertex in g.vertices:
        network.add_node(vertex)
    for a, b in g.edges:
        network.add_arc(a, b, 1)
        network.add_arc(b, a, 1)
    return network


@validate_pair(first='s', second='t')
def max_edge_disjoint_paths(g, s, t):
    """
    Returns a maximum system of edge-disjoint s-t paths.
    """
    network = edge_network(g)
    value = network.max_flow(s, t)
    paths = network.decompose(s, t)
    LOG.debug('%d edge-disjoint paths between %s and %s', value, s, t)
    return PathSystem(s, t, paths, EDGE_DISJOINT)


@validate_pair()
def max_independent_paths(g, u, v):
    """
    Returns a maximum system of independent u-v paths together with an upper-bound certificate
    whose bound equals the number of paths.

    For non-adjacent endpoints the certificate is the minimum vertex cut (Menger). Adjacent
    endpoints contribute the direct edge as one path and the rest is computed on g minus that
    edge; the certificate is then a degree bound when an endpoint degree is tight, otherwise the
    cut of g minus uv plus one.
    """
    adjacent = g.has_edge(u, v)
    host = g.without_edge(u, v) if adjacent else g

    network = split_vertices(host, u, v)
    network.max_flow(network.source, network.sink)
    paths = [network.vertex_path(node_path) for node_path in network.decompose(network.source, network.sink)]
    cut = network.min_cut()

    if adjacent:
        paths.insert(0, [u, v])

    system = PathSystem(u, v, paths, INDEPENDENT)

    if not adjacent:
        certificate = UpperBoundCertificate(VERTEX_CUT, len(cut), cut=cut)
    else:
        witness = v if g.degree(v) < g.degree(u) else u
        if g.degree(witness) == len(system):
            certificate = UpperBoundCertificate(DEGREE_BOUND, g.degree(witness), witness_vertex=witness)
        else:
            certificate = UpperBoundCertificate(VERTEX_CUT, len(cut) + 1, cut=cut, direct_edge=True)

    LOG.debug('%d independent paths between %s and %s, certificate %r', len(system), u, v, certificate)
    return system, certificate


def check_path_system(g, ps):
    """
    Validates a path system against g and returns a Verdict listing every violation: sequences
    that are not simple paths of g, wrong endpoints, shared edges, and (for independent systems)
    interior vertices that appear on another path.
    """
    failures = []

    for index, path in enumerate(ps.paths):
        if len(path) < 2:
            failures.append('path {0} has fewer than 2 vertices'.format(index))
            continue

        if path[0] != ps.source or path[-1] != ps.sink:
            failures.append('path {0} runs {1}->{2}, expected {3}->{4}'.format(
                index, path[0], path[-1], ps.source, ps.sink))

        if len(set(path)) != len(path):
            failures.append('path {0} repeats a vertex'.format(index))

        for vertex in path:
            if not g.has_vertex(vertex):
                failures.append('path {0} uses unknown vertex {1}'.format(index, vertex))

        for a, b in zip(path, path[1:]):
            if g.has_vertex(a) and g.has_vertex(b) and not g.has_edge(a, b):
                failures.append('path {0} uses missing edge {1} {2}'.format(index, a, b))

    # Independent paths are edge-disjoint too, so shared edges are checked for both kinds
    owner = {}
    for index, path in enumerate(ps.paths):
        for edge in path_edges(path):
            if edge in owner and owner[edge] != index:
                failures.append('paths {0} and {1} share edge {2} {3}'.format(owner[edge], index, *edge))
            owner.setdefault(edge, index)

    if ps.kind == INDEPENDENT:
        vertex_sets = [set(path) for path in ps.paths]
        for index, path in enumerate(ps.paths):
            for vertex in path[1:-1]:
                for other_index, other_vertices in enumerate(vertex_sets):
                    if other_index != index and vertex in other_vertices:
                        failures.append('interior vertex {0} of path {1} lies on path {2}'.format(
                            vertex, index, other_index))

    return Verdict(failures)


def verify_cut(g, u, v, cert):
    """
    Validates an upper-bound certificate for the pair u, v and returns a Verdict.
    """
    failures = []
    for vertex in (u, v):
        if not g.has_vertex(vertex):
            failures.append('vertex {0} is not in the graph'.format(vertex))
    if failures:
        return Verdict(failures)

    adjacent = g.has_edge(u, v)

    if cert.variant == DEGREE_BOUND:
        if cert.witness_vertex not in (u, v):
            failures.append('witness {0} is not an endpoint'.format(cert.witness_vertex))
        elif cert.bound != g.degree(cert.witness_vertex):
            failures.append('bound {0} differs from degree {1} of {2}'.format(
                cert.bound, g.degree(cert.witness_vertex), cert.witness_vertex))
        if not adjacent:
            failures.append('degree bound needs adjacent endpoints')
        return Verdict(failures)

    if u in cert.cut or v in cert.cut:
        failures.append('cut contains an endpoint')
    for vertex in sorted(cert.cut):
        if not g.has_vertex(vertex):
            failures.append('cut vertex {0} is not in the graph'.format(vertex))

    expected_bound = len(cert.cut) + (1 if cert.direct_edge else 0)
    if cert.bound != expected_bound:
        failures.append('bound {0} differs from cut size {1}'.format(cert.bound, expected_bound))

    if cert.direct_edge and not adjacent:
        failures.append('certificate counts a direct edge that does not exist')
    elif adjacent and not cert.direct_edge:
        failures.append('adjacent endpoints cannot be separated by a vertex cut')

    if not failures:
        host = g.without_edge(u, v) if cert.direct_edge else g
        if v in component_containing(host, cert.cut, u):
            failures.append('removing the cut leaves {0} connected to {1}'.format(u, v))

    return Verdict(failures)


def simple_paths(g, u, v):
    """
    Yields every simple u-v path of g in lexicographic DFS order.
    """
    path = [u]
    on_path = {u}
    stack = [iter(g.neighbors(u))]
    while stack:
        for neighbor in stack[-1]:
            if neighbor in on_path:
                continue
            if neighbor == v:
                yield path + [v]
                continue
            path.append(neighbor)
            on_path.add(neighbor)
            stack.append(iter(g.neighbors(neighbor)))
            break
        else:
            stack.pop()
            on_path.discard(path.pop())


@validate_pair()
def oracle_max_independent(g, u, v):
    """
    Brute-force maximum number of pairwise independent u-v paths, used to validate the flow
    computation on small graphs. Enumerates every simple path and searches all sets of paths with
    pairwise disjoint interiors.
    """
    limit = get_setting('ORACLE_MAX_VERTICES')
    if g.number_of_vertices > limit:
        raise GraphTooLargeError(g.number_of_vertices, limit)

    bits = {
        vertex: 1 << index
        for index, vertex in enumerate(vertex for vertex in g.vertices if vertex not in (u, v))
    }

    interiors = set()
    for path in simple_paths(g, u, v):
        if len(path) > 2:
            interior = 0
            for vertex in path[1:-1]:
                interior |= bits[vertex]
            interiors.add(interior)
    interiors = sorted(interiors)

    best = {}

    def most_paths(used):
        if used not in best:
            best[used] = max([1 + most_paths(used | interior) for interior in interiors if not interior & used] or [0])
        return best[used]

    # The direct edge has no interior and is compatible with every other path
    return most_paths(0) + (1 if g.has_edge(u, v) else 0)
