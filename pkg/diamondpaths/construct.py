"""
Constructive extraction of independent paths from edge-disjoint ones.

Two edge-disjoint s-t paths always yield two independent paths: stop both at the first vertex
of the first path that the second path also visits. Three edge-disjoint s-t paths always yield
three independent paths: take the neighbors s1, s2, s3 of s on the paths, a spanning tree T of
the component of G - s containing t, and the median of s1, s2, s3 in T; the three paths are
s -> s_i followed by the tree path from s_i to the median.
"""
import logging

from diamondpaths.connectivity import PathSystem, max_edge_disjoint_paths
from diamondpaths.constants import INDEPENDENT
from diamondpaths.decorators import validate_pair
from diamondpaths.exceptions import InsufficientPathsError, VertexNotCoveredError
from diamondpaths.graph import bfs_tree, component_containing


LOG = logging.getLogger(__name__)


class IndependentWitness(object):
    """
    Two vertices u, v with an independent u-v path system. trace keeps the intermediate objects
    of the construction (the edge-disjoint paths it started from, and S or the meeting vertex).
    """
    def __init__(self, u, v, system, trace=None):
        self.u = u
        self.v = v
        self.system = system
        self.trace = trace or {}

    def __len__(self):
        return len(self.system)

    def __repr__(self):
        return '<IndependentWitness {0}-{1} paths={2}>'.format(self.u, self.v, len(self.system))

    def to_dict(self):
        data = self.system.to_dict()
        data.update({
            'u': self.u,
            'v': self.v,
            'trace': self.trace,
        })
        return data

    @classmethod
    def from_dict(cls, data):
        return cls(data['u'], data['v'], PathSystem.from_dict(data), trace=data.get('trace'))


def _edge_disjoint_prefix(g, s, t, required):
    edge_disjoint = max_edge_disjoint_paths(g, s, t)
    if len(edge_disjoint) < required:
        raise InsufficientPathsError(required, len(edge_disjoint))
    return edge_disjoint.paths[:required]


@validate_pair(first='s', second='t')
def find_two_independent(g, s, t):
    """
    Builds two independent paths from two edge-disjoint s-t paths P1, P2. u is s and v is the
    vertex other than s that lies on both paths and comes first along P1.
    """
    first, second = _edge_disjoint_prefix(g, s, t, 2)

    on_second = {vertex: index for index, vertex in enumerate(second)}
    meeting_index = next(index for index, vertex in enumerate(first) if index > 0 and vertex in on_second)
    v = first[meeting_index]

    system = PathSystem(s, v, [first[:meeting_index + 1], second[:on_second[v] + 1]], INDEPENDENT)
    LOG.debug('two independent paths between %s and %s', s, v)
    return IndependentWitness(s, v, system, trace={
        'edge_disjoint': [list(first), list(second)],
        'meeting_vertex': v,
    })


def tree_median(t, s1, s2, s3):
    """
    Returns the vertex of tree t that lies on all three pairwise tree paths between s1, s2 and s3:
    the vertex common to the s1-s3 and s2-s3 tree paths that is closest to s2 along the latter.
    """
    for vertex in (s1, s2, s3):
        if vertex not in t.covered:
            raise VertexNotCoveredError(vertex)
    if len({s1, s2, s3}) != 3:
        raise ValueError('Median needs three distinct vertices, got {0}, {1}, {2}'.format(s1, s2, s3))

    on_first_path = set(t.tree_path(s1, s3))
    return next(vertex for vertex in t.tree_path(s2, s3) if vertex in on_first_path)


@validate_pair(first='s', second='t')
def find_three_independent(g, s, t):
    """
    Builds three independent paths from three edge-disjoint s-t paths. Only the first three paths
    of the flow decomposition are used when more exist.
    """
    edge_disjoint = _edge_disjoint_prefix(g, s, t, 3)

    # Distinct because the paths leave s through distinct edges
    neighbors = [path[1] for path in edge_disjoint]

    component = component_containing(g, {s}, t)
    tree = bfs_tree(g, t, component)
    v = tree_median(tree, *neighbors)

    paths = [[s] + tree.tree_path(neighbor, v) for neighbor in neighbors]
    system = PathSystem(s, v, paths, INDEPENDENT)
    LOG.debug('three independent paths between %s and %s via %s', s, v, neighbors)

    return IndependentWitness(s, v, system, trace={
        'edge_disjoint': [list(path) for path in edge_disjoint],
        'neighbors': neighbors,
        'tree_root': t,
    })
