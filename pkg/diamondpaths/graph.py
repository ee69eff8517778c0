"""
Immutable simple undirected graphs over text vertex ids, and the deterministic traversals the
connectivity, construction and diamond modules are built on.

All tie-breaking uses the lexicographic order of vertex ids: adjacency lists are sorted and
breadth-first searches expand neighbors in that order.
"""
import logging
from collections import deque

from diamondpaths.exceptions import (
    DisconnectedError, InvalidVertexError, ParallelEdgeError, SelfLoopError, VertexNotCoveredError,
    VertexNotFoundError,
)


LOG = logging.getLogger(__name__)


def validate_vertex(vertex, line_number=None):
    """
    Vertex ids are non-empty text tokens without whitespace or '#'.
    """
    if not isinstance(vertex, str) or not vertex or '#' in vertex or any(char.isspace() for char in vertex):
        raise InvalidVertexError(vertex, line_number=line_number)
    return vertex


def edge_key(a, b):
    """
    Returns the canonical (sorted) form of the unordered pair {a, b}.
    """
    return (a, b) if a < b else (b, a)


class Graph(object):
    """
    A simple undirected graph. Instances are immutable once built; use build_graph to create
    one from an edge list.
    """
    __slots__ = ('_adjacency', '_vertices', '_edges')

    def __init__(self, adjacency):
        """
        :param adjacency: dict mapping every vertex to the set of its neighbors. The caller
            guarantees symmetry and the absence of self-loops.
        """
        self._adjacency = {vertex: tuple(sorted(neighbors)) for vertex, neighbors in adjacency.items()}
        self._vertices = tuple(sorted(self._adjacency))
        self._edges = tuple(
            (vertex, neighbor)
            for vertex in self._vertices
            for neighbor in self._adjacency[vertex]
            if vertex < neighbor
        )

    @property
    def vertices(self):
        return self._vertices

    @property
    def edges(self):
        return self._edges

    @property
    def number_of_vertices(self):
        return len(self._vertices)

    @property
    def number_of_edges(self):
        return len(self._edges)

    def has_vertex(self, vertex):
        return vertex in self._adjacency

    def has_edge(self, a, b):
        return a in self._adjacency and b in self._adjacency[a]

    def neighbors(self, vertex):
        try:
            return self._adjacency[vertex]
        except KeyError:
            raise VertexNotFoundError(vertex)

    def degree(self, vertex):
        return len(self.neighbors(vertex))

    def isolated_vertices(self):
        return tuple(vertex for vertex in self._vertices if not self._adjacency[vertex])

    def without_edge(self, a, b):
        """
        Returns a copy of the graph without the edge {a, b}.
        """
        if not self.has_edge(a, b):
            raise ValueError('Edge {0} {1} is not in the graph'.format(a, b))

        adjacency = {vertex: set(neighbors) for vertex, neighbors in self._adjacency.items()}
        adjacency[a].discard(b)
        adjacency[b].discard(a)
        return Graph(adjacency)

    def __contains__(self, vertex):
        return self.has_vertex(vertex)

    def __len__(self):
        return len(self._vertices)

    def __iter__(self):
        return iter(self._vertices)

    def __eq__(self, other):
        return isinstance(other, Graph) and self._vertices == other._vertices and self._edges == other._edges

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._vertices, self._edges))

    def __repr__(self):
        return '<Graph |V|={0} |E|={1}>'.format(len(self._vertices), len(self._edges))


def build_graph(edge_list, isolated=(), strict=False):
    """
    Builds a Graph from a sequence of vertex pairs and a sequence of isolated vertices.

    Duplicate edges, in either orientation, are collapsed unless strict is True, in which case
    the first repeated edge raises ParallelEdgeError. Self-loops always raise SelfLoopError.
    """
    adjacency = {}

    for vertex in isolated:
        adjacency.setdefault(validate_vertex(vertex), set())

    for pair in edge_list:
        a, b = pair
        validate_vertex(a)
        validate_vertex(b)
        if a == b:
            raise SelfLoopError((a, b))

        if strict and b in adjacency.get(a, ()):
            raise ParallelEdgeError(edge_key(a, b))

        adjacency.setdefault(a, set()).add(b)
        adjacency.setdefault(b, set()).add(a)

    return Graph(adjacency)


def component_containing(g, removed, target):
    """
    Returns the vertex set reachable from target once the removed vertices (and their edges)
    are deleted from g. The result includes target.
    """
    removed = frozenset(removed)
    if not g.has_vertex(target):
        raise VertexNotFoundError(target)
    if target in removed:
        raise ValueError('Target {0!r} is among the removed vertices'.format(target))

    seen = {target}
    queue = deque([target])
    while queue:
        vertex = queue.popleft()
        for neighbor in g.neighbors(vertex):
            if neighbor not in seen and neighbor not in removed:
                seen.add(neighbor)
                queue.append(neighbor)

    return frozenset(seen)


class SpanningTree(object):
    """
    A rooted spanning tree of a connected vertex set, stored as parent pointers.
    """
    def __init__(self, root, parent, covered):
        self.root = root
        self.parent = dict(parent)
        self.covered = frozenset(covered)

    def path_to_root(self, vertex):
        """
        Returns the vertices from vertex up to and including the root.
        """
        if vertex not in self.covered:
            raise VertexNotCoveredError(vertex)

        path = [vertex]
        while path[-1] != self.root:
            path.append(self.parent[path[-1]])
        return path

    def tree_path(self, a, b):
        """
        Returns the unique tree path from a to b as a list of vertices.
        """
        up_from_a = self.path_to_root(a)
        up_from_b = self.path_to_root(b)
        on_b_side = {vertex: index for index, vertex in enumerate(up_from_b)}

        # The lowest common ancestor is the first vertex above a that is also above b
        for index, vertex in enumerate(up_from_a):
            if vertex in on_b_side:
                return up_from_a[:index + 1] + list(reversed(up_from_b[:on_b_side[vertex]]))

        # Unreachable: both chains end at the root
        raise AssertionError('Tree paths of {0!r} and {1!r} do not meet'.format(a, b))

    def edges(self):
        return sorted(edge_key(child, parent) for child, parent in self.parent.items())

    def __eq__(self, other):
        return (
            isinstance(other, SpanningTree) and self.root == other.root and self.parent == other.parent and
            self.covered == other.covered
        )

    def __repr__(self):
        return '<SpanningTree root={0!r} |covered|={1}>'.format(self.root, len(self.covered))


def bfs_tree(g, root, restrict_to=None):
    """
    Builds the breadth-first spanning tree of the subgraph induced by restrict_to, expanding
    neighbors in vertex id order. restrict_to defaults to every vertex of g.

    Raises DisconnectedError naming the smallest unreached vertex when restrict_to does not
    induce a connected subgraph.
    """
    restrict_to = frozenset(g.vertices if restrict_to is None else restrict_to)
    if not g.has_vertex(root):
        raise VertexNotFoundError(root)
    if root not in restrict_to:
        raise VertexNotCoveredError(root)

    parent = {}
    seen = {root}
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for neighbor in g.neighbors(vertex):
            if neighbor in restrict_to and neighbor not in seen:
                seen.add(neighbor)
                parent[neighbor] = vertex
                queue.append(neighbor)

    unreached = restrict_to - seen
    if unreached:
        raise DisconnectedError(root, min(unreached))

    LOG.debug('bfs tree rooted at %s covers %d vertices', root, len(seen))
    return SpanningTree(root, parent, seen)
