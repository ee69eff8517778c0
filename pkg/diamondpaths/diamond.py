"""
Recursive diamond graphs and their hierarchy.

G_0 is the edge s t. G_p replaces every edge x y of G_{p-1} by the 4-cycle x - p - y - q - x, so
G_p is also four edge-disjoint copies of G_{p-1} glued in a cycle. A node of the hierarchy is
one such copy; its address lists child indices from the root. The children of a node spanning
(x, y) with middles (p, q) span 1: (x, p), 2: (p, y), 3: (y, q), 4: (q, x), so children 1 and 3
(and 2 and 4) share no vertex.

The middles created at the node with address A are named "A/p" and "A/q", A rendered as the
dot-joined child indices ("" for the root, so the root middles are "/p" and "/q").
"""
import logging

from diamondpaths.config import get_setting
from diamondpaths.connectivity import UpperBoundCertificate, max_independent_paths, verify_cut
from diamondpaths.constants import DEGREE_BOUND, DIAMOND_SINK, DIAMOND_SOURCE, VERTEX_CUT
from diamondpaths.decorators import validate_pair
from diamondpaths.exceptions import OrderTooLargeError, SameEndpointError, VertexNotFoundError
from diamondpaths.graph import build_graph


LOG = logging.getLogger(__name__)


def render_address(address):
    return '.'.join(str(index) for index in address)


def parse_address(text):
    return tuple(int(index) for index in text.split('.')) if text else ()


def middle_name(address, letter):
    return '{0}/{1}'.format(render_address(address), letter)


class DiamondNode(object):
    """
    One sub-diamond of the hierarchy. Nodes are created on demand from their address.
    """
    def __init__(self, hierarchy, address, extremities):
        self.hierarchy = hierarchy
        self.address = tuple(address)
        self.order = hierarchy.order - len(self.address)
        self.extremities = tuple(extremities)
        self.middles = (middle_name(self.address, 'p'), middle_name(self.address, 'q')) if self.order > 0 else None

    def children(self):
        """
        Returns the four child nodes in cyclic order, or an empty tuple for a leaf.
        """
        if self.order == 0:
            return ()

        x, y = self.extremities
        p, q = self.middles
        spans = ((x, p), (p, y), (y, q), (q, x))
        return tuple(
            DiamondNode(self.hierarchy, self.address + (index,), span)
            for index, span in enumerate(spans, start=1)
        )

    def contains(self, vertex):
        """
        A sub-diamond holds its two extremities and every middle created at it or below it.
        """
        if vertex in self.extremities:
            return True

        home = self.hierarchy.home_of(vertex)
        return self.order > 0 and home is not None and home[:len(self.address)] == self.address

    def vertices(self):
        vertices = set(self.extremities)
        stack = [self]
        while stack:
            node = stack.pop()
            if node.order > 0:
                vertices.update(node.middles)
                stack.extend(node.children())
        return frozenset(vertices)

    def other_extremity(self, vertex):
        x, y = self.extremities
        return y if vertex == x else x

    def __eq__(self, other):
        return (
            isinstance(other, DiamondNode) and self.hierarchy is other.hierarchy and self.address == other.address
        )

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.address)

    def __repr__(self):
        return '<DiamondNode {0!r} order={1} extremities={2}>'.format(
            render_address(self.address), self.order, self.extremities)

    def to_dict(self):
        return {
            'address': render_address(self.address),
            'order': self.order,
            'extremities': list(self.extremities),
            'middles': list(self.middles) if self.middles else None,
        }


class DiamondHierarchy(object):
    """
    The recursive 4-ary decomposition of G_p. Only the root and the birthplace ("home" address)
    of every vertex are stored; other nodes are derived from addresses when needed.
    """
    def __init__(self, order, homes):
        self.order = order
        self._homes = dict(homes)
        self.root = DiamondNode(self, (), (DIAMOND_SOURCE, DIAMOND_SINK))
        self._vertex_index = None

    def has_vertex(self, vertex):
        return vertex in self._homes

    def home_of(self, vertex):
        """
        Returns the address of the node whose middle the vertex is, or None for s and t.
        """
        try:
            return self._homes[vertex]
        except KeyError:
            raise VertexNotFoundError(vertex)

    def node(self, address):
        """
        Returns the node at address, given as a tuple of child indices or rendered as "1.2".
        """
        if isinstance(address, str):
            address = parse_address(address)

        node = self.root
        for index in address:
            children = node.children()
            if not 1 <= index <= len(children):
                raise ValueError('No node at address {0!r}'.format(render_address(address)))
            node = children[index - 1]
        return node

    def nodes_at_depth(self, depth):
        level = [self.root]
        for _ in range(depth):
            level = [child for node in level for child in node.children()]
        return level

    def nodes_containing(self, vertex):
        """
        Returns every node whose vertex set contains vertex, root first.
        """
        self.home_of(vertex)
        found = []
        frontier = [self.root]
        while frontier:
            found.extend(frontier)
            frontier = [child for node in frontier for child in node.children() if child.contains(vertex)]
        return found

    def addresses_of(self, vertex):
        return frozenset(node.address for node in self.nodes_containing(vertex))

    @property
    def vertex_index(self):
        """
        Maps every vertex to the addresses of the nodes containing it. Built on first use.
        """
        if self._vertex_index is None:
            self._vertex_index = {vertex: self.addresses_of(vertex) for vertex in sorted(self._homes)}
        return self._vertex_index

    def leaf_for_edge(self, a, b):
        """
        Returns the order-0 node whose single edge is {a, b}.
        """
        node = self.root
        while node.order > 0:
            node = next(
                (child for child in node.children() if child.contains(a) and child.contains(b)), None)
            if node is None:
                raise ValueError('{0} {1} is not an edge of the diamond'.format(a, b))
        if set(node.extremities) != {a, b}:
            raise ValueError('{0} {1} is not an edge of the diamond'.format(a, b))
        return node


def diamond_counts(p):
    """
    Returns (vertex count, edge count, edge-disjoint s-t path count) of G_p without building it.
    """
    return ((2 * 4 ** p + 4) // 3, 4 ** p, 2 ** p)


def generate_diamond(p):
    """
    Builds G_p by replacing every edge p times and returns (graph, hierarchy).
    """
    limit = get_setting('DIAMOND_MAX_ORDER')
    if p < 0:
        raise ValueError('Diamond order must be non-negative, got {0}'.format(p))
    if p > limit:
        raise OrderTooLargeError(p, limit)

    homes = {DIAMOND_SOURCE: None, DIAMOND_SINK: None}
    leaves = [((), DIAMOND_SOURCE, DIAMOND_SINK)]
    for _ in range(p):
        replaced = []
        for address, x, y in leaves:
            p_middle = middle_name(address, 'p')
            q_middle = middle_name(address, 'q')
            homes[p_middle] = address
            homes[q_middle] = address
            replaced.extend((
                (address + (1,), x, p_middle),
                (address + (2,), p_middle, y),
                (address + (3,), y, q_middle),
                (address + (4,), q_middle, x),
            ))
        leaves = replaced

    graph = build_graph((x, y) for _, x, y in leaves)
    LOG.debug('generated diamond of order %d with %d vertices', p, graph.number_of_vertices)
    return graph, DiamondHierarchy(p, homes)


def smallest_enclosing(h, u, v):
    """
    Returns the smallest sub-diamond containing both u and v. Two children of a node share at
    most one vertex, so at most one child can contain both.
    """
    for vertex in (u, v):
        if not h.has_vertex(vertex):
            raise VertexNotFoundError(vertex)
    if u == v:
        raise SameEndpointError(u)

    node = h.root
    while True:
        enclosing = [child for child in node.children() if child.contains(u) and child.contains(v)]
        if not enclosing:
            return node
        node, = enclosing


def _candidate_cuts(h, enclosing, u, v):
    """
    Yields vertex cuts in the order the case analysis proposes them.
    """
    children = enclosing.children()
    memberships = {
        vertex: [child for child in children if child.contains(vertex)]
        for vertex in (u, v)
    }

    # An endpoint strictly inside one child is cut off by that child's extremities
    for vertex in (u, v):
        if len(memberships[vertex]) == 1:
            yield frozenset(memberships[vertex][0].extremities)

    # An endpoint shared by two adjacent children: cut their other extremities, plus the far
    # extremity of a same-order sub-diamond outside the enclosing one that also borders it
    for vertex in (u, v):
        if len(memberships[vertex]) != 2:
            continue

        cut = frozenset(
            extremity
            for child in memberships[vertex]
            for extremity in child.extremities
            if extremity != vertex
        )
        yield cut

        if enclosing.order < h.order:
            for node in h.nodes_containing(vertex):
                if node.order == enclosing.order and node != enclosing and vertex in node.extremities:
                    yield cut | {node.other_extremity(vertex)}


@validate_pair()
def structural_upper_bound(h, g, u, v):
    """
    Certifies that G_p has at most three independent u-v paths using the diamond structure only.

    Adjacent endpoints get a degree bound at the endpoint of degree 2. Otherwise the candidate
    cuts of the case analysis are tried in turn and the first one verify_cut accepts is returned.
    When no candidate is valid the flow minimum cut is returned, marked as fallback.
    """
    enclosing = smallest_enclosing(h, u, v)

    if enclosing.order == 0:
        witness = next((vertex for vertex in (u, v) if g.degree(vertex) == 2), None)
        if witness is None:
            witness = v if g.degree(v) < g.degree(u) else u
        certificate = UpperBoundCertificate(DEGREE_BOUND, g.degree(witness), witness_vertex=witness)
        if verify_cut(g, u, v, certificate):
            return certificate
    else:
        for cut in _candidate_cuts(h, enclosing, u, v):
            certificate = UpperBoundCertificate(VERTEX_CUT, len(cut), cut=cut)
            if verify_cut(g, u, v, certificate):
                return certificate

    LOG.warning('no structural certificate for %s %s inside %r, using the flow cut', u, v, enclosing)
    _, flow_certificate = max_independent_paths(g, u, v)
    return UpperBoundCertificate(
        flow_certificate.variant,
        flow_certificate.bound,
        cut=flow_certificate.cut,
        witness_vertex=flow_certificate.witness_vertex,
        direct_edge=flow_certificate.direct_edge,
        fallback=True,
    )
