from itertools import combinations
from unittest.mock import patch

from django.test import override_settings

from diamondpaths.connectivity import max_edge_disjoint_paths, max_independent_paths
from diamondpaths.constants import DEGREE_BOUND, VERTEX_CUT
from diamondpaths.diamond import (
    diamond_counts, generate_diamond, middle_name, parse_address, render_address, smallest_enclosing,
    structural_upper_bound,
)
from diamondpaths.exceptions import OrderTooLargeError, SameEndpointError, VertexNotFoundError
from diamondpaths.graph import build_graph
from diamondpaths.tests.utils import GraphTestCase


class GenerateDiamondTest(GraphTestCase):
    """
    Tests building G_p and its hierarchy.
    """
    def test_order_zero_is_single_edge(self):
        g, h = generate_diamond(0)
        self.assertEqual(g, build_graph([('s', 't')]))
        self.assertEqual(h.root.children(), ())
        self.assertIsNone(h.root.middles)

    def test_order_one_is_four_cycle(self):
        g, _ = generate_diamond(1)
        self.assertEqual(g.edges, (('/p', 's'), ('/p', 't'), ('/q', 's'), ('/q', 't')))

    def test_counts(self):
        """
        Tests that generated diamonds match the closed-form counts.
        """
        for p in range(7):
            g, _ = generate_diamond(p)
            vertices, edges, paths = diamond_counts(p)
            self.assertEqual(g.number_of_vertices, vertices)
            self.assertEqual(g.number_of_edges, edges)
            if p <= 5:
                self.assertEqual(len(max_edge_disjoint_paths(g, 's', 't')), paths)

    def test_closed_form_counts(self):
        self.assertEqual(diamond_counts(2), (12, 16, 4))
        self.assertEqual(diamond_counts(10), (699052, 1048576, 1024))

    def test_vertices_have_even_degree(self):
        """
        Tests that every vertex of G_3 has even degree.
        """
        g, _ = generate_diamond(3)
        for vertex in g.vertices:
            self.assertEqual(g.degree(vertex) % 2, 0)

    def test_source_and_sink_have_independent_two_paths(self):
        """
        Tests that s and t have only two independent paths however many edge-disjoint ones.
        """
        g, _ = generate_diamond(3)
        system, certificate = max_independent_paths(g, 's', 't')
        self.assertEqual(len(system), 2)
        self.assertEqual(certificate.cut, frozenset(['/p', '/q']))

    def test_deterministic(self):
        self.assertEqual(generate_diamond(3)[0], generate_diamond(3)[0])

    def test_negative_order(self):
        with self.assertRaises(ValueError):
            generate_diamond(-1)

    def test_order_too_large(self):
        """
        Tests that orders above DIAMOND_MAX_ORDER are refused.
        """
        with self.assertRaises(OrderTooLargeError) as context:
            generate_diamond(11)
        self.assertEqual((context.exception.order, context.exception.limit), (11, 10))

    @override_settings(DIAMONDPATHS={'DIAMOND_MAX_ORDER': 2})
    def test_order_limit_setting(self):
        """
        Tests that the order limit follows the DIAMONDPATHS setting.
        """
        generate_diamond(2)
        with self.assertRaises(OrderTooLargeError):
            generate_diamond(3)


class AddressTest(GraphTestCase):
    def test_render_and_parse(self):
        """
        Tests rendering addresses as dot-joined indices and parsing them back.
        """
        self.assertEqual(render_address((3, 1, 4)), '3.1.4')
        self.assertEqual(parse_address('3.1.4'), (3, 1, 4))
        self.assertEqual(render_address(()), '')
        self.assertEqual(parse_address(''), ())

    def test_middle_name(self):
        self.assertEqual(middle_name((), 'p'), '/p')
        self.assertEqual(middle_name((2, 4), 'q'), '2.4/q')


class DiamondHierarchyTest(GraphTestCase):
    """
    Tests navigating the sub-diamond hierarchy.
    """
    def setUp(self):
        super(DiamondHierarchyTest, self).setUp()
        self.g, self.h = generate_diamond(2)

    def test_children_in_cyclic_order(self):
        """
        Tests that children span (s, /p), (/p, t), (t, /q) and (/q, s) in that order.
        """
        self.assertEqual(
            [child.extremities for child in self.h.root.children()],
            [('s', '/p'), ('/p', 't'), ('t', '/q'), ('/q', 's')],
        )

    def test_opposite_children_are_disjoint(self):
        """
        Tests that children 1 and 3 and children 2 and 4 share no vertex.
        """
        _, h = generate_diamond(3)
        first, second, third, fourth = h.root.children()
        self.assertFalse(first.vertices() & third.vertices())
        self.assertFalse(second.vertices() & fourth.vertices())

    def test_adjacent_children_share_one_vertex(self):
        """
        Tests that consecutive children share exactly one extremity.
        """
        first, second, third, fourth = self.h.root.children()
        self.assertEqual(first.vertices() & second.vertices(), {'/p'})
        self.assertEqual(second.vertices() & third.vertices(), {'t'})
        self.assertEqual(third.vertices() & fourth.vertices(), {'/q'})
        self.assertEqual(fourth.vertices() & first.vertices(), {'s'})

    def test_root_holds_every_vertex(self):
        self.assertEqual(self.h.root.vertices(), frozenset(self.g.vertices))

    def test_nodes_at_depth(self):
        """
        Tests that depth d holds 4^d nodes.
        """
        _, h = generate_diamond(3)
        for depth in range(4):
            self.assertEqual(len(h.nodes_at_depth(depth)), 4 ** depth)

    def test_leaves_are_the_edges(self):
        """
        Tests that the order-0 nodes are exactly the edges of the graph.
        """
        leaves = self.h.nodes_at_depth(2)
        self.assertTrue(all(leaf.order == 0 for leaf in leaves))
        self.assertEqual(
            sorted(tuple(sorted(leaf.extremities)) for leaf in leaves),
            list(self.g.edges),
        )

    def test_node(self):
        node = self.h.node((1, 2))
        self.assertEqual(node.extremities, ('1/p', '/p'))
        self.assertEqual(node.order, 0)
        self.assertEqual(node.to_dict(), {
            'address': '1.2',
            'order': 0,
            'extremities': ['1/p', '/p'],
            'middles': None,
        })

    def test_node_from_rendered_address(self):
        """
        Tests that a node can be looked up by its rendered address.
        """
        self.assertEqual(self.h.node('1.2'), self.h.node((1, 2)))
        self.assertEqual(self.h.node(''), self.h.root)
        self.assertEqual(self.h.node(self.h.node((3, 4)).to_dict()['address']).address, (3, 4))

    def test_node_bad_address(self):
        """
        Tests that addresses outside the hierarchy are rejected.
        """
        for address in ((5,), (0,), (1, 1, 1), '5', '1.x'):
            with self.assertRaises(ValueError):
                self.h.node(address)

    def test_home_of(self):
        """
        Tests that middles map to the node that created them and s and t have no home.
        """
        self.assertIsNone(self.h.home_of('s'))
        self.assertEqual(self.h.home_of('/p'), ())
        self.assertEqual(self.h.home_of('3/q'), (3,))
        with self.assertRaises(VertexNotFoundError):
            self.h.home_of('zz')

    def test_addresses_of(self):
        """
        Tests the addresses of every node containing a middle.
        """
        self.assertEqual(
            self.h.addresses_of('/p'),
            {(), (1,), (2,), (1, 2), (1, 3), (2, 1), (2, 4)},
        )
        self.assertEqual(self.h.addresses_of('1/q'), {(), (1,), (1, 3), (1, 4)})

    def test_addresses_of_source(self):
        _, h = generate_diamond(1)
        self.assertEqual(h.addresses_of('s'), {(), (1,), (4,)})

    def test_vertex_index(self):
        """
        Tests that the vertex index is built once and agrees with addresses_of.
        """
        index = self.h.vertex_index
        self.assertEqual(set(index), set(self.g.vertices))
        self.assertIs(self.h.vertex_index, index)
        self.assertEqual(index['s'], self.h.addresses_of('s'))

    def test_node_equality(self):
        self.assertEqual(self.h.node((2,)), self.h.root.children()[1])
        self.assertNotEqual(self.h.node((2,)), self.h.node((3,)))
        self.assertEqual(len({self.h.node((2,)), self.h.node((2,))}), 1)

    def test_leaf_for_edge(self):
        self.assertEqual(self.h.leaf_for_edge('s', '1/p').address, (1, 1))
        self.assertEqual(self.h.leaf_for_edge('/p', '1/p').address, (1, 2))

    def test_leaf_for_missing_edge(self):
        """
        Tests that non-adjacent pairs have no leaf.
        """
        with self.assertRaises(ValueError):
            self.h.leaf_for_edge('s', 't')
        with self.assertRaises(ValueError):
            self.h.leaf_for_edge('s', '/p')

    def test_every_edge_has_a_leaf(self):
        for a, b in self.g.edges:
            self.assertEqual(set(self.h.leaf_for_edge(a, b).extremities), {a, b})


class SmallestEnclosingTest(GraphTestCase):
    def setUp(self):
        super(SmallestEnclosingTest, self).setUp()
        self.g, self.h = generate_diamond(2)

    def test_root_extremities(self):
        self.assertEqual(smallest_enclosing(self.h, 's', 't').address, ())

    def test_source_and_root_middle(self):
        """
        Tests that s and /p are enclosed by the first child of the root.
        """
        node = smallest_enclosing(self.h, 's', '/p')
        self.assertEqual(node.address, (1,))
        self.assertEqual(node.order, 1)

    def test_edge(self):
        """
        Tests that the endpoints of an edge are enclosed by its leaf.
        """
        self.assertEqual(smallest_enclosing(self.h, 's', '1/p').address, (1, 1))

    def test_opposite_children(self):
        """
        Tests that vertices of opposite children are only enclosed by their parent.
        """
        self.assertEqual(smallest_enclosing(self.h, '1/p', '3/q').address, ())

    def test_contains_both_and_no_child_does(self):
        """
        Tests that no child of the enclosing node contains both vertices, for every pair of G_2.
        """
        for u, v in combinations(self.g.vertices, 2):
            node = smallest_enclosing(self.h, u, v)
            self.assertTrue(node.contains(u) and node.contains(v))
            for child in node.children():
                self.assertFalse(child.contains(u) and child.contains(v))

    def test_invalid_pairs(self):
        with self.assertRaises(SameEndpointError):
            smallest_enclosing(self.h, 's', 's')
        with self.assertRaises(VertexNotFoundError):
            smallest_enclosing(self.h, 's', 'zz')


class StructuralUpperBoundTest(GraphTestCase):
    """
    Tests the structural certificates of at most three independent paths.
    """
    def setUp(self):
        super(StructuralUpperBoundTest, self).setUp()
        self.g, self.h = generate_diamond(2)

    def test_source_and_sink(self):
        """
        Tests that s and t are certified by the root middles without falling back.
        """
        certificate = structural_upper_bound(self.h, self.g, 's', 't')
        self.assertEqual(certificate.variant, VERTEX_CUT)
        self.assertEqual(certificate.cut, frozenset(['/p', '/q']))
        self.assertFalse(certificate.fallback)

    def test_source_and_root_middle(self):
        """
        Tests the three-vertex cut that adds the far extremity of a neighboring sub-diamond.
        """
        certificate = structural_upper_bound(self.h, self.g, 's', '/p')
        self.assertEqual(certificate.variant, VERTEX_CUT)
        self.assertEqual(certificate.cut, frozenset(['1/p', '1/q', '/q']))
        self.assertEqual(certificate.bound, 3)
        self.assertFalse(certificate.fallback)
        self.assertValidCertificate(self.g, 's', '/p', certificate)

    def test_adjacent_pair_uses_degree_two_endpoint(self):
        """
        Tests that adjacent pairs are bounded by the endpoint of degree 2.
        """
        certificate = structural_upper_bound(self.h, self.g, 's', '1/p')
        self.assertEqual(certificate.variant, DEGREE_BOUND)
        self.assertEqual((certificate.witness_vertex, certificate.bound), ('1/p', 2))

    def test_order_zero(self):
        g, h = generate_diamond(0)
        certificate = structural_upper_bound(h, g, 's', 't')
        self.assertEqual((certificate.variant, certificate.bound), (DEGREE_BOUND, 1))

    def test_order_one_adjacent_pair(self):
        """
        Tests the degree bound of an edge of the 4-cycle.
        """
        g, h = generate_diamond(1)
        certificate = structural_upper_bound(h, g, 's', '/p')
        self.assertEqual((certificate.variant, certificate.bound), (DEGREE_BOUND, 2))

    def test_all_pairs_bounded_by_three(self):
        """
        Tests that every pair of G_1 to G_3 gets a valid certificate with bound at most 3.
        """
        for p in (1, 2, 3):
            g, h = generate_diamond(p)
            for u, v in combinations(g.vertices, 2):
                certificate = structural_upper_bound(h, g, u, v)
                self.assertValidCertificate(g, u, v, certificate)
                self.assertLessEqual(certificate.bound, 3)

    def test_bound_is_at_least_the_flow(self):
        """
        Tests that no certificate bound is below the flow count of its pair.
        """
        for u, v in combinations(self.g.vertices, 2):
            system, _ = max_independent_paths(self.g, u, v)
            self.assertGreaterEqual(structural_upper_bound(self.h, self.g, u, v).bound, len(system))

    def test_unknown_vertex(self):
        with self.assertRaises(VertexNotFoundError):
            structural_upper_bound(self.h, self.g, 's', 'zz')

    @patch('diamondpaths.diamond._candidate_cuts', return_value=iter([frozenset(['/p'])]))
    def test_invalid_candidates_fall_back_to_the_flow_cut(self, candidate_cuts_mock):
        """
        Tests that a pair without a valid structural cut gets the flow minimum cut, marked and logged.
        """
        with self.assertLogs('diamondpaths.diamond', 'WARNING') as logs:
            certificate = structural_upper_bound(self.h, self.g, 's', 't')

        self.assertTrue(candidate_cuts_mock.called)
        self.assertTrue(certificate.fallback)
        self.assertEqual(certificate.variant, VERTEX_CUT)
        self.assertEqual(certificate.cut, frozenset(['/p', '/q']))
        system, _ = max_independent_paths(self.g, 's', 't')
        self.assertEqual(certificate.bound, len(system))
        self.assertValidCertificate(self.g, 's', 't', certificate)
        self.assertIn('no structural certificate for s t', logs.output[0])
