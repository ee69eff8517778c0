from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from diamondpaths.construct import IndependentWitness, find_three_independent, find_two_independent, tree_median
from diamondpaths.diamond import generate_diamond
from diamondpaths.exceptions import InsufficientPathsError, SameEndpointError, VertexNotCoveredError
from diamondpaths.experiments import plant_paths_graph
from diamondpaths.graph import bfs_tree, build_graph
from diamondpaths.tests.utils import GraphTestCase, complete_bipartite_graph, complete_graph


PROPERTY_SETTINGS = settings(
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_FRACTIONS = st.sampled_from(['0', '0.05', '0.1', '0.2', '0.5'])


class FindTwoIndependentTest(GraphTestCase):
    def test_four_cycle(self):
        """
        Tests that two paths meeting only at t are already independent.
        """
        g = build_graph([('s', 'a'), ('a', 't'), ('t', 'b'), ('b', 's')])
        witness = find_two_independent(g, 's', 't')
        self.assertEqual((witness.u, witness.v), ('s', 't'))
        self.assertEqual(witness.system.paths, (('s', 'a', 't'), ('s', 'b', 't')))
        self.assertEqual(witness.trace['meeting_vertex'], 't')

    def test_paths_meeting_before_sink(self):
        """
        Tests that the pair ends at the first vertex the two paths share.
        """
        g = build_graph([
            ('s', 'a'), ('a', 'm'), ('m', 'b'), ('b', 't'),
            ('s', 'c'), ('c', 'm'), ('m', 'd'), ('d', 't'),
        ])
        witness = find_two_independent(g, 's', 't')
        self.assertEqual((witness.u, witness.v), ('s', 'm'))
        self.assertEqual(witness.system.paths, (('s', 'a', 'm'), ('s', 'c', 'm')))
        self.assertEqual(witness.trace['edge_disjoint'], [['s', 'a', 'm', 'b', 't'], ['s', 'c', 'm', 'd', 't']])
        self.assertValidPathSystem(g, witness.system, 2)

    def test_paths_sharing_only_sink(self):
        """
        Tests that paths of different length meeting at t give the pair (s, t).
        """
        g = build_graph([('s', 'a'), ('a', 'b'), ('b', 't'), ('s', 'c'), ('c', 't')])
        witness = find_two_independent(g, 's', 't')
        self.assertEqual(witness.v, 't')
        self.assertValidPathSystem(g, witness.system, 2)

    def test_single_path(self):
        """
        Tests that one edge-disjoint path is not enough.
        """
        with self.assertRaises(InsufficientPathsError) as context:
            find_two_independent(build_graph([('s', 'a'), ('a', 't')]), 's', 't')
        self.assertEqual((context.exception.required, context.exception.actual), (2, 1))

    def test_same_endpoint(self):
        with self.assertRaises(SameEndpointError):
            find_two_independent(build_graph([('s', 't')]), 't', 't')

    @PROPERTY_SETTINGS
    @given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.integers(min_value=4, max_value=30), _FRACTIONS)
    def test_planted_instances(self, seed, n, fraction):
        """
        Tests that two independent paths from s are found on planted instances.
        """
        instance = plant_paths_graph(seed, n, 2, fraction)
        witness = find_two_independent(instance.graph, instance.s, instance.t)
        self.assertEqual(witness.u, instance.s)
        self.assertValidPathSystem(instance.graph, witness.system, 2)


class TreeMedianTest(GraphTestCase):
    def test_star(self):
        """
        Tests that the center of a star is the median of its leaves.
        """
        tree = bfs_tree(build_graph([('c', 's1'), ('c', 's2'), ('c', 's3')]), 'c')
        self.assertEqual(tree_median(tree, 's1', 's2', 's3'), 'c')

    def test_collinear(self):
        """
        Tests that the middle vertex is the median of three vertices on one path.
        """
        tree = bfs_tree(build_graph([('s1', 's2'), ('s2', 's3')]), 's1')
        self.assertEqual(tree_median(tree, 's1', 's2', 's3'), 's2')

    def test_branch(self):
        tree = bfs_tree(build_graph([('s1', 'a'), ('a', 's3'), ('s2', 'a')]), 's3')
        self.assertEqual(tree_median(tree, 's1', 's2', 's3'), 'a')

    def test_median_lies_on_all_pairwise_paths(self):
        """
        Tests that the median lies on the tree path between every two of the three vertices.
        """
        g, _ = generate_diamond(3)
        tree = bfs_tree(g, 't')
        for triple in (('s', '/p', '/q'), ('1/p', '3.2/q', '4.4/p'), ('2.1/q', 't', '1.3/p')):
            median = tree_median(tree, *triple)
            for a, b in ((0, 1), (0, 2), (1, 2)):
                self.assertIn(median, tree.tree_path(triple[a], triple[b]))

    def test_uncovered(self):
        """
        Tests that vertices outside the tree are rejected.
        """
        tree = bfs_tree(build_graph([('a', 'b'), ('b', 'c'), ('d', 'e')]), 'a', {'a', 'b', 'c'})
        with self.assertRaises(VertexNotCoveredError):
            tree_median(tree, 'a', 'b', 'd')

    def test_not_distinct(self):
        """
        Tests that the three vertices must be distinct.
        """
        tree = bfs_tree(build_graph([('a', 'b'), ('b', 'c')]), 'a')
        with self.assertRaises(ValueError):
            tree_median(tree, 'a', 'b', 'a')


class FindThreeIndependentTest(GraphTestCase):
    def assertValidWitness(self, g, witness, s):
        self.assertEqual(witness.u, s)
        self.assertEqual(witness.system.source, witness.u)
        self.assertEqual(witness.system.sink, witness.v)
        self.assertValidPathSystem(g, witness.system, 3)

        # The tree parts share only v
        tails = [set(path[1:-1]) for path in witness.system]
        self.assertFalse(tails[0] & tails[1] or tails[0] & tails[2] or tails[1] & tails[2])

    def test_complete_bipartite(self):
        """
        Tests that three length-two paths are returned unchanged.
        """
        g = build_graph([(end, middle) for end in ('s', 't') for middle in ('m1', 'm2', 'm3')])
        witness = find_three_independent(g, 's', 't')
        self.assertEqual((witness.u, witness.v), ('s', 't'))
        self.assertEqual(witness.system.paths, (('s', 'm1', 't'), ('s', 'm2', 't'), ('s', 'm3', 't')))
        self.assertEqual(witness.trace['neighbors'], ['m1', 'm2', 'm3'])

    def test_order_two_diamond(self):
        """
        Tests the construction from the four edge-disjoint s-t paths of G_2.
        """
        g, _ = generate_diamond(2)
        self.assertValidWitness(g, find_three_independent(g, 's', 't'), 's')

    def test_complete_graph(self):
        g = complete_graph(4)
        self.assertValidWitness(g, find_three_independent(g, 'k0', 'k3'), 'k0')

    def test_median_at_neighbor_gives_direct_edge(self):
        """
        Tests that a median at a neighbor of s makes one path the direct edge.
        """
        # x2 lies on the tree path between x1 and x3, so one path is the edge s-x2
        g = build_graph([
            ('s', 'x1'), ('s', 'x2'), ('s', 'x3'), ('x1', 'x2'), ('x2', 'x3'), ('x1', 'y'), ('y', 'x3'),
        ])
        witness = find_three_independent(g, 's', 'x3')
        self.assertValidWitness(g, witness, 's')
        self.assertEqual(witness.v, 'x2')
        self.assertIn(('s', 'x2'), witness.system.paths)

    def test_bipartite_with_larger_side(self):
        g = complete_bipartite_graph(2, 5)
        self.assertValidWitness(g, find_three_independent(g, 'a0', 'a1'), 'a0')

    def test_two_paths_only(self):
        """
        Tests that the 4-cycle has too few edge-disjoint paths.
        """
        g = build_graph([('s', 'a'), ('a', 't'), ('t', 'b'), ('b', 's')])
        with self.assertRaises(InsufficientPathsError) as context:
            find_three_independent(g, 's', 't')
        self.assertEqual((context.exception.required, context.exception.actual), (3, 2))

    def test_witness_round_trip(self):
        """
        Tests the structured form of a witness.
        """
        g, _ = generate_diamond(2)
        witness = find_three_independent(g, 's', 't')
        restored = IndependentWitness.from_dict(witness.to_dict())
        self.assertEqual((restored.u, restored.v), (witness.u, witness.v))
        self.assertEqual(restored.system, witness.system)
        self.assertEqual(restored.trace, witness.trace)

    @PROPERTY_SETTINGS
    @given(st.integers(min_value=0, max_value=2 ** 64 - 1), st.integers(min_value=5, max_value=40), _FRACTIONS)
    def test_planted_instances(self, seed, n, fraction):
        """
        Tests that three independent paths from s are found on planted instances.
        """
        instance = plant_paths_graph(seed, n, 3, fraction)
        self.assertValidWitness(instance.graph, find_three_independent(instance.graph, 's', 't'), 's')
