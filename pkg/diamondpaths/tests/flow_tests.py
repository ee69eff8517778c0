from django.test import SimpleTestCase

from diamondpaths.flow import FlowNetwork


class FlowNetworkTest(SimpleTestCase):
    """
    Tests breadth-first augmentation, residual reachability and decomposition.
    """
    def setUp(self):
        super(FlowNetworkTest, self).setUp()
        self.network = FlowNetwork()
        self.arcs = (('a', 'b', 2), ('a', 'c', 1), ('b', 'd', 1), ('c', 'd', 2), ('b', 'c', 1))
        for tail, head, capacity in self.arcs:
            self.network.add_arc(tail, head, capacity)

    def test_max_flow_value(self):
        """
        Tests the maximum flow value of the sample network.
        """
        self.assertEqual(self.network.max_flow('a', 'd'), 3)
        self.assertEqual(self.network.flow_value('a'), 3)

    def test_flow_is_antisymmetric(self):
        """
        Tests that flow is antisymmetric and within capacity on every arc.
        """
        self.network.max_flow('a', 'd')
        for tail, head, _ in self.arcs:
            self.assertEqual(self.network.flow(tail, head), -self.network.flow(head, tail))
            self.assertLessEqual(self.network.flow(tail, head), self.network.capacity(tail, head))

    def test_residual(self):
        self.network.max_flow('a', 'd')
        self.assertEqual(self.network.residual('a', 'b'), 0)
        self.assertEqual(self.network.residual('b', 'a'), 2)

    def test_decompose(self):
        """
        Tests that the flow splits into paths following the least arcs first.
        """
        self.network.max_flow('a', 'd')
        self.assertEqual(self.network.decompose('a', 'd'), [['a', 'b', 'c', 'd'], ['a', 'b', 'd'], ['a', 'c', 'd']])

    def test_reachable_after_max_flow(self):
        """
        Tests that nothing is reachable from a saturated source.
        """
        self.network.max_flow('a', 'd')
        self.assertEqual(self.network.reachable('a'), {'a'})

    def test_reachable_before_flow(self):
        self.assertEqual(self.network.reachable('b'), {'b', 'c', 'd'})

    def test_reverse_arcs_have_no_capacity(self):
        """
        Tests that registering an arc leaves its reverse residual arc at zero capacity.
        """
        for tail, head, capacity in self.arcs:
            self.assertEqual(self.network.capacity(tail, head), capacity)
            self.assertEqual(self.network.capacity(head, tail), 0)
        self.assertEqual(self.network.nodes, ['a', 'b', 'c', 'd'])

    def test_parallel_arcs_add_capacity(self):
        """
        Tests that adding an arc twice sums its capacity.
        """
        network = FlowNetwork()
        network.add_arc('x', 'y')
        network.add_arc('x', 'y', 2)
        self.assertEqual(network.capacity('x', 'y'), 3)
        self.assertEqual(network.max_flow('x', 'y'), 3)

    def test_no_path(self):
        """
        Tests that a network without arcs has zero flow and no paths.
        """
        network = FlowNetwork()
        network.add_node('x')
        network.add_node('y')
        self.assertEqual(network.max_flow('x', 'y'), 0)
        self.assertEqual(network.decompose('x', 'y'), [])
        self.assertEqual(network.nodes, ['x', 'y'])

    def test_loop_rejected(self):
        with self.assertRaises(ValueError):
            FlowNetwork().add_arc('x', 'x')

    def test_unknown_terminal(self):
        with self.assertRaises(ValueError):
            self.network.max_flow('a', 'z')
