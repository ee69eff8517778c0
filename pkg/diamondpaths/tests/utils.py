from itertools import combinations

import networkx as nx
from django.test import SimpleTestCase

from diamondpaths.connectivity import check_path_system, verify_cut
from diamondpaths.graph import build_graph


def cycle_graph(n, prefix='c'):
    vertices = ['{0}{1}'.format(prefix, index) for index in range(n)]
    return build_graph(zip(vertices, vertices[1:] + vertices[:1]))


def path_graph(n, prefix='p'):
    vertices = ['{0}{1}'.format(prefix, index) for index in range(n)]
    return build_graph(zip(vertices, vertices[1:]), isolated=vertices)


def complete_graph(n, prefix='k'):
    vertices = ['{0}{1}'.format(prefix, index) for index in range(n)]
    return build_graph(combinations(vertices, 2), isolated=vertices)


def complete_bipartite_graph(left, right):
    """
    K_{left,right} with sides a0.. and b0..
    """
    return build_graph(
        ('a{0}'.format(i), 'b{0}'.format(j)) for i in range(left) for j in range(right)
    )


def to_networkx(g):
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(g.vertices)
    nx_graph.add_edges_from(g.edges)
    return nx_graph


class GraphTestCase(SimpleTestCase):
    """
    The base class for graph tests. Provides validity assertions for path systems and
    certificates.
    """
    def assertValidPathSystem(self, g, system, count=None):
        verdict = check_path_system(g, system)
        self.assertTrue(verdict.valid, verdict.failures)
        if count is not None:
            self.assertEqual(len(system), count)

    def assertValidCertificate(self, g, u, v, certificate, bound=None):
        verdict = verify_cut(g, u, v, certificate)
        self.assertTrue(verdict.valid, verdict.failures)
        if bound is not None:
            self.assertEqual(certificate.bound, bound)

    def assertInvalid(self, verdict):
        self.assertFalse(verdict.valid)
        self.assertTrue(verdict.failures)
