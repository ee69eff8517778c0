"""
A small integer-capacity flow network solved with shortest augmenting paths.

Flow is stored antisymmetrically (flow[x][y] == -flow[y][x]), so a pair of opposite arcs of
capacity 1 models an undirected unit edge. Every search expands nodes in sorted order, which
makes flows, decompositions and cuts reproducible.
"""
import logging
from collections import defaultdict, deque


LOG = logging.getLogger(__name__)


class FlowNetwork(object):
    """
    A directed network with integer arc capacities over hashable, mutually comparable node keys.
    """
    def __init__(self):
        self._capacity = defaultdict(dict)
        self._flow = defaultdict(lambda: defaultdict(int))
        self._sorted_neighbors = None

    @property
    def nodes(self):
        return sorted(self._capacity)

    def add_node(self, node):
        self._capacity.setdefault(node, {})
        self._sorted_neighbors = None

    def add_arc(self, tail, head, capacity=1):
        """
        Adds capacity to the arc tail -> head. The reverse residual arc is registered with zero
        capacity so the search sees it.
        """
        if tail == head:
            raise ValueError('Arc {0!r} -> {1!r} is a loop'.format(tail, head))

        self._capacity[tail][head] = self._capacity[tail].get(head, 0) + capacity
        self._capacity[head].setdefault(tail, 0)
        self._sorted_neighbors = None

    def capacity(self, tail, head):
        return self._capacity[tail].get(head, 0)

    def flow(self, tail, head):
        return self._flow[tail][head]

    def residual(self, tail, head):
        return self._capacity[tail].get(head, 0) - self._flow[tail][head]

    def _neighbors(self, node):
        if self._sorted_neighbors is None:
            self._sorted_neighbors = {key: sorted(heads) for key, heads in self._capacity.items()}
        return self._sorted_neighbors[node]

    def _augmenting_path(self, source, sink):
        parent = {source: None}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for neighbor in self._neighbors(node):
                if neighbor not in parent and self.residual(node, neighbor) > 0:
                    parent[neighbor] = node
                    if neighbor == sink:
                        return parent
                    queue.append(neighbor)
        return None

    def max_flow(self, source, sink):
        """
        Runs breadth-first augmentation from source to sink on top of the current flow and returns
        the total flow value leaving source.
        """
        if source not in self._capacity or sink not in self._capacity:
            raise ValueError('Source and sink must be nodes of the network')

        while True:
            parent = self._augmenting_path(source, sink)
            if parent is None:
                break

            bottleneck = None
            node = sink
            while parent[node] is not None:
                residual = self.residual(parent[node], node)
                bottleneck = residual if bottleneck is None else min(bottleneck, residual)
                node = parent[node]

            node = sink
            while parent[node] is not None:
                self._flow[parent[node]][node] += bottleneck
                self._flow[node][parent[node]] -= bottleneck
                node = parent[node]

        value = self.flow_value(source)
        LOG.debug('max flow %r -> %r is %d', source, sink, value)
        return value

    def flow_value(self, source):
        return sum(self._flow[source].values())

    def reachable(self, source):
        """
        Returns the nodes reachable from source through arcs with positive residual capacity.
        """
        seen = {source}
        queue = deque([source])
        while queue:
            node = queue.popleft()
            for neighbor in self._neighbors(node):
                if neighbor not in seen and self.residual(node, neighbor) > 0:
                    seen.add(neighbor)
                    queue.append(neighbor)
        return seen

    def decompose(self, source, sink):
        """
        Splits the current flow into simple source-sink node paths. Each walk follows the least
        out-arc that still carries flow and erases the unit it uses; a walk that returns to a node
        already on it drops the closed cycle. Flow left on cycles afterwards is discarded.
        """
        remaining = defaultdict(dict)
        for tail in self._flow:
            for head, amount in self._flow[tail].items():
                if amount > 0:
                    remaining[tail][head] = amount

        paths = []
        for _ in range(self.flow_value(source)):
            path = [source]
            position = {source: 0}
            node = source
            while node != sink:
                head = min(candidate for candidate, amount in remaining[node].items() if amount > 0)
                remaining[node][head] -= 1
                if head in position:
                    for dropped in path[position[head] + 1:]:
                        del position[dropped]
                    del path[position[head] + 1:]
                else:
                    position[head] = len(path)
                    path.append(head)
                node = head
            paths.append(path)

        return paths
