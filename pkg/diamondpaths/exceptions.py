class DiamondPathsError(Exception):
    """
    Base class of every error raised by diamondpaths.
    """
    pass


class InputError(DiamondPathsError, ValueError):
    """
    The input graph or one of its tokens is malformed.
    """
    pass


class PreconditionError(DiamondPathsError, ValueError):
    """
    An operation was called on input that does not satisfy its hypothesis.
    """
    pass


class InvalidVertexError(InputError):
    def __init__(self, vertex, line_number=None):
        super(InvalidVertexError, self).__init__(vertex, line_number)
        self.vertex = vertex
        self.line_number = line_number

    def __str__(self):
        message = 'Invalid vertex id {0!r}'.format(self.vertex)
        if self.line_number is not None:
            message = 'line {0}: {1}'.format(self.line_number, message)
        return message


class SelfLoopError(InputError):
    def __init__(self, pair, line_number=None):
        super(SelfLoopError, self).__init__(pair, line_number)
        self.pair = tuple(pair)
        self.line_number = line_number

    def __str__(self):
        message = 'Self-loop {0} {1} is not allowed in a simple graph'.format(*self.pair)
        if self.line_number is not None:
            message = 'line {0}: {1}'.format(self.line_number, message)
        return message


class ParallelEdgeError(InputError):
    def __init__(self, pair, line_number=None):
        super(ParallelEdgeError, self).__init__(pair, line_number)
        self.pair = tuple(pair)
        self.line_number = line_number

    def __str__(self):
        message = 'Duplicate edge {0} {1} (use collapse to merge parallel edges)'.format(*self.pair)
        if self.line_number is not None:
            message = 'line {0}: {1}'.format(self.line_number, message)
        return message


class GraphFormatError(InputError):
    def __init__(self, message, line_number=None):
        super(GraphFormatError, self).__init__(message, line_number)
        self.message = message
        self.line_number = line_number

    def __str__(self):
        if self.line_number is None:
            return self.message
        return 'line {0}: {1}'.format(self.line_number, self.message)


class VertexNotFoundError(PreconditionError):
    def __init__(self, vertex):
        super(VertexNotFoundError, self).__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return 'Vertex {0!r} is not in the graph'.format(self.vertex)


class SameEndpointError(PreconditionError):
    def __init__(self, vertex):
        super(SameEndpointError, self).__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return 'Endpoints must differ, got {0!r} twice'.format(self.vertex)


class InsufficientPathsError(PreconditionError):
    def __init__(self, required, actual):
        super(InsufficientPathsError, self).__init__(required, actual)
        self.required = required
        self.actual = actual

    def __str__(self):
        return 'Need {0} edge-disjoint paths, the graph has {1}'.format(self.required, self.actual)


class GraphTooLargeError(PreconditionError):
    def __init__(self, size, limit):
        super(GraphTooLargeError, self).__init__(size, limit)
        self.size = size
        self.limit = limit

    def __str__(self):
        return 'Graph has {0} vertices, the limit is {1}'.format(self.size, self.limit)


class OrderTooLargeError(PreconditionError):
    def __init__(self, order, limit):
        super(OrderTooLargeError, self).__init__(order, limit)
        self.order = order
        self.limit = limit

    def __str__(self):
        return 'Order {0} exceeds the limit of {1}'.format(self.order, self.limit)


class DisconnectedError(PreconditionError):
    def __init__(self, root, unreached):
        super(DisconnectedError, self).__init__(root, unreached)
        self.root = root
        self.unreached = unreached

    def __str__(self):
        return 'Vertex {0!r} cannot be reached from {1!r}'.format(self.unreached, self.root)


class VertexNotCoveredError(PreconditionError):
    def __init__(self, vertex):
        super(VertexNotCoveredError, self).__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return 'Vertex {0!r} is not covered by the spanning tree'.format(self.vertex)


class InstanceTooSmallError(PreconditionError):
    def __init__(self, n, k):
        super(InstanceTooSmallError, self).__init__(n, k)
        self.n = n
        self.k = k

    def __str__(self):
        return 'Planting {0} paths needs at least {1} vertices, got {2}'.format(self.k, self.k + 2, self.n)
