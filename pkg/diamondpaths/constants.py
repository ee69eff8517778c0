EDGE_DISJOINT = 'edge-disjoint'
INDEPENDENT = 'independent'
PATH_SYSTEM_KINDS = (EDGE_DISJOINT, INDEPENDENT)

VERTEX_CUT = 'vertex-cut'
DEGREE_BOUND = 'degree-bound'
CERTIFICATE_VARIANTS = (VERTEX_CUT, DEGREE_BOUND)

EDGE_LIST = 'edge-list'
STRUCTURED = 'structured'
DOT = 'dot'

# Root extremities of every recursive diamond graph
DIAMOND_SOURCE = 's'
DIAMOND_SINK = 't'

# CLI exit statuses
EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
