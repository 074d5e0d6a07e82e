"""
Named graphs used by the factor tools, built with networkx.
"""

import re

import networkx as nx

from .. import dto, errors


def from_networkx(graph, name = None):
    """
    Converts a networkx graph to a :py:class:`~..dto.Graph`, relabelling the
    nodes ``0 .. n - 1`` in sorted order.
    """
    graph = nx.convert_node_labels_to_integers(graph, ordering = 'sorted')
    return dto.Graph.create(graph.number_of_nodes(), graph.edges(), name)


def to_networkx(graph):
    result = nx.Graph()
    result.add_nodes_from(range(graph.vertex_count))
    result.add_edges_from(graph.edges)
    return result


def is_connected(graph):
    return nx.is_connected(to_networkx(graph))


def complete(n):
    return from_networkx(nx.complete_graph(n), 'complete:{}'.format(n))


def complete_bipartite(a, b):
    return from_networkx(nx.complete_bipartite_graph(a, b), 'bipartite:{},{}'.format(a, b))


def cycle(n):
    return from_networkx(nx.cycle_graph(n), 'cycle:{}'.format(n))


def path(n):
    return from_networkx(nx.path_graph(n), 'path:{}'.format(n))


def petersen():
    return from_networkx(nx.petersen_graph(), 'petersen')


def prism():
    """
    Returns the triangular prism, two triangles joined by a perfect matching.
    """
    return from_networkx(nx.circular_ladder_graph(3), 'prism')


def mobius_kantor():
    return from_networkx(nx.LCF_graph(16, [5, -5], 8), 'mobius-kantor')


def circulant(n, jumps):
    jumps = sorted(set(jumps))
    return from_networkx(
        nx.circulant_graph(n, jumps),
        'circulant:{}:{}'.format(n, ','.join(str(j) for j in jumps))
    )


def gadget():
    """
    Returns the 3-regular graph made of two copies of ``K4`` minus an edge,
    on ``0..3`` (missing ``0-1``) and ``4..7`` (missing ``4-5``), joined by the
    edges ``0-4`` and ``1-5``. Its cut between the two blocks has two edges.
    """
    block = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges = block + [(u + 4, v + 4) for u, v in block] + [(0, 4), (1, 5)]
    return dto.Graph.create(8, edges, 'gadget')


def _integers(text):
    return [int(x) for x in text.split(',') if x]


#: Graph names understood by :py:func:`named_graph`, as regex to factory
NAMED_GRAPHS = [
    (r'petersen', lambda m: petersen()),
    (r'prism', lambda m: prism()),
    (r'mobius-kantor', lambda m: mobius_kantor()),
    (r'gadget', lambda m: gadget()),
    # k followed by two digits is K_{a,b}, by one digit K_n
    (r'k(\d)(\d)', lambda m: complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (r'k(\d)', lambda m: complete(int(m.group(1)))),
    (r'complete:(\d+)', lambda m: complete(int(m.group(1)))),
    (r'bipartite:(\d+),(\d+)', lambda m: complete_bipartite(int(m.group(1)), int(m.group(2)))),
    (r'cycle:(\d+)', lambda m: cycle(int(m.group(1)))),
    (r'path:(\d+)', lambda m: path(int(m.group(1)))),
    (r'circulant:(\d+):([\d,]+)', lambda m: circulant(int(m.group(1)), _integers(m.group(2)))),
]


def named_graph(name):
    """
    Returns the graph with the given name, e.g. ``petersen``, ``k4``, ``k33``,
    ``cycle:6`` or ``circulant:10:1,2,5``.

    Raises:
        BadInputError: If the name is not recognised.
    """
    key = name.strip().lower()
    for pattern, factory in NAMED_GRAPHS:
        match = re.fullmatch(pattern, key)
        if match:
            return factory(match)
    raise errors.BadInputError("Unknown graph name '{}'.".format(name))
