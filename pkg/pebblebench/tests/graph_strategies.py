'''Hypothesis strategies for small graphs'''
from hypothesis import strategies as st

from pebblebench.graph import Graph, is_connected


@st.composite
def graphs(draw, min_vertices=0, max_vertices=6):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs),
                           max_size=len(pairs)))
    return Graph(n, [e for e, keep in zip(pairs, chosen) if keep])


def connected_graphs(min_vertices=1, max_vertices=6):
    return graphs(min_vertices, max_vertices).filter(is_connected)


@st.composite
def permutations(draw, n):
    return draw(st.permutations(list(range(n))))
