import itertools

from hypothesis import strategies as st

from domval.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def labels(mask_or_sets):
    """0-based id tuples -> 1-based sets, for comparing against literal fixtures."""
    return [{v + 1 for v in s} for s in mask_or_sets]
