import itertools

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rst_reliability.graph import LabeledGraph

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=3, max_n=7, max_m=None):
    """Random labelled graphs on ``min_n..max_n`` vertices."""
    n = draw(st.integers(min_n, max_n))
    edges = list(itertools.combinations(range(n), 2))
    picked = draw(st.lists(st.sampled_from(edges), unique=True, max_size=max_m or len(edges)))
    return LabeledGraph(n, tuple(picked))


@st.composite
def target_permutations(draw, n):
    """A permutation fixing {0, 1, 2} setwise."""
    head = draw(st.permutations([0, 1, 2]))
    tail = draw(st.permutations(list(range(3, n))))
    return tuple(head) + tuple(tail)
