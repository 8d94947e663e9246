from hypothesis import settings, strategies as st

from dgtk import Digraph

settings.register_profile("suite", max_examples=60, deadline=None)
settings.load_profile("suite")


@st.composite
def digraphs(draw, max_n=6, oriented=False):
    n = draw(st.integers(min_value=0, max_value=max_n))
    states = 2 if oriented else 3
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            s = draw(st.integers(min_value=0, max_value=states))
            if s in (1, 3):
                arcs.append((u, v))
            if s in (2, 3):
                arcs.append((v, u))
    return Digraph(n, arcs)
