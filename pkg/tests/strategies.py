from hypothesis import strategies as st

from ihtools.simplicial import SimplicialComplex


@st.composite
def complexes(draw, n_vertices=6, max_simplex=4, max_tops=7):
    n = draw(st.integers(3, n_vertices))
    verts = list(range(n))
    tops = draw(st.lists(st.sets(st.sampled_from(verts), min_size=1, max_size=max_simplex),
                         min_size=1, max_size=max_tops))
    return SimplicialComplex(verts, [sorted(t) for t in tops])
