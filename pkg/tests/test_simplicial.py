from fractions import Fraction

import pytest
from hypothesis import given, settings

from ihtools import corpus
from ihtools.exactla import QMatrix
from ihtools.simplicial import (Chain, ComplexError, SimplicialComplex, SimplicialMap, barycentric_subdivision,
                                boundary_matrix, build_complex, collapse_subcomplex, cone, connected_components,
                                disjoint_union, identify_vertices, is_full, last_vertex_map, link, product,
                                suspension)

from strategies import complexes


def test_face_closure_and_f_vector():
    k = build_complex([(0, 1, 2), (2, 3)])
    assert k.f_vector() == (4, 4, 1)
    assert k.euler_characteristic() == 1
    assert (0, 2) in k and (1, 3) not in k
    assert set(k.maximal_simplices()) == {(2, 3), (0, 1, 2)}


def test_simplex_normalises_order():
    k = build_complex([("b", "a", "c")], vertex_order=["a", "b", "c"])
    assert k.simplex(["c", "a"]) == ("a", "c")
    with pytest.raises(ComplexError):
        k.simplex(["a", "a"])
    with pytest.raises(ComplexError):
        k.simplex(["z"])


def test_bad_subcomplex_rejected():
    with pytest.raises(ComplexError):
        SimplicialComplex([0, 1, 2], [(0, 1), (1, 2)], {"S": [(0, 2)]})


def test_triangle_boundary_matrix():
    k = build_complex([(0, 1, 2)])
    d2 = boundary_matrix(k, 2)
    # faces in order (0,1), (0,2), (1,2): d[012] = [12] - [02] + [01]
    assert d2.to_dense() == [[1], [-1], [1]]


@settings(max_examples=200)
@given(complexes())
def test_boundary_squared_zero(k):
    for d in range(2, k.dim + 1):
        assert (boundary_matrix(k, d - 1) @ boundary_matrix(k, d)).is_zero()


def test_link_of_octahedron_vertex_is_square():
    k = corpus.octahedron()
    lk = link(k, ["N"])
    assert lk.f_vector() == (4, 4)
    assert link(k, ["N", "e0"]).f_vector() == (2,)


def test_chain_boundary_and_evaluate():
    k = build_complex([(0, 1, 2)])
    c = Chain(2, {(0, 1, 2): 2}, k)
    b = c.boundary()
    assert b.coefficients == {(1, 2): 2, (0, 2): -2, (0, 1): 2}
    assert b.boundary().coefficients == {}
    phi = Chain(1, {(0, 1): 1, (0, 2): 1}, k)
    assert phi.evaluate(b) == 0
    assert (3 * c).coefficients[(0, 1, 2)] == Fraction(6)


def test_simplicial_map_sign_and_degeneracy():
    k = build_complex([(0, 1)])
    f = SimplicialMap(k, k, {0: 1, 1: 0})
    assert f.image_simplex((0, 1)) == (-1, (0, 1))
    g = SimplicialMap(k, k, {0: 0, 1: 0})
    assert g.image_simplex((0, 1)) == (0, None)
    with pytest.raises(ComplexError):
        SimplicialMap(build_complex([(0, 1, 2)]), build_complex([(0, 1), (1, 2), (0, 2)]), {0: 0, 1: 1, 2: 2})


@settings(max_examples=60)
@given(complexes(n_vertices=5, max_simplex=3, max_tops=4))
def test_subdivision_chain_map_commutes_with_boundary(k):
    sd, sdmap = barycentric_subdivision(k)
    assert sd.euler_characteristic() == k.euler_characteristic()
    for d in range(1, k.dim + 1):
        lhs = boundary_matrix(sd, d) @ sdmap.chain_matrix(d)
        rhs = sdmap.chain_matrix(d - 1) @ boundary_matrix(k, d)
        assert lhs == rhs


def test_last_vertex_map_is_left_inverse_on_chains():
    k = corpus.circle()
    sd, sdmap = barycentric_subdivision(k)
    back = last_vertex_map(sd, k)
    for d in range(k.dim + 1):
        assert back.chain_matrix(d) @ sdmap.chain_matrix(d) == QMatrix.identity(k.count(d))


def test_subdivision_carries_subcomplexes():
    k = corpus.grid_torus()
    sd, _ = barycentric_subdivision(k)
    assert sd.subdivision_depth == 1
    row = sd.subcomplex("row")
    assert len({s for s in row if len(s) == 1}) == 6
    assert is_full(sd, row)


def test_identify_vertices_distance_check():
    k = corpus.icosahedron()
    with pytest.raises(ComplexError):
        identify_vertices(k, [(0, 1)])
    n, f = identify_vertices(k, [(0, 11)])
    assert n.f_vector() == (11, 30, 20)
    assert f.label == "algebraic-model"


def test_collapse_needs_subdivision():
    with pytest.raises(ComplexError):
        collapse_subcomplex(corpus.grid_torus(), "row")
    q, f = collapse_subcomplex(corpus.subdivided_grid_torus(), "row")
    assert f.label == "non-algebraic-model"
    assert q.euler_characteristic() == 1


def test_constructions_euler():
    t = corpus.grid_torus()
    assert t.f_vector() == (9, 27, 18)
    assert cone(t).euler_characteristic() == 1
    assert suspension(t).euler_characteristic() == 2 - t.euler_characteristic()
    u = disjoint_union(corpus.circle(), corpus.tetrahedron_boundary())
    assert len(connected_components(u)) == 2
    assert product(corpus.circle(), build_complex([(0, 1)])).euler_characteristic() == 0


def test_functoriality_of_chain_maps():
    k = corpus.icosahedron()
    n, f = identify_vertices(k, [(0, 11)])
    sd, _ = barycentric_subdivision(k)
    g = last_vertex_map(sd, k)
    fg = f @ g
    for d in range(3):
        assert fg.chain_matrix(d) == f.chain_matrix(d) @ g.chain_matrix(d)


def test_link_and_fullness_examples():
    c = corpus.circle()
    assert link(c, (0,)).f_vector() == (2,)
    assert link(corpus.tetrahedron_boundary(), ("a", "b")).f_vector() == (2,)
    with pytest.raises(ComplexError):
        link(c, (0, 7))
    assert is_full(corpus.grid_torus(), "row")
    k = build_complex([(0, 1, 2)]).with_subcomplexes({"ends": [(0,), (1,)]})
    assert not is_full(k, "ends")


def test_degenerate_inputs():
    with pytest.raises(ComplexError):
        build_complex([])
    with pytest.raises(ComplexError):
        boundary_matrix(corpus.circle(), 4)
    same, f = identify_vertices(corpus.circle(), [])
    assert same.f_vector() == (3, 3)
    assert all(f.vertex_map[v] == v for v in same.vertices)


def _twice_subdivided(k):
    for _ in range(2):
        k, _ = barycentric_subdivision(k)
    return k


def test_collapse_examples():
    from ihtools.homology import betti_numbers

    tri = build_complex([(0, 1, 2)]).with_subcomplexes({"edge": [(0, 1)], "all": [(0, 1, 2)]})
    sd2 = _twice_subdivided(tri)
    assert betti_numbers(collapse_subcomplex(sd2, "edge")[0]) == (1, 0, 0)
    assert collapse_subcomplex(sd2, "all")[0].f_vector() == (1,)


def test_subdivision_counts():
    edge, _ = barycentric_subdivision(build_complex([(0, 1)]))
    assert edge.f_vector() == (3, 2)
    tri, _ = barycentric_subdivision(build_complex([(0, 1, 2)]))
    assert tri.f_vector()[-1] == 6
