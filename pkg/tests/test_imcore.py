import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ihtools import corpus
from ihtools.exactla import Subspace
from ihtools.homology import betti_numbers, homology
from ihtools.imcore import (allowable_chain_group, allowable_test, check_annihilator_identity, check_ic_subcomplex,
                            check_ideal, check_invariance, check_ker_pullback, check_pushforward, check_smooth,
                            components, fundamental_class_membership, image_homology, intersection_homology,
                            iota_image, irreducible_components, kernel_cohomology, kernel_cohomology_via_iota,
                            mv_im_check, rank_table)
from ihtools.simplicial import barycentric_subdivision, build_complex, identify_vertices, suspension
from ihtools.stratify import (canonical_stratification, custom_perversity, make_stratification, middle_perversity,
                              parse_perversity, top_perversity, trivial_stratification, upper_middle_perversity,
                              zero_perversity)

from test_homology import RP2


def suspension_ih_oracle(link_betti, p_top):
    """Intersection homology of the suspension of a closed rational homology
    n-manifold L, assembled from two cone formulas and Mayer-Vietoris:
    H_i(L) below the cut-off t = n - p(n+1), zero at t (for t > 0),
    reduced H_{i-1}(L) above."""
    n = len(link_betti) - 1
    t = n - p_top
    reduced = list(link_betti)
    reduced[0] -= 1
    out = []
    for i in range(n + 2):
        if i < t:
            out.append(link_betti[i])
        elif i == t:
            out.append(link_betti[0] if t == 0 else 0)
        else:
            out.append(reduced[i - 1])
    return tuple(out)


LINKS = {
    "circle": lambda: corpus.circle(),
    "torus": lambda: corpus.grid_torus(),
    "csaszar": lambda: corpus.csaszar_torus(),
    "rp2": lambda: build_complex(RP2),
    "sphere2": lambda: corpus.tetrahedron_boundary(),
}


@pytest.mark.parametrize("link_name", sorted(LINKS))
@pytest.mark.parametrize("perv", ["zero", "middle", "upper-middle", "top"])
def test_suspension_matches_cone_formula(link_name, perv):
    link = LINKS[link_name]()
    k = suspension(link)
    s = canonical_stratification(k)
    n = k.dim
    p = parse_perversity(perv, n)
    got = tuple(intersection_homology(s, p, d).rank for d in range(n + 1))
    if s.is_trivial():
        assert got == betti_numbers(k)
    else:
        assert got == suspension_ih_oracle(betti_numbers(link), p(n))


def test_pinched_torus_intersection_homology_is_normalisation():
    s = canonical_stratification(corpus.pinched_torus_icosa())
    p = middle_perversity(2)
    assert tuple(intersection_homology(s, p, d).rank for d in range(3)) == (1, 0, 1)
    # the node is not allowable in degree 0
    assert not allowable_test(s, p, (0,), 0)
    assert allowable_test(s, p, (0,), 2)


def test_trivial_stratification_gives_homology():
    k = corpus.csaszar_torus()
    s = trivial_stratification(k)
    for d in range(3):
        assert intersection_homology(s, middle_perversity(2), d).rank == homology(k, d).rank


@pytest.mark.parametrize("name", ["susp_torus", "pinched_torus_icosa", "glued_spheres"])
def test_ic_is_subcomplex_for_every_perversity(name):
    k = corpus.build(name).complex
    s = canonical_stratification(k)
    n = max(s.formal_dim, 2)
    for p in (zero_perversity(n), middle_perversity(n), upper_middle_perversity(n), top_perversity(n)):
        assert check_ic_subcomplex(s, p).passed


def _perversities(n):
    vals = [0]
    out = []

    def grow(prefix):
        if len(prefix) == n - 1:
            out.append(custom_perversity(n, prefix))
            return
        for step in (0, 1):
            grow(prefix + [prefix[-1] + step])

    grow(vals)
    return out


@settings(max_examples=50)
@given(st.data())
def test_perversity_monotonicity_of_allowable_spans(data):
    k = suspension(suspension(corpus.circle()), poles=("P", "Q"))
    s = canonical_stratification(k)
    ps = _perversities(s.formal_dim)
    p = data.draw(st.sampled_from(ps))
    q = data.draw(st.sampled_from([r for r in ps if p <= r]))
    for i in range(k.dim + 1):
        a = allowable_chain_group(s, p, i)
        b = allowable_chain_group(s, q, i)
        assert set(a.allowable_simplex_basis) <= set(b.allowable_simplex_basis)
        assert a.ic_subspace <= b.ic_subspace


def test_poincare_duality_for_complementary_perversities():
    for k in (corpus.susp_torus(), suspension(corpus.csaszar_torus()), corpus.pinched_torus_icosa()):
        s = canonical_stratification(k)
        n = s.formal_dim
        lo, hi = middle_perversity(n), upper_middle_perversity(n)
        for d in range(n + 1):
            assert intersection_homology(s, lo, d).rank == intersection_homology(s, hi, n - d).rank


def test_iota_image_lands_in_homology():
    s = canonical_stratification(corpus.susp_torus())
    img = iota_image(s, upper_middle_perversity(3), 2)
    assert img.rank == 2 and img.ambient_dim == 2
    assert iota_image(s, middle_perversity(3), 1).rank == 0


def test_iota_through_subdivided_stratification():
    k = corpus.octahedron()
    s = make_stratification(k, {2: [("N",), ("e0",)]})
    assert s.parent_map is not None
    assert iota_image(s, middle_perversity(2), 2) == Subspace.full(1)


def test_irreducible_components():
    assert len(irreducible_components(corpus.pinched_torus_icosa())) == 1
    assert len(irreducible_components(corpus.glued_spheres())) == 2
    assert len(irreducible_components(corpus.susp_torus())) == 1
    # two triangles meeting in a vertex; a dangling edge is its own component
    k = build_complex([(0, 1, 2), (2, 3, 4), (4, 5)])
    comps = irreducible_components(k)
    assert [max(len(s) for s in c) for c in comps] == [3, 3, 2]


def test_components_use_named_subcomplexes():
    k = corpus.glued_spheres()
    named = components(k, ["A", "B"])
    assert [c.dim for c in named] == [2, 2]


@pytest.mark.parametrize("name", corpus.SPACES)
def test_expected_rank_tables(name):
    e = corpus.build(name)
    table = rank_table(e.complex)
    for key in ("H", "IM", "KER"):
        assert table[key] == e.expected(key)


@pytest.mark.parametrize("name", corpus.SPACES)
def test_ker_two_ways(name):
    k = corpus.build(name).complex
    for d in range(k.dim + 1):
        assert kernel_cohomology(k, d).subspace == kernel_cohomology_via_iota(k, d)
    assert check_annihilator_identity(k).passed


@pytest.mark.parametrize("name", corpus.SPACES)
def test_fundamental_classes_in_im(name):
    assert fundamental_class_membership(corpus.build(name).complex).passed


def test_im_contains_component_images():
    k = corpus.glued_spheres()
    im = image_homology(k, 2)
    assert sorted(sub.rank for sub in im.per_component_images.values()) == [1, 1]
    assert im.rank == 2


def test_smooth_collapse():
    for name in ("circle", "sphere2", "grid_torus", "csaszar_torus"):
        rep = check_smooth(corpus.build(name).complex)
        assert rep.passed and rep.comparisons


def test_ideal_property():
    for name in ("pinched_torus_icosa", "glued_spheres", "susp_torus"):
        rep = check_ideal(corpus.build(name).complex)
        assert rep.passed and rep.comparisons


def test_double_pinch_example():
    # a sphere with two pairs of points glued: both H_1 classes die in IM
    sd, _ = barycentric_subdivision(corpus.octahedron())
    v = {x[0]: x for x in sd.vertices if len(x) == 1}
    n, _ = identify_vertices(sd, [(v["N"], v["S"]), (v["e0"], v["e2"])])
    assert rank_table(n) == {"H": (1, 2, 1), "IM": (1, 0, 1), "KER": (0, 2, 0)}


def test_normalization_pushforward_and_pullback():
    f = corpus.build("normalization_map").maps[0]
    for d in range(3):
        push = check_pushforward(f, d)
        pull = check_ker_pullback(f, d)
        assert push.contained and push.equal
        assert pull.pullback_contained and pull.preimage_equal


def test_collapse_map_breaks_containment():
    f = corpus.build("torus_collapse_map").maps[0]
    push = check_pushforward(f, 1)
    assert (push.rank_pushed, push.rank_target, push.contained) == (1, 0, False)
    assert not check_ker_pullback(f, 1).preimage_equal


def test_mv_on_glued_spheres():
    k = corpus.glued_spheres()
    r1 = mv_im_check(k, "A", "B", 1)
    assert r1.contained and r1.defect_at_intersection == 1
    assert (r1.kernel_rank, r1.image_rank) == (1, 0)
    assert mv_im_check(k, "A", "B", 2).contained


def test_mv_on_sphere_hemispheres_is_exact():
    k = corpus.octahedron()
    for d in (1, 2):
        r = mv_im_check(k, "A", "B", d)
        assert r.contained and r.defect_at_intersection == 0
        assert all(defect == 0 for _, defect in r.sequence_defects)


@pytest.mark.parametrize("name", ["pinched_torus_icosa", "glued_spheres", "susp_torus", "grid_torus"])
def test_invariance(name):
    rep = check_invariance(corpus.build(name).complex)
    assert rep.passed, rep.failures()


def test_allowability_at_cone_points():
    k = corpus.susp_torus()
    s = canonical_stratification(k)
    p = middle_perversity(3)
    tri = next(x for x in k.simplices(2) if "N" in x)
    tet = next(x for x in k.simplices(3) if "N" in x)
    assert not allowable_test(s, p, tri, 2)
    assert allowable_test(s, p, tet, 3)
    far = next(x for x in k.simplices(2) if "N" not in x and "S" not in x)
    assert all(allowable_test(s, p, far, i) for i in range(4))


def test_artificial_point_stratum_on_torus():
    k = corpus.grid_torus()
    s = make_stratification(k, {2: [((0, 0),)]})
    p = middle_perversity(2)
    assert tuple(intersection_homology(s, p, d).rank for d in range(3)) == (1, 2, 1)


def test_disjoint_union_components():
    from ihtools.simplicial import disjoint_union

    k = disjoint_union(corpus.grid_torus(), corpus.tetrahedron_boundary())
    assert len(irreducible_components(k)) == 2
    assert rank_table(k)["IM"] == (2, 2, 2)


def test_pinched_torus_isolated_singularity():
    k = corpus.pinched_torus_icosa()
    assert image_homology(k, 2).subspace == Subspace.full(1)
    assert image_homology(k, 3).rank == 0
