import pytest

from ihtools import corpus
from ihtools.homology import cover_pieces


def test_names_and_unknown():
    assert set(corpus.SPACES + corpus.MAPS + corpus.COVERS) == set(corpus.names())
    with pytest.raises(KeyError):
        corpus.build("klein_bottle_of_doom")


@pytest.mark.parametrize("name", corpus.names())
def test_entry_is_well_formed(name):
    e = corpus.build(name)
    assert e.name == name and e.description
    k = e.complex
    for inv, (ranks, tag) in e.expected_ranks.items():
        assert tag in {"PAPER", "DERIVED", "TRIVIAL"}
        assert len(ranks) == k.dim + 1, inv
    for cover, (a, b) in e.covers.items():
        pieces = cover_pieces(k, a, b)
        assert pieces["AB"][0] is not None


def test_builders_are_cached():
    assert corpus.build("pinched_torus_icosa").complex is corpus.pinched_torus_icosa()


def test_pinched_models_have_one_singular_point():
    from ihtools.stratify import canonical_stratification

    for k in (corpus.pinched_torus_icosa(), corpus.pinched_torus_quotient()):
        s = canonical_stratification(k)
        assert len(s.vertex_sets[2]) == 1
        assert k.euler_characteristic() == 1


def test_maps_are_labelled():
    assert corpus.build("normalization_map").maps[0].label == corpus.ALGEBRAIC
    collapse = corpus.build("torus_collapse_map").maps[0]
    assert collapse.label == corpus.NON_ALGEBRAIC
    assert collapse.codomain is corpus.pinched_torus_quotient()


def test_glued_spheres_cover_models_complements():
    k = corpus.glued_spheres()
    a, b = k.subcomplex("A"), k.subcomplex("B")
    assert ("b",) not in a and ("a",) not in b
    ab = cover_pieces(k, "A", "B")["AB"][0]
    # A n B deformation retracts onto two circles: one around each glue point
    from ihtools.homology import betti_numbers

    assert betti_numbers(ab)[:2] == (2, 2)
