"""Named example spaces and maps with their expected rank tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from .simplicial import (SimplicialComplex, SimplicialMap, barycentric_subdivision, build_complex,
                         collapse_subcomplex, identify_vertices, product, suspension)

ALGEBRAIC = "algebraic-model"
NON_ALGEBRAIC = "non-algebraic-model"


@dataclass
class CorpusEntry:
    name: str
    complex: SimplicialComplex
    # invariant -> (ranks by degree, provenance tag)
    expected_ranks: Dict[str, Tuple[Tuple[int, ...], str]] = field(default_factory=dict)
    maps: List[SimplicialMap] = field(default_factory=list)
    covers: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    description: str = ""

    def expected(self, invariant: str) -> Optional[Tuple[int, ...]]:
        hit = self.expected_ranks.get(invariant)
        return hit[0] if hit else None


# -- raw complexes -----------------------------------------------------------


@lru_cache(maxsize=None)
def circle() -> SimplicialComplex:
    return build_complex([(0, 1), (1, 2), (0, 2)], vertex_order=[0, 1, 2], name="circle")


@lru_cache(maxsize=None)
def tetrahedron_boundary() -> SimplicialComplex:
    return build_complex([("a", "b", "c"), ("a", "b", "d"), ("a", "c", "d"), ("b", "c", "d")], name="sphere2")


def _octahedron_triangles(north, south, ring):
    tris = []
    for i in range(4):
        e, f = ring[i], ring[(i + 1) % 4]
        tris += [(north, e, f), (south, e, f)]
    return tris


@lru_cache(maxsize=None)
def octahedron() -> SimplicialComplex:
    ring = ["e0", "e1", "e2", "e3"]
    k = build_complex(_octahedron_triangles("N", "S", ring), vertex_order=["N", "S"] + ring, name="octahedron")
    upper = [s for s in k.maximal_simplices() if "S" not in s]
    lower = [s for s in k.maximal_simplices() if "N" not in s]
    return k.with_subcomplexes({"A": upper, "B": lower})


@lru_cache(maxsize=None)
def icosahedron() -> SimplicialComplex:
    # 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom; 0 and 11 antipodal
    tris = [(0, 1 + i, 1 + (i + 1) % 5) for i in range(5)]
    for i in range(5):
        u, u1, l, l1 = 1 + i, 1 + (i + 1) % 5, 6 + i, 6 + (i + 1) % 5
        tris += [(u, u1, l), (u1, l, l1)]
    tris += [(11, 6 + i, 6 + (i + 1) % 5) for i in range(5)]
    return build_complex(tris, vertex_order=list(range(12)), name="icosahedron")


@lru_cache(maxsize=None)
def grid_torus() -> SimplicialComplex:
    t = product(circle(), circle())
    row = [((i, 0), ((i + 1) % 3, 0)) for i in range(3)]
    t = t.with_subcomplexes({"row": row})
    t.name = "grid_torus"
    return t


@lru_cache(maxsize=None)
def csaszar_torus() -> SimplicialComplex:
    tris = []
    for i in range(7):
        tris.append((i, (i + 1) % 7, (i + 3) % 7))
        tris.append((i, (i + 2) % 7, (i + 3) % 7))
    return build_complex(tris, vertex_order=list(range(7)), name="csaszar_torus")


@lru_cache(maxsize=None)
def _normalization() -> Tuple[SimplicialComplex, SimplicialMap]:
    n, f = identify_vertices(icosahedron(), [(0, 11)])
    n.name = "pinched_torus_icosa"
    return n, f


def pinched_torus_icosa() -> SimplicialComplex:
    return _normalization()[0]


@lru_cache(maxsize=None)
def subdivided_grid_torus() -> SimplicialComplex:
    k = grid_torus()
    for _ in range(2):
        k, _ = barycentric_subdivision(k)
    k.name = "sd2_grid_torus"
    return k


@lru_cache(maxsize=None)
def _torus_collapse() -> Tuple[SimplicialComplex, SimplicialMap]:
    q, f = collapse_subcomplex(subdivided_grid_torus(), "row")
    q.name = "pinched_torus_quotient"
    return q, f


def pinched_torus_quotient() -> SimplicialComplex:
    return _torus_collapse()[0]


@lru_cache(maxsize=None)
def glued_spheres() -> SimplicialComplex:
    """Two octahedra glued crosswise at two antipodal pairs; glue points a, b."""
    first = _octahedron_triangles("a", "b", ["x0", "x1", "x2", "x3"])
    second = _octahedron_triangles("a2", "b2", ["y0", "y1", "y2", "y3"])
    order = ["a", "b", "x0", "x1", "x2", "x3", "a2", "b2", "y0", "y1", "y2", "y3"]
    two = build_complex(first + second, vertex_order=order)
    # crosswise: north of one sphere to south of the other
    x, _ = identify_vertices(two, [("a", "b2"), ("b", "a2")])
    # closed models of the open sets X - {b} and X - {a}
    avoid_b = [s for s in x.maximal_simplices() if "b" not in s]
    avoid_a = [s for s in x.maximal_simplices() if "a" not in s]
    x = x.with_subcomplexes({"A": avoid_b, "B": avoid_a})
    x.name = "glued_spheres"
    return x


@lru_cache(maxsize=None)
def susp_torus() -> SimplicialComplex:
    k = suspension(grid_torus())
    k.name = "susp_torus"
    return k


# -- entries -----------------------------------------------------------------


def _entry_circle():
    return CorpusEntry("circle", circle(), {
        "H": ((1, 1), "TRIVIAL"), "IM": ((1, 1), "TRIVIAL"), "KER": ((0, 0), "TRIVIAL")},
        description="3-vertex circle")


def _entry_sphere2():
    return CorpusEntry("sphere2", tetrahedron_boundary(), {
        "H": ((1, 0, 1), "TRIVIAL"), "IM": ((1, 0, 1), "TRIVIAL"), "KER": ((0, 0, 0), "TRIVIAL")},
        description="boundary of the 3-simplex")


def _entry_octahedron():
    return CorpusEntry("octahedron", octahedron(), {
        "H": ((1, 0, 1), "TRIVIAL"), "IM": ((1, 0, 1), "TRIVIAL"), "KER": ((0, 0, 0), "TRIVIAL")},
        covers={"hemispheres": ("A", "B")}, description="octahedral 2-sphere with hemispheres A, B")


def _entry_icosahedron():
    return CorpusEntry("icosahedron", icosahedron(), {
        "H": ((1, 0, 1), "TRIVIAL"), "IM": ((1, 0, 1), "TRIVIAL"), "KER": ((0, 0, 0), "TRIVIAL")},
        description="icosahedral 2-sphere")


def _entry_grid_torus():
    return CorpusEntry("grid_torus", grid_torus(), {
        "H": ((1, 2, 1), "DERIVED"), "IM": ((1, 2, 1), "TRIVIAL"), "KER": ((0, 0, 0), "TRIVIAL")},
        description="9-vertex torus C3 x C3 with a named row circle")


def _entry_csaszar():
    return CorpusEntry("csaszar_torus", csaszar_torus(), {
        "H": ((1, 2, 1), "DERIVED"), "IM": ((1, 2, 1), "TRIVIAL"), "KER": ((0, 0, 0), "TRIVIAL")},
        description="7-vertex torus")


_PINCHED = {
    "H": ((1, 1, 1), "PAPER"), "IH": ((1, 0, 1), "PAPER"), "IM": ((1, 0, 1), "PAPER"), "KER": ((0, 1, 0), "PAPER")}


def _entry_pinched_icosa():
    return CorpusEntry("pinched_torus_icosa", pinched_torus_icosa(), dict(_PINCHED),
                       description="icosahedron with one antipodal pair identified (rational node)")


def _entry_pinched_quotient():
    return CorpusEntry("pinched_torus_quotient", pinched_torus_quotient(), dict(_PINCHED),
                       description="twice-subdivided grid torus with its row circle collapsed")


def _entry_glued():
    return CorpusEntry("glued_spheres", glued_spheres(), {
        "H": ((1, 1, 2), "DERIVED"), "IM": ((1, 0, 2), "DERIVED"), "KER": ((0, 1, 0), "DERIVED")},
        covers={"X-b/X-a": ("A", "B")}, description="two 2-spheres glued along two pairs of points")


def _entry_susp():
    return CorpusEntry("susp_torus", susp_torus(), {
        "H": ((1, 0, 2, 1), "DERIVED"), "IH": ((1, 2, 0, 1), "DERIVED"),
        "IH_upper": ((1, 0, 2, 1), "DERIVED"), "IM": ((1, 0, 0, 1), "DERIVED"),
        "KER": ((0, 0, 2, 0), "DERIVED")},
        description="suspension of the grid torus; two isolated singular points")


def _entry_normalization():
    n, f = _normalization()
    return CorpusEntry("normalization_map", icosahedron(), {
        "H": ((1, 0, 1), "TRIVIAL"), "IM": ((1, 0, 1), "TRIVIAL")}, maps=[f],
        description="normalization icosahedron -> pinched_torus_icosa (algebraic model)")


def _entry_torus_collapse():
    q, f = _torus_collapse()
    return CorpusEntry("torus_collapse_map", subdivided_grid_torus(), {
        "H": ((1, 2, 1), "DERIVED"), "IM": ((1, 2, 1), "TRIVIAL")}, maps=[f],
        description="grid torus -> pinched_torus_quotient collapsing a circle (not algebraic)")


def _entry_mv_glued():
    e = _entry_glued()
    e.name = "mv_cover_glued_spheres"
    e.description = "glued spheres with A, B modelling X - {b}, X - {a}"
    return e


def _entry_mv_sphere():
    e = _entry_octahedron()
    e.name = "mv_cover_sphere"
    return e


BUILDERS = {
    "circle": _entry_circle,
    "sphere2": _entry_sphere2,
    "octahedron": _entry_octahedron,
    "icosahedron": _entry_icosahedron,
    "grid_torus": _entry_grid_torus,
    "csaszar_torus": _entry_csaszar,
    "pinched_torus_icosa": _entry_pinched_icosa,
    "pinched_torus_quotient": _entry_pinched_quotient,
    "glued_spheres": _entry_glued,
    "susp_torus": _entry_susp,
    "normalization_map": _entry_normalization,
    "torus_collapse_map": _entry_torus_collapse,
    "mv_cover_glued_spheres": _entry_mv_glued,
    "mv_cover_sphere": _entry_mv_sphere,
}

SPACES = ["circle", "sphere2", "octahedron", "icosahedron", "grid_torus", "csaszar_torus", "pinched_torus_icosa",
          "pinched_torus_quotient", "glued_spheres", "susp_torus"]
MAPS = ["normalization_map", "torus_collapse_map"]
COVERS = ["mv_cover_glued_spheres", "mv_cover_sphere"]


def names() -> List[str]:
    return list(BUILDERS)


def build(name: str) -> CorpusEntry:
    try:
        return BUILDERS[name]()
    except KeyError:
        raise KeyError(f"no corpus entry named {name!r}; known: {', '.join(BUILDERS)}") from None
