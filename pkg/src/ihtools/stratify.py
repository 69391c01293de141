"""Perversities, Goresky-MacPherson filtrations by closed full subcomplexes,
and link-based detection of singular sets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Union

from .homology import betti_numbers
from .simplicial import (ComplexError, Simplex, SimplicialComplex, SimplicialMap, _faces, _flags_of,
                         barycentric_subdivision, is_full, last_vertex_map, link)

REGULAR = "regular"


class StratificationError(ComplexError):
    pass


@dataclass(frozen=True)
class Perversity:
    """p(c) for real codimensions 2 <= c <= top_dim."""

    top_dim: int
    values: Mapping[int, int] = field(default_factory=dict)
    name: str = "custom"

    def __post_init__(self):
        vals = dict(self.values)
        if set(vals) != set(range(2, self.top_dim + 1)):
            raise ValueError(f"perversity needs values for codimensions 2..{self.top_dim}, got {sorted(vals)}")
        if self.top_dim >= 2 and vals[2] != 0:
            raise ValueError("perversity must have p(2) = 0")
        for c in range(2, self.top_dim):
            if not vals[c] <= vals[c + 1] <= vals[c] + 1:
                raise ValueError(f"growth condition fails between codimensions {c} and {c + 1}")
        object.__setattr__(self, "values", vals)

    def __call__(self, c: int) -> int:
        return self.values[c]

    def as_tuple(self) -> tuple:
        return tuple(self.values[c] for c in range(2, self.top_dim + 1))

    def __le__(self, other: "Perversity") -> bool:
        return all(self(c) <= other(c) for c in range(2, min(self.top_dim, other.top_dim) + 1))

    def __hash__(self):
        return hash((self.top_dim, self.as_tuple()))

    def __eq__(self, other):
        if not isinstance(other, Perversity):
            return NotImplemented
        return self.top_dim == other.top_dim and self.as_tuple() == other.as_tuple()


def middle_perversity(n: int) -> Perversity:
    """Lower middle perversity floor((c-2)/2)."""
    return Perversity(n, {c: (c - 2) // 2 for c in range(2, n + 1)}, "middle")


def upper_middle_perversity(n: int) -> Perversity:
    return Perversity(n, {c: (c - 1) // 2 for c in range(2, n + 1)}, "upper-middle")


def zero_perversity(n: int) -> Perversity:
    return Perversity(n, {c: 0 for c in range(2, n + 1)}, "zero")


def top_perversity(n: int) -> Perversity:
    return Perversity(n, {c: c - 2 for c in range(2, n + 1)}, "top")


def custom_perversity(n: int, values: Sequence[int]) -> Perversity:
    """Values listed for codimensions 2, 3, ..., n."""
    if len(values) != max(n - 1, 0):
        raise ValueError(f"expected {max(n - 1, 0)} values for codimensions 2..{n}")
    return Perversity(n, {c: int(v) for c, v in zip(range(2, n + 1), values)})


def parse_perversity(spec: str, n: int) -> Perversity:
    if spec == "middle":
        return middle_perversity(n)
    if spec in ("upper-middle", "upper"):
        return upper_middle_perversity(n)
    if spec == "zero":
        return zero_perversity(n)
    if spec == "top":
        return top_perversity(n)
    if spec.startswith("custom:"):
        return custom_perversity(n, [int(x) for x in spec[7:].split(",") if x.strip()])
    raise ValueError(f"unknown perversity {spec!r}")


# ---------------------------------------------------------------------------
# local structure


def _sphere_or_ball(k: SimplicialComplex, sigma: Simplex) -> str:
    """Classify the link of sigma: 'sphere', 'ball' (acyclic) or 'other'."""
    cache = k._cache.setdefault("linktype", {})
    hit = cache.get(sigma)
    if hit is not None:
        return hit
    m = k.dim - (len(sigma) - 1) - 1
    if m < 0:
        kind = "sphere"
    elif m == 0:
        n = len(k.cofaces(sigma))
        kind = "sphere" if n == 2 else "ball" if n == 1 else "other"
    else:
        lk = link(k, sigma)
        if len(lk.vertices) == 0:
            kind = "other"
        else:
            b = betti_numbers(lk)
            if b[0] == 1 and all(x == 0 for x in b[1:]):
                kind = "ball"
            elif b[0] == 1 and len(b) > m and b[m] == 1 and all(x == 0 for i, x in enumerate(b[1:], 1) if i != m):
                kind = "sphere"
            else:
                kind = "other"
    cache[sigma] = kind
    return kind


def _check_pure(k: SimplicialComplex) -> None:
    if not k.is_pure():
        bad = next(s for s in k.maximal_simplices() if len(s) != k.dim + 1)
        raise StratificationError(f"complex is not pure: maximal simplex {bad} has dimension {len(bad) - 1} < {k.dim}")


def is_rational_homology_manifold(k: SimplicialComplex, allow_boundary: bool = False) -> bool:
    """Every link is a rational homology sphere of the right dimension (or,
    with ``allow_boundary``, acyclic)."""
    _check_pure(k)
    ok = {"sphere", "ball"} if allow_boundary else {"sphere"}
    return all(_sphere_or_ball(k, s) in ok for s in k.all_simplices())


def check_pseudomanifold(k: SimplicialComplex, allow_boundary: bool = False) -> None:
    _check_pure(k)
    n = k.dim
    if n < 1:
        return
    for f in k.simplices(n - 1):
        c = len(k.cofaces(f))
        if c == 2 or (allow_boundary and c == 1):
            continue
        raise StratificationError(f"not a pseudomanifold: {n - 1}-simplex {f} lies in {c} top simplices")


def is_pseudomanifold(k: SimplicialComplex, allow_boundary: bool = False) -> bool:
    try:
        check_pseudomanifold(k, allow_boundary)
    except StratificationError:
        return False
    return True


# ---------------------------------------------------------------------------
# stratifications


def _closure(simplices: Iterable[Simplex]) -> FrozenSet[Simplex]:
    out = set()
    for s in simplices:
        out.update(_faces(s))
    return frozenset(out)


def _dim(members: FrozenSet[Simplex]) -> int:
    return max((len(s) - 1 for s in members), default=-1)


class Stratification:
    """Closed skeleta X_{n-c} (keyed by real codimension c = 2..n), nested and full.

    ``parent_map`` is set when the complex had to be subdivided to make the
    skeleta full; it maps back to the complex originally supplied.
    """

    def __init__(self, complex: SimplicialComplex, skeleta: Mapping[int, Iterable[Simplex]],
                 formal_dim: Optional[int] = None, parent_map: Optional[SimplicialMap] = None):
        self.complex = complex
        self.formal_dim = complex.dim if formal_dim is None else formal_dim
        n = self.formal_dim
        unknown = [c for c in skeleta if not 2 <= c <= n]
        if unknown:
            raise StratificationError(f"codimensions {unknown} outside 2..{n}")
        self.skeleta: Dict[int, FrozenSet[Simplex]] = {c: _closure(skeleta.get(c, ())) for c in range(2, n + 1)}
        self.parent_map = parent_map
        for c, members in self.skeleta.items():
            for s in members:
                if s not in complex:
                    raise StratificationError(f"skeleton codim {c}: {s} is not a simplex")
            if _dim(members) > n - c:
                raise StratificationError(f"skeleton X_{n - c} has dimension {_dim(members)} > {n - c}")
            if c > 2 and not members <= self.skeleta[c - 1]:
                raise StratificationError(f"skeleta not nested at codimension {c}")
        self.vertex_sets: Dict[int, frozenset] = {c: frozenset(v for s in m for v in s) for c, m in self.skeleta.items()}
        self.full = all(is_full(complex, m) for m in self.skeleta.values() if m)

    @property
    def singular_set(self) -> FrozenSet[Simplex]:
        return self.skeleta.get(2, frozenset())

    def codim_of_simplex(self, sigma: Simplex):
        if sigma not in self.complex:
            raise StratificationError(f"{sigma} is not a simplex")
        best = REGULAR
        for c in range(2, self.formal_dim + 1):
            if sigma in self.skeleta[c]:
                best = c
        return best

    def is_trivial(self) -> bool:
        return not self.singular_set

    def key(self) -> tuple:
        return tuple((c, tuple(sorted(self.skeleta[c], key=self.complex._key))) for c in sorted(self.skeleta))

    def __repr__(self) -> str:
        parts = ", ".join(f"X_{self.formal_dim - c}:{len(self.vertex_sets[c])}v" for c in sorted(self.skeleta))
        return f"<Stratification n={self.formal_dim} [{parts}] of {self.complex!r}>"


def codim_of_simplex(s: Stratification, sigma: Simplex):
    return s.codim_of_simplex(sigma)


def make_stratification(k: SimplicialComplex, skeleta: Mapping[int, Iterable[Simplex]],
                        formal_dim: Optional[int] = None, auto_subdivide: bool = True) -> Stratification:
    """Validate skeleta; subdivide once if any skeleton is not full."""
    strat = Stratification(k, {c: [k.simplex(s) for s in ss] for c, ss in skeleta.items()}, formal_dim)
    if strat.full or not auto_subdivide:
        return strat
    sd, _ = barycentric_subdivision(k)
    new = {c: _flags_of(m) for c, m in strat.skeleta.items()}
    out = Stratification(sd, new, strat.formal_dim, parent_map=last_vertex_map(sd, k))
    assert out.full
    return out


def trivial_stratification(k: SimplicialComplex) -> Stratification:
    return Stratification(k, {}, k.dim)


def _singular_closure(k: SimplicialComplex, members: FrozenSet[Simplex], allow_boundary: bool) -> FrozenSet[Simplex]:
    ok = {"sphere", "ball"} if allow_boundary else {"sphere"}
    return _closure(s for s in members if _sphere_or_ball(k, s) not in ok)


def _deeper(k: SimplicialComplex, sigma_set: FrozenSet[Simplex]) -> FrozenSet[Simplex]:
    """Where the singular set itself stops being a homology manifold of its
    top dimension: lower-dimensional pieces and bad links inside it."""
    m = _dim(sigma_set)
    if m <= 0:
        return frozenset()
    sub = SimplicialComplex([v for v in k.vertices if any(v in s for s in sigma_set)], sigma_set)
    tops = set(sub.simplices(m))
    covered = _closure(tops)
    bad = [s for s in sub.all_simplices() if s not in covered]
    for s in covered:
        if len(s) - 1 < m and _sphere_or_ball(sub, s) != "sphere":
            bad.append(s)
    return _closure(bad)


def canonical_stratification(k: SimplicialComplex, allow_boundary: bool = False) -> Stratification:
    """Singular set from the link test, refined recursively inside itself.

    With ``allow_boundary`` simplices with acyclic links (the boundary of a
    pseudomanifold with boundary) count as regular.
    """
    key = ("canon", allow_boundary)
    hit = k._cache.get(key)
    if hit is not None:
        return hit
    check_pseudomanifold(k, allow_boundary)
    n = k.dim
    skeleta: Dict[int, FrozenSet[Simplex]] = {}
    current = _singular_closure(k, frozenset(k.all_simplices()), allow_boundary)
    top = n - 2
    while current:
        m = _dim(current)
        for j in range(m, top + 1):
            skeleta[n - j] = current
        top = m - 1
        current = _deeper(k, current)
    hit = make_stratification(k, skeleta, n)
    k._cache[key] = hit
    return hit


def refine_stratification(s: Stratification, extra_vertices: Iterable) -> Stratification:
    """Add points to every skeleton (new codim-n strata)."""
    extra = [(v,) for v in extra_vertices]
    skeleta = {c: list(m) + extra for c, m in s.skeleta.items()}
    base = s.complex
    out = make_stratification(base, skeleta, s.formal_dim)
    if s.parent_map is not None:
        pm = out.parent_map
        composed = s.parent_map if pm is None else s.parent_map.compose(pm)
        out = Stratification(out.complex, out.skeleta, out.formal_dim, composed)
    return out


def pick_regular_vertex(s: Stratification):
    """A vertex off the singular set, preferably not adjacent to it."""
    sing = s.vertex_sets.get(2, frozenset())
    k = s.complex
    fallback = None
    for v in k.vertices:
        if v in sing:
            continue
        if fallback is None:
            fallback = v
        if not any(u in sing for u in k.neighbors(v)):
            return v
    return fallback
