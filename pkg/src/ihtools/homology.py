"""Rational homology and cohomology of simplicial complexes, induced maps,
the cup product and the Mayer-Vietoris connecting map."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .exactla import QMatrix, Subspace, _Echelon, _low, reduce_columns
from .simplicial import Chain, ComplexError, SimplicialComplex, SimplicialMap


class HomologySpace:
    """A computed quotient space Z/B with a basis of cycle representatives.

    ``coordinates`` sends any element of Z to its coordinate vector in the
    representative basis; elements of B go to zero.  Used for ordinary
    homology, intersection homology and (with ``kind='cohomology'``) for
    cohomology, whose representatives are cocycles.
    """

    def __init__(self, complex: SimplicialComplex, degree: int, cycles: Sequence[Mapping[int, int]],
                 boundaries: Sequence[Mapping[int, int]], kind: str = "homology", boundaries_reduced: bool = False):
        self.complex = complex
        self.degree = degree
        self.kind = kind
        ech = _Echelon()
        if boundaries_reduced:
            for b in boundaries:
                ech.by_low[_low(b)] = (dict(b), None)
        else:
            for b in boundaries:
                ech.add(b)
        reps = []
        for z in cycles:
            if not z:
                continue
            l = _low(z)
            if l in ech.by_low:
                continue
            ech.by_low[l] = (dict(z), len(reps))
            reps.append(z)
        self._echelon = ech
        self._rep_vectors = reps
        self.rank = len(reps)
        self.representatives: List[Chain] = [Chain.from_vector(complex, degree, z) for z in reps]

    @property
    def dim(self) -> int:
        return self.rank

    def coordinates(self, chain: Chain | Mapping[int, object]) -> List[Fraction]:
        if isinstance(chain, Chain):
            if chain.degree != self.degree:
                raise ComplexError(f"a {chain.degree}-chain has no coordinates in degree {self.degree}")
            vec = chain.vector(self.complex)
        else:
            vec = chain
        rem, coeffs = self._echelon.decompose(vec)
        if rem:
            what = "cocycle" if self.kind == "cohomology" else "cycle"
            raise ComplexError(f"chain is not a {what} of this {self.kind} space")
        return [coeffs.get(i, Fraction(0)) for i in range(self.rank)]

    coordinate_map = coordinates

    def contains(self, chain: Chain) -> bool:
        return not self._echelon.reduce(chain.vector(self.complex))

    def chain_of(self, coords: Sequence[object]) -> Chain:
        """The cycle sum(coords[i] * rep_i)."""
        out: Dict[int, Fraction] = {}
        for c, z in zip(coords, self._rep_vectors):
            if c:
                for i, x in z.items():
                    out[i] = out.get(i, 0) + c * x
        return Chain.from_vector(self.complex, self.degree, out)

    def full(self) -> Subspace:
        return Subspace.full(self.rank)

    def __repr__(self) -> str:
        return f"<{self.kind} degree {self.degree} rank {self.rank} of {self.complex!r}>"


CohomologySpace = HomologySpace


def _check_degree(k: SimplicialComplex, degree: int) -> None:
    if not 0 <= degree <= k.dim:
        raise ComplexError(f"degree {degree} outside 0..{k.dim}")


def _transpose(cols: Sequence[Mapping[int, int]], nrows: int) -> List[Dict[int, int]]:
    out: List[Dict[int, int]] = [{} for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            out[i][j] = x
    return out


def cycle_basis(k: SimplicialComplex, degree: int) -> List[Dict[int, int]]:
    """Integer cycle basis in echelon form (each low is a distinct simplex)."""
    if degree == 0:
        return [{i: 1} for i in range(k.count(0))]
    _, kernel = reduce_columns(k.boundary_columns(degree), track=True)
    return kernel


def homology(k: SimplicialComplex, degree: int) -> HomologySpace:
    _check_degree(k, degree)
    key = ("H", degree)
    hit = k._cache.get(key)
    if hit is None:
        cycles = cycle_basis(k, degree)
        if degree < k.dim:
            ech, _ = reduce_columns(k.boundary_columns(degree + 1))
            bounds = list(ech.values())
        else:
            bounds = []
        hit = HomologySpace(k, degree, cycles, bounds, boundaries_reduced=True)
        k._cache[key] = hit
    return hit


def betti_numbers(k: SimplicialComplex) -> Tuple[int, ...]:
    """Ranks only, without representatives (rank-nullity on boundary maps)."""
    ranks = [0]
    for d in range(1, k.dim + 1):
        ech, _ = reduce_columns(k.boundary_columns(d))
        ranks.append(len(ech))
    ranks.append(0)
    return tuple(k.count(d) - ranks[d] - ranks[d + 1] for d in range(k.dim + 1))


def cohomology(k: SimplicialComplex, degree: int) -> CohomologySpace:
    _check_degree(k, degree)
    key = ("Hc", degree)
    hit = k._cache.get(key)
    if hit is None:
        n = k.count(degree)
        if degree < k.dim:
            cob = _transpose(k.boundary_columns(degree + 1), n)
            _, cocycles = reduce_columns(cob, track=True)
        else:
            cocycles = [{i: 1} for i in range(n)]
        if degree > 0:
            ech, _ = reduce_columns(_transpose(k.boundary_columns(degree), k.count(degree - 1)))
            cobounds = list(ech.values())
        else:
            cobounds = []
        hit = HomologySpace(k, degree, cocycles, cobounds, kind="cohomology", boundaries_reduced=True)
        k._cache[key] = hit
    return hit


def pairing_matrix(h: HomologySpace, hc: CohomologySpace) -> QMatrix:
    """P[i][j] = <phi_i, z_j> for cohomology reps phi_i and homology reps z_j."""
    if h.complex is not hc.complex or h.degree != hc.degree:
        raise ComplexError("pairing needs homology and cohomology of the same complex and degree")
    entries = {}
    for i, phi in enumerate(hc.representatives):
        for j, z in enumerate(h.representatives):
            entries[(i, j)] = phi.evaluate(z)
    return QMatrix(hc.rank, h.rank, entries)


def induced_map(f: SimplicialMap, degree: int) -> QMatrix:
    """Matrix of f_* : H_degree(domain) -> H_degree(codomain) in the rep bases."""
    if degree < 0 or degree > f.domain.dim:
        rows = homology(f.codomain, degree).rank if 0 <= degree <= f.codomain.dim else 0
        return QMatrix(rows, 0)
    src = homology(f.domain, degree)
    if degree > f.codomain.dim:
        return QMatrix(0, src.rank)
    dst = homology(f.codomain, degree)
    cols = [dict(enumerate(dst.coordinates(f.push(z)))) for z in src.representatives]
    return QMatrix.from_columns(dst.rank, cols)


def induced_cohomology_map(f: SimplicialMap, degree: int) -> QMatrix:
    """Matrix of f^* : H^degree(codomain) -> H^degree(domain)."""
    if degree < 0 or degree > f.domain.dim:
        cols = cohomology(f.codomain, degree).rank if 0 <= degree <= f.codomain.dim else 0
        return QMatrix(0, cols)
    dst = cohomology(f.domain, degree)
    if degree > f.codomain.dim:
        return QMatrix(dst.rank, 0)
    src = cohomology(f.codomain, degree)
    cols = [dict(enumerate(dst.coordinates(f.pull(phi)))) for phi in src.representatives]
    return QMatrix.from_columns(dst.rank, cols)


def unit_cocycle(k: SimplicialComplex) -> Chain:
    return Chain(0, {(v,): 1 for v in k.vertices}, k)


def cup_product(u: Chain, v: Chain) -> Chain:
    """Alexander-Whitney cup product: front p-face times back q-face."""
    k = u.complex
    if k is None or v.complex is not k:
        raise ComplexError("cup product needs cochains on the same complex")
    p, q = u.degree, v.degree
    uc, vc = u.coefficients, v.coefficients
    out = {}
    if uc and vc:
        for s in k.simplices(p + q):
            a = uc.get(s[:p + 1])
            if a:
                b = vc.get(s[p:])
                if b:
                    out[s] = a * b
    return Chain(p + q, out, k)


def coboundary(u: Chain) -> Chain:
    k = u.complex
    out = {}
    vals = u.coefficients
    for s in k.simplices(u.degree + 1):
        x = 0
        for i in range(len(s)):
            c = vals.get(s[:i] + s[i + 1:])
            if c:
                x += -c if i % 2 else c
        if x:
            out[s] = x
    return Chain(u.degree + 1, out, k)


# ---------------------------------------------------------------------------
# Mayer-Vietoris for closed simplex-wise covers


def _cover(k: SimplicialComplex, a: str, b: str):
    A, B = k.subcomplex(a), k.subcomplex(b)
    missing = [s for s in k.all_simplices() if s not in A and s not in B]
    if missing:
        raise ComplexError(f"{a!r} and {b!r} do not cover the complex; e.g. {missing[0]} lies in neither")
    return A, B


def cover_pieces(k: SimplicialComplex, a: str, b: str) -> Dict[str, Tuple[Optional[SimplicialComplex], Optional[SimplicialMap]]]:
    """Complexes A, B and A n B with inclusion maps into k (None when empty)."""
    key = ("cover", a, b)
    hit = k._cache.get(key)
    if hit is None:
        A, B = _cover(k, a, b)
        hit = {}
        for nm, members in (("A", A), ("B", B), ("AB", A & B)):
            hit[nm] = k.induced(members, name=nm) if members else (None, None)
        k._cache[key] = hit
    return hit


def _rank_or_zero(c: Optional[SimplicialComplex], degree: int) -> int:
    if c is None or not 0 <= degree <= c.dim:
        return 0
    return homology(c, degree).rank


def mv_connecting(k: SimplicialComplex, a: str, b: str, degree: int, prefer: str = "A") -> QMatrix:
    """Connecting map H_degree(k) -> H_{degree-1}(A n B) for a closed cover.

    A cycle z is split as z_A + z_B with simplices lying in both pieces sent
    to ``prefer``; the class of the boundary of z_A is returned.
    """
    A, B = _cover(k, a, b)
    pieces = cover_pieces(k, a, b)
    ab = pieces["AB"][0]
    src_rank = homology(k, degree).rank if 0 <= degree <= k.dim else 0
    tgt_rank = _rank_or_zero(ab, degree - 1)
    if src_rank == 0 or tgt_rank == 0:
        return QMatrix(tgt_rank, src_rank)
    tgt = homology(ab, degree - 1)
    cols = []
    for z in homology(k, degree).representatives:
        if prefer == "A":
            part = {s: c for s, c in z.coefficients.items() if s in A}
        else:
            part = {s: c for s, c in z.coefficients.items() if s in A and s not in B}
        bd = Chain(degree, part).boundary()
        cols.append(dict(enumerate(tgt.coordinates(Chain(degree - 1, bd.coefficients, ab)))))
    return QMatrix.from_columns(tgt_rank, cols)


def _stack_rows(top: QMatrix, bottom: QMatrix) -> QMatrix:
    return top.transpose().hstack(bottom.transpose()).transpose()


def mv_sequence(k: SimplicialComplex, a: str, b: str) -> List[Tuple[str, QMatrix]]:
    """All maps of the long exact sequence, from the top degree down.

    Entries are (name, matrix) with names like ``alpha_2`` (H_2(AnB) ->
    H_2(A)+H_2(B)), ``beta_2`` (-> H_2(k)) and ``delta_2`` (-> H_1(AnB)).
    """
    pieces = cover_pieces(k, a, b)
    (ca, ia), (cb, ib), (cab, _) = pieces["A"], pieces["B"], pieces["AB"]
    out = []
    for d in range(k.dim, -1, -1):
        nab, na, nb, nx = (_rank_or_zero(cab, d), _rank_or_zero(ca, d), _rank_or_zero(cb, d), homology(k, d).rank)
        if cab is not None and 0 <= d <= cab.dim:
            ja = SimplicialMap(cab, ca, {v: v for v in cab.vertices})
            jb = SimplicialMap(cab, cb, {v: v for v in cab.vertices})
            alpha = _stack_rows(induced_map(ja, d) if d <= ca.dim else QMatrix(0, nab),
                                induced_map(jb, d) if d <= cb.dim else QMatrix(0, nab))
        else:
            alpha = QMatrix(na + nb, nab)
        fa = induced_map(ia, d) if ca is not None and d <= ca.dim else QMatrix(nx, na)
        fb = induced_map(ib, d) if cb is not None and d <= cb.dim else QMatrix(nx, nb)
        beta = fa.hstack(-fb)
        out.append((f"alpha_{d}", alpha))
        out.append((f"beta_{d}", beta))
        if d > 0:
            out.append((f"delta_{d}", mv_connecting(k, a, b, d)))
    return out


def exactness_defects(sequence: Sequence[Tuple[str, QMatrix]]) -> List[Tuple[str, int, bool]]:
    """For consecutive maps f then g: (name of g, dim ker g - rank f, g f == 0)."""
    from .exactla import rank

    out = []
    for (_, f), (gname, g) in zip(sequence, sequence[1:]):
        comp_zero = (g @ f).is_zero()
        out.append((gname, (g.cols - rank(g)) - rank(f), comp_zero))
    return out
