"""Allowable chains, intersection homology, image homology and kernel
cohomology, with checkers for their functorial and invariance properties."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .exactla import (QMatrix, Subspace, _Echelon, annihilator, apply_to_subspace, kernel_basis, preimage,
                      rank, reduce_columns)
from .homology import (Chain, HomologySpace, cohomology, cover_pieces, cup_product, homology, induced_cohomology_map,
                       induced_map, mv_connecting, pairing_matrix)
from .simplicial import (ComplexError, Simplex, SimplicialComplex, SimplicialMap, barycentric_subdivision)
from .stratify import (Perversity, Stratification, StratificationError, _sphere_or_ball, canonical_stratification,
                       check_pseudomanifold, middle_perversity, pick_regular_vertex, refine_stratification)


# ---------------------------------------------------------------------------
# allowable chains and intersection homology


def allowable_test(s: Stratification, p: Perversity, sigma: Simplex, i: int) -> bool:
    """dim(sigma n X_{n-c}) <= i - c + p(c) for every c.

    Since skeleta are full, sigma n X_{n-c} is the face spanned by the
    vertices of sigma lying in X_{n-c}.
    """
    if not s.full:
        raise StratificationError("stratification skeleta are not full; subdivide the complex first")
    for c, verts in s.vertex_sets.items():
        if not verts:
            continue
        meet = sum(1 for v in sigma if v in verts) - 1
        if meet >= 0 and meet > i - c + p(c):
            return False
    return True


def _allowable_mask(s: Stratification, p: Perversity, i: int) -> List[bool]:
    key = ("allow", id(s), p.as_tuple(), i)
    k = s.complex
    hit = k._cache.get(key)
    if hit is None:
        hit = [allowable_test(s, p, sigma, i) for sigma in k.simplices(i)]
        k._cache[key] = hit
    return hit


@dataclass
class AllowableChainGroup:
    degree: int
    allowable_simplex_basis: List[Simplex]
    ic_vectors: List[Dict[int, int]]  # over simplex indices of the complex, echelon by low
    ambient: int = 0

    @property
    def ic_rank(self) -> int:
        return len(self.ic_vectors)

    @property
    def ic_subspace(self) -> Subspace:
        return Subspace(self.ambient, self.ic_vectors)


def _ic_vectors(s: Stratification, p: Perversity, i: int) -> List[Dict[int, int]]:
    """Basis of IC_i = {allowable xi with allowable boundary} (simplex indices)."""
    k = s.complex
    mask = _allowable_mask(s, p, i)
    cols_idx = [j for j, ok in enumerate(mask) if ok]
    if i == 0:
        return [{j: 1} for j in cols_idx]
    below = _allowable_mask(s, p, i - 1)
    bd = k.boundary_columns(i)
    projected = [{r: x for r, x in bd[j].items() if not below[r]} for j in cols_idx]
    _, kernel = reduce_columns(projected, track=True)
    return [{cols_idx[t]: x for t, x in vec.items()} for vec in kernel]


def allowable_chain_group(s: Stratification, p: Perversity, i: int) -> AllowableChainGroup:
    k = s.complex
    mask = _allowable_mask(s, p, i)
    allowed = [sigma for sigma, ok in zip(k.simplices(i), mask) if ok]
    return AllowableChainGroup(i, allowed, _ic_vectors(s, p, i), k.count(i))


def intersection_homology(s: Stratification, p: Perversity, degree: int) -> HomologySpace:
    """IH_degree as the homology of the allowable-with-allowable-boundary chains."""
    k = s.complex
    if p.top_dim < s.formal_dim:
        raise StratificationError(f"perversity defined up to codim {p.top_dim}, need {s.formal_dim}")
    key = ("IH", id(s), p.as_tuple(), degree)
    hit = k._cache.get(key)
    if hit is not None:
        return hit
    if not 0 <= degree <= k.dim:
        hit = HomologySpace(k, degree, [], [])
    else:
        mask = _allowable_mask(s, p, degree)
        cols_idx = [j for j, ok in enumerate(mask) if ok]
        if degree == 0:
            cycles = [{j: 1} for j in cols_idx]
        else:
            bd = k.boundary_columns(degree)
            _, kernel = reduce_columns([bd[j] for j in cols_idx], track=True)
            cycles = [{cols_idx[t]: x for t, x in vec.items()} for vec in kernel]
        bounds = []
        if degree < k.dim:
            bd_up = k.boundary_columns(degree + 1)
            for vec in _ic_vectors(s, p, degree + 1):
                out: Dict[int, int] = {}
                for j, x in vec.items():
                    for r, y in bd_up[j].items():
                        z = out.get(r, 0) + x * y
                        if z:
                            out[r] = z
                        else:
                            out.pop(r, None)
                if out:
                    bounds.append(out)
        hit = HomologySpace(k, degree, cycles, bounds, kind="intersection homology")
    k._cache[key] = hit
    return hit


def _push_to(s: Stratification, target_map: Optional[SimplicialMap], chain: Chain) -> Chain:
    if s.parent_map is not None:
        chain = s.parent_map.push(chain)
    if target_map is not None:
        chain = target_map.push(chain)
    return chain


def iota_image(s: Stratification, p: Perversity, k: int, target_map: Optional[SimplicialMap] = None) -> Subspace:
    """im(IH_k -> H_k(target)); target is the stratified complex (or the
    complex it was subdivided from) unless a further map is given."""
    ih = intersection_homology(s, p, k)
    target = target_map.codomain if target_map is not None else (
        s.parent_map.codomain if s.parent_map is not None else s.complex)
    if not 0 <= k <= target.dim:
        return Subspace(0)
    h = homology(target, k)
    return Subspace(h.rank, [dict(enumerate(h.coordinates(_push_to(s, target_map, z)))) for z in ih.representatives])


# ---------------------------------------------------------------------------
# irreducible components


def irreducible_components(k: SimplicialComplex) -> List[FrozenSet[Simplex]]:
    """Closures of the classes of maximal simplices joined across codim-one
    faces whose link is two points."""
    maximal = k.maximal_simplices()
    parent = {s: s for s in maximal}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    maxset = set(maximal)
    for s in maximal:
        d = len(s) - 1
        if d == 0:
            continue
        for i in range(len(s)):
            f = s[:i] + s[i + 1:]
            # link of f is exactly two points iff f has two cofaces, both maximal
            cof = k.cofaces(f)
            if len(cof) != 2 or not all(t in maxset for t in cof):
                continue
            a, b = find(cof[0]), find(cof[1])
            if a != b:
                parent[a] = b
    groups: Dict[Simplex, List[Simplex]] = {}
    for s in maximal:
        groups.setdefault(find(s), []).append(s)
    comps = []
    for members in groups.values():
        closed = set()
        for s in members:
            for r in range(1, len(s) + 1):
                closed.update(combinations(s, r))
        comps.append(frozenset(closed))
    comps.sort(key=lambda c: (-max(len(s) for s in c), min(k._key(s) for s in c)))
    return comps


@dataclass
class Component:
    index: int
    simplices: FrozenSet[Simplex]
    complex: SimplicialComplex
    inclusion: SimplicialMap
    stratification: Stratification

    @property
    def dim(self) -> int:
        return self.complex.dim


def components(k: SimplicialComplex, names: Optional[Sequence[str]] = None,
               stratifications: Optional[Dict[int, Stratification]] = None) -> List[Component]:
    """Components with their canonical (or supplied) stratifications."""
    key = ("components", tuple(names) if names else None)
    cached = k._cache.get(key) if stratifications is None else None
    if cached is not None:
        return cached
    sets = [k.subcomplex(n) for n in names] if names else irreducible_components(k)
    out = []
    for i, members in enumerate(sets):
        ck, inc = k.induced(members, name=f"component{i}")
        if stratifications and i in stratifications:
            strat = stratifications[i]
        else:
            try:
                strat = canonical_stratification(ck, allow_boundary=True)
            except StratificationError as exc:
                raise StratificationError(f"component {i}: {exc}") from None
        out.append(Component(i, members, ck, inc, strat))
    if stratifications is None:
        k._cache[key] = out
    return out


# ---------------------------------------------------------------------------
# image homology and kernel cohomology


@dataclass
class ImageHomology:
    degree: int
    subspace: Subspace
    per_component_images: Dict[int, Subspace]
    homology: Optional[HomologySpace] = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.subspace.rank


def _component_iota(comp: Component, degree: int, target: SimplicialComplex) -> Tuple[Subspace, List[Chain]]:
    """Image of IH_degree(component) in H_degree(target) and the pushed reps."""
    h = homology(target, degree)
    if degree > comp.dim:
        return Subspace(h.rank), []
    p = middle_perversity(max(comp.dim, 2))
    ih = intersection_homology(comp.stratification, p, degree)
    chains = [_push_to(comp.stratification, comp.inclusion, z) for z in ih.representatives]
    return Subspace(h.rank, [dict(enumerate(h.coordinates(c))) for c in chains]), chains


def image_homology(k: SimplicialComplex, degree: int, component_names: Optional[Sequence[str]] = None,
                   stratifications: Optional[Dict[int, Stratification]] = None) -> ImageHomology:
    """Sum over irreducible components of the images of IH -> H(k)."""
    key = ("IM", degree, tuple(component_names) if component_names else None)
    if stratifications is None:
        hit = k._cache.get(key)
        if hit is not None:
            return hit
    if not 0 <= degree <= k.dim:
        return ImageHomology(degree, Subspace(0), {})
    h = homology(k, degree)
    per = {}
    total = Subspace(h.rank)
    for comp in components(k, component_names, stratifications):
        sub, _ = _component_iota(comp, degree, k)
        per[comp.index] = sub
        total = total + sub
    out = ImageHomology(degree, total, per, h)
    if stratifications is None:
        k._cache[key] = out
    return out


def iota_chains(k: SimplicialComplex, degree: int, component_names: Optional[Sequence[str]] = None) -> List[Chain]:
    """All IH representatives of all components, pushed into chains of k."""
    if not 0 <= degree <= k.dim:
        return []
    out = []
    for comp in components(k, component_names):
        out.extend(_component_iota(comp, degree, k)[1])
    return out


@dataclass
class KernelCohomology:
    degree: int
    subspace: Subspace
    cohomology: Optional[HomologySpace] = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.subspace.rank

    def cochains(self) -> List[Chain]:
        return [self.cohomology.chain_of([v.get(i, 0) for i in range(self.cohomology.rank)])
                for v in self.subspace.vectors()]


def kernel_cohomology(k: SimplicialComplex, degree: int, component_names: Optional[Sequence[str]] = None,
                      stratifications: Optional[Dict[int, Stratification]] = None) -> KernelCohomology:
    """Annihilator of IM_degree under the evaluation pairing, in H^degree coordinates."""
    if not 0 <= degree <= k.dim:
        return KernelCohomology(degree, Subspace(0))
    im = image_homology(k, degree, component_names, stratifications)
    hc = cohomology(k, degree)
    pairing = pairing_matrix(homology(k, degree), hc)
    # c in KER iff c . (P a) = 0 for all a in IM
    return KernelCohomology(degree, annihilator(apply_to_subspace(pairing, im.subspace)), hc)


def kernel_cohomology_via_iota(k: SimplicialComplex, degree: int,
                               component_names: Optional[Sequence[str]] = None) -> Subspace:
    """ker of the transposed iota matrix, evaluating cocycle reps directly on
    the pushed IH cycles (no homology coordinates involved)."""
    if not 0 <= degree <= k.dim:
        return Subspace(0)
    hc = cohomology(k, degree)
    chains = iota_chains(k, degree, component_names)
    m = QMatrix(hc.rank, len(chains), {(i, r): phi.evaluate(z) for i, phi in enumerate(hc.representatives)
                                       for r, z in enumerate(chains)})
    return kernel_basis(m.transpose())


# ---------------------------------------------------------------------------
# property checks


@dataclass
class PushforwardReport:
    degree: int
    contained: bool
    equal: bool
    rank_pushed: int
    rank_target: int
    rank_source: int
    label: str = "unlabeled"

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def check_pushforward(f: SimplicialMap, degree: int) -> PushforwardReport:
    """Compare f_*(IM(domain)) with IM(codomain)."""
    src = image_homology(f.domain, degree)
    dst = image_homology(f.codomain, degree)
    if not (0 <= degree <= f.domain.dim and 0 <= degree <= f.codomain.dim):
        pushed = Subspace(dst.subspace.ambient_dim)
    else:
        pushed = apply_to_subspace(induced_map(f, degree), src.subspace)
    return PushforwardReport(degree, dst.subspace.contains(pushed), pushed == dst.subspace, pushed.rank,
                             dst.rank, src.rank, f.label)


@dataclass
class PullbackReport:
    degree: int
    pullback_contained: bool      # f^* KER(Y) in KER(X)
    preimage_equal: bool          # (f^*)^{-1} KER(X) == KER(Y)
    rank_ker_source: int
    rank_ker_target: int
    rank_pulled: int
    rank_preimage: int
    label: str = "unlabeled"

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def check_ker_pullback(f: SimplicialMap, degree: int) -> PullbackReport:
    ker_x = kernel_cohomology(f.domain, degree)
    ker_y = kernel_cohomology(f.codomain, degree)
    if not (0 <= degree <= f.domain.dim and 0 <= degree <= f.codomain.dim):
        pulled = Subspace(ker_x.subspace.ambient_dim)
        pre = Subspace(ker_y.subspace.ambient_dim) if ker_y.subspace.ambient_dim == 0 else \
            Subspace.full(ker_y.subspace.ambient_dim)
    else:
        fstar = induced_cohomology_map(f, degree)
        pulled = apply_to_subspace(fstar, ker_y.subspace)
        pre = preimage(fstar, ker_x.subspace)
    return PullbackReport(degree, ker_x.subspace.contains(pulled), pre == ker_y.subspace, ker_x.rank, ker_y.rank,
                          pulled.rank, pre.rank, f.label)


@dataclass
class Comparison:
    name: str
    before: object
    after: object
    passed: bool


@dataclass
class Report:
    title: str
    comparisons: List[Comparison] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons)

    def add(self, name: str, before, after, passed: Optional[bool] = None) -> None:
        self.comparisons.append(Comparison(name, before, after, before == after if passed is None else passed))

    def failures(self) -> List[str]:
        return [c.name for c in self.comparisons if not c.passed]

    def as_dict(self) -> dict:
        return {"title": self.title, "passed": self.passed,
                "comparisons": [{"name": c.name, "before": _jsonable(c.before), "after": _jsonable(c.after),
                                 "passed": c.passed} for c in self.comparisons],
                "notes": list(self.notes)}


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(y) for y in x]
    if isinstance(x, Fraction):
        return str(x)
    return x


def rank_table(k: SimplicialComplex) -> Dict[str, Tuple[int, ...]]:
    degrees = range(k.dim + 1)
    return {
        "H": tuple(homology(k, d).rank for d in degrees),
        "IM": tuple(image_homology(k, d).rank for d in degrees),
        "KER": tuple(kernel_cohomology(k, d).rank for d in degrees),
    }


def component_ih_ranks(comp: Component, stratification: Optional[Stratification] = None) -> Tuple[int, ...]:
    s = stratification or comp.stratification
    p = middle_perversity(max(comp.dim, 2))
    return tuple(intersection_homology(s, p, d).rank for d in range(comp.dim + 1))


def check_invariance(k: SimplicialComplex, subdivide: bool = True, refine: bool = True) -> Report:
    """Subdivision and stratification-refinement invariance of IH/IM/KER."""
    rep = Report(f"invariance of {k.name or 'complex'}")
    base = rank_table(k)
    comps = components(k)
    if subdivide:
        sd, sdmap = barycentric_subdivision(k)
        after = rank_table(sd)
        for key in ("H", "IM", "KER"):
            rep.add(f"subdivision: {key} ranks", base[key], after[key])
        for d in range(k.dim + 1):
            h, h2 = homology(k, d), homology(sd, d)
            cols = [dict(enumerate(h2.coordinates(sdmap.push(z)))) for z in h.representatives]
            sdstar = QMatrix.from_columns(h2.rank, cols)
            pushed = apply_to_subspace(sdstar, image_homology(k, d).subspace)
            rep.add(f"subdivision: sd_*(IM_{d}) == IM_{d}(sd)", True, pushed == image_homology(sd, d).subspace)
        sd_comps = components(sd)
        rep.add("subdivision: component count", len(comps), len(sd_comps))
        if len(sd_comps) == len(comps):
            for c, c2 in zip(comps, sd_comps):
                rep.add(f"subdivision: IH ranks of component {c.index}", component_ih_ranks(c), component_ih_ranks(c2))
    if refine:
        refined = {}
        for c in comps:
            if c.dim < 2:
                rep.notes.append(f"component {c.index} has dimension {c.dim}; no codim>=2 strata to refine")
                continue
            v = pick_regular_vertex(c.stratification)
            if v is None:
                continue
            r = refine_stratification(c.stratification, [v])
            refined[c.index] = r
            rep.add(f"refinement: IH ranks of component {c.index} (+ point {v!r})", component_ih_ranks(c),
                    component_ih_ranks(c, r))
        if refined:
            im_after = tuple(image_homology(k, d, stratifications=refined).rank for d in range(k.dim + 1))
            ker_after = tuple(kernel_cohomology(k, d, stratifications=refined).rank for d in range(k.dim + 1))
            rep.add("refinement: IM ranks", base["IM"], im_after)
            rep.add("refinement: KER ranks", base["KER"], ker_after)
            for d in range(k.dim + 1):
                rep.add(f"refinement: IM_{d} subspace", True,
                        image_homology(k, d).subspace == image_homology(k, d, stratifications=refined).subspace)
    return rep


def check_smooth(k: SimplicialComplex) -> Report:
    """On rational homology manifolds IM = H and KER = 0 in every degree."""
    from .stratify import is_rational_homology_manifold

    rep = Report(f"smooth collapse on {k.name or 'complex'}")
    if not is_rational_homology_manifold(k):
        rep.notes.append("not a rational homology manifold; nothing to check")
        return rep
    t = rank_table(k)
    rep.add("IM=H in all degrees", t["H"], t["IM"])
    rep.add("KER=0 in all degrees", tuple(0 for _ in t["KER"]), t["KER"])
    return rep


def check_annihilator_identity(k: SimplicialComplex) -> Report:
    rep = Report("KER = Ann(IM) = ker(iota^T)")
    for d in range(k.dim + 1):
        a = kernel_cohomology(k, d).subspace
        b = kernel_cohomology_via_iota(k, d)
        rep.add(f"degree {d}", a.rank, b.rank, a == b)
    rep.add("KER^0 = 0", 0, kernel_cohomology(k, 0).rank)
    return rep


def check_ideal(k: SimplicialComplex) -> Report:
    """u cup v and v cup u stay in KER for u in KER, v a cohomology basis class."""
    rep = Report("KER is an ideal")
    n = k.dim
    for j in range(n + 1):
        ker = kernel_cohomology(k, j)
        for ui, u in enumerate(ker.cochains()):
            for l in range(n + 1 - j):
                target = kernel_cohomology(k, j + l)
                hc = cohomology(k, j + l)
                for vi, v in enumerate(cohomology(k, l).representatives):
                    for side, w in (("right", cup_product(u, v)), ("left", cup_product(v, u))):
                        coords = hc.coordinates(w)
                        ok = target.subspace.contains_vector(coords)
                        rep.add(f"KER^{j}[{ui}] {side}-cup H^{l}[{vi}]", True, ok)
    rep.add("KER^0 = 0", 0, kernel_cohomology(k, 0).rank)
    return rep


def fundamental_class_membership(k: SimplicialComplex) -> Report:
    rep = Report("fundamental classes lie in IM")
    for c in components(k):
        d = c.dim
        top = homology(c.complex, d)
        if top.rank != 1:
            rep.notes.append(f"component {c.index}: not an orientable closed pseudomanifold "
                             f"(H_{d} rank {top.rank}); skipped")
            continue
        z = c.inclusion.push(top.representatives[0])
        coords = homology(k, d).coordinates(z)
        rep.add(f"[component {c.index}] in IM_{d}", True, image_homology(k, d).subspace.contains_vector(coords))
    return rep


def check_ic_subcomplex(s: Stratification, p: Perversity) -> Report:
    rep = Report("IC_* is a chain subcomplex")
    k = s.complex
    for i in range(1, k.dim + 1):
        lower = _Echelon()
        for v in _ic_vectors(s, p, i - 1):
            lower.add(v)
        bd = k.boundary_columns(i)
        ok = True
        for vec in _ic_vectors(s, p, i):
            out: Dict[int, Fraction] = {}
            for j, x in vec.items():
                for r, y in bd[j].items():
                    out[r] = out.get(r, 0) + x * y
            if lower.reduce({r: x for r, x in out.items() if x}):
                ok = False
                break
        rep.add(f"d(IC_{i}) in IC_{i - 1}", True, ok)
    return rep


# ---------------------------------------------------------------------------
# Mayer-Vietoris on image homology


@dataclass
class MVReport:
    degree: int
    connecting_rank: int
    im_connecting_rank: int
    contained: bool
    defect_at_intersection: int
    kernel_rank: int
    image_rank: int
    sequence_defects: List[Tuple[str, int]] = field(default_factory=list)

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["sequence_defects"] = [list(x) for x in self.sequence_defects]
        return d


def _im_or_zero(c: Optional[SimplicialComplex], d: int) -> Subspace:
    if c is None:
        return Subspace(0)
    if not 0 <= d <= c.dim:
        return Subspace(0)
    return image_homology(c, d).subspace


def _direct_sum(a: Subspace, b: Subspace) -> Subspace:
    n = a.ambient_dim
    vecs = a.vectors() + [{i + n: x for i, x in v.items()} for v in b.vectors()]
    return Subspace(n + b.ambient_dim, vecs)


def _kernel_dim_on(m: QMatrix, s: Subspace) -> int:
    return s.rank - apply_to_subspace(m, s).rank


def mv_im_check(k: SimplicialComplex, a: str, b: str, degree: int) -> MVReport:
    """Restrict the Mayer-Vietoris sequence to image homology.

    Checks that the connecting map sends IM_degree(k) into IM_{degree-1}(A n B)
    and measures the exactness defect of the IM-sequence at IM_{degree-1}(AnB):
    dim ker(IM(AnB) -> IM(A)+IM(B)) - dim of the image of IM_degree(k).
    """
    from .homology import mv_sequence

    pieces = cover_pieces(k, a, b)
    ca, cb, cab = pieces["A"][0], pieces["B"][0], pieces["AB"][0]
    delta = mv_connecting(k, a, b, degree)
    im_x = _im_or_zero(k, degree)
    im_ab = _im_or_zero(cab, degree - 1)
    pushed = apply_to_subspace(delta, im_x) if delta.cols else Subspace(delta.rows)
    contained = im_ab.contains(pushed)
    seq = dict(mv_sequence(k, a, b))
    alpha = seq.get(f"alpha_{degree - 1}")
    kernel = _kernel_dim_on(alpha, im_ab) if alpha is not None else 0
    report = MVReport(degree, rank(delta), pushed.rank, contained, kernel - pushed.rank, kernel, pushed.rank)

    # defects along the whole IM-sequence
    spaces = {}
    for d in range(k.dim, -1, -1):
        spaces[f"alpha_{d}"] = _im_or_zero(cab, d)
        spaces[f"beta_{d}"] = _direct_sum(_im_or_zero(ca, d), _im_or_zero(cb, d))
        spaces[f"delta_{d}"] = _im_or_zero(k, d)
    names = [nm for nm, _ in mv_sequence(k, a, b)]
    for prev, nxt in zip(names, names[1:]):
        f, g = seq[prev], seq[nxt]
        src, node = spaces[prev], spaces[nxt]
        img = apply_to_subspace(f, src) if f.cols else Subspace(f.rows)
        report.sequence_defects.append((nxt, _kernel_dim_on(g, node) - img.rank))
    return report
