"""Finite abstract simplicial complexes, chains, simplicial maps and the
combinatorial constructions (subdivision, quotients, products, cones)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

from .exactla import QMatrix

Vertex = Hashable
Simplex = Tuple[Vertex, ...]


class ComplexError(ValueError):
    pass


def _faces(simplex: Simplex) -> Iterable[Simplex]:
    for r in range(1, len(simplex) + 1):
        yield from combinations(simplex, r)


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (entries distinct)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        while seq[i] != i:
            j = seq[i]
            seq[i], seq[j] = seq[j], seq[i]
            sign = -sign
    return sign


class SimplicialComplex:
    """A face-closed set of simplices over an ordered vertex list.

    Simplices are tuples of vertex labels sorted by the fixed vertex order.
    Named subcomplexes are face-closed sets of such tuples.  Instances are
    treated as immutable; per-instance caches hold derived data.
    """

    def __init__(
        self,
        vertices: Sequence[Vertex],
        simplices: Iterable[Iterable[Vertex]],
        subcomplexes: Optional[Mapping[str, Iterable[Iterable[Vertex]]]] = None,
        *,
        subdivision_depth: int = 0,
        name: str = "",
    ):
        self.vertices: Tuple[Vertex, ...] = tuple(vertices)
        self.order: Dict[Vertex, int] = {v: i for i, v in enumerate(self.vertices)}
        if len(self.order) != len(self.vertices):
            raise ComplexError("duplicate vertex labels")
        self.name = name
        self.subdivision_depth = subdivision_depth
        closed = set()
        for s in simplices:
            s = self.simplex(s)
            if s not in closed:
                closed.update(_faces(s))
        for v in self.vertices:
            closed.add((v,))
        by_dim: Dict[int, List[Simplex]] = {}
        for s in closed:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self.dim = max(by_dim) if by_dim else -1
        key = self._key
        self._simplices: List[Tuple[Simplex, ...]] = [
            tuple(sorted(by_dim.get(d, ()), key=key)) for d in range(self.dim + 1)
        ]
        self._index: List[Dict[Simplex, int]] = [{s: i for i, s in enumerate(ss)} for ss in self._simplices]
        self.subcomplexes: Dict[str, FrozenSet[Simplex]] = {}
        for nm, sub in (subcomplexes or {}).items():
            members = set()
            for s in sub:
                s = self.simplex(s)
                if s not in self:
                    raise ComplexError(f"subcomplex {nm!r}: {s} is not a simplex of the complex")
                members.update(_faces(s))
            self.subcomplexes[nm] = frozenset(members)
        self._cache: dict = {}

    # -- basics -----------------------------------------------------------
    def _key(self, s: Simplex) -> Tuple[int, ...]:
        order = self.order
        return tuple(order[v] for v in s)

    def simplex(self, vertices: Iterable[Vertex]) -> Simplex:
        vs = tuple(vertices)
        try:
            out = tuple(sorted(vs, key=self.order.__getitem__))
        except KeyError as exc:
            raise ComplexError(f"unknown vertex {exc.args[0]!r}") from None
        if len(set(out)) != len(out):
            raise ComplexError(f"repeated vertex in {vs}")
        if not out:
            raise ComplexError("empty simplex")
        return out

    def simplices(self, d: int) -> Tuple[Simplex, ...]:
        if 0 <= d <= self.dim:
            return self._simplices[d]
        return ()

    def all_simplices(self) -> List[Simplex]:
        return [s for ss in self._simplices for s in ss]

    def index(self, s: Simplex) -> int:
        return self._index[len(s) - 1][s]

    def count(self, d: int) -> int:
        return len(self.simplices(d))

    def __contains__(self, s) -> bool:
        d = len(s) - 1
        return 0 <= d <= self.dim and s in self._index[d]

    def __len__(self) -> int:
        return sum(len(ss) for ss in self._simplices)

    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(ss) for ss in self._simplices)

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.f_vector()))

    def maximal_simplices(self) -> List[Simplex]:
        covered = set()
        for d in range(1, self.dim + 1):
            for s in self._simplices[d]:
                covered.update(combinations(s, d))
        return [s for s in self.all_simplices() if s not in covered]

    def is_pure(self) -> bool:
        return all(len(s) == self.dim + 1 for s in self.maximal_simplices())

    def cofaces(self, s: Simplex) -> List[Simplex]:
        """Simplices of dimension dim(s)+1 having s as a face."""
        table = self._cache.get(("cofaces", len(s)))
        if table is None:
            table = {}
            for t in self.simplices(len(s)):
                for f in combinations(t, len(s)):
                    table.setdefault(f, []).append(t)
            self._cache[("cofaces", len(s))] = table
        return table.get(s, [])

    def star(self, s: Simplex) -> List[Simplex]:
        """All simplices containing s (closed under going up)."""
        out, frontier = [s], [s]
        seen = {s}
        while frontier:
            nxt = []
            for t in frontier:
                for u in self.cofaces(t):
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            out.extend(nxt)
            frontier = nxt
        return out

    def neighbors(self, v: Vertex) -> List[Vertex]:
        return [u for e in self.cofaces((v,)) for u in e if u != v]

    def subcomplex(self, name: str) -> FrozenSet[Simplex]:
        try:
            return self.subcomplexes[name]
        except KeyError:
            raise ComplexError(f"unknown subcomplex {name!r}") from None

    def induced(self, simplices: Iterable[Simplex], name: str = "") -> Tuple["SimplicialComplex", "SimplicialMap"]:
        """The closed subcomplex generated by ``simplices`` as a complex of its
        own (same labels, same relative order) plus its inclusion map."""
        simplices = list(simplices)
        vs = {v for s in simplices for v in s}
        verts = [v for v in self.vertices if v in vs]
        sub = SimplicialComplex(verts, simplices, subdivision_depth=self.subdivision_depth, name=name)
        return sub, SimplicialMap(sub, self, {v: v for v in verts})

    def with_subcomplexes(self, extra: Mapping[str, Iterable[Simplex]]) -> "SimplicialComplex":
        subs = {k: list(v) for k, v in self.subcomplexes.items()}
        subs.update({k: list(v) for k, v in extra.items()})
        return SimplicialComplex(self.vertices, self.all_simplices(), subs,
                                 subdivision_depth=self.subdivision_depth, name=self.name)

    def boundary_columns(self, degree: int) -> List[Dict[int, int]]:
        """Sparse integer columns of the boundary map in the given degree."""
        key = ("bd", degree)
        cols = self._cache.get(key)
        if cols is None:
            if degree <= 0 or degree > self.dim:
                cols = [{} for _ in self.simplices(degree)]
            else:
                idx = self._index[degree - 1]
                cols = []
                for s in self._simplices[degree]:
                    col = {}
                    for i in range(len(s)):
                        col[idx[s[:i] + s[i + 1:]]] = -1 if i % 2 else 1
                    cols.append(col)
            self._cache[key] = cols
        return cols

    def __repr__(self) -> str:
        label = f"{self.name} " if self.name else ""
        return f"<SimplicialComplex {label}f={self.f_vector()}>"


def build_complex(maximal_simplices: Sequence[Sequence[Vertex]], vertex_order: Optional[Sequence[Vertex]] = None,
                  subcomplexes: Optional[Mapping[str, Iterable[Iterable[Vertex]]]] = None,
                  name: str = "") -> SimplicialComplex:
    """Face closure of the given simplices.

    Vertex order defaults to order of first appearance.
    """
    if not maximal_simplices:
        raise ComplexError("empty input")
    for s in maximal_simplices:
        if len(set(s)) != len(s):
            raise ComplexError(f"repeated vertex in {tuple(s)}")
        if not s:
            raise ComplexError("empty simplex")
    if vertex_order is None:
        seen: Dict[Vertex, None] = {}
        for s in maximal_simplices:
            for v in s:
                seen.setdefault(v)
        vertex_order = list(seen)
    return SimplicialComplex(vertex_order, maximal_simplices, subcomplexes, name=name)


def boundary_matrix(k: SimplicialComplex, degree: int) -> QMatrix:
    if not 0 <= degree <= k.dim:
        raise ComplexError(f"degree {degree} outside 0..{k.dim}")
    rows = k.count(degree - 1) if degree > 0 else 0
    return QMatrix.from_columns(rows, k.boundary_columns(degree))


# ---------------------------------------------------------------------------
# chains


@dataclass(frozen=True)
class Chain:
    """A finite rational combination of simplices of one degree.

    Also used for cochains (the coefficient on a simplex is then the value of
    the functional on it).
    """

    degree: int
    coefficients: Mapping[Simplex, Fraction] = field(default_factory=dict)
    complex: Optional[SimplicialComplex] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        clean = {}
        for s, c in self.coefficients.items():
            if len(s) != self.degree + 1:
                raise ComplexError(f"simplex {s} has wrong dimension for a {self.degree}-chain")
            if self.complex is not None and s not in self.complex:
                raise ComplexError(f"simplex {s} not in the ambient complex")
            c = Fraction(c)
            if c:
                clean[s] = c
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def from_vector(cls, k: SimplicialComplex, degree: int, vec: Mapping[int, object]) -> "Chain":
        ss = k.simplices(degree)
        return cls(degree, {ss[i]: c for i, c in vec.items()}, k)

    def vector(self, k: Optional[SimplicialComplex] = None) -> Dict[int, Fraction]:
        k = k or self.complex
        if k is None:
            raise ComplexError("chain has no ambient complex")
        return {k.index(s): c for s, c in self.coefficients.items()}

    def boundary(self) -> "Chain":
        out: Dict[Simplex, Fraction] = {}
        if self.degree == 0:
            return Chain(-1, {}, self.complex)
        for s, c in self.coefficients.items():
            for i in range(len(s)):
                f = s[:i] + s[i + 1:]
                out[f] = out.get(f, 0) + (-c if i % 2 else c)
        return Chain(self.degree - 1, out, self.complex)

    def is_cycle(self) -> bool:
        return self.degree == 0 or not self.boundary().coefficients

    def support(self) -> List[Simplex]:
        return list(self.coefficients)

    def evaluate(self, other: "Chain") -> Fraction:
        """Pair a cochain with a chain of the same degree."""
        if other.degree != self.degree:
            raise ComplexError("degree mismatch in evaluation")
        a, b = self.coefficients, other.coefficients
        if len(a) > len(b):
            a, b = b, a
        return sum((c * b[s] for s, c in a.items() if s in b), Fraction(0))

    def __add__(self, other: "Chain") -> "Chain":
        if other.degree != self.degree:
            raise ComplexError("degree mismatch")
        out = dict(self.coefficients)
        for s, c in other.coefficients.items():
            out[s] = out.get(s, 0) + c
        return Chain(self.degree, out, self.complex or other.complex)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {s: -c for s, c in self.coefficients.items()}, self.complex)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, c) -> "Chain":
        return Chain(self.degree, {s: c * x for s, x in self.coefficients.items()}, self.complex)

    def __bool__(self) -> bool:
        return bool(self.coefficients)


# ---------------------------------------------------------------------------
# maps


class SimplicialMap:
    """Vertex map that sends simplices to simplices."""

    def __init__(self, domain: SimplicialComplex, codomain: SimplicialComplex, vertex_map: Mapping[Vertex, Vertex],
                 label: str = "unlabeled"):
        self.domain = domain
        self.codomain = codomain
        self.vertex_map = dict(vertex_map)
        self.label = label
        missing = [v for v in domain.vertices if v not in self.vertex_map]
        if missing:
            raise ComplexError(f"vertex map undefined on {missing[:5]}")
        for v, w in self.vertex_map.items():
            if w not in codomain.order:
                raise ComplexError(f"vertex {v!r} maps to {w!r}, not a codomain vertex")
        for s in domain.maximal_simplices():
            img = {self.vertex_map[v] for v in s}
            if codomain.simplex(img) not in codomain:
                raise ComplexError(f"simplex {s} maps to non-simplex {tuple(img)}")

    def image_simplex(self, s: Simplex) -> Tuple[int, Optional[Simplex]]:
        """(sign, image) for the chain map; image None when s degenerates."""
        img = [self.vertex_map[v] for v in s]
        if len(set(img)) < len(img):
            return 0, None
        order = self.codomain.order
        ranks = sorted(range(len(img)), key=lambda i: order[img[i]])
        # ranks[j] = position in img of the j-th smallest vertex
        perm = [0] * len(img)
        for j, i in enumerate(ranks):
            perm[i] = j
        return _perm_sign(perm), tuple(img[i] for i in ranks)

    def push(self, chain: Chain) -> Chain:
        out: Dict[Simplex, Fraction] = {}
        for s, c in chain.coefficients.items():
            sign, t = self.image_simplex(s)
            if sign:
                out[t] = out.get(t, 0) + sign * c
        return Chain(chain.degree, out, self.codomain)

    def pull(self, cochain: Chain) -> Chain:
        """Pull back a cochain on the codomain: (f^# phi)(s) = phi(f_# s)."""
        vals = cochain.coefficients
        out = {}
        for s in self.domain.simplices(cochain.degree):
            sign, t = self.image_simplex(s)
            if sign and t in vals:
                out[s] = sign * vals[t]
        return Chain(cochain.degree, out, self.domain)

    def chain_matrix(self, degree: int) -> QMatrix:
        src, dst = self.domain.simplices(degree), self.codomain
        entries = {}
        for j, s in enumerate(src):
            sign, t = self.image_simplex(s)
            if sign:
                entries[(dst.index(t), j)] = sign
        return QMatrix(dst.count(degree), len(src), entries)

    def compose(self, first: "SimplicialMap") -> "SimplicialMap":
        """self o first."""
        if first.codomain is not self.domain:
            raise ComplexError("maps are not composable")
        return SimplicialMap(first.domain, self.codomain,
                             {v: self.vertex_map[w] for v, w in first.vertex_map.items()})

    def __matmul__(self, first: "SimplicialMap") -> "SimplicialMap":
        return self.compose(first)

    @classmethod
    def identity(cls, k: SimplicialComplex) -> "SimplicialMap":
        return cls(k, k, {v: v for v in k.vertices}, label="algebraic-model")

    def __repr__(self) -> str:
        return f"<SimplicialMap {self.domain!r} -> {self.codomain!r} [{self.label}]>"


class ChainMap:
    """A linear chain map given simplex by simplex."""

    def __init__(self, domain: SimplicialComplex, codomain: SimplicialComplex,
                 on_simplex: Callable[[Simplex], Mapping[Simplex, int]]):
        self.domain = domain
        self.codomain = codomain
        self._on_simplex = on_simplex

    def push(self, chain: Chain) -> Chain:
        out: Dict[Simplex, Fraction] = {}
        for s, c in chain.coefficients.items():
            for t, x in self._on_simplex(s).items():
                out[t] = out.get(t, 0) + c * x
        return Chain(chain.degree, out, self.codomain)

    __call__ = push

    def chain_matrix(self, degree: int) -> QMatrix:
        entries = {}
        for j, s in enumerate(self.domain.simplices(degree)):
            for t, x in self._on_simplex(s).items():
                entries[(self.codomain.index(t), j)] = x
        return QMatrix(self.codomain.count(degree), self.domain.count(degree), entries)


# ---------------------------------------------------------------------------
# links, fullness


def link(k: SimplicialComplex, sigma: Sequence[Vertex]) -> SimplicialComplex:
    """{tau : tau disjoint from sigma, tau u sigma in k}; may be empty."""
    sigma = k.simplex(sigma)
    if sigma not in k:
        raise ComplexError(f"{sigma} is not a simplex")
    sset = set(sigma)
    tops = []
    for t in k.star(sigma):
        rest = tuple(v for v in t if v not in sset)
        if rest:
            tops.append(rest)
    used = {v for t in tops for v in t}
    return SimplicialComplex([v for v in k.vertices if v in used], tops)


def is_full(k: SimplicialComplex, sub) -> bool:
    """Whether every simplex spanned by the subcomplex's vertices lies in it.

    ``sub`` is a subcomplex name or a set of simplices.
    """
    members = k.subcomplex(sub) if isinstance(sub, str) else set(sub)
    verts = {v for s in members for v in s}
    for d in range(1, k.dim + 1):
        for s in k.simplices(d):
            if s not in members and all(v in verts for v in s):
                return False
    return True


def full_closure_vertices(members: Iterable[Simplex]) -> set:
    return {v for s in members for v in s}


def connected_components(k: SimplicialComplex, members: Optional[Iterable[Simplex]] = None) -> List[set]:
    """Vertex sets of the connected components (of the given subcomplex)."""
    if members is None:
        members = k.all_simplices()
    members = list(members)
    adj: Dict[Vertex, set] = {}
    for s in members:
        for v in s:
            adj.setdefault(v, set())
        if len(s) == 2:
            adj[s[0]].add(s[1])
            adj[s[1]].add(s[0])
    comps, seen = [], set()
    for v in sorted(adj, key=k.order.__getitem__):
        if v in seen:
            continue
        comp, queue = set(), deque([v])
        seen.add(v)
        while queue:
            u = queue.popleft()
            comp.add(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def _graph_distance(k: SimplicialComplex, u: Vertex, v: Vertex) -> Optional[int]:
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            return dist[x]
        for y in k.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return None


# ---------------------------------------------------------------------------
# subdivision and quotients


def barycentric_subdivision(k: SimplicialComplex) -> Tuple[SimplicialComplex, ChainMap]:
    """First barycentric subdivision and the subdivision chain map.

    A vertex of the subdivision is labelled by the simplex of ``k`` it is the
    barycentre of; vertices are ordered by (dimension, position) so a flag
    sorted in this order runs from the smallest face to the largest.
    """
    all_s = sorted(k.all_simplices(), key=lambda s: (len(s), k._key(s)))
    flags: List[Simplex] = []

    def extend(chain: Tuple[Simplex, ...]):
        top = chain[-1]
        if len(top) == 1:
            flags.append(tuple(reversed(chain)))
            return
        for i in range(len(top)):
            extend(chain + (top[:i] + top[i + 1:],))

    for s in k.maximal_simplices():
        extend((s,))
    subs = {}
    for nm, members in k.subcomplexes.items():
        subs[nm] = [f for f in _flags_of(members)]
    sd = SimplicialComplex(all_s, flags, subs, subdivision_depth=k.subdivision_depth + 1,
                           name=f"sd({k.name})" if k.name else "")

    cache: Dict[Simplex, Dict[Simplex, int]] = {}

    def on_simplex(s: Simplex) -> Dict[Simplex, int]:
        hit = cache.get(s)
        if hit is not None:
            return hit
        if len(s) == 1:
            out = {(s,): 1}
        else:
            # sd(s) = (-1)^dim(s) * cone from the barycentre of s over sd(ds)
            sign = -1 if (len(s) - 1) % 2 else 1
            out = {}
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                fs = -1 if i % 2 else 1
                for t, x in on_simplex(face).items():
                    key = t + (s,)
                    out[key] = out.get(key, 0) + sign * fs * x
            out = {t: x for t, x in out.items() if x}
        cache[s] = out
        return out

    return sd, ChainMap(k, sd, on_simplex)


def _flags_of(members: Iterable[Simplex]) -> List[Simplex]:
    out = []

    def extend(chain):
        top = chain[-1]
        if len(top) == 1:
            out.append(tuple(reversed(chain)))
            return
        for i in range(len(top)):
            extend(chain + (top[:i] + top[i + 1:],))

    for s in members:
        extend((s,))
    return out


def last_vertex_map(sd: SimplicialComplex, k: SimplicialComplex) -> SimplicialMap:
    """Simplicial approximation of the identity |sd k| -> |k|: barycentre of a
    simplex goes to its last vertex."""
    return SimplicialMap(sd, k, {b: b[-1] for b in sd.vertices})


def identify_vertices(k: SimplicialComplex, pairs: Sequence[Tuple[Vertex, Vertex]]
                      ) -> Tuple[SimplicialComplex, SimplicialMap]:
    """Glue vertex pairs (u, v) to u, checking the pairs are far apart.

    Each pair is checked in the complex produced by the earlier pairs: the two
    vertices must lie in different components or at edge distance >= 3.
    """
    used = set()
    for u, v in pairs:
        for x in (u, v):
            if x not in k.order:
                raise ComplexError(f"pair ({u!r}, {v!r}): unknown vertex {x!r}")
            if x in used:
                raise ComplexError(f"pair ({u!r}, {v!r}): vertex {x!r} already identified")
            used.add(x)
        if u == v:
            raise ComplexError(f"pair ({u!r}, {v!r}): identical vertices")
    current, total = k, {v: v for v in k.vertices}
    for u, v in pairs:
        u2, v2 = total[u], total[v]
        d = _graph_distance(current, u2, v2)
        if d is not None and d < 3:
            raise ComplexError(f"pair ({u!r}, {v!r}): edge distance {d} < 3")
        vmap = {x: (u2 if x == v2 else x) for x in current.vertices}
        verts = [x for x in current.vertices if x != v2]
        simplices = [tuple(vmap[x] for x in s) for s in current.maximal_simplices()]
        subs = {nm: [tuple(vmap[x] for x in s) for s in mem] for nm, mem in current.subcomplexes.items()}
        current = SimplicialComplex(verts, simplices, subs, subdivision_depth=current.subdivision_depth)
        total = {x: vmap[y] for x, y in total.items()}
    current.name = f"{k.name}/~" if k.name else ""
    return current, SimplicialMap(k, current, total, label="algebraic-model")


def collapse_subcomplex(k: SimplicialComplex, sub: str) -> Tuple[SimplicialComplex, SimplicialMap]:
    """Shrink a full connected subcomplex to its first vertex.

    Requires two barycentric subdivisions since construction so the result
    triangulates the quotient space.
    """
    members = k.subcomplex(sub)
    if not members:
        raise ComplexError(f"subcomplex {sub!r} is empty")
    if k.subdivision_depth < 2:
        raise ComplexError(f"collapse needs at least two barycentric subdivisions (have {k.subdivision_depth})")
    if not is_full(k, members):
        raise ComplexError(f"subcomplex {sub!r} is not full")
    if len(connected_components(k, members)) != 1:
        raise ComplexError(f"subcomplex {sub!r} is not connected")
    verts = {v for s in members for v in s}
    target = min(verts, key=k.order.__getitem__)
    vmap = {x: (target if x in verts else x) for x in k.vertices}
    new_verts = [x for x in k.vertices if x not in verts or x == target]
    images = set()
    for s in k.all_simplices():
        img = tuple(dict.fromkeys(vmap[x] for x in s))
        images.add(img)
    subs = {nm: [tuple(dict.fromkeys(vmap[x] for x in s)) for s in mem]
            for nm, mem in k.subcomplexes.items() if nm != sub}
    q = SimplicialComplex(new_verts, images, subs, subdivision_depth=k.subdivision_depth,
                          name=f"{k.name}/{sub}" if k.name else "")
    return q, SimplicialMap(k, q, vmap, label="non-algebraic-model")


# ---------------------------------------------------------------------------
# constructions


def cone(k: SimplicialComplex, apex: Vertex = "cone") -> SimplicialComplex:
    if apex in k.order:
        raise ComplexError(f"apex label {apex!r} already used")
    simplices = [s + (apex,) for s in k.maximal_simplices()]
    return SimplicialComplex(list(k.vertices) + [apex], simplices, k.subcomplexes,
                             name=f"cone({k.name})" if k.name else "")


def suspension(k: SimplicialComplex, poles: Tuple[Vertex, Vertex] = ("N", "S")) -> SimplicialComplex:
    north, south = poles
    for p in poles:
        if p in k.order:
            raise ComplexError(f"pole label {p!r} already used")
    simplices = [s + (p,) for s in k.maximal_simplices() for p in poles]
    return SimplicialComplex(list(k.vertices) + [north, south], simplices, k.subcomplexes,
                             name=f"susp({k.name})" if k.name else "")


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Union with vertices relabelled (0, v) and (1, v)."""
    verts = [(0, v) for v in a.vertices] + [(1, v) for v in b.vertices]
    simplices = [tuple((0, v) for v in s) for s in a.maximal_simplices()]
    simplices += [tuple((1, v) for v in s) for s in b.maximal_simplices()]
    return SimplicialComplex(verts, simplices)


def product(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Staircase triangulation of |a| x |b| using both vertex orders.

    Simplices are the strictly increasing chains (a_i, b_i) of pairs with
    {a_i} a simplex of a and {b_i} a simplex of b.
    """
    verts = [(x, y) for x in a.vertices for y in b.vertices]
    tops = []
    for s in a.maximal_simplices():
        for t in b.maximal_simplices():
            p, q = len(s) - 1, len(t) - 1

            def paths(i, j, acc):
                if i == p and j == q:
                    tops.append(tuple(acc))
                    return
                if i < p:
                    paths(i + 1, j, acc + [(s[i + 1], t[j])])
                if j < q:
                    paths(i, j + 1, acc + [(s[i], t[j + 1])])

            paths(0, 0, [(s[0], t[0])])
    return SimplicialComplex(verts, tops)
