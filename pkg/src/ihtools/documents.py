"""JSON documents for complexes and maps (see ``schemas/``)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import jsonschema

from . import corpus
from .simplicial import ComplexError, SimplicialComplex, SimplicialMap, _flags_of, barycentric_subdivision
from .stratify import Stratification, StratificationError, make_stratification


class DocumentError(ValueError):
    """A document failed to parse or violated a named invariant."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"[{invariant}] {message}")
        self.invariant = invariant


def _schema(name: str) -> dict:
    return json.loads(resources.files("ihtools").joinpath("schemas", name).read_text())


def parse_json(text: str, source: str = "<input>") -> dict:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError("json-syntax", f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _validate(doc: dict, schema: str, source: str) -> None:
    try:
        jsonschema.validate(doc, _schema(schema))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DocumentError("schema", f"{source}: at {where}: {exc.message}") from None


@dataclass
class LoadedComplex:
    complex: SimplicialComplex
    name: str
    stratification_spec: Optional[List[Tuple[int, List[tuple]]]] = None
    components: Optional[List[str]] = None
    formal_dim: Optional[int] = None
    expected_ranks: Dict[str, list] = field(default_factory=dict)

    def stratification(self) -> Optional[Stratification]:
        if self.stratification_spec is None:
            return None
        n = self.formal_dim if self.formal_dim is not None else self.complex.dim
        skeleta = {c: [s for cc, ss in self.stratification_spec if cc >= c for s in ss] for c in range(2, n + 1)}
        try:
            return make_stratification(self.complex, skeleta, n)
        except (StratificationError, ComplexError) as exc:
            raise DocumentError("stratification", str(exc)) from None

    def subdivided(self, times: int) -> "LoadedComplex":
        if times <= 0:
            return self
        k = self.complex
        spec = self.stratification_spec
        for _ in range(times):
            k, _ = barycentric_subdivision(k)
            if spec is not None:
                spec = [(c, _flags_of(_closure(ss))) for c, ss in spec]
        k.name = self.name
        return LoadedComplex(k, self.name, spec, self.components, self.formal_dim, self.expected_ranks)


def _closure(simplices):
    from itertools import combinations

    out = set()
    for s in simplices:
        for r in range(1, len(s) + 1):
            out.update(combinations(s, r))
    return out


def complex_from_document(doc: dict, source: str = "<input>") -> LoadedComplex:
    _validate(doc, "complex.schema.json", source)
    verts = doc["vertices"]
    declared = set(verts)

    def simplex_list(items, where):
        out = []
        for s in items:
            missing = [v for v in s if v not in declared]
            if missing:
                raise DocumentError("vertices-declared", f"{source}: {where}: undeclared vertex {missing[0]!r}")
            if len(set(s)) != len(s):
                raise DocumentError("no-repeated-vertex", f"{source}: {where}: repeated vertex in {s}")
            out.append(tuple(s))
        return out

    maximal = simplex_list(doc["maximal_simplices"], "maximal_simplices")
    subs = {nm: simplex_list(ss, f"subcomplexes/{nm}") for nm, ss in doc.get("subcomplexes", {}).items()}
    try:
        k = SimplicialComplex(verts, maximal, subs, name=doc["name"])
    except ComplexError as exc:
        raise DocumentError("valid-complex", f"{source}: {exc}") from None
    spec = None
    if "stratification" in doc:
        codims = [e["codim"] for e in doc["stratification"]]
        if any(b <= a for a, b in zip(codims, codims[1:])):
            raise DocumentError("codims-increasing", f"{source}: stratification codims {codims} not strictly increasing")
        spec = [(e["codim"], [k.simplex(s) for s in simplex_list(e["simplices"], f"stratification/codim {e['codim']}")])
                for e in doc["stratification"]]
    comps = doc.get("components")
    if comps:
        unknown = [c for c in comps if c not in subs]
        if unknown:
            raise DocumentError("components-named", f"{source}: component {unknown[0]!r} is not a subcomplex")
    return LoadedComplex(k, doc["name"], spec, comps, doc.get("formal_dim"), doc.get("expected_ranks", {}))


def complex_to_document(k: SimplicialComplex, name: Optional[str] = None,
                        stratification: Optional[Stratification] = None,
                        expected_ranks: Optional[Dict[str, tuple]] = None) -> dict:
    lab = str
    doc = {
        "name": name or k.name or "complex",
        "vertices": [lab(v) for v in k.vertices],
        "maximal_simplices": [[lab(v) for v in s] for s in k.maximal_simplices()],
    }
    if len(set(doc["vertices"])) != len(doc["vertices"]):
        raise DocumentError("vertices-distinct", "vertex labels collide after conversion to strings")
    if k.subcomplexes:
        subs = {}
        for nm, members in k.subcomplexes.items():
            sub, _ = k.induced(members)
            subs[nm] = [[lab(v) for v in s] for s in sub.maximal_simplices()]
        doc["subcomplexes"] = subs
    if stratification is not None:
        n = stratification.formal_dim
        entries = []
        for c in sorted(stratification.skeleta):
            deeper = stratification.skeleta.get(c + 1, frozenset())
            own = [s for s in stratification.skeleta[c] if s not in deeper]
            if own:
                entries.append({"codim": c, "simplices": [[lab(v) for v in s] for s in sorted(own, key=k._key)]})
        doc["stratification"] = entries
        doc["formal_dim"] = n
    if expected_ranks:
        doc["expected_ranks"] = {key: list(v) for key, v in expected_ranks.items()}
    return doc


def _stringified(k: SimplicialComplex, name: str) -> SimplicialComplex:
    return complex_from_document(complex_to_document(k, name), name).complex


def load_complex(ref: str, base: Optional[Path] = None) -> LoadedComplex:
    """A path to a complex document or a corpus name."""
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    if path.exists():
        return complex_from_document(parse_json(path.read_text(), str(path)), str(path))
    if ref in corpus.BUILDERS:
        entry = corpus.build(ref)
        doc = complex_to_document(entry.complex, entry.name)
        return complex_from_document(doc, ref)
    raise DocumentError("exists", f"{ref!r} is neither a file nor a corpus name")


@dataclass
class LoadedMap:
    map: SimplicialMap
    domain: LoadedComplex
    codomain: LoadedComplex
    label: str


def map_from_document(doc: dict, source: str = "<input>", base: Optional[Path] = None) -> LoadedMap:
    _validate(doc, "map.schema.json", source)
    dom = load_complex(doc["domain"], base)
    cod = load_complex(doc["codomain"], base)
    label = doc.get("label", "unlabeled")
    try:
        f = SimplicialMap(dom.complex, cod.complex, doc["vertex_map"], label=label)
    except ComplexError as exc:
        raise DocumentError("valid-map", f"{source}: {exc}") from None
    return LoadedMap(f, dom, cod, label)


def load_map(path: str) -> LoadedMap:
    p = Path(path)
    if not p.exists():
        raise DocumentError("exists", f"map document {path!r} not found")
    return map_from_document(parse_json(p.read_text(), path), path, p.parent)


def map_to_document(f: SimplicialMap, domain: str, codomain: str) -> dict:
    return {"domain": domain, "codomain": codomain,
            "vertex_map": {str(v): str(w) for v, w in f.vertex_map.items()}, "label": f.label}


_MAP_ENDS = {
    "normalization_map": ("normalization_map", "pinched_torus_icosa"),
    "torus_collapse_map": ("torus_collapse_map", "pinched_torus_quotient"),
}


def corpus_document(name: str) -> dict:
    """Serialise a corpus entry: map entries become map documents that
    reference their ends by corpus name."""
    entry = corpus.build(name)
    if name in _MAP_ENDS:
        dom, cod = _MAP_ENDS[name]
        return map_to_document(entry.maps[0], dom, cod)
    return complex_to_document(entry.complex, entry.name,
                               expected_ranks={k: v[0] for k, v in entry.expected_ranks.items()})
