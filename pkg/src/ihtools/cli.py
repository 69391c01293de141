"""Command-line front end.

Every command takes a complex document path or a corpus name.  Exit codes:
0 when every requested check passes, 1 when a check fails (the failure list is
printed as JSON on stderr), 2 for unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import corpus, imcore
from .documents import DocumentError, LoadedComplex, corpus_document, load_complex, load_map
from .homology import homology
from .simplicial import ComplexError
from .stratify import StratificationError, canonical_stratification, parse_perversity

XFAIL_LABEL = corpus.NON_ALGEBRAIC


def _table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)


def _degrees(k, degree: Optional[int]) -> List[int]:
    return list(range(k.dim + 1)) if degree is None else [degree]


def _load(args) -> LoadedComplex:
    return load_complex(args.input).subdivided(args.subdivide)


def _simplex_str(s) -> str:
    return "[" + ",".join(str(v) for v in s) + "]"


# -- commands ----------------------------------------------------------------


def cmd_homology(args):
    lc = _load(args)
    k = lc.complex
    rows, data = [], {"name": lc.name, "degrees": {}}
    for d in _degrees(k, args.degree):
        h = homology(k, d)
        entry = {"rank": h.rank}
        if args.representatives:
            entry["representatives"] = [{_simplex_str(s): str(c) for s, c in z.coefficients.items()}
                                        for z in h.representatives]
        data["degrees"][str(d)] = entry
        rows.append((d, h.rank))
    text = _table(["degree", "H"], rows)
    if args.representatives:
        for d, entry in data["degrees"].items():
            for i, z in enumerate(entry["representatives"]):
                text += f"\nH_{d}[{i}] = " + " + ".join(f"{c}*{s}" for s, c in z.items())
    return data, text, []


def _strat_for(lc: LoadedComplex):
    s = lc.stratification()
    return s if s is not None else canonical_stratification(lc.complex)


def cmd_ih(args):
    lc = _load(args)
    s = _strat_for(lc)
    p = parse_perversity(args.perversity, max(s.formal_dim, 2))
    rows = []
    for d in _degrees(s.complex, args.degree):
        rows.append((d, imcore.intersection_homology(s, p, d).rank))
    data = {"name": lc.name, "perversity": p.name, "values": list(p.as_tuple()),
            "ranks": {str(d): r for d, r in rows}}
    return data, f"perversity {p.name} {list(p.as_tuple())}\n" + _table(["degree", "IH"], rows), []


def cmd_im(args):
    lc = _load(args)
    k = lc.complex
    comps = imcore.components(k, lc.components)
    headers = ["degree", "H", "IM"] + [f"C{c.index}" for c in comps]
    rows, data = [], {"name": lc.name, "degrees": {}}
    for d in _degrees(k, args.degree):
        im = imcore.image_homology(k, d, lc.components)
        per = [im.per_component_images[c.index].rank if c.index in im.per_component_images else 0 for c in comps]
        h = homology(k, d).rank
        rows.append([d, h, im.rank] + per)
        data["degrees"][str(d)] = {"H": h, "IM": im.rank, "components": per}
    return data, _table(headers, rows), []


def cmd_ker(args):
    lc = _load(args)
    k = lc.complex
    comps = imcore.components(k, lc.components)
    headers = ["degree", "H^", "KER"] + [f"C{c.index}" for c in comps]
    rows, data = [], {"name": lc.name, "degrees": {}}
    for d in _degrees(k, args.degree):
        ker = imcore.kernel_cohomology(k, d, lc.components)
        im = imcore.image_homology(k, d, lc.components)
        h = homology(k, d).rank
        # per component: rank of the annihilator of that component's image
        per = [h - im.per_component_images[c.index].rank if c.index in im.per_component_images else h
               for c in comps]
        rows.append([d, h, ker.rank] + per)
        data["degrees"][str(d)] = {"H": h, "KER": ker.rank, "components": per}
    return data, _table(headers, rows), []


def cmd_components(args):
    lc = _load(args)
    comps = imcore.components(lc.complex, lc.components)
    rows, data = [], {"name": lc.name, "components": []}
    for c in comps:
        top = c.complex.maximal_simplices()
        singular = sorted(c.stratification.vertex_sets.get(2, ()), key=str)
        rows.append((c.index, c.dim, len(c.complex.vertices), len(top), " ".join(str(v) for v in singular) or "-"))
        data["components"].append({"index": c.index, "dim": c.dim, "vertices": [str(v) for v in c.complex.vertices],
                                   "maximal_simplices": [[str(v) for v in s] for s in top],
                                   "singular_vertices": [str(v) for v in singular]})
    return data, _table(["component", "dim", "vertices", "top simplices", "singular vertices"], rows), []


def cmd_strata(args):
    lc = _load(args)
    s = _strat_for(lc)
    n = s.formal_dim
    rows, data = [], {"name": lc.name, "formal_dim": n, "subdivided": s.parent_map is not None, "skeleta": {}}
    for c in sorted(s.skeleta):
        members = s.skeleta[c]
        dim = max((len(x) - 1 for x in members), default=-1)
        verts = sorted(s.vertex_sets[c], key=str)
        rows.append((c, f"X_{n - c}", dim, len(members), " ".join(str(v) for v in verts) or "-"))
        data["skeleta"][str(c)] = {"dim": dim, "simplices": len(members), "vertices": [str(v) for v in verts]}
    head = f"formal dimension {n}" + (" (after one barycentric subdivision)" if s.parent_map is not None else "")
    return data, head + "\n" + _table(["codim", "skeleton", "dim", "simplices", "vertices"], rows), []


def cmd_map(args):
    lm = load_map(args.input)
    f = lm.map
    if args.subdivide:
        raise DocumentError("subdivide", "--subdivide is not supported for map documents")
    degrees = range(min(f.domain.dim, f.codomain.dim) + 1) if args.degree is None else [args.degree]
    rows, failures, data = [], [], {"label": lm.label, "degrees": {}}

    def status(ok: bool) -> str:
        if ok:
            return "PASS"
        return "XFAIL" if lm.label == XFAIL_LABEL else "FAIL"

    for d in degrees:
        push = imcore.check_pushforward(f, d)
        pull = imcore.check_ker_pullback(f, d)
        checks = {"push_contained": push.contained, "push_equal": push.equal,
                  "pull_contained": pull.pullback_contained, "preimage_equal": pull.preimage_equal}
        statuses = {nm: status(ok) for nm, ok in checks.items()}
        if lm.label == corpus.ALGEBRAIC:
            failures += [f"degree {d}: {nm}" for nm, ok in checks.items() if not ok]
        elif lm.label == "unlabeled":
            statuses = {nm: ("yes" if ok else "no") for nm, ok in checks.items()}
        data["degrees"][str(d)] = {"pushforward": push.as_dict(), "pullback": pull.as_dict(), "status": statuses}
        rows.append((d, push.rank_source, push.rank_pushed, push.rank_target, statuses["push_contained"],
                     statuses["push_equal"], statuses["preimage_equal"]))
    text = f"label: {lm.label}\n" + _table(
        ["degree", "IM(X)", "f_*IM(X)", "IM(Y)", "contained", "equal", "preimage KER"], rows)
    return data, text, failures


def cmd_mv(args):
    lc = _load(args)
    k = lc.complex
    for nm in (args.a, args.b):
        if nm not in k.subcomplexes:
            raise DocumentError("subcomplex-named", f"no subcomplex named {nm!r}")
    rep = imcore.mv_im_check(k, args.a, args.b, args.degree)
    failures = [] if rep.contained else [f"connecting map does not send IM_{args.degree} into IM(A∩B)"]
    text = (f"connecting map rank: {rep.connecting_rank}\n"
            f"rank of image of IM_{args.degree}(X): {rep.im_connecting_rank}\n"
            f"containment {'PASS' if rep.contained else 'FAIL'}; "
            f"exactness defect at IM_{args.degree - 1}(A∩B): {rep.defect_at_intersection}")
    return rep.as_dict(), text, failures


SUITES = ("invariance", "smooth", "annihilator", "ideal", "all")


def _suite_reports(k, suite: str):
    from .stratify import is_pseudomanifold

    reports = []
    if suite in ("invariance", "all"):
        reports.append(imcore.check_invariance(k))
    if suite in ("smooth", "all"):
        reports.append(imcore.check_smooth(k))
    if suite in ("annihilator", "all"):
        reports.append(imcore.check_annihilator_identity(k))
    if suite in ("ideal", "all"):
        reports.append(imcore.check_ideal(k))
    if suite == "all":
        reports.append(imcore.fundamental_class_membership(k))
        if is_pseudomanifold(k):
            s = canonical_stratification(k)
            reports.append(imcore.check_ic_subcomplex(s, parse_perversity("middle", max(s.formal_dim, 2))))
    return reports


def cmd_check(args):
    lc = _load(args)
    reports = _suite_reports(lc.complex, args.suite)
    lines, failures = [], []
    for rep in reports:
        lines.append(f"== {rep.title}: {'PASS' if rep.passed else 'FAIL'}")
        lines += [f"  {note}" for note in rep.notes]
        for c in rep.comparisons:
            lines.append(f"  {c.name}: {'PASS' if c.passed else 'FAIL'}")
        failures += [f"{rep.title}: {nm}" for nm in rep.failures()]
    return {"name": lc.name, "reports": [r.as_dict() for r in reports]}, "\n".join(lines), failures


def cmd_corpus(args):
    if args.name is None:
        rows = [(nm, corpus.build(nm).description) for nm in corpus.names()]
        return {"entries": dict(rows)}, _table(["name", "description"], rows), []
    if args.name not in corpus.BUILDERS:
        raise DocumentError("corpus-name", f"no corpus entry named {args.name!r}")
    doc = corpus_document(args.name)
    if args.emit:
        Path(args.emit).write_text(json.dumps(doc, indent=1) + "\n")
        return {"written": args.emit}, f"wrote {args.emit}", []
    return doc, json.dumps(doc, indent=1), []


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def global_flags(defaults: bool) -> argparse.ArgumentParser:
        # subcommands repeat the flags without defaults so a value given
        # before the subcommand is not overwritten
        g = argparse.ArgumentParser(add_help=False)
        d = (lambda x: x) if defaults else (lambda x: argparse.SUPPRESS)
        g.add_argument("--subdivide", type=int, default=d(0), metavar="N",
                       help="apply N barycentric subdivisions first")
        g.add_argument("--format", choices=["table", "json"], default=d("table"))
        g.add_argument("--seed", type=int, default=d(None), help="ignored; all computations are deterministic")
        return g

    common = global_flags(False)
    parser = argparse.ArgumentParser(prog="ihtools", parents=[global_flags(True)],
                                     description="Homology, intersection homology, IM and KER of simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, input_help="complex document or corpus name"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if input_help:
            p.add_argument("input", help=input_help)
        p.set_defaults(func=func)
        return p

    p = add("homology", cmd_homology, "simplicial homology ranks")
    p.add_argument("--degree", type=int)
    p.add_argument("--representatives", action="store_true")
    p = add("ih", cmd_ih, "intersection homology ranks")
    p.add_argument("--perversity", default="middle")
    p.add_argument("--degree", type=int)
    add("im", cmd_im, "image homology ranks per degree").add_argument("--degree", type=int)
    add("ker", cmd_ker, "kernel cohomology ranks per degree").add_argument("--degree", type=int)
    add("components", cmd_components, "irreducible components")
    add("strata", cmd_strata, "canonical stratification")
    add("map", cmd_map, "pushforward / pullback report", "map document").add_argument("--degree", type=int)
    p = add("mv", cmd_mv, "Mayer-Vietoris on image homology")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--degree", type=int, required=True)
    add("check", cmd_check, "property suites").add_argument("--suite", choices=SUITES, default="all")
    p = add("corpus", cmd_corpus, "list or emit corpus entries", None)
    p.add_argument("name", nargs="?")
    p.add_argument("--emit", metavar="OUT")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        data, text, failures = args.func(args)
    except (DocumentError, StratificationError, ComplexError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        invariant = getattr(exc, "invariant", type(exc).__name__)
        print(json.dumps({"error": invariant, "message": msg}), file=sys.stderr)
        return 2
    if args.format == "json":
        out = dict(data) if isinstance(data, dict) else {"result": data}
        out["failures"] = failures
        print(json.dumps(out, indent=1, sort_keys=True, default=str))
    else:
        print(text)
    if failures:
        print(json.dumps({"failures": failures}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
