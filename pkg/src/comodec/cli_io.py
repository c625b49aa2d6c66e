"""JSON input documents, deterministic report serialization and the CLI.

A document looks like::

    {
      "field": {"type": "rational"},            # or {"type": "prime", "p": 7}
      "coalgebra": {
        "dim": 3, "labels": ["x", "y", "a"],
        "counit": ["1", "1", "0"],
        "delta": [[0, 0, 0, "1"], ["a", "x", "a", "1"], ...]
      },
      "comodule": {"dim": 1, "rho": [[0, 0, 0, "1"]]},       # optional
      "subspaces": {"kx": {"in": "coalgebra", "basis": [["1", "0", "0"]]}}  # optional
    }

Scalars are strings.  Indices are integers or basis labels.  A delta entry
``[k, i, j, c]`` means Δ(e_k) ∋ c·e_i⊗e_j; a rho entry ``[x, y, k, r]``
means ρ(m_x) ∋ r·m_y⊗e_k.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from .builders import corpus_coalgebras, corpus_comodules, randomized_basis, regular_comodule
from .coalgebra import Coalgebra, check_coalgebra, wedge, wedge_tower
from .comodule import (
    Comodule,
    NotSubcoalgebraError,
    NotSubcomoduleError,
    check_comodule,
    closure,
    coefficient_coalgebra,
    component,
    comodule_wedge,
    is_weak_closed,
    socle,
)
from .config import (
    WEAK_SAMPLES_ENV,
    AnalysisConfig,
    AnalysisRefusal,
    ConsistencyError,
    InputError,
    use_config,
)
from .decomp import DecompositionReport, decompose_comodule, verify_structure
from .exactla import QQ, DimensionError, Field, FieldError, GF, Subspace
from .radical import analyze


@dataclass(frozen=True)
class NamedSubspace:
    target: str  # "coalgebra" or "comodule"
    space: Subspace


@dataclass(frozen=True)
class InputDocument:
    coalgebra: Coalgebra
    comodule: Comodule | None = None
    subspaces: dict[str, NamedSubspace] = dc_field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.coalgebra.field

    def module(self) -> Comodule:
        """The declared comodule, or the regular comodule when none is given."""
        return self.comodule if self.comodule is not None else regular_comodule(self.coalgebra)


# ------------------------------------------------------------------ parsing


def _err(where: str, msg: str) -> InputError:
    return InputError(f"{where}: {msg}")


def _expect(obj, kind, where: str):
    if not isinstance(obj, kind) or (kind is int and isinstance(obj, bool)):
        raise _err(where, f"expected {getattr(kind, '__name__', kind)}, got {type(obj).__name__}")
    return obj


def _parse_field(raw, where: str = "field") -> Field:
    _expect(raw, dict, where)
    kind = raw.get("type")
    if kind == "rational":
        return QQ
    if kind == "prime":
        p = _expect(raw.get("p"), int, f"{where}.p")
        try:
            return GF(p)
        except FieldError as exc:
            raise _err(f"{where}.p", str(exc)) from None
    raise _err(f"{where}.type", f"unknown field type {kind!r}")


def _scalar(field: Field, raw, where: str):
    try:
        return field.parse(raw)
    except FieldError as exc:
        raise _err(where, str(exc)) from None


def _index(raw, dim: int, labels, where: str) -> int:
    if isinstance(raw, str):
        if labels is None or raw not in labels:
            raise _err(where, f"unknown basis label {raw!r}")
        return labels.index(raw)
    i = _expect(raw, int, where)
    if not 0 <= i < dim:
        raise _err(where, f"index {i} out of range for dim {dim}")
    return i


def _labels(block: dict, dim: int, where: str):
    labels = block.get("labels")
    if labels is None:
        return None
    _expect(labels, list, where)
    if len(labels) != dim or not all(isinstance(x, str) for x in labels):
        raise _err(where, f"need {dim} string labels")
    if len(set(labels)) != dim:
        raise _err(where, "labels must be distinct")
    return list(labels)


def _entries(block: dict, key: str, dims: Sequence[int], label_sets, field: Field, where: str):
    raw = _expect(block.get(key, []), list, f"{where}.{key}")
    out, seen = [], set()
    for t, entry in enumerate(raw):
        loc = f"{where}.{key}[{t}]"
        _expect(entry, list, loc)
        if len(entry) != 4:
            raise _err(loc, "entry must have 4 items")
        idx = tuple(_index(entry[s], dims[s], label_sets[s], f"{loc}[{s}]") for s in range(3))
        if idx in seen:
            raise _err(loc, f"duplicate entry {idx}")
        seen.add(idx)
        out.append(idx + (_scalar(field, entry[3], f"{loc}[3]"),))
    return out


def _dim(block: dict, where: str) -> int:
    d = _expect(block.get("dim"), int, f"{where}.dim")
    if d < 0:
        raise _err(f"{where}.dim", "dimension must be >= 0")
    return d


def parse_document(data: Any) -> InputDocument:
    _expect(data, dict, "document")
    unknown = set(data) - {"field", "coalgebra", "comodule", "subspaces"}
    if unknown:
        raise _err("document", f"unknown keys {sorted(unknown)}")
    field = _parse_field(data.get("field"))
    cb = _expect(data.get("coalgebra"), dict, "coalgebra")
    n = _dim(cb, "coalgebra")
    clabels = _labels(cb, n, "coalgebra.labels")
    counit = _expect(cb.get("counit"), list, "coalgebra.counit")
    if len(counit) != n:
        raise _err("coalgebra.counit", f"expected {n} entries, got {len(counit)}")
    counit = [_scalar(field, x, f"coalgebra.counit[{t}]") for t, x in enumerate(counit)]
    delta = _entries(cb, "delta", (n, n, n), (clabels,) * 3, field, "coalgebra")
    coalgebra = Coalgebra.build(field, n, delta, counit, clabels)

    comodule = None
    if data.get("comodule") is not None:
        mb = _expect(data["comodule"], dict, "comodule")
        m = _dim(mb, "comodule")
        mlabels = _labels(mb, m, "comodule.labels")
        rho = _entries(mb, "rho", (m, m, n), (mlabels, mlabels, clabels), field, "comodule")
        comodule = Comodule.build(coalgebra, m, rho, mlabels)

    subspaces = {}
    for name, sb in _expect(data.get("subspaces", {}), dict, "subspaces").items():
        loc = f"subspaces.{name}"
        _expect(sb, dict, loc)
        target = sb.get("in", "coalgebra")
        if target not in ("coalgebra", "comodule") or (target == "comodule" and comodule is None):
            raise _err(f"{loc}.in", f"invalid target {target!r}")
        dim = n if target == "coalgebra" else comodule.dim
        vectors = []
        for t, v in enumerate(_expect(sb.get("basis", []), list, f"{loc}.basis")):
            _expect(v, list, f"{loc}.basis[{t}]")
            if len(v) != dim:
                raise _err(f"{loc}.basis[{t}]", f"expected length {dim}")
            vectors.append([_scalar(field, x, f"{loc}.basis[{t}][{s}]") for s, x in enumerate(v)])
        subspaces[name] = NamedSubspace(target, Subspace.span(field, dim, vectors))
    return InputDocument(coalgebra, comodule, subspaces)


def parse_input(text: str) -> InputDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_document(data)


# ------------------------------------------------------------ serialization


def _vec(field: Field, v) -> list[str]:
    return [field.format(x) for x in v]


def subspace_json(s: Subspace, labels=None) -> dict:
    out = {"dim": s.dim, "basis": [_vec(s.field, b) for b in s.basis]}
    if labels is not None:
        out["support"] = [labels[i] for i in sorted({i for b in s.basis for i, x in enumerate(b) if x})]
    return out


def field_json(field: Field) -> dict:
    return {"type": "rational"} if field.p == 0 else {"type": "prime", "p": field.p}


def document_json(doc: InputDocument) -> dict:
    c, f = doc.coalgebra, doc.field
    cb: dict = {
        "dim": c.dim,
        "counit": _vec(f, c.counit),
        "delta": [[k, i, j, f.format(x)] for k, i, j, x in c.delta],
    }
    if c.labels is not None:
        cb["labels"] = list(c.labels)
    out: dict = {"field": field_json(f), "coalgebra": cb}
    if doc.comodule is not None:
        m = doc.comodule
        mb: dict = {"dim": m.dim, "rho": [[x, y, k, f.format(r)] for x, y, k, r in m.rho]}
        if m.labels is not None:
            mb["labels"] = list(m.labels)
        out["comodule"] = mb
    if doc.subspaces:
        out["subspaces"] = {
            name: {"in": ns.target, "basis": [_vec(f, b) for b in ns.space.basis]}
            for name, ns in doc.subspaces.items()
        }
    return out


def _render(obj, indent: int) -> str:
    """JSON with sorted keys; lists of scalars stay on one line."""
    pad, inner = " " * indent, " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k, ensure_ascii=False)}: {_render(obj[k], indent + 2)}"
                 for k in sorted(obj)]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            return json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
        items = [f"{inner}{_render(x, indent + 2)}" for x in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return json.dumps(obj, ensure_ascii=False)


def dumps(obj) -> str:
    return _render(obj, 0) + "\n"


def serialize_document(doc: InputDocument) -> str:
    return dumps(document_json(doc))


def report_json(r: DecompositionReport) -> dict:
    m = r.comodule
    c = m.coalgebra
    classes = []
    for b in r.blocks:
        k = b.coalgebra_class
        classes.append({
            "alpha": b.alpha,
            "simples": [subspace_json(s, c.labels) for s in k.simples],
            "E": subspace_json(k.span, c.labels),
            "E_infinity": subspace_json(k.summand, c.labels),
            "tower_dims": list(k.tower.dims),
            "summand": subspace_json(b.summand, m.labels),
            "M_E": subspace_json(b.component_of_span, m.labels),
            "M_E_infinity": subspace_json(b.tower_of_component, m.labels),
            "cells": [
                {
                    "index": [b.alpha, i],
                    "zero_class": cell.zero,
                    "E": subspace_json(cell.span, c.labels),
                    "M_E": subspace_json(cell.component, m.labels),
                    "M_E_infinity": subspace_json(cell.tower_limit, m.labels),
                }
                for i, cell in enumerate(b.cells)
            ],
        })
    return {
        "field": field_json(c.field),
        "coalgebra_dim": c.dim,
        "comodule_dim": m.dim,
        "coalgebra_classes": classes,
        "coalgebra_link_edges": [list(e) for e in r.coalgebra_graph.edges],
        "comodule_classes": [list(cls) for cls in r.comodule_graph.classes],
        "comodule_link_edges": [list(e) for e in r.comodule_graph.edges],
        "minimal_closed": [subspace_json(v, m.labels) for v in r.comodule_graph.vertices],
        "summands": [subspace_json(s, m.labels) for s in r.summands],
        "socle": subspace_json(r.socle, m.labels),
        "flags": r.flags.as_dict(),
        "checks": [{"name": ch.name, "status": ch.status, "detail": ch.detail}
                   for ch in r.theorem_checks],
    }


def serialize_report(r: DecompositionReport) -> str:
    return dumps(report_json(r))


# ---------------------------------------------------------------------- CLI


def _resolve(doc: InputDocument, ref: str, target: str) -> Subspace:
    """A named subspace, or a comma-separated list of basis labels / indices."""
    if ref in doc.subspaces:
        ns = doc.subspaces[ref]
        if ns.target != target:
            raise InputError(f"subspace {ref!r} lives in the {ns.target}, expected {target}")
        return ns.space
    obj = doc.coalgebra if target == "coalgebra" else doc.module()
    labels = obj.labels
    idx = []
    for part in filter(None, (p.strip() for p in ref.split(","))):
        if labels is not None and part in labels:
            idx.append(labels.index(part))
        elif part.isdigit() and int(part) < obj.dim:
            idx.append(int(part))
        else:
            raise InputError(f"cannot resolve {part!r} as a {target} subspace or basis element")
    return Subspace.coordinate(doc.field, obj.dim, idx)


def _cmd_check(doc: InputDocument, args) -> tuple[dict, int]:
    f = doc.field
    cv = check_coalgebra(doc.coalgebra)
    mv = check_comodule(doc.comodule) if doc.comodule is not None and not cv else []
    out = {"coalgebra_violations": [v.describe(f) for v in cv],
           "comodule_violations": [v.describe(f) for v in mv]}
    return out, (2 if cv or mv else 0)


def _require_valid(doc: InputDocument):
    cv = check_coalgebra(doc.coalgebra)
    if cv:
        raise InputError(f"not a coalgebra: {cv[0].describe(doc.field)}")
    if doc.comodule is not None:
        mv = check_comodule(doc.comodule)
        if mv:
            raise InputError(f"not a comodule: {mv[0].describe(doc.field)}")


def _cmd_coradical(doc, args):
    r = analyze(doc.coalgebra)
    labels = doc.coalgebra.labels
    return {"radical": subspace_json(r.radical), "coradical": subspace_json(r.coradical, labels)}, 0


def _cmd_simples(doc, args):
    labels = doc.coalgebra.labels
    return {"simples": [subspace_json(s, labels) for s in analyze(doc.coalgebra).simples]}, 0


def _cmd_wedge(doc, args):
    if args.comodule:
        m = doc.module()
        x, y = _resolve(doc, args.x, "comodule"), _resolve(doc, args.y, "comodule")
        w = comodule_wedge(m, x, y)
        return {"wedge": subspace_json(w, m.labels)}, 0
    c = doc.coalgebra
    x, y = _resolve(doc, args.x, "coalgebra"), _resolve(doc, args.y, "coalgebra")
    out = {"wedge": subspace_json(wedge(c, x, y), c.labels)}
    if args.tower:
        t = wedge_tower(c, x)
        out["tower_dims"] = list(t.dims)
        out["tower_limit"] = subspace_json(t.limit, c.labels)
    return out, 0


def _cmd_closure(doc, args):
    m = doc.module()
    n = _resolve(doc, args.n, "comodule")
    out = {"closure": subspace_json(closure(m, n), m.labels),
           "coefficients": subspace_json(coefficient_coalgebra(m, n), doc.coalgebra.labels)}
    wc = is_weak_closed(m, n)
    out["weak_closed"] = wc.verdict.value
    if wc.witness is not None:
        out["witness"] = _vec(doc.field, wc.witness)
    return out, 0


def _cmd_component(doc, args):
    m = doc.module()
    e = _resolve(doc, args.e, "coalgebra")
    return {"component": subspace_json(component(m, e), m.labels)}, 0


def _cmd_socle(doc, args):
    m = doc.module()
    s = socle(m)
    return {"socle": subspace_json(s.space, m.labels), "formulas_agree": s.agree}, 0


def _cmd_decompose(doc, args):
    return report_json(decompose_comodule(doc.module(), checks=not args.no_checks)), 0


def _cmd_classify(doc, args):
    return {"flags": decompose_comodule(doc.module(), checks=False).flags.as_dict()}, 0


def _cmd_verify(doc, args):
    checks = verify_structure(doc.module(), seed=args.seed)
    out = {"checks": [{"name": ch.name, "status": ch.status, "detail": ch.detail} for ch in checks]}
    failed = [ch.name for ch in checks if ch.status == "fail"]
    if failed:
        raise ConsistencyError(f"structural checks failed: {', '.join(failed)}")
    return out, 0


def gen_document(name: str, field: Field = QQ, seed: int | None = None) -> InputDocument:
    coalgebras, comodules = corpus_coalgebras(field), corpus_comodules(field)
    if name in coalgebras:
        obj = coalgebras[name]
    elif name in comodules:
        obj = comodules[name]
    else:
        raise InputError(f"unknown builder {name!r}; choose from {sorted(coalgebras) + sorted(comodules)}")
    if seed is not None:
        obj = randomized_basis(obj, seed)
    if isinstance(obj, Coalgebra):
        return InputDocument(obj)
    return InputDocument(obj.coalgebra, obj)


COMMANDS = {
    "check": _cmd_check,
    "coradical": _cmd_coradical,
    "simples": _cmd_simples,
    "wedge": _cmd_wedge,
    "closure": _cmd_closure,
    "component": _cmd_component,
    "socle": _cmd_socle,
    "decompose": _cmd_decompose,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comodec",
        description="Exact coalgebra and comodule decomposition.",
        epilog=(f"Exit codes: 0 ok, 1 analysis refused, 2 input error, 3 internal inconsistency. "
                f"Environment: {WEAK_SAMPLES_ENV} overrides the weak-closedness sample count "
                f"(default 64). Documents without a comodule block use the regular comodule."),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verify-wedge", action="store_true",
                        help="compute every wedge by both formulas and abort on mismatch")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled probes")
    common.add_argument("--output", "-o", help="write the JSON result here instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("check", "coradical", "simples", "socle", "classify", "verify"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
    p = sub.add_parser("decompose", parents=[common])
    p.add_argument("file")
    p.add_argument("--no-checks", action="store_true", help="skip the structural check suite")
    p = sub.add_parser("wedge", parents=[common])
    p.add_argument("file")
    p.add_argument("x", help="subspace name or comma-separated basis labels")
    p.add_argument("y")
    p.add_argument("--comodule", action="store_true", help="wedge of subcomodules")
    p.add_argument("--tower", action="store_true", help="also report the wedge tower of x")
    p = sub.add_parser("closure", parents=[common])
    p.add_argument("file")
    p.add_argument("n", help="subcomodule name or comma-separated basis labels")
    p = sub.add_parser("component", parents=[common])
    p.add_argument("file")
    p.add_argument("e", help="subcoalgebra name or comma-separated basis labels")
    p = sub.add_parser("gen", parents=[common])
    p.add_argument("name", help="builder name, e.g. path or regular_path")
    p.add_argument("--prime", type=int, default=0, help="work over GF(p) instead of Q")
    p.add_argument("--twist", type=int, default=None, help="apply a seeded random change of basis")
    return parser


def _emit(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cli_main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with use_config(AnalysisConfig.from_env(verify_wedge=args.verify_wedge, seed=args.seed)):
            if args.command == "gen":
                field = GF(args.prime) if args.prime else QQ
                _emit(serialize_document(gen_document(args.name, field, args.twist)), args.output)
                return 0
            try:
                with open(args.file, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise InputError(f"{args.file}: {exc.strerror}") from None
            doc = parse_input(text)
            if args.command != "check":
                _require_valid(doc)
            result, code = COMMANDS[args.command](doc, args)
            _emit(dumps(result), args.output)
            if code:
                first = (result.get("coalgebra_violations") or result.get("comodule_violations"))[0]
                print(f"error: {first}", file=sys.stderr)
            return code
    except AnalysisRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except (InputError, FieldError, DimensionError, NotSubcomoduleError, NotSubcoalgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(cli_main())
