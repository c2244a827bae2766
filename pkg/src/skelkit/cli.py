"""Command line front end.

Exit codes: 0 on success, 1 when the mathematics rejects the request
(validation failures, domain errors), 2 when a document cannot be
parsed.  All output is deterministic: ids are emitted in sorted order
and rationals as exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import birational, essential, modify, skeleton
from .errors import DomainError, ModelFormatError
from .model import SncdModel, validate
from .modelfile import (
    format_fraction,
    load_model,
    parse_fraction,
    serialize_model,
)


def _parse_tuple(model: SncdModel, stratum_id: str, text: str) -> dict[str, Fraction]:
    """Comma-separated rationals in the stratum's vertex order."""
    s = model.stratum(stratum_id)
    parts = [p for p in text.split(",") if p.strip()]
    if len(parts) != len(s.vertices):
        raise DomainError(
            f"stratum {stratum_id!r} has {len(s.vertices)} vertices "
            f"({','.join(s.vertices)}), got {len(parts)} values"
        )
    return {v: parse_fraction(p) for v, p in zip(s.vertices, parts)}


def _print_subcomplex(sub: essential.Subcomplex, model: SncdModel, prefix: str = ""):
    ids = ",".join(sorted(sub.strata))
    connected = essential.is_connected(model, sub)
    tail = "true" if connected else ("false (empty)" if sub.empty else "false")
    print(f"{prefix}strata={{{ids}}}; connected={tail}")


def _load_form(path) -> essential.FormData:
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ModelFormatError(str(exc), str(path)) from None
    except json.JSONDecodeError as exc:
        raise ModelFormatError(
            exc.msg, f"{path}: line {exc.lineno} column {exc.colno}"
        ) from None
    if not isinstance(doc, dict):
        raise ModelFormatError("form document must be a JSON object", str(path))
    unknown = set(doc) - {"m", "mu", "touches_zero", "touches_pole"}
    if unknown:
        raise ModelFormatError(f"unknown keys {sorted(unknown)}", str(path))
    if not isinstance(doc.get("m"), int) or isinstance(doc.get("m"), bool):
        raise ModelFormatError("key 'm' must be an integer", str(path))
    mu = doc.get("mu")
    if not isinstance(mu, dict) or not all(
        isinstance(k, str) and isinstance(v, int) and not isinstance(v, bool)
        for k, v in mu.items()
    ):
        raise ModelFormatError("key 'mu' must map component ids to integers", str(path))
    flags = {}
    for key in ("touches_zero", "touches_pole"):
        raw = doc.get(key, {})
        if not isinstance(raw, dict) or not all(
            isinstance(k, str) and isinstance(v, bool) for k, v in raw.items()
        ):
            raise ModelFormatError(f"key {key!r} must map stratum ids to booleans", str(path))
        flags[key] = raw
    return essential.FormData(doc["m"], mu, flags["touches_zero"], flags["touches_pole"])


def _write_model(model: SncdModel, out_path, summary: str):
    text = serialize_model(model)
    if out_path:
        Path(out_path).write_text(text)
        print(summary)
    else:
        sys.stdout.write(text)


def cmd_validate(args) -> int:
    model = load_model(args.model)
    report = validate(model)
    print(report)
    return 0 if report.ok else 1


def cmd_info(args) -> int:
    model = load_model(args.model)
    print(f"kind: {model.kind}")
    print(f"m: {model.m}")
    print(f"ambient_dim: {model.ambient_dim}")
    print(f"components: {len(model.components)}")
    print(f"strata: {len(model.strata)}")
    for c in model.components:
        print(f"  {c.id}: N={c.N} mu={c.mu}")
    return 0


def cmd_weight(args) -> int:
    model = load_model(args.model)
    alpha = _parse_tuple(model, args.stratum, args.alpha)
    x = skeleton.SkeletonPoint(args.stratum, alpha)
    print(format_fraction(skeleton.weight(model, x)))
    return 0


def cmd_retract(args) -> int:
    model = load_model(args.model)
    values = _parse_tuple(model, args.stratum, args.values)
    x = skeleton.retract(model, skeleton.PointSpec(args.stratum, values))
    s = model.stratum(x.stratum)
    pairs = ",".join(f"{v}={format_fraction(x.alpha[v])}" for v in s.vertices)
    print(f"stratum={x.stratum}; alpha={pairs}")
    return 0


def cmd_classify(args) -> int:
    model = load_model(args.model)
    print(skeleton.classify_face(model, args.stratum))
    return 0


def cmd_blowup(args) -> int:
    model = load_model(args.model)
    if args.stratum and args.point:
        raise DomainError("choose either --stratum or --point, not both")
    if args.stratum:
        out, e_id, _ = modify.blowup_stratum(model, args.stratum)
    elif args.point:
        stratum_id, center_text, codim_text = args.point
        center = tuple(c for c in center_text.split(",") if c)
        try:
            codim = int(codim_text)
        except ValueError:
            raise DomainError(f"codimension must be an integer, got {codim_text!r}")
        out, e_id, _ = modify.blowup_point(model, stratum_id, center, codim)
    else:
        raise DomainError("blowup needs --stratum or --point")
    c = out.component(e_id)
    _write_model(out, args.output, f"new vertex: {e_id} (N={c.N}, mu={c.mu})")
    return 0


def cmd_reduce(args) -> int:
    model = load_model(args.model)
    alpha = _parse_tuple(model, args.stratum, args.alpha)
    x = skeleton.SkeletonPoint(args.stratum, alpha)
    final, comp_id, trace = modify.reduce_to_divisorial(model, x)
    for k, step in enumerate(trace.steps, start=1):
        c = final.component(step.new_vertex)
        print(
            f"step {k}: center={{{','.join(step.center_vertices)}}} "
            f"codim={step.codim} -> {step.new_vertex} (N={c.N}, mu={c.mu})"
        )
    c = final.component(comp_id)
    print(f"final: {comp_id} (N={c.N}, mu={c.mu})")
    return 0


def cmd_ks(args) -> int:
    model = load_model(args.model)
    form = _load_form(args.form) if args.form else None
    lo = essential.min_weight(model, form)
    sub = essential.ks_skeleton(model, form)
    ids = ",".join(sorted(sub.strata))
    connected = essential.is_connected(model, sub)
    tail = "true" if connected else ("false (empty)" if sub.empty else "false")
    print(f"min={format_fraction(lo)}; strata={{{ids}}}; connected={tail}")
    return 0


def cmd_essential(args) -> int:
    model = load_model(args.model)
    forms = [_load_form(p) for p in args.form]
    sub = essential.essential_skeleton(model, forms)
    _print_subcomplex(sub, model)
    return 0


def cmd_lct(args) -> int:
    model = load_model(args.model)
    threshold = birational.lct(model)
    pair = birational.sk_pair(model)
    ids = ",".join(sorted(pair.strata))
    print(f"lct={format_fraction(threshold)}; sk_pair={{{ids}}}")
    return 0


def cmd_report(args) -> int:
    model = load_model(args.model)
    for block, ok in birational.connectedness_report(model):
        ids = ",".join(sorted(block))
        print(f"component {{{ids}}}: threshold locus connected={str(ok).lower()}")
    return 0


def cmd_export(args) -> int:
    model = load_model(args.model)
    if args.format == "structured":
        text = serialize_model(model)
    else:
        text = _to_dot(model)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _to_dot(model: SncdModel) -> str:
    """Graphviz document: one node per stratum, edges along the face maps."""
    marked: set[str] = set()
    try:
        if model.kind == "log-resolution":
            marked = set(birational.sk_pair(model).strata)
        else:
            marked = set(essential.ks_skeleton(model).strata)
    except DomainError:
        pass  # pole-carrying data has no marked locus
    lines = ["graph dual_complex {"]
    for s in model.strata:
        if len(s.vertices) == 1:
            c = model.component(s.vertices[0])
            label = f"{s.id}: {c.id} (N={c.N}, mu={c.mu})"
        else:
            label = f"{s.id}: {{{','.join(s.vertices)}}}"
        attrs = [f'label="{label}"']
        if s.id in marked:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightgrey")
        lines.append(f'  "{s.id}" [{", ".join(attrs)}];')
    for s in model.strata:
        for v in s.vertices:
            if v in s.face_map:
                lines.append(f'  "{s.id}" -- "{s.face_map[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skelkit",
        description="Weighted dual complexes: weights, skeleta and thresholds",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("model", help="path to a model document")
        p.set_defaults(fn=fn)
        return p

    add("validate", cmd_validate, "check every structural invariant")
    add("info", cmd_info, "summarize a model")

    p = add("weight", cmd_weight, "weight of a skeleton point")
    p.add_argument("--stratum", required=True)
    p.add_argument("--alpha", required=True, help="comma-separated rationals in vertex order")

    p = add("retract", cmd_retract, "retract component values onto the skeleton")
    p.add_argument("--stratum", required=True)
    p.add_argument("--values", required=True, help="comma-separated rationals in vertex order")

    p = add("classify", cmd_classify, "shape of the weight function on a face")
    p.add_argument("--stratum", required=True)

    p = add("blowup", cmd_blowup, "blow up a stratum closure or a generic point")
    p.add_argument("--stratum")
    p.add_argument(
        "--point",
        nargs=3,
        metavar=("STRATUM", "CENTER", "CODIM"),
        help="maximal stratum, comma-separated center components, codimension",
    )
    p.add_argument("-o", "--output", help="write the new model here instead of stdout")

    p = add("reduce", cmd_reduce, "blow up until a point becomes divisorial")
    p.add_argument("--stratum", required=True)
    p.add_argument("--alpha", required=True)

    p = add("ks", cmd_ks, "minimal-weight skeleton of the model's form")
    p.add_argument("--form", help="optional form document to overlay")

    p = add("essential", cmd_essential, "union of minimal-weight skeleta of forms")
    p.add_argument("--form", action="append", required=True, help="form document (repeatable)")

    add("lct", cmd_lct, "log canonical threshold and its locus")
    add("report", cmd_report, "threshold-locus connectivity per component")

    p = add("export", cmd_export, "export the complex for external tools")
    p.add_argument("--format", choices=("graph", "structured"), default="graph")
    p.add_argument("-o", "--output")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ModelFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main_entry():
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
