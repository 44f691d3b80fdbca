"""Command-line front door: validate, analyze, configure, filter, export, serve.

Exit codes: 0 success, 1 domain error (violations, rejected decisions,
caps), 2 usage or IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import engine, files, oracle
from .assets import filter_partial
from .errors import (
    CapExceededError,
    CompileError,
    FeatureLineError,
    InvalidDecisionError,
    ModelSyntaxError,
    ModelValidationError,
    ReplayDivergenceError,
    UnknownLabelError,
    VoidModelError,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="featureline",
        description="Feature-model configuration and asset filtering")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a model file and detect cycles")
    p.add_argument("model_file")
    p.add_argument("--strict-cycles", action="store_true",
                   help="treat circular constraints as errors")
    p.add_argument("--format", choices=["text", "records"], default="text")

    p = sub.add_parser("analyze", help="count configurations, find dead and "
                                       "false-optional features")
    p.add_argument("model_file")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_LABEL_CAP,
                   help="maximum label count for enumeration")
    p.add_argument("--format", choices=["text", "records"], default="text")

    p = sub.add_parser("compile", help="compile constraints and report the "
                                       "resulting structure")
    p.add_argument("model_file")
    p.add_argument("--emit-canonical", action="store_true",
                   help="print the canonical model text")

    p = sub.add_parser("configure", help="apply decisions and write a "
                                         "configuration")
    p.add_argument("model_file")
    p.add_argument("--decisions", default="",
                   help='comma list like "Diesel=select,Sunroof=discard"')
    p.add_argument("--out", help="write the configuration file here")
    p.add_argument("--format", choices=["text", "records"], default="text")

    p = sub.add_parser("filter", help="filter the asset catalog by a "
                                      "configuration")
    p.add_argument("model_file")
    p.add_argument("config_file")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--format", choices=["text", "records"], default="text")

    p = sub.add_parser("export", help="export the diagram as graph text")
    p.add_argument("model_file")
    p.add_argument("--config", help="overlay this configuration's colors")
    p.add_argument("--dot", help="write graph text here instead of stdout")

    p = sub.add_parser("serve", help="run the configuration HTTP service")
    p.add_argument("model_files", nargs="*",
                   help="model files preloaded at startup")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--allow-origin", action="append", default=[],
                   help="CORS origin for the web UI (repeatable)")
    p.add_argument("--ui", metavar="DIR",
                   help="also serve the built web UI from this directory at /ui")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = {
        "check": _cmd_check,
        "analyze": _cmd_analyze,
        "compile": _cmd_compile,
        "configure": _cmd_configure,
        "filter": _cmd_filter,
        "export": _cmd_export,
        "serve": _cmd_serve,
    }[args.command]
    try:
        return handler(args)
    except (OSError, ModelSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FeatureLineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def console_main() -> None:
    raise SystemExit(main())


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _load(path: str):
    return files.parse_model(_read(path))


def _cmd_check(args) -> int:
    try:
        model, decls, catalog = _load(args.model_file)
    except ModelValidationError as exc:
        if args.format == "records":
            print(json.dumps({"violations": [str(v) for v in exc.violations]}))
        else:
            for v in exc.violations:
                print(f"violation: {v}")
            print(f"{len(exc.violations)} violations")
        return EXIT_DOMAIN
    except CompileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN

    cycles = oracle.detect_cycles(model)
    if args.format == "records":
        print(json.dumps({
            "violations": [],
            "cycles": [list(c) for c in cycles.components],
            "boxes": len(model.boxes),
            "labels": len(model.labels()),
        }, sort_keys=True))
    else:
        print("0 violations")
        for component in cycles.components:
            print(f"circular constraint: {{{', '.join(component)}}}")
    if cycles.components and args.strict_cycles:
        return EXIT_DOMAIN
    return EXIT_OK


def _cmd_analyze(args) -> int:
    model, decls, catalog = _load(args.model_file)
    count = oracle.count_configurations(model, args.cap)
    dead = sorted(oracle.dead_features(model, args.cap))
    fo = sorted(oracle.false_optional(model, args.cap))
    if count == 0:
        print("warning: void model (no valid configuration)", file=sys.stderr)
    if args.format == "records":
        print(json.dumps({
            "configurations": count,
            "dead_features": dead,
            "false_optional": fo,
        }, sort_keys=True))
    else:
        print(f"valid configurations: {count}")
        print(f"dead features: {', '.join(dead) if dead else '(none)'}")
        print(f"false-optional features: {', '.join(fo) if fo else '(none)'}")
    return EXIT_OK


def _cmd_compile(args) -> int:
    model, decls, catalog = _load(args.model_file)
    if args.emit_canonical:
        sys.stdout.write(files.serialize_model(model, decls, catalog))
        return EXIT_OK
    constraint_boxes = len(model.constraint_box_ids())
    print(f"boxes: {len(model.boxes)}")
    print(f"constraints boxes: {constraint_boxes}")
    print(f"labels: {len(model.labels())}")
    print(f"declarations: {len(decls)}")
    return EXIT_OK


def _parse_decisions(spec: str) -> list[tuple[str, engine.Action]]:
    out = []
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ModelSyntaxError(f"bad decision {chunk!r}, expected "
                                   "label=select|discard", 1, 1)
        label, _, action = chunk.partition("=")
        try:
            out.append((label.strip(), engine.Action(action.strip().lower())))
        except ValueError:
            raise ModelSyntaxError(f"bad action in {chunk!r}", 1, 1) from None
    return out


def _cmd_configure(args) -> int:
    model, decls, catalog = _load(args.model_file)
    state = engine.initial_state(model)
    steps = []
    for label, action in _parse_decisions(args.decisions):
        try:
            state, report = engine.decide_label(state, label, action)
        except (UnknownLabelError, InvalidDecisionError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_DOMAIN
        if not report.accepted:
            _print_rejection(model, label, action, report)
            return EXIT_DOMAIN
        forced = [{
            "label": model.boxes[d.box].label,
            "action": d.action.value,
            "rule": d.rule.value,
        } for d in report.forced]
        steps.append({"label": label, "action": action.value, "forced": forced})
        if args.format == "text":
            # hide gadget plumbing in the human report; records keep it all
            gadget_ids = model.constraint_box_ids()
            visible = []
            for d in report.forced:
                row = (model.boxes[d.box].label, d.action.value, d.rule.value)
                if d.box in gadget_ids or row[0] == label or row in visible:
                    continue
                visible.append(row)
            print(f"{action.value} {label}: {len(visible)} forced")
            for lab, act, rule in visible:
                print(f"  {act} {lab} [{rule}]")

    remaining = engine.open_count(state)
    if args.format == "records":
        print(json.dumps({
            "steps": steps,
            "open": remaining,
            "complete": remaining == 0,
        }, sort_keys=True))
    else:
        print("configuration complete" if remaining == 0
              else f"{remaining} features still open")
    if args.out:
        _write(args.out, files.export_config(state))
    return EXIT_OK


def _print_rejection(model, label, action, report) -> None:
    def chain_text(chain):
        parts = []
        for d in chain:
            lab = model.boxes[d.box].label
            parts.append(f"{lab} {d.action.value} [{d.rule.value}]")
        return " <- ".join(parts)

    conflict = model.boxes[report.conflict].label if report.conflict else "?"
    print(f"rejected: {action.value} {label} contradicts at {conflict}",
          file=sys.stderr)
    print(f"  selected because: {chain_text(report.select_chain)}", file=sys.stderr)
    print(f"  discarded because: {chain_text(report.discard_chain)}", file=sys.stderr)


def _cmd_filter(args) -> int:
    model, decls, catalog = _load(args.model_file)
    try:
        state, warnings = files.import_config(model, _read(args.config_file))
    except ReplayDivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for warning in warnings:
        print(f"warning: {warning}", file=sys.stderr)
    result = filter_partial(catalog, state)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["id", "name", "kind", "status"])
    for asset in catalog:
        writer.writerow([asset.id, asset.name, asset.kind.value,
                         result.status_of(asset.id)])
    text = buffer.getvalue()
    if args.format == "records":
        text = json.dumps({
            "included": list(result.included),
            "excluded": list(result.excluded),
            "undecided": list(result.undecided),
        }, sort_keys=True) + "\n"
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_export(args) -> int:
    model, decls, catalog = _load(args.model_file)
    state = None
    if args.config:
        state, warnings = files.import_config(model, _read(args.config))
        for warning in warnings:
            print(f"warning: {warning}", file=sys.stderr)
    text = files.export_dot(model, state)
    if args.dot:
        _write(args.dot, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(allow_origins=args.allow_origin or None, ui_dir=args.ui)
    for path in args.model_files:
        app.state.store.add_model(_read(path))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return EXIT_OK
