"""Text formats: the model DSL, configuration snapshots and diagram export.

Model files are line-oriented UTF-8 text::

    # car product line
    model "Car"
    feature Car mandatory {
      feature Engine mandatory group=xor {
        feature Diesel
        feature Gasoline
      }
      feature ACC
    }
    requires ACC Radar
    excludes Sunroof RoofRack
    constraint "acc-sensors" ACC => (Radar | Camera)
    asset "radar-unit" "Radar unit" kind=part when Radar

Sections appear in order: the model header and feature tree, then
constraint declarations, then assets; the last two are optional. The root
feature is implicitly mandatory. Constraints are compiled into the model's
constraints branch during load and serialized back as their source lines.

Configuration files store the model fingerprint, the per-label states and
the user decision journal; importing replays the journal step by step and
verifies the outcome, so a stored product never bypasses the per-step
coherency checks.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from . import engine, formula as fm, gadgets
from .assets import ALWAYS, Asset, AssetKind, Catalog
from .errors import (
    CompileError,
    FormulaSyntaxError,
    InvalidDecisionError,
    ModelSyntaxError,
    ModelValidationError,
    ReplayDivergenceError,
    UnknownLabelError,
)
from .model import (
    FeatureModel,
    Group,
    ModelBuilder,
    StateColor,
    StructuralColor,
    fingerprint,
    render_colors,
    validate_model,
)

_DSL_KEYWORDS = {
    "model", "feature", "mandatory", "group", "requires", "excludes",
    "constraint", "asset", "kind", "when", "always",
    "and", "or", "not", "true", "false", "xor", "mutex", "free",
}
_IDENT_RE = re.compile(r"[A-Za-z_\-][A-Za-z0-9_\-]*")

CONFIG_FORMAT = "fmconfig/1"


@dataclass(frozen=True)
class _Tok:
    kind: str  # WORD STRING LBRACE RBRACE
    value: str
    col: int   # 1-based
    end: int   # 0-based index just past the token


def _scan_line(line: str, lineno: int) -> list[_Tok]:
    tokens: list[_Tok] = []
    i, n = 0, len(line)
    while i < n:
        ch = line[i]
        if ch in " \t\r":
            i += 1
            continue
        if ch == "#":
            break
        col = i + 1
        if ch == "{":
            tokens.append(_Tok("LBRACE", ch, col, i + 1))
            i += 1
            continue
        if ch == "}":
            tokens.append(_Tok("RBRACE", ch, col, i + 1))
            i += 1
            continue
        if ch == '"':
            out = []
            j = i + 1
            while j < n:
                c = line[j]
                if c == "\\" and j + 1 < n and line[j + 1] in ('"', "\\"):
                    out.append(line[j + 1])
                    j += 2
                    continue
                if c == '"':
                    break
                out.append(c)
                j += 1
            else:
                raise ModelSyntaxError("unterminated string", lineno, col)
            if j >= n:
                raise ModelSyntaxError("unterminated string", lineno, col)
            tokens.append(_Tok("STRING", "".join(out), col, j + 1))
            i = j + 1
            continue
        j = i
        while j < n and line[j] not in ' \t\r#{}"':
            j += 1
        tokens.append(_Tok("WORD", line[i:j], col, j))
        i = j
    return tokens


def _label_token(tok: _Tok, lineno: int) -> str:
    if tok.kind == "STRING":
        if not tok.value:
            raise ModelSyntaxError("empty label", lineno, tok.col)
        return tok.value
    if tok.kind == "WORD" and _IDENT_RE.fullmatch(tok.value):
        return tok.value
    raise ModelSyntaxError(f"expected a label, found {tok.value!r}",
                           lineno, tok.col)


def parse_model(text: str) -> tuple[FeatureModel, list, Catalog]:
    """Parse a model document; returns (model, declarations, catalog).

    The constraints section is compiled into the model during load. Raises
    :class:`ModelSyntaxError`, :class:`ModelValidationError` or
    :class:`CompileError`.
    """
    builder: ModelBuilder | None = None
    stack: list[str] = []
    decls: list = []
    decl_lines: list[int] = []
    assets: list[Asset] = []
    section = "header"
    open_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _scan_line(raw, lineno)
        if not tokens:
            continue
        head = tokens[0]
        if head.kind == "RBRACE":
            if section != "model" or not stack:
                raise ModelSyntaxError("unmatched '}'", lineno, head.col)
            stack.pop()
            if len(tokens) > 1:
                raise ModelSyntaxError("'}' must end the line", lineno,
                                       tokens[1].col)
            continue
        if head.kind != "WORD":
            raise ModelSyntaxError(f"unexpected {head.value!r}", lineno, head.col)
        keyword = head.value.lower()

        if keyword == "model":
            if builder is not None:
                raise ModelSyntaxError("duplicate model header", lineno, head.col)
            if len(tokens) != 2 or tokens[1].kind != "STRING":
                raise ModelSyntaxError('expected: model "<name>"', lineno, head.col)
            builder = ModelBuilder(tokens[1].value)
            section = "model"
            continue
        if builder is None:
            raise ModelSyntaxError('file must start with model "<name>"',
                                   lineno, head.col)

        if keyword == "feature":
            if section != "model":
                raise ModelSyntaxError("feature lines must precede constraints "
                                       "and assets", lineno, head.col)
            _parse_feature(builder, stack, tokens, lineno)
            if tokens[-1].kind == "LBRACE":
                open_line = lineno
            continue
        if keyword in ("requires", "excludes"):
            if stack:
                raise ModelSyntaxError("missing '}' before constraints",
                                       open_line or lineno, 1)
            if section == "assets":
                raise ModelSyntaxError("constraints must precede assets",
                                       lineno, head.col)
            section = "constraints"
            if len(tokens) != 3:
                raise ModelSyntaxError(f"expected: {keyword} <label> <label>",
                                       lineno, head.col)
            a = _label_token(tokens[1], lineno)
            b = _label_token(tokens[2], lineno)
            cls = gadgets.Requires if keyword == "requires" else gadgets.Excludes
            decls.append(cls(a, b))
            decl_lines.append(lineno)
            continue
        if keyword == "constraint":
            if stack:
                raise ModelSyntaxError("missing '}' before constraints",
                                       open_line or lineno, 1)
            if section == "assets":
                raise ModelSyntaxError("constraints must precede assets",
                                       lineno, head.col)
            section = "constraints"
            if len(tokens) < 3 or tokens[1].kind != "STRING":
                raise ModelSyntaxError('expected: constraint "<name>" <formula>',
                                       lineno, head.col)
            formula_text = raw[tokens[1].end:]
            hash_pos = _comment_start(formula_text)
            if hash_pos is not None:
                formula_text = formula_text[:hash_pos]
            try:
                parsed = fm.parse_formula(formula_text)
            except FormulaSyntaxError as exc:
                raise ModelSyntaxError(
                    f"bad constraint formula: {exc}", lineno,
                    tokens[1].end + exc.column) from None
            decls.append(gadgets.FormulaConstraint(tokens[1].value, parsed))
            decl_lines.append(lineno)
            continue
        if keyword == "asset":
            if stack:
                raise ModelSyntaxError("missing '}' before assets",
                                       open_line or lineno, 1)
            section = "assets"
            assets.append(_parse_asset(tokens, raw, lineno))
            continue
        raise ModelSyntaxError(f"unknown directive {head.value!r}",
                               lineno, head.col)

    if builder is None:
        raise ModelSyntaxError("empty model document", max(1, text.count("\n") + 1), 1)
    if stack:
        raise ModelSyntaxError("missing closing '}'", open_line or 1, 1)

    model = builder.build()
    violations = validate_model(model)
    if violations:
        raise ModelValidationError(violations)

    fresh = gadgets.FreshLabels()
    for decl, lineno in zip(decls, decl_lines):
        try:
            if isinstance(decl, gadgets.Requires):
                model = gadgets.compile_requires(model, decl.a, decl.b, fresh)
            elif isinstance(decl, gadgets.Excludes):
                model = gadgets.compile_excludes(model, decl.a, decl.b, fresh)
            else:
                model, _ = gadgets.compile_formula(model, decl.formula, fresh)
        except (CompileError, UnknownLabelError) as exc:
            raise CompileError(f"line {lineno}: {exc}") from None

    return model, decls, Catalog(assets)


def _comment_start(text: str) -> int | None:
    in_string = False
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and in_string:
            i += 2
            continue
        if ch == '"':
            in_string = not in_string
        elif ch == "#" and not in_string:
            return i
        i += 1
    return None


def _parse_feature(builder: ModelBuilder, stack: list[str],
                   tokens: list[_Tok], lineno: int) -> None:
    if len(tokens) < 2:
        raise ModelSyntaxError("feature needs a label", lineno, tokens[0].col)
    label = _label_token(tokens[1], lineno)
    mandatory = False
    group = Group.FREE
    opens = False
    for tok in tokens[2:]:
        if tok.kind == "LBRACE":
            if tok is not tokens[-1]:
                raise ModelSyntaxError("'{' must end the line", lineno, tok.col)
            opens = True
            continue
        if tok.kind != "WORD":
            raise ModelSyntaxError(f"unexpected {tok.value!r}", lineno, tok.col)
        word = tok.value.lower()
        if word == "mandatory":
            mandatory = True
        elif word.startswith("group="):
            value = word.split("=", 1)[1]
            try:
                group = Group(value)
            except ValueError:
                raise ModelSyntaxError(f"unknown group {value!r}", lineno,
                                       tok.col) from None
        else:
            raise ModelSyntaxError(f"unknown feature attribute {tok.value!r}",
                                   lineno, tok.col)
    parent = stack[-1] if stack else None
    if parent is None:
        if builder._root is not None:
            raise ModelSyntaxError("a model has exactly one root feature",
                                   lineno, tokens[0].col)
        mandatory = True  # the root feature is the product itself
    box_id = builder.add(label, parent, mandatory=mandatory, group=group)
    if opens:
        stack.append(box_id)


def _parse_asset(tokens: list[_Tok], raw: str, lineno: int) -> Asset:
    usage = 'expected: asset "<id>" "<name>" kind=<kind> when <formula|always>'
    if len(tokens) < 5 or tokens[1].kind != "STRING" or tokens[2].kind != "STRING":
        raise ModelSyntaxError(usage, lineno, tokens[0].col)
    kind_tok = tokens[3]
    if kind_tok.kind != "WORD" or not kind_tok.value.lower().startswith("kind="):
        raise ModelSyntaxError(usage, lineno, kind_tok.col)
    try:
        kind = AssetKind(kind_tok.value.split("=", 1)[1].lower())
    except ValueError:
        raise ModelSyntaxError(f"unknown asset kind {kind_tok.value!r}",
                               lineno, kind_tok.col) from None
    when_tok = tokens[4]
    if when_tok.kind != "WORD" or when_tok.value.lower() != "when":
        raise ModelSyntaxError(usage, lineno, when_tok.col)
    criterion_text = raw[when_tok.end:]
    hash_pos = _comment_start(criterion_text)
    if hash_pos is not None:
        criterion_text = criterion_text[:hash_pos]
    stripped = criterion_text.strip()
    if stripped.lower() == "always":
        criterion = ALWAYS
    else:
        try:
            criterion = fm.parse_formula(criterion_text)
        except FormulaSyntaxError as exc:
            raise ModelSyntaxError(f"bad criterion: {exc}", lineno,
                                   when_tok.end + exc.column) from None
    return Asset(id=tokens[1].value, name=tokens[2].value, kind=kind,
                 criterion=criterion)


# ---------------------------------------------------------------------------
# Serialization


def _quote_dsl(label: str) -> str:
    if _IDENT_RE.fullmatch(label) and label.lower() not in _DSL_KEYWORDS:
        return label
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def serialize_model(model: FeatureModel, decls=(), catalog: Catalog | None = None
                    ) -> str:
    """Canonical text form; constraints come back as source lines."""
    lines = [f'model "{model.name}"']
    skip = model.constraint_box_ids()

    def emit(box_id: str, depth: int) -> None:
        box = model.boxes[box_id]
        parts = [f"{'  ' * depth}feature {_quote_dsl(box.label)}"]
        if box.mandatory:
            parts.append("mandatory")
        if box.group is not Group.FREE:
            parts.append(f"group={box.group.value}")
        children = [c for c in box.children if c not in skip]
        if children:
            parts.append("{")
            lines.append(" ".join(parts))
            for child in children:
                emit(child, depth + 1)
            lines.append(f"{'  ' * depth}}}")
        else:
            lines.append(" ".join(parts))

    emit(model.root, 0)

    for decl in decls:
        if isinstance(decl, gadgets.Requires):
            lines.append(f"requires {_quote_dsl(decl.a)} {_quote_dsl(decl.b)}")
        elif isinstance(decl, gadgets.Excludes):
            lines.append(f"excludes {_quote_dsl(decl.a)} {_quote_dsl(decl.b)}")
        elif isinstance(decl, gadgets.FormulaConstraint):
            lines.append(f'constraint "{decl.name}" {fm.format_formula(decl.formula)}')
        else:
            raise TypeError(f"unknown declaration {decl!r}")

    if catalog is not None:
        for asset in catalog:
            criterion = ("always" if asset.criterion is ALWAYS
                         else fm.format_formula(asset.criterion))
            lines.append(f'asset "{asset.id}" "{asset.name}" '
                         f"kind={asset.kind.value} when {criterion}")

    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Diagram export

_FILL = {
    StructuralColor.WHITE: "white",
    StructuralColor.BLUE: "lightblue",
    StructuralColor.RED: "red",
}


def export_dot(model: FeatureModel, state=None) -> str:
    """Graph-description export with the color code; deterministic output."""
    view = render_colors(model, state)
    out = [f'digraph "{_dot_escape(model.name)}" {{',
           "  rankdir=TB;",
           '  node [shape=box, style=filled];']
    order = model.preorder()
    for bid in order:
        box = model.boxes[bid]
        attrs = [f'label="{_dot_escape(box.label)}"',
                 f'fillcolor="{_FILL[view.structural[bid]]}"']
        if view.state is not None:
            mark = view.state[bid]
            if mark is StateColor.GREEN:
                attrs.append('color="green3"')
                attrs.append("penwidth=3")
            elif mark is StateColor.GRAY:
                attrs.append('color="gray50"')
                attrs.append('fontcolor="gray40"')
                attrs.append("penwidth=3")
        out.append(f'  "{_dot_escape(bid)}" [{", ".join(attrs)}];')
    for bid in order:
        for child in model.boxes[bid].children:
            out.append(f'  "{_dot_escape(bid)}" -> "{_dot_escape(child)}";')
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


# ---------------------------------------------------------------------------
# Configuration snapshots


def export_config(state: engine.ConfigState) -> str:
    """Machine-readable snapshot: fingerprint, label states, user journal."""
    labels = {label: st.value for label, st in sorted(state.label_states().items())}
    journal = []
    for decision in state.journal:
        if decision.is_user:
            box = state.model.boxes[decision.box]
            journal.append({"label": box.label, "action": decision.action.value})
    doc = {
        "format": CONFIG_FORMAT,
        "model": state.model.name,
        "fingerprint": fingerprint(state.model),
        "states": labels,
        "journal": journal,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def import_config(model: FeatureModel, text: str
                  ) -> tuple[engine.ConfigState, list[str]]:
    """Rebuild a state by replaying the stored user journal.

    Returns the state and a list of warnings (currently only fingerprint
    drift). Raises :class:`ReplayDivergenceError` when a journal step no
    longer applies or the replayed states disagree with the stored ones.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelSyntaxError(f"not a configuration file: {exc.msg}",
                               exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or doc.get("format") != CONFIG_FORMAT:
        raise ModelSyntaxError("not a configuration file (missing format tag)", 1, 1)

    warnings: list[str] = []
    stored_fp = doc.get("fingerprint", "")
    if stored_fp != fingerprint(model):
        warnings.append(
            f"fingerprint mismatch: file has {stored_fp or '<none>'}, "
            f"model is {fingerprint(model)}; replaying journal")

    labels = model.labels()
    for label in doc.get("states", {}):
        if label not in labels:
            raise UnknownLabelError(label, "configuration file state")

    state = engine.initial_state(model)
    for i, step in enumerate(doc.get("journal", [])):
        label = step.get("label", "")
        if label not in labels:
            raise UnknownLabelError(label, f"journal step {i}")
        try:
            action = engine.Action(step.get("action", ""))
        except ValueError:
            raise ReplayDivergenceError(
                f"journal step {i}: bad action {step.get('action')!r}") from None
        try:
            state, report = engine.decide_label(state, label, action)
        except (InvalidDecisionError, UnknownLabelError) as exc:
            raise ReplayDivergenceError(
                f"journal step {i} ({action.value} {label}) no longer applies: "
                f"{exc}") from None
        if not report.accepted:
            raise ReplayDivergenceError(
                f"journal step {i} ({action.value} {label}) is now rejected "
                f"(conflict at {report.conflict})")

    produced = {label: st.value for label, st in state.label_states().items()}
    for label, stored in doc.get("states", {}).items():
        if produced.get(label) != stored:
            raise ReplayDivergenceError(
                f"replay produced {produced.get(label)!r} for {label!r}, "
                f"file stores {stored!r}")
    return state, warnings
