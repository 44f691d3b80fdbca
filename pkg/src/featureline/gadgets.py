"""Lower cross-tree constraints into constraints-branch subtrees.

The constraint language is the model itself: a dedicated mandatory branch
labeled ``constraints`` hosts small box gadgets whose shared labels wire
them to the main tree.

* requires a b: a box labeled ``b`` with a single optional child labeled
  ``a``; selecting ``a`` anywhere selects ``b`` as its parent.
* excludes a b: an optional MUTEX box over children labeled ``a`` and
  ``b``; at most one of the two can ever be selected.
* negation: a mandatory XOR box over the operand label and a fresh label;
  exactly-one makes the fresh label the operand's complement.
* disjunction: an optional OR box over the operand labels; the head label
  is selected exactly when some operand is.

Conjunctions and the arrow connectives are rewritten into those three
primitives; the head of a compiled formula is forced mandatory so the
constraint holds in every configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import formula as fm
from .errors import CompileError, UnknownLabelError
from .model import Box, FeatureModel, Group

CONSTRAINTS_LABEL = "constraints"


@dataclass(frozen=True)
class Requires:
    a: str
    b: str


@dataclass(frozen=True)
class Excludes:
    a: str
    b: str


@dataclass(frozen=True)
class FormulaConstraint:
    name: str
    formula: fm.Formula


ConstraintDecl = Requires | Excludes | FormulaConstraint


class FreshLabels:
    """Deterministic fresh-label source; never collides with model labels."""

    def __init__(self, prefix: str = "_c", counter: int = 0):
        if not prefix:
            raise CompileError("fresh label prefix must be non-empty")
        self.prefix = prefix
        self.counter = counter

    def next(self, taken: set[str]) -> str:
        while True:
            self.counter += 1
            candidate = f"{self.prefix}{self.counter}"
            if candidate not in taken:
                return candidate


class _Workspace:
    """Mutable box table while a compilation is in flight."""

    def __init__(self, model: FeatureModel):
        self.model = model
        self.boxes = dict(model.boxes)
        self.constraints_root = model.constraints_root
        self._id_counter = _max_box_number(model.boxes)

    def labels(self) -> set[str]:
        return {b.label for b in self.boxes.values()}

    def new_id(self) -> str:
        while True:
            self._id_counter += 1
            candidate = f"b{self._id_counter}"
            if candidate not in self.boxes:
                return candidate

    def ensure_constraints_root(self) -> str:
        if self.constraints_root is not None:
            return self.constraints_root
        cid = self.new_id()
        root = self.boxes[self.model.root]
        self.boxes[cid] = Box(id=cid, label=CONSTRAINTS_LABEL,
                              parent=root.id, mandatory=True)
        self.boxes[root.id] = replace(root, children=root.children + (cid,))
        self.constraints_root = cid
        return cid

    def add_box(self, label: str, parent: str, *, mandatory: bool = False,
                group: Group = Group.FREE) -> str:
        bid = self.new_id()
        self.boxes[bid] = Box(id=bid, label=label, parent=parent,
                              mandatory=mandatory, group=group)
        p = self.boxes[parent]
        self.boxes[parent] = replace(p, children=p.children + (bid,))
        return bid

    def set_mandatory(self, box_id: str) -> None:
        self.boxes[box_id] = replace(self.boxes[box_id], mandatory=True)

    def finish(self) -> FeatureModel:
        return FeatureModel(name=self.model.name, boxes=self.boxes,
                            root=self.model.root,
                            constraints_root=self.constraints_root)


def _max_box_number(boxes) -> int:
    best = 0
    for bid in boxes:
        if bid.startswith("b") and bid[1:].isdigit():
            best = max(best, int(bid[1:]))
    return best


def _require_main_label(model: FeatureModel, label: str) -> None:
    if label not in model.main_labels():
        raise UnknownLabelError(label, "not in the main feature tree")


def compile_excludes(model: FeatureModel, a: str, b: str,
                     fresh: FreshLabels | None = None) -> FeatureModel:
    """At most one of the two features may be selected."""
    if a == b:
        raise CompileError(f"excludes needs two distinct labels, got {a!r} twice")
    _require_main_label(model, a)
    _require_main_label(model, b)
    fresh = fresh or FreshLabels()
    ws = _Workspace(model)
    croot = ws.ensure_constraints_root()
    head = ws.add_box(fresh.next(ws.labels()), croot, group=Group.MUTEX)
    ws.add_box(a, head)
    ws.add_box(b, head)
    return ws.finish()


def compile_requires(model: FeatureModel, a: str, b: str,
                     fresh: FreshLabels | None = None) -> FeatureModel:
    """Selecting feature ``a`` forces feature ``b``; never the reverse."""
    if a == b:
        raise CompileError(f"requires needs two distinct labels, got {a!r} twice")
    _require_main_label(model, a)
    _require_main_label(model, b)
    ws = _Workspace(model)
    croot = ws.ensure_constraints_root()
    head = ws.add_box(b, croot)
    ws.add_box(a, head)
    return ws.finish()


def encode_formula(model: FeatureModel, f: fm.Formula,
                   fresh: FreshLabels | None = None
                   ) -> tuple[FeatureModel, str, dict[fm.Formula, str]]:
    """Define the formula's value as a label, without constraining it.

    Returns the extended model, the label that mirrors the formula's truth
    value, and the mapping from encoded subformulas to their labels.
    Constants cannot be encoded this way.
    """
    for atom in sorted(fm.atoms(f)):
        _require_main_label(model, atom)
    simplified = fm.to_nnf(f)
    if isinstance(simplified, fm.Const):
        raise CompileError("constant formulas have no definable label")
    fresh = fresh or FreshLabels()
    ws = _Workspace(model)
    ws.ensure_constraints_root()
    mapping: dict[fm.Formula, str] = {}
    label = _encode(ws, simplified, fresh, mapping)
    if f not in mapping and not isinstance(f, fm.Atom):
        mapping[f] = label
    return ws.finish(), label, mapping


def compile_formula(model: FeatureModel, f: fm.Formula,
                    fresh: FreshLabels | None = None, *,
                    via_dnf: bool = False
                    ) -> tuple[FeatureModel, dict[fm.Formula, str]]:
    """Add gadgets that force the formula to hold in every configuration.

    With ``via_dnf`` the formula is first expanded to disjunctive normal
    form and the expansion is what gets encoded.
    """
    for atom in sorted(fm.atoms(f)):
        _require_main_label(model, atom)
    fresh = fresh or FreshLabels()
    target = fm.to_dnf(f) if via_dnf else fm.to_nnf(f)
    ws = _Workspace(model)
    mapping: dict[fm.Formula, str] = {}
    _force(ws, target, fresh, mapping)
    return ws.finish(), mapping


def compile_all(model: FeatureModel, decls: list[ConstraintDecl],
                fresh: FreshLabels | None = None) -> FeatureModel:
    """Apply declarations in order with shared fresh-label numbering."""
    fresh = fresh or FreshLabels()
    for index, decl in enumerate(decls):
        try:
            if isinstance(decl, Requires):
                model = compile_requires(model, decl.a, decl.b, fresh)
            elif isinstance(decl, Excludes):
                model = compile_excludes(model, decl.a, decl.b, fresh)
            elif isinstance(decl, FormulaConstraint):
                model, _ = compile_formula(model, decl.formula, fresh)
            else:
                raise CompileError(f"unknown declaration {decl!r}")
        except (CompileError, UnknownLabelError) as exc:
            raise CompileError(f"declaration {index}: {exc}") from exc
    return model


# ---------------------------------------------------------------------------
# Structural encoding internals. Input is negation normal form.


def _encode(ws: _Workspace, f: fm.Formula, fresh: FreshLabels,
            mapping: dict[fm.Formula, str]) -> str:
    if isinstance(f, fm.Atom):
        return f.label
    if f in mapping:
        return mapping[f]
    if isinstance(f, fm.Not):
        label = _encode_negation(ws, _encode(ws, f.operand, fresh, mapping), fresh)
    elif isinstance(f, fm.Or):
        operands = [_encode(ws, g, fresh, mapping) for g in f.operands]
        label = _encode_disjunction(ws, operands, fresh)
    elif isinstance(f, fm.And):
        # No conservative conjunction box exists in this language (any
        # selected child would select the head), so rewrite through the
        # complement: AND(gs) == NOT(OR(NOT(g) for g in gs)).
        negated = [_encode_negation(ws, _encode(ws, g, fresh, mapping), fresh)
                   for g in f.operands]
        label = _encode_negation(ws, _encode_disjunction(ws, negated, fresh), fresh)
    else:
        raise CompileError(f"cannot encode node {f!r}")
    mapping[f] = label
    return label


def _encode_negation(ws: _Workspace, operand_label: str, fresh: FreshLabels) -> str:
    croot = ws.ensure_constraints_root()
    taken = ws.labels()
    head = fresh.next(taken)
    negated = fresh.next(taken | {head})
    head_id = ws.add_box(head, croot, mandatory=True, group=Group.XOR)
    ws.add_box(operand_label, head_id)
    ws.add_box(negated, head_id)
    return negated


def _encode_disjunction(ws: _Workspace, operand_labels: list[str],
                        fresh: FreshLabels) -> str:
    croot = ws.ensure_constraints_root()
    head = fresh.next(ws.labels())
    head_id = ws.add_box(head, croot, group=Group.OR)
    for label in operand_labels:
        ws.add_box(label, head_id)
    return head


def _force(ws: _Workspace, f: fm.Formula, fresh: FreshLabels,
           mapping: dict[fm.Formula, str]) -> None:
    """Make the (NNF) formula hold in every valid configuration."""
    if isinstance(f, fm.Const):
        if f.value:
            return  # nothing to add
        # An unsatisfiable pair: some fresh label and its complement, both
        # forced, so the initial propagation already contradicts.
        croot = ws.ensure_constraints_root()
        z = fresh.next(ws.labels())
        ws.add_box(z, croot, mandatory=True)
        negated = _encode_negation(ws, z, fresh)
        ws.add_box(negated, croot, mandatory=True)
        return
    if isinstance(f, fm.And):
        for g in f.operands:
            _force(ws, g, fresh, mapping)
        return
    if isinstance(f, fm.Atom):
        croot = ws.ensure_constraints_root()
        ws.add_box(f.label, croot, mandatory=True)
        return
    label = _encode(ws, f, fresh, mapping)
    _mark_label_mandatory(ws, label)


def _mark_label_mandatory(ws: _Workspace, label: str) -> None:
    for bid in sorted(ws.boxes):
        if ws.boxes[bid].label == label:
            ws.set_mandatory(bid)
            return
    raise CompileError(f"no box carries label {label!r}")
