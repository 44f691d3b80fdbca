"""Brute-force ground truth for models: enumeration, counting and analyses.

The checks here are written directly against the color semantics, on
purpose sharing no code with the propagation rule engine, so they can act
as its oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import CapExceededError, UnknownLabelError
from .model import FeatureModel, Group, StructuralColor, Violation, structural_color

DEFAULT_LABEL_CAP = 20


@dataclass(frozen=True)
class SolutionSet:
    """All complete label assignments that are valid configurations."""

    labels: tuple[str, ...]          # sorted lexicographically
    assignments: tuple[dict, ...]    # binary-counter order over ``labels``
    model_fingerprint: str

    def __len__(self) -> int:
        return len(self.assignments)

    def projected(self, labels) -> set[tuple[bool, ...]]:
        """Distinct value tuples over the given labels, in that label order."""
        return {tuple(a[l] for l in labels) for a in self.assignments}

    def column(self, label: str) -> list[bool]:
        return [a[label] for a in self.assignments]


@dataclass(frozen=True)
class CycleReport:
    """Mutually-forcing label groups (strongly connected, size >= 2)."""

    components: tuple[tuple[str, ...], ...]

    @property
    def empty(self) -> bool:
        return not self.components


def validate_complete(model: FeatureModel, assignment: dict[str, bool]
                      ) -> list[Violation]:
    """Check a complete label assignment against every coherency rule.

    Returns an empty list iff the assignment is a valid product. Raises
    :class:`UnknownLabelError` when a model label is missing.
    """
    for label in model.labels():
        if label not in assignment:
            raise UnknownLabelError(label, "missing from assignment")

    out: list[Violation] = []
    root = model.boxes[model.root]
    if not assignment[root.label]:
        out.append(Violation("root-false", root.label))

    for box in model.boxes.values():
        value = assignment[box.label]
        if value and box.parent is not None:
            if not assignment[model.boxes[box.parent].label]:
                out.append(Violation("parent-false", box.id,
                                     f"{box.label} true under false parent"))
        if not value:
            for child in box.children:
                if assignment[model.boxes[child].label]:
                    out.append(Violation("discard-below", child,
                                         f"true under false {box.label}"))
        if value:
            for child in box.children:
                cb = model.boxes[child]
                if cb.mandatory and not assignment[cb.label]:
                    out.append(Violation("mandatory", child,
                                         f"{cb.label} false under {box.label}"))
            if box.group in (Group.OR, Group.XOR):
                if not any(assignment[model.boxes[c].label] for c in box.children):
                    out.append(Violation("group-or", box.id,
                                         "no child selected"))
        if box.group in (Group.MUTEX, Group.XOR):
            true_children = [c for c in box.children
                             if assignment[model.boxes[c].label]]
            if len(true_children) > 1:
                out.append(Violation("group-mutex", box.id,
                                     f"children {', '.join(true_children)}"))
    return out


def _search_order(model: FeatureModel) -> list[str]:
    """Labels by first occurrence in box insertion order.

    Boxes are created parents-first and constraint gadgets operands-first,
    so deciding labels in this order lets the conflict check cut almost
    every wrong branch the moment it appears.
    """
    order: list[str] = []
    seen: set[str] = set()
    for box in model.boxes.values():
        if box.label not in seen:
            seen.add(box.label)
            order.append(box.label)
    return order


def _box_conflict(model: FeatureModel, partial: dict[str, bool], box) -> bool:
    """One box's rules against the decided labels; True = surely violated."""
    value = partial.get(box.label)
    if value is False and box.parent is None and box.id == model.root:
        return True
    if value is True and box.parent is not None:
        if partial.get(model.boxes[box.parent].label) is False:
            return True
    if value is False:
        for child in box.children:
            if partial.get(model.boxes[child].label) is True:
                return True
    if value is True:
        for child in box.children:
            cb = model.boxes[child]
            if cb.mandatory and partial.get(cb.label) is False:
                return True
        if box.group in (Group.OR, Group.XOR):
            if all(partial.get(model.boxes[c].label) is False
                   for c in box.children):
                return True
    if box.group in (Group.MUTEX, Group.XOR):
        trues = sum(1 for c in box.children
                    if partial.get(model.boxes[c].label) is True)
        if trues > 1:
            return True
    return False


def _conflicts(model: FeatureModel, partial: dict[str, bool]) -> bool:
    """True when the decided labels already break a rule for sure."""
    return any(_box_conflict(model, partial, box)
               for box in model.boxes.values())


def enumerate_configurations(model: FeatureModel,
                             label_cap: int = DEFAULT_LABEL_CAP) -> SolutionSet:
    """Exhaustively enumerate all valid complete configurations.

    Internally a depth-first search with early conflict pruning; the output
    is sorted into binary-counter order over lexicographically sorted
    labels so results are reproducible.
    """
    from .model import fingerprint

    labels = sorted(model.labels())
    if len(labels) > label_cap:
        raise CapExceededError(len(labels), label_cap)

    # Rules that can newly fire when a label gets decided involve only the
    # boxes carrying it and their parents.
    affected: dict[str, list] = {label: [] for label in labels}
    for box in model.boxes.values():
        bucket = affected[box.label]
        if box not in bucket:
            bucket.append(box)
        if box.parent is not None:
            parent = model.boxes[box.parent]
            if parent not in bucket:
                bucket.append(parent)

    order = _search_order(model)
    found: list[dict[str, bool]] = []
    partial: dict[str, bool] = {}

    def search(depth: int) -> None:
        if depth == len(order):
            found.append(dict(partial))
            return
        label = order[depth]
        for value in (False, True):
            partial[label] = value
            if not any(_box_conflict(model, partial, box)
                       for box in affected[label]):
                search(depth + 1)
            del partial[label]

    search(0)
    found.sort(key=lambda a: tuple(a[l] for l in labels))
    return SolutionSet(labels=tuple(labels), assignments=tuple(found),
                       model_fingerprint=fingerprint(model))


def enumerate_reference(model: FeatureModel,
                        label_cap: int = DEFAULT_LABEL_CAP) -> SolutionSet:
    """Unpruned scan over every assignment; the reference for the DFS."""
    from .model import fingerprint

    labels = sorted(model.labels())
    if len(labels) > label_cap:
        raise CapExceededError(len(labels), label_cap)
    found = []
    for values in product((False, True), repeat=len(labels)):
        assignment = dict(zip(labels, values))
        if not validate_complete(model, assignment):
            found.append(assignment)
    return SolutionSet(labels=tuple(labels), assignments=tuple(found),
                       model_fingerprint=fingerprint(model))


def count_configurations(model: FeatureModel,
                         label_cap: int = DEFAULT_LABEL_CAP) -> int:
    return len(enumerate_configurations(model, label_cap))


def dead_features(model: FeatureModel,
                  label_cap: int = DEFAULT_LABEL_CAP) -> set[str]:
    """Labels that are true in no valid configuration."""
    solutions = enumerate_configurations(model, label_cap)
    dead = set(solutions.labels)
    for assignment in solutions.assignments:
        dead = {l for l in dead if not assignment[l]}
        if not dead:
            break
    return dead


def false_optional(model: FeatureModel,
                   label_cap: int = DEFAULT_LABEL_CAP) -> set[str]:
    """Labels rendered as plain options that are nevertheless always true."""
    solutions = enumerate_configurations(model, label_cap)
    if not solutions.assignments:
        return set()
    white = {label for label, boxes in _boxes_by_label(model).items()
             if all(structural_color(model, b) is StructuralColor.WHITE
                    for b in boxes)}
    always_true = set(solutions.labels)
    for assignment in solutions.assignments:
        always_true = {l for l in always_true if assignment[l]}
        if not always_true:
            break
    return white & always_true


def _boxes_by_label(model: FeatureModel):
    out: dict[str, list] = {}
    for box in model.boxes.values():
        out.setdefault(box.label, []).append(box)
    return out


def detect_cycles(model: FeatureModel) -> CycleReport:
    """Report mutually-forcing label groups.

    An edge u -> v exists when selecting u on the initial state forces v
    selected; strongly connected components of size >= 2 are circular
    constraints. Detection is a warning, not a failure: mutual requirement
    is logically consistent, just suspicious design.
    """
    from . import engine
    from .errors import VoidModelError

    try:
        start = engine.initial_state(model)
    except VoidModelError:
        return CycleReport(components=())  # nothing to probe
    label_boxes: dict[str, str] = {}
    for box in sorted(model.boxes.values(), key=lambda b: b.id):
        label_boxes.setdefault(box.label, box.id)

    edges: dict[str, set[str]] = {label: set() for label in label_boxes}
    before = start.label_states()
    for label, bid in sorted(label_boxes.items()):
        if start.states[bid] is not engine.BoxState.OPEN:
            continue
        probed, report = engine.decide(start, bid, engine.Action.SELECT)
        if not report.accepted:
            continue
        after = probed.label_states()
        for other, st in sorted(after.items()):
            if other != label and st is engine.BoxState.SELECTED \
                    and before[other] is not engine.BoxState.SELECTED:
                edges[label].add(other)

    components = [c for c in _tarjan_scc(edges) if len(c) > 1]
    components.sort()
    return CycleReport(components=tuple(tuple(sorted(c)) for c in components))


def _tarjan_scc(edges: dict[str, set[str]]) -> list[tuple[str, ...]]:
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    out: list[tuple[str, ...]] = []
    counter = [0]

    def strongconnect(v: str) -> None:
        index[v] = low[v] = counter[0]
        counter[0] += 1
        stack.append(v)
        on_stack.add(v)
        for w in sorted(edges.get(v, ())):
            if w not in index:
                strongconnect(w)
                low[v] = min(low[v], low[w])
            elif w in on_stack:
                low[v] = min(low[v], index[w])
        if low[v] == index[v]:
            comp = []
            while True:
                w = stack.pop()
                on_stack.discard(w)
                comp.append(w)
                if w == v:
                    break
            out.append(tuple(sorted(comp)))

    for v in sorted(edges):
        if v not in index:
            strongconnect(v)
    return out
