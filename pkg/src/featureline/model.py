"""Feature-model data structures, color semantics and well-formedness checks.

A model is stored as a tree of boxes; a *feature* is a label that may be
shared by several boxes, which is what turns the feature graph into a DAG.
Selecting any box of a label selects the feature everywhere.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from enum import Enum

from .errors import StateModelMismatchError


class Group(Enum):
    """Choice discipline a box imposes on its children."""

    FREE = "free"    # children are independent options
    OR = "or"        # at least one child selected when this box is selected
    MUTEX = "mutex"  # at most one child selected
    XOR = "xor"      # exactly one child selected when this box is selected


class StructuralColor(Enum):
    WHITE = "white"  # plain option
    BLUE = "blue"    # mandatory node, or a node requiring a choice below
    RED = "red"      # member of an exclusive sibling group


class StateColor(Enum):
    GREEN = "green"  # selected
    GRAY = "gray"    # discarded
    NONE = "none"    # still open


@dataclass(frozen=True)
class Box:
    """One diagram node. Boxes with equal labels denote the same feature."""

    id: str
    label: str
    parent: str | None = None
    children: tuple[str, ...] = ()
    mandatory: bool = False
    group: Group = Group.FREE


@dataclass(frozen=True)
class FeatureModel:
    """Immutable box tree plus the designated constraints branch.

    Mutation happens only by building a new model (see :class:`ModelBuilder`
    and the gadget compiler), so instances are safe to share across readers.
    """

    name: str
    boxes: dict[str, Box]
    root: str
    constraints_root: str | None = None

    def box(self, box_id: str) -> Box:
        return self.boxes[box_id]

    def labels(self) -> set[str]:
        return {b.label for b in self.boxes.values()}

    def main_labels(self) -> set[str]:
        """Labels occurring outside the constraints branch."""
        skip = self.constraint_box_ids()
        return {b.label for b in self.boxes.values() if b.id not in skip}

    def constraint_box_ids(self) -> set[str]:
        """The constraints branch, including its root box."""
        if self.constraints_root is None or self.constraints_root not in self.boxes:
            return set()
        ids: set[str] = set()
        stack = [self.constraints_root]
        while stack:
            bid = stack.pop()
            if bid in ids or bid not in self.boxes:
                continue
            ids.add(bid)
            stack.extend(self.boxes[bid].children)
        return ids

    def preorder(self) -> list[str]:
        """Root-first traversal; children in stored order, strays appended."""
        seen: list[str] = []
        visited: set[str] = set()

        def walk(bid: str) -> None:
            if bid in visited or bid not in self.boxes:
                return
            visited.add(bid)
            seen.append(bid)
            for c in self.boxes[bid].children:
                walk(c)

        if self.root in self.boxes:
            walk(self.root)
        for bid in sorted(self.boxes):
            walk(bid)
        return seen


@dataclass(frozen=True)
class Violation:
    """One broken invariant: rule name plus the offending subject."""

    rule: str
    subject: str
    detail: str = ""

    def __str__(self) -> str:
        msg = f"{self.rule}: {self.subject}"
        if self.detail:
            msg += f" ({self.detail})"
        return msg


@dataclass(frozen=True)
class ColorView:
    """Per-box structural colors, and state colors when a state was given."""

    structural: dict[str, StructuralColor]
    state: dict[str, StateColor] | None = None


def validate_model(model: FeatureModel) -> list[Violation]:
    """Check every structural invariant; an empty report means a valid model."""
    out: list[Violation] = []

    if model.root not in model.boxes:
        out.append(Violation("root-missing", model.root, "root id not among boxes"))
        return out

    root = model.boxes[model.root]
    if root.parent is not None:
        out.append(Violation("root-has-parent", root.id))
    if not root.mandatory:
        out.append(Violation("root-mandatory", root.id, "root must be mandatory"))

    seen_children: dict[str, str] = {}
    for box in model.boxes.values():
        if not box.label:
            out.append(Violation("empty-label", box.id))
        if box.id != model.root and box.parent is None:
            out.append(Violation("orphan-box", box.id, "non-root box without parent"))
        if box.parent is not None and box.parent not in model.boxes:
            out.append(Violation("unknown-parent", box.id, f"parent {box.parent!r}"))
        if box.group is not Group.FREE and not box.children:
            out.append(Violation("group-needs-children", box.id, box.group.value))
        for child in box.children:
            if child not in model.boxes:
                out.append(Violation("unknown-child", box.id, f"child {child!r}"))
                continue
            if child in seen_children:
                out.append(Violation("duplicate-child", child, "listed under two parents"))
            seen_children[child] = box.id
            if model.boxes[child].parent != box.id:
                out.append(Violation("parent-mismatch", child,
                                     f"listed under {box.id} but parent is {model.boxes[child].parent!r}"))

    # reachability from the root doubles as a cycle check
    reached: set[str] = set()
    stack = [model.root]
    while stack:
        bid = stack.pop()
        if bid in reached or bid not in model.boxes:
            continue
        reached.add(bid)
        stack.extend(model.boxes[bid].children)
    for bid in sorted(set(model.boxes) - reached):
        out.append(Violation("unreachable-box", bid))

    if model.constraints_root is not None:
        cr = model.boxes.get(model.constraints_root)
        if cr is None or cr.parent != model.root:
            out.append(Violation("constraints-root-misplaced", str(model.constraints_root),
                                 "must be a child of the root"))
    return out


def structural_color(model: FeatureModel, box: Box) -> StructuralColor:
    parent = model.boxes.get(box.parent) if box.parent else None
    if parent is not None and parent.group in (Group.MUTEX, Group.XOR):
        return StructuralColor.RED
    if box.mandatory or box.group in (Group.OR, Group.XOR):
        return StructuralColor.BLUE
    return StructuralColor.WHITE


def render_colors(model: FeatureModel, state=None) -> ColorView:
    """Map every box to its structural color, plus green/gray when a state is given.

    ``state`` is a :class:`featureline.engine.ConfigState`; it must cover
    exactly this model's boxes.
    """
    structural = {b.id: structural_color(model, b) for b in model.boxes.values()}
    if state is None:
        return ColorView(structural=structural)
    if set(state.states) != set(model.boxes):
        raise StateModelMismatchError("state does not cover this model's boxes")
    from .engine import BoxState  # local import to avoid a cycle

    mapping = {
        BoxState.SELECTED: StateColor.GREEN,
        BoxState.DISCARDED: StateColor.GRAY,
        BoxState.OPEN: StateColor.NONE,
    }
    return ColorView(
        structural=structural,
        state={bid: mapping[s] for bid, s in state.states.items()},
    )


def shared_label_groups(model: FeatureModel) -> dict[str, set[str]]:
    """Partition box ids by label; groups of size >= 2 are propagation links."""
    groups: dict[str, set[str]] = {}
    for box in model.boxes.values():
        groups.setdefault(box.label, set()).add(box.id)
    return groups


def fingerprint(model: FeatureModel) -> str:
    """Stable content hash of the canonical structural encoding."""
    parts = [model.name, model.root, model.constraints_root or ""]
    for bid in sorted(model.boxes):
        b = model.boxes[bid]
        parts.append(
            f"{b.id}|{b.label}|{b.parent or ''}|{','.join(b.children)}|{int(b.mandatory)}|{b.group.value}"
        )
    digest = hashlib.sha256("\n".join(parts).encode("utf-8")).hexdigest()
    return f"sha256:{digest[:16]}"


class ModelBuilder:
    """Incremental construction helper; assigns box ids in insertion order."""

    def __init__(self, name: str):
        self.name = name
        self._boxes: dict[str, Box] = {}
        self._root: str | None = None
        self._counter = 0

    def add(self, label: str, parent: str | None = None, *,
            mandatory: bool = False, group: Group = Group.FREE,
            box_id: str | None = None) -> str:
        """Add a box and return its id. The first parentless box is the root."""
        if box_id is None:
            self._counter += 1
            box_id = f"b{self._counter}"
        if box_id in self._boxes:
            raise ValueError(f"duplicate box id {box_id!r}")
        self._boxes[box_id] = Box(id=box_id, label=label, parent=parent,
                                  mandatory=mandatory, group=group)
        if parent is None:
            if self._root is None:
                self._root = box_id
        else:
            p = self._boxes[parent]
            self._boxes[parent] = replace(p, children=p.children + (box_id,))
        return box_id

    def set_group(self, box_id: str, group: Group) -> None:
        self._boxes[box_id] = replace(self._boxes[box_id], group=group)

    def set_mandatory(self, box_id: str, mandatory: bool = True) -> None:
        self._boxes[box_id] = replace(self._boxes[box_id], mandatory=mandatory)

    def build(self, name: str | None = None) -> FeatureModel:
        if self._root is None:
            raise ValueError("model has no root box")
        return FeatureModel(name=name or self.name, boxes=dict(self._boxes),
                            root=self._root)
