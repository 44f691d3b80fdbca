"""Stepwise product configuration by transactional decision propagation.

Every decision runs a rule fixpoint; a contradiction rolls the whole
transaction back and explains itself with two derivation chains. The rules:

* child-parent: a selected box selects its parent
* discard-below: a discarded box discards its whole subtree
* label-link: boxes sharing a label always share their state
* mandatory: a selected box selects its mandatory children
* mutex: a selected child of a MUTEX/XOR box discards its siblings
* group-unit: a selected OR/XOR box with a single remaining open child
  selects that child
* group-empty: a selected OR/XOR box with all children discarded is a
  contradiction
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    InvalidDecisionError,
    NothingToUndoError,
    UnknownLabelError,
    VoidModelError,
)
from .model import FeatureModel, Group


class BoxState(Enum):
    OPEN = "open"
    SELECTED = "selected"
    DISCARDED = "discarded"


class Action(Enum):
    SELECT = "select"
    DISCARD = "discard"

    @property
    def target(self) -> BoxState:
        return BoxState.SELECTED if self is Action.SELECT else BoxState.DISCARDED


class Rule(Enum):
    """Why a box got its state; USER marks explicit decisions."""

    USER = "user"
    ROOT = "root"
    CHILD_PARENT = "child-parent"
    DISCARD_BELOW = "discard-below"
    LABEL_LINK = "label-link"
    MANDATORY = "mandatory"
    MUTEX = "mutex"
    GROUP_UNIT = "group-unit"
    LOOKAHEAD = "lookahead"


@dataclass(frozen=True)
class Decision:
    box: str
    action: Action
    rule: Rule = Rule.USER
    source: str | None = None  # box whose state triggered this forcing

    @property
    def is_user(self) -> bool:
        return self.rule is Rule.USER


@dataclass(frozen=True)
class PropagationReport:
    """Outcome of one decision transaction.

    Accepted reports list the forced follow-up decisions in firing order.
    Rejected reports carry the conflicting box and two derivation chains
    (newest first), one ending in SELECTED and one in DISCARDED.
    """

    accepted: bool
    forced: tuple[Decision, ...] = ()
    conflict: str | None = None
    select_chain: tuple[Decision, ...] = ()
    discard_chain: tuple[Decision, ...] = ()


class _Contradiction(Exception):
    def __init__(self, conflict: str, select_chain, discard_chain):
        super().__init__(f"contradiction at {conflict}")
        self.conflict = conflict
        self.select_chain = tuple(select_chain)
        self.discard_chain = tuple(discard_chain)


@dataclass
class ConfigState:
    """Three-valued box states plus the decision journal.

    States are value-like: :func:`decide` and :func:`undo` return fresh
    instances and never mutate their input, which is what makes rejected
    transactions free. One state must not be driven from several threads at
    once; distinct states over a shared model may.
    """

    model: FeatureModel
    states: dict[str, BoxState]
    journal: list[Decision] = field(default_factory=list)
    provenance: dict[str, Decision] = field(default_factory=dict)
    _undo_stack: list[tuple[dict, list, dict]] = field(default_factory=list)

    def clone(self) -> "ConfigState":
        return ConfigState(
            model=self.model,
            states=dict(self.states),
            journal=list(self.journal),
            provenance=dict(self.provenance),
            _undo_stack=list(self._undo_stack),
        )

    def state_of(self, box_id: str) -> BoxState:
        return self.states[box_id]

    def label_states(self) -> dict[str, BoxState]:
        """Per-label state; boxes sharing a label always agree."""
        out: dict[str, BoxState] = {}
        for box in self.model.boxes.values():
            out[box.label] = self.states[box.id]
        return out

    def open_boxes(self) -> list[str]:
        return [bid for bid in sorted(self.states)
                if self.states[bid] is BoxState.OPEN]

    def user_decisions(self) -> list[Decision]:
        return [d for d in self.journal if d.is_user]


def initial_state(model: FeatureModel) -> ConfigState:
    """Select the root, run the fixpoint, return the starting state.

    Raises :class:`VoidModelError` when the mandatory cascade already
    contradicts itself (the model admits no product).
    """
    state = ConfigState(model=model,
                        states={bid: BoxState.OPEN for bid in model.boxes})
    root = Decision(model.root, Action.SELECT, Rule.ROOT, source=None)
    try:
        _run_fixpoint(state, [root])
    except _Contradiction as c:
        raise VoidModelError(
            f"model {model.name!r} has no valid configuration "
            f"(conflict at box {c.conflict})") from None
    return state


def decide(state: ConfigState, box_id: str, action: Action,
           _rule: Rule = Rule.USER) -> tuple[ConfigState, PropagationReport]:
    """Apply one decision transactionally.

    Returns the new state and an accepted report, or the *original* state
    object untouched and a rejected report. Deciding a non-open box raises
    :class:`InvalidDecisionError` (a usage error, distinct from rejection).
    """
    if box_id not in state.model.boxes:
        raise UnknownLabelError(box_id, "no such box")
    if state.states[box_id] is not BoxState.OPEN:
        raise InvalidDecisionError(
            f"box {box_id} is {state.states[box_id].value}, not open")

    work = state.clone()
    work._undo_stack.append(
        (dict(state.states), list(state.journal), dict(state.provenance)))
    seed = Decision(box_id, action, _rule, source=None)
    try:
        forced = _run_fixpoint(work, [seed])
    except _Contradiction as c:
        return state, PropagationReport(
            accepted=False,
            conflict=c.conflict,
            select_chain=c.select_chain,
            discard_chain=c.discard_chain,
        )
    return work, PropagationReport(accepted=True, forced=tuple(forced))


def decide_label(state: ConfigState, label: str, action: Action
                 ) -> tuple[ConfigState, PropagationReport]:
    """Decide by feature label; acts on the first box carrying it."""
    boxes = sorted(b.id for b in state.model.boxes.values() if b.label == label)
    if not boxes:
        raise UnknownLabelError(label, f"model {state.model.name!r}")
    current = state.states[boxes[0]]
    if current is not BoxState.OPEN:
        raise InvalidDecisionError(
            f"feature {label!r} is already {current.value}")
    return decide(state, boxes[0], action)


def undo(state: ConfigState) -> ConfigState:
    """Return the state as it was before the last user decision."""
    if not state._undo_stack:
        raise NothingToUndoError("no user decision to undo")
    states, journal, provenance = state._undo_stack[-1]
    return ConfigState(
        model=state.model,
        states=dict(states),
        journal=list(journal),
        provenance=dict(provenance),
        _undo_stack=state._undo_stack[:-1],
    )


def open_count(state: ConfigState) -> int:
    return sum(1 for s in state.states.values() if s is BoxState.OPEN)


def is_complete(state: ConfigState) -> bool:
    """A fully colored state describes one individual product."""
    return open_count(state) == 0


def assignment_of(state: ConfigState) -> dict[str, bool]:
    """Label assignment of a complete state."""
    if not is_complete(state):
        raise InvalidDecisionError("state is not complete")
    return {lab: st is BoxState.SELECTED
            for lab, st in state.label_states().items()}


class Move(Enum):
    FREE = "free"
    SELECT_FORBIDDEN = "select-forbidden"
    DISCARD_FORBIDDEN = "discard-forbidden"
    FORCED_APPLIED = "forced-applied"
    DEAD_END = "dead-end"


@dataclass(frozen=True)
class LookaheadReport:
    moves: dict[str, Move]
    dead_end: bool
    state: ConfigState


def lookahead(state: ConfigState, auto: bool = False) -> LookaheadReport:
    """Probe both directions for every open box in sandbox copies.

    A direction that gets rejected is marked forbidden; with ``auto`` the
    single remaining legal moves are applied (and re-probed) until none is
    left. A box with both directions rejected flags the whole state as a
    dead end that only undo can leave.
    """
    moves: dict[str, Move] = {}
    work = state
    dead_end = False
    while True:
        forced_box: str | None = None
        forced_action: Action | None = None
        for bid in work.open_boxes():
            select_ok = decide(work, bid, Action.SELECT)[1].accepted
            discard_ok = decide(work, bid, Action.DISCARD)[1].accepted
            if select_ok and discard_ok:
                moves[bid] = Move.FREE
            elif select_ok:
                moves[bid] = Move.DISCARD_FORBIDDEN
                if forced_box is None:
                    forced_box, forced_action = bid, Action.SELECT
            elif discard_ok:
                moves[bid] = Move.SELECT_FORBIDDEN
                if forced_box is None:
                    forced_box, forced_action = bid, Action.DISCARD
            else:
                moves[bid] = Move.DEAD_END
                dead_end = True
        if not auto or forced_box is None or dead_end:
            break
        work, report = decide(work, forced_box, forced_action, _rule=Rule.LOOKAHEAD)
        moves[forced_box] = Move.FORCED_APPLIED
        for d in report.forced:
            moves.pop(d.box, None)
    return LookaheadReport(moves=moves, dead_end=dead_end, state=work)


# ---------------------------------------------------------------------------
# Fixpoint internals


def _run_fixpoint(state: ConfigState, seeds: list[Decision]) -> list[Decision]:
    """Apply decisions and their consequences until nothing changes.

    Each box moves OPEN -> decided at most once per transaction, so the
    total number of firings is bounded by the box count.
    """
    model = state.model
    by_label: dict[str, list[str]] = {}
    for box in model.boxes.values():
        by_label.setdefault(box.label, []).append(box.id)

    queue: deque[Decision] = deque(seeds)
    fired: list[Decision] = []

    def chain_for(decision: Decision) -> list[Decision]:
        steps = [decision]
        seen = {decision.box}
        cur = decision
        while cur.source is not None and cur.source not in seen:
            nxt = state.provenance.get(cur.source)
            if nxt is None:
                break
            steps.append(nxt)
            seen.add(nxt.box)
            cur = nxt
        return steps

    def check_group(parent_id: str, trigger: Decision) -> None:
        parent = model.boxes[parent_id]
        if parent.group not in (Group.OR, Group.XOR):
            return
        if state.states[parent_id] is not BoxState.SELECTED:
            return
        open_children = []
        for c in parent.children:
            st = state.states[c]
            if st is BoxState.SELECTED:
                return  # group satisfied
            if st is BoxState.OPEN:
                open_children.append(c)
        if not open_children:
            raise _Contradiction(
                parent_id,
                chain_for(state.provenance[parent_id]),
                chain_for(trigger),
            )
        if len(open_children) == 1:
            queue.append(Decision(open_children[0], Action.SELECT,
                                  Rule.GROUP_UNIT, source=parent_id))

    while queue:
        d = queue.popleft()
        current = state.states[d.box]
        target = d.action.target
        if current is target:
            continue
        if current is not BoxState.OPEN:
            existing = state.provenance[d.box]
            if target is BoxState.SELECTED:
                raise _Contradiction(d.box, chain_for(d), chain_for(existing))
            raise _Contradiction(d.box, chain_for(existing), chain_for(d))

        state.states[d.box] = target
        state.provenance[d.box] = d
        state.journal.append(d)
        if d.rule not in (Rule.USER, Rule.ROOT, Rule.LOOKAHEAD):
            fired.append(d)

        box = model.boxes[d.box]
        for other in by_label[box.label]:
            if other != d.box:
                queue.append(Decision(other, d.action, Rule.LABEL_LINK, source=d.box))

        if target is BoxState.SELECTED:
            if box.parent is not None:
                queue.append(Decision(box.parent, Action.SELECT,
                                      Rule.CHILD_PARENT, source=d.box))
                parent = model.boxes[box.parent]
                if parent.group in (Group.MUTEX, Group.XOR):
                    for sib in parent.children:
                        if sib != d.box:
                            queue.append(Decision(sib, Action.DISCARD,
                                                  Rule.MUTEX, source=d.box))
            for child in box.children:
                if model.boxes[child].mandatory:
                    queue.append(Decision(child, Action.SELECT,
                                          Rule.MANDATORY, source=d.box))
            check_group(d.box, d)
        else:
            for child in box.children:
                queue.append(Decision(child, Action.DISCARD,
                                      Rule.DISCARD_BELOW, source=d.box))
            if box.parent is not None:
                check_group(box.parent, d)

    return fired
