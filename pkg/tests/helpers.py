"""Shared test machinery: random models, random formulas, walk drivers."""

from __future__ import annotations

import random
from itertools import product

import featureline as fl

GROUPS = (fl.Group.FREE, fl.Group.FREE, fl.Group.OR, fl.Group.MUTEX, fl.Group.XOR)


def random_model(rng: random.Random, max_boxes: int = 10,
                 label_pool: int | None = None, name: str = "Rnd"):
    """A random valid model; shared labels appear when the pool is small."""
    n = rng.randint(2, max_boxes)
    pool_size = label_pool if label_pool is not None else n
    pool = [f"F{i}" for i in range(pool_size)]
    b = fl.ModelBuilder(name)
    ids = [b.add("Root", mandatory=True)]
    for _ in range(n - 1):
        parent = rng.choice(ids)
        ids.append(b.add(rng.choice(pool), parent,
                         mandatory=rng.random() < 0.3))
    model = b.build()
    for bid, box in model.boxes.items():
        if box.children:
            b.set_group(bid, rng.choice(GROUPS))
    model = b.build()
    assert fl.validate_model(model) == []
    return model


def random_formula(rng: random.Random, labels, depth: int = 3):
    """Random formula over the labels, up to the given depth."""
    if depth == 0 or rng.random() < 0.3:
        return fl.Atom(rng.choice(labels))
    kind = rng.randrange(5)
    if kind == 0:
        return fl.Not(random_formula(rng, labels, depth - 1))
    if kind == 1:
        k = rng.randint(2, 3)
        return fl.And(tuple(random_formula(rng, labels, depth - 1)
                            for _ in range(k)))
    if kind == 2:
        k = rng.randint(2, 3)
        return fl.Or(tuple(random_formula(rng, labels, depth - 1)
                           for _ in range(k)))
    if kind == 3:
        return fl.Implies(random_formula(rng, labels, depth - 1),
                          random_formula(rng, labels, depth - 1))
    return fl.Iff(random_formula(rng, labels, depth - 1),
                  random_formula(rng, labels, depth - 1))


def truth_table(f, labels) -> set[tuple[bool, ...]]:
    """Satisfying assignments of the formula as value tuples over labels."""
    out = set()
    for values in product((False, True), repeat=len(labels)):
        assignment = dict(zip(labels, values))
        if fl.evaluate(f, assignment):
            out.add(values)
    return out


def complete_randomly(state, rng: random.Random, _depth: int = 0):
    """Random accepted decision walk to a complete state, backtracking on
    dead ends; returns None when the state has no completion."""
    if fl.is_complete(state):
        return state
    if _depth > 4 * len(state.model.boxes):
        return None
    box_id = rng.choice(state.open_boxes())
    actions = [fl.Action.SELECT, fl.Action.DISCARD]
    rng.shuffle(actions)
    for action in actions:
        new_state, report = fl.decide(state, box_id, action)
        if report.accepted:
            result = complete_randomly(new_state, rng, _depth + 1)
            if result is not None:
                return result
    return None


def drive_to(model, solution):
    """Reach a known-valid assignment through user decisions; asserts every
    step is accepted."""
    state = fl.initial_state(model)
    for label in sorted(solution):
        if state.label_states()[label] is fl.BoxState.OPEN:
            action = fl.Action.SELECT if solution[label] else fl.Action.DISCARD
            state, report = fl.decide_label(state, label, action)
            assert report.accepted, f"{label} -> {solution[label]} rejected"
    return state


def completions_consistent_with(solutions, state) -> set[tuple]:
    """Oracle solutions compatible with the state's decided labels."""
    decided = {lab: st is fl.BoxState.SELECTED
               for lab, st in state.label_states().items()
               if st is not fl.BoxState.OPEN}
    out = set()
    for a in solutions.assignments:
        if all(a[lab] == val for lab, val in decided.items()):
            out.add(tuple(a[l] for l in solutions.labels))
    return out


def state_digest(state) -> tuple:
    """Stable digest for transactionality checks."""
    return (
        tuple(sorted((bid, st.value) for bid, st in state.states.items())),
        tuple((d.box, d.action.value, d.rule.value, d.source)
              for d in state.journal),
    )
