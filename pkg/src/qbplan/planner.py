"""Breadth-first planning in belief space with deterministic tie-breaking.

States are deduplicated on the full belief value (all degrees plus main
beliefs).  Successors enumerate actions in ascending (src, dst) order, so
the first goal state found yields the shortest plan and, among shortest,
the lexicographically least action sequence.  When no goal state exists
within the limits, the closest visited state wins, ordered by
(quality distance, plan length, lexicographic actions).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .beliefs import (
    BeliefState,
    ColumnBelief,
    GoalSpec,
    NotPossibleError,
    apply_addition,
    apply_move,
    apply_removal,
    poss,
)
from .sitcalc import Action

EXACT = "Exact"
CLOSEST = "Closest"


class LimitsError(Exception):
    """The search configuration cannot expand even the root state."""

    code = "E_LIMITS"


@dataclass(frozen=True)
class PlannerConfig:
    max_depth: int = 64
    max_expansions: int = 5_000_000


@dataclass(frozen=True)
class PlanOutcome:
    plan: tuple[Action, ...]
    kind: str  # EXACT or CLOSEST
    final_belief: BeliefState
    distance: int
    expanded: int


def goal_satisfied(state: BeliefState, goal: GoalSpec) -> bool:
    """True iff every column's main belief equals its goal quality."""
    if len(goal.targets) != len(state.columns):
        raise ValueError("goal and state column sets differ")
    return all(cb.believe == q.index for cb, q in zip(state.columns, goal.targets))


def distance(state: BeliefState, goal: GoalSpec) -> int:
    """Ordinal quality distance: sum over columns of |believe - goal| indices."""
    if len(goal.targets) != len(state.columns):
        raise ValueError("goal and state column sets differ")
    return sum(abs(cb.believe - q.index) for cb, q in zip(state.columns, goal.targets))


def simulate_beliefs(initial: BeliefState, plan: tuple[Action, ...]) -> list[BeliefState]:
    """Belief trace of replaying ``plan``; element 0 is ``initial``."""
    states = [initial]
    for step, action in enumerate(plan):
        if not poss(states[-1], action):
            raise NotPossibleError(action, step=step)
        states.append(apply_move(states[-1], action))
    return states


def _compile_columns(columns: tuple[ColumnBelief, ...]):
    """Intern every column belief reachable from ``columns`` and memoize the
    one-step removal/addition transitions as integer codes."""
    vecs: list[ColumnBelief] = []
    codes: dict[ColumnBelief, int] = {}

    def intern(cb: ColumnBelief) -> int:
        code = codes.get(cb)
        if code is None:
            code = len(vecs)
            codes[cb] = code
            vecs.append(cb)
        return code

    root = tuple(intern(cb) for cb in columns)
    removal: list[int] = []
    addition: list[int] = []
    believe: list[int] = []
    i = 0
    while i < len(vecs):
        cb = vecs[i]
        believe.append(cb.believe)
        removal.append(intern(apply_removal(cb)))
        addition.append(intern(apply_addition(cb)))
        i += 1
    return root, vecs, removal, addition, believe


def plan(initial: BeliefState, goal: GoalSpec, cfg: PlannerConfig | None = None) -> PlanOutcome:
    """Shortest poss-respecting action sequence whose belief state satisfies
    the goal, or the closest reachable state within the limits."""
    cfg = cfg or PlannerConfig()
    if cfg.max_expansions < 1 or cfg.max_depth < 0:
        raise LimitsError(f"unusable search limits: {cfg}")
    n = len(initial.columns)
    if len(goal.targets) != n:
        raise ValueError("goal and state column sets differ")

    root, vecs, removal, addition, believe = _compile_columns(initial.columns)
    target = tuple(q.index for q in goal.targets)
    actions = tuple((s, d) for s in range(n) for d in range(n) if s != d)

    def dist(state: tuple[int, ...]) -> int:
        return sum(abs(believe[c] - t) for c, t in zip(state, target))

    def decode(state: tuple[int, ...]) -> BeliefState:
        return BeliefState(initial.scale, tuple(vecs[c] for c in state))

    def moves(node) -> tuple[Action, ...]:
        out = []
        while node[2] is not None:
            s, d = node[2]
            out.append(Action(s + 1, d + 1))
            node = node[1]
        return tuple(reversed(out))

    root_node = (root, None, None)
    if dist(root) == 0:
        return PlanOutcome((), EXACT, decode(root), 0, 0)

    best_node, best_dist = root_node, dist(root)
    seen = {root}
    queue: deque = deque([(root_node, 0)])
    expanded = 0
    while queue:
        node, depth = queue.popleft()
        if depth >= cfg.max_depth:
            continue
        if expanded >= cfg.max_expansions:
            break
        expanded += 1
        state = node[0]
        for s, d in actions:
            src_code = state[s]
            if believe[src_code] == 0:  # poss: source believed empty
                continue
            child = list(state)
            child[s] = removal[src_code]
            child[d] = addition[state[d]]
            child = tuple(child)
            if child in seen:
                continue
            seen.add(child)
            child_node = (child, node, (s, d))
            child_dist = dist(child)
            if child_dist == 0:
                return PlanOutcome(moves(child_node), EXACT, decode(child), 0, expanded)
            if child_dist < best_dist:
                best_dist, best_node = child_dist, child_node
            queue.append((child_node, depth + 1))

    return PlanOutcome(moves(best_node), CLOSEST, decode(best_node[0]), best_dist, expanded)
