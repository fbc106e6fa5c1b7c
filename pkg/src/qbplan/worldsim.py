"""Ground-truth block simulator, belief trajectory tables, and experiments.

The robot never observes action outcomes, so a move from a physically empty
column is a silent no-op for the world while the belief engine still shifts
mass.  Goal achievement is judged by the quality band of each column's final
actual count.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction

from .beliefs import (
    DEFAULT_SCALE,
    ColumnBelief,
    GoalSpec,
    Quality,
    QualityScale,
    apply_addition,
    apply_removal,
    classify,
    initial_beliefs,
    observe,
)
from .planner import PlannerConfig, plan
from .qbdl import DomainSpec
from .sitcalc import Action

PRNG_NAME = "mt19937-sha256"  # per-run Mersenne Twister, seed = sha256(seed:run)[:8]


@dataclass(frozen=True, slots=True)
class WorldState:
    """Actual block counts per column (index 0 = column 1)."""

    counts: tuple[int, ...]


@dataclass(frozen=True)
class Report:
    """Outcome of planning in belief space and executing against the world."""

    domain: DomainSpec
    plan: tuple[Action, ...]
    outcome_kind: str
    final_counts: tuple[int, ...]
    final_believes: tuple[Quality, ...]
    achieved: tuple[bool, ...]
    all_achieved: bool
    failed_moves: tuple[int, ...]


@dataclass(frozen=True)
class ExperimentParams:
    runs: int
    columns: int
    max_initial: int
    seed: int
    scale: QualityScale = DEFAULT_SCALE


def execute(world: WorldState, moves: tuple[Action, ...]) -> tuple[WorldState, list[int]]:
    """Apply moves to the actual counts; a move from an empty column changes
    nothing and its step index is recorded."""
    counts = list(world.counts)
    n = len(counts)
    failed: list[int] = []
    for step, action in enumerate(moves):
        if not (1 <= action.src <= n and 1 <= action.dst <= n):
            raise ValueError(f"action {action} references an unknown column")
        if counts[action.src - 1] > 0:
            counts[action.src - 1] -= 1
            counts[action.dst - 1] += 1
        else:
            failed.append(step)
    return WorldState(tuple(counts)), failed


def evaluate(final: WorldState, goal: GoalSpec, scale: QualityScale) -> list[bool]:
    """Per column: does the final actual count fall in the goal quality's band?"""
    if len(goal.targets) != len(final.counts):
        raise ValueError("goal and world column sets differ")
    return [classify(c, scale) == q for c, q in zip(final.counts, goal.targets)]


def run_scenario(spec: DomainSpec, cfg: PlannerConfig | None = None) -> Report:
    """Observe, plan in belief space, execute on the true world, evaluate."""
    state = initial_beliefs(spec.initial_counts, spec.scale)
    goal = GoalSpec(spec.goals)
    outcome = plan(state, goal, cfg)
    world, failed = execute(WorldState(spec.initial_counts), outcome.plan)
    achieved = evaluate(world, goal, spec.scale)
    return Report(
        domain=spec,
        plan=outcome.plan,
        outcome_kind=outcome.kind,
        final_counts=world.counts,
        final_believes=outcome.final_belief.believes(),
        achieved=tuple(achieved),
        all_achieved=all(achieved),
        failed_moves=tuple(failed),
    )


@dataclass(frozen=True)
class TrajectoryTable:
    """Belief degrees along a pure removal or addition trajectory.

    ``counts[j]`` is the nominal block count after j steps (clamped at 0 on
    the way down); ``beliefs[j]`` the belief vector.
    """

    scale: QualityScale
    counts: tuple[int, ...]
    beliefs: tuple[ColumnBelief, ...]

    def cell(self, quality_index: int, column: int) -> Fraction:
        return self.beliefs[column].degree(quality_index)


def trajectory_table(initial_count: int, scale: QualityScale, steps: int) -> TrajectoryTable:
    """Trace |steps| removals (steps < 0) or additions (steps > 0) from a
    fresh observation of ``initial_count`` blocks."""
    limit = 10 * scale.granularity * (scale.bands[-1][1] + 1)
    if abs(steps) > limit:
        raise ValueError(f"|steps| > {limit}")
    op = apply_removal if steps < 0 else apply_addition
    delta = -1 if steps < 0 else 1
    belief = observe(initial_count, scale)
    count = initial_count
    counts = [count]
    beliefs = [belief]
    for _ in range(abs(steps)):
        belief = op(belief)
        count = max(0, count + delta)
        counts.append(count)
        beliefs.append(belief)
    return TrajectoryTable(scale, tuple(counts), tuple(beliefs))


def format_trajectory(table: TrajectoryTable) -> str:
    """Text table: count header, one row per quality (top first), cells are
    ``k/g`` fractions with blanks for zero degrees."""
    g = table.scale.granularity
    rows = [["blocks"] + [str(c) for c in table.counts]]
    for q in reversed(table.scale.qualities):
        cells = [q.name]
        for cb in table.beliefs:
            k = cb.numerators[q.index]
            cells.append(f"{k}/{g}" if k else "")
        rows.append(cells)
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _derived_seed(seed: int, run_index: int) -> int:
    digest = hashlib.sha256(f"{seed}:{run_index}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_scenario(params: ExperimentParams, run_index: int) -> DomainSpec:
    """Deterministic random domain for one run: uniform counts in
    [0, max_initial], uniform goal qualities."""
    if not 0 <= run_index < params.runs:
        raise ValueError(f"run_index {run_index} outside [0, {params.runs})")
    rng = random.Random(_derived_seed(params.seed, run_index))
    counts = tuple(rng.randint(0, params.max_initial) for _ in range(params.columns))
    goals = tuple(
        params.scale.qualities[rng.randrange(params.scale.granularity)]
        for _ in range(params.columns)
    )
    return DomainSpec(params.columns, params.scale, counts, goals)


def report_json(report: Report) -> dict:
    """Interchange form of a single run's report."""
    return {
        "plan": [[a.src, a.dst] for a in report.plan],
        "final_counts": list(report.final_counts),
        "achieved": list(report.achieved),
        "all_achieved": report.all_achieved,
        "outcome_kind": report.outcome_kind,
    }


def run_experiment(params: ExperimentParams, cfg: PlannerConfig | None = None) -> dict:
    """Run every scenario of the experiment and assemble the JSON report."""
    reports = [run_scenario(random_scenario(params, i), cfg) for i in range(params.runs)]
    return {
        "params": {
            "runs": params.runs,
            "columns": params.columns,
            "max_initial": params.max_initial,
            "seed": params.seed,
            "granularity": params.scale.granularity,
        },
        "prng": PRNG_NAME,
        "runs": [report_json(r) for r in reports],
        "success_rate": sum(r.all_achieved for r in reports) / params.runs,
    }
