"""Qualitative belief-state planning toolkit for the moving-blocks problem."""

from .sitcalc import (
    S0,
    Action,
    Situation,
    do,
    format_plan,
    parse_plan,
    precedes,
    precedes_eq,
    predecessor,
)
from .beliefs import (
    DEFAULT_SCALE,
    BeliefState,
    ColumnBelief,
    GoalSpec,
    NotPossibleError,
    Quality,
    QualityScale,
    apply_addition,
    apply_move,
    apply_removal,
    classify,
    initial_beliefs,
    observe,
    poss,
    uniform_scale,
)
from .qbdl import DomainSpec, ParseError
from .qbdl import parse as parse_domain
from .qbdl import serialize as serialize_domain
from .planner import (
    CLOSEST,
    EXACT,
    LimitsError,
    PlanOutcome,
    PlannerConfig,
    distance,
    goal_satisfied,
    plan,
    simulate_beliefs,
)
from .worldsim import (
    ExperimentParams,
    Report,
    TrajectoryTable,
    WorldState,
    evaluate,
    execute,
    format_trajectory,
    random_scenario,
    report_json,
    run_experiment,
    run_scenario,
    trajectory_table,
)
