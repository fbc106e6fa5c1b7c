"""Quantized column-height beliefs and the causal laws that update them.

A column's belief is an exact vector of degrees over the qualities of a
scale, always summing to 1, with mass on at most two adjacent qualities.
Moving a block shifts 1/g of mass one quality down on the source column and
one quality up on the destination column (g = granularity).  The main
``believe`` quality switches only when the gaining quality's degree strictly
exceeds 1/2, so exact ties keep the previous main belief.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .sitcalc import Action


class NotPossibleError(Exception):
    """A move whose source column is believed empty was requested."""

    code = "E_NOT_POSSIBLE"

    def __init__(self, action: Action, step: int | None = None):
        self.action = action
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(
            f"move {action.src} {action.dst} not possible{where}: "
            "source column is believed empty"
        )


@dataclass(frozen=True, slots=True)
class Quality:
    """A symbolic height category; index 0 is always the empty quality."""

    index: int
    name: str


@dataclass(frozen=True, slots=True)
class QualityScale:
    """Ordered qualities with contiguous block-count bands.

    ``bands[i]`` is the inclusive count interval denoted by ``qualities[i]``;
    bands ascend contiguously from 0.  The granularity g is the number of
    qualities, and every belief degree is a multiple of 1/g.
    """

    qualities: tuple[Quality, ...]
    bands: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.qualities) < 2:
            raise ValueError("a scale needs at least two qualities")
        if len(self.bands) != len(self.qualities):
            raise ValueError("one band per quality required")
        names = [q.name for q in self.qualities]
        if len(set(names)) != len(names):
            raise ValueError("quality names must be unique")
        for i, q in enumerate(self.qualities):
            if q.index != i:
                raise ValueError("quality indices must be consecutive from 0")
        if self.bands[0][0] != 0:
            raise ValueError("the first band must start at 0")
        for i, (lo, hi) in enumerate(self.bands):
            if lo > hi:
                raise ValueError(f"band {self.qualities[i].name}: {lo} > {hi}")
            if i and lo != self.bands[i - 1][1] + 1:
                raise ValueError("bands must be contiguous and ascending")

    @property
    def granularity(self) -> int:
        return len(self.qualities)

    def quality(self, name: str) -> Quality:
        for q in self.qualities:
            if q.name == name:
                return q
        raise KeyError(name)

    def band(self, quality: Quality) -> tuple[int, int]:
        return self.bands[quality.index]


DEFAULT_SCALE = QualityScale(
    qualities=(
        Quality(0, "zero"),
        Quality(1, "small"),
        Quality(2, "medium"),
        Quality(3, "large"),
    ),
    bands=((0, 0), (1, 4), (5, 8), (9, 12)),
)


def uniform_scale(granularity: int) -> QualityScale:
    """A zero band plus ``granularity - 1`` bands of width ``granularity``.

    At granularity 4 this is exactly :data:`DEFAULT_SCALE`.
    """
    if granularity < 2:
        raise ValueError("granularity must be at least 2")
    if granularity == 4:
        return DEFAULT_SCALE
    qualities = [Quality(0, "zero")]
    bands = [(0, 0)]
    for i in range(1, granularity):
        qualities.append(Quality(i, f"q{i}"))
        bands.append(((i - 1) * granularity + 1, i * granularity))
    return QualityScale(tuple(qualities), tuple(bands))


@dataclass(frozen=True, slots=True)
class ColumnBelief:
    """Exact belief vector for one column.

    ``numerators[i]`` is the degree numerator of quality i over the scale's
    granularity; ``believe`` is the index of the main-belief quality.
    """

    numerators: tuple[int, ...]
    believe: int

    @property
    def granularity(self) -> int:
        return len(self.numerators)

    def degree(self, quality: Quality | int) -> Fraction:
        i = quality.index if isinstance(quality, Quality) else quality
        return Fraction(self.numerators[i], len(self.numerators))

    def support(self) -> tuple[int, ...]:
        """Indices of the qualities holding any belief mass."""
        return tuple(i for i, k in enumerate(self.numerators) if k)


@dataclass(frozen=True, slots=True)
class BeliefState:
    """The robot's view: one belief vector per column of the domain."""

    scale: QualityScale
    columns: tuple[ColumnBelief, ...]

    def column(self, column_id: int) -> ColumnBelief:
        return self.columns[column_id - 1]

    def believes(self) -> tuple[Quality, ...]:
        return tuple(self.scale.qualities[cb.believe] for cb in self.columns)


@dataclass(frozen=True, slots=True)
class GoalSpec:
    """Target main-belief quality per column; constant across situations."""

    targets: tuple[Quality, ...]


def classify(count: int, scale: QualityScale) -> Quality:
    """The quality whose band contains ``count``; counts above the top band
    map to the top quality."""
    if count < 0:
        raise ValueError("block counts are non-negative")
    for q, (lo, hi) in zip(scale.qualities, scale.bands):
        if lo <= count <= hi:
            return q
    return scale.qualities[-1]


def observe(count: int, scale: QualityScale) -> ColumnBelief:
    """Pure belief from seeing a column: full degree on the classified quality."""
    q = classify(count, scale)
    nums = [0] * scale.granularity
    nums[q.index] = scale.granularity
    return ColumnBelief(tuple(nums), q.index)


def initial_beliefs(counts: Iterable[int], scale: QualityScale) -> BeliefState:
    return BeliefState(scale, tuple(observe(c, scale) for c in counts))


def apply_removal(cb: ColumnBelief) -> ColumnBelief:
    """Belief effect of taking one block: shift 1/g of mass one quality down.

    Saturates (no change) only when the whole mass already sits on the
    empty quality.
    """
    nums = cb.numerators
    g = len(nums)
    low = 0
    while not nums[low]:
        low += 1
    if low == 0 and nums[0] == g:
        return cb
    new = list(nums)
    if nums[low] == g:  # pure state: open the pair below
        new[low] -= 1
        new[low - 1] += 1
        gaining = low - 1
    else:  # two-quality support {low, low + 1}
        new[low] += 1
        new[low + 1] -= 1
        gaining = low
    believe = gaining if 2 * new[gaining] > g else cb.believe
    return ColumnBelief(tuple(new), believe)


def apply_addition(cb: ColumnBelief) -> ColumnBelief:
    """Mirror of :func:`apply_removal`: shift 1/g of mass one quality up."""
    nums = cb.numerators
    g = len(nums)
    high = g - 1
    while not nums[high]:
        high -= 1
    if high == g - 1 and nums[high] == g:
        return cb
    new = list(nums)
    if nums[high] == g:
        new[high] -= 1
        new[high + 1] += 1
        gaining = high + 1
    else:
        new[high] += 1
        new[high - 1] -= 1
        gaining = high
    believe = gaining if 2 * new[gaining] > g else cb.believe
    return ColumnBelief(tuple(new), believe)


def poss(state: BeliefState, action: Action) -> bool:
    """A move is possible iff the source column is not believed empty.

    The destination is unconstrained; the test is purely belief-level, so a
    possible move may still fail physically.
    """
    n = len(state.columns)
    if not (1 <= action.src <= n and 1 <= action.dst <= n):
        raise ValueError(f"action {action} references an unknown column")
    return state.columns[action.src - 1].believe != 0


def apply_move(state: BeliefState, action: Action) -> BeliefState:
    """Belief successor state: removal on the source, addition on the
    destination, every other column untouched."""
    if not poss(state, action):
        raise NotPossibleError(action)
    cols = list(state.columns)
    cols[action.src - 1] = apply_removal(cols[action.src - 1])
    cols[action.dst - 1] = apply_addition(cols[action.dst - 1])
    return BeliefState(state.scale, tuple(cols))
