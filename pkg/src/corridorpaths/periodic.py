"""Exact integer sequences with a declared period, and the linear operators
used to build circular Pascal arrays and corridor-state vectors.

A sequence is stored as one window of values at indices ``0 .. period-1`` and
extended to all of Z by periodicity.  Every operator returns a new sequence;
nothing is mutated, and all arithmetic is exact (Python integers).

Operator vocabulary:

* right shift  ``R``: ``R(x)[k] = x[k-1]``
* left shift   ``L = R**-1``: ``L(x)[k] = x[k+1]``
* difference   ``D = I - L``: ``D(x)[k] = x[k] - x[k+1]``
* up-sample    ``U``: ``U(x)[k] = x[floor(k/2)]`` (doubles the period)

Mixing two sequences of different declared periods in ``+``/``-`` is an
error: callers must up-sample or re-window explicitly.  Declared periods are
never minimized, so two windows that happen to describe the same function of
Z but with different periods compare unequal on purpose.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = [
    "PeriodicSequence",
    "unit_vector",
    "transition",
    "TRANSITION_KINDS",
]


@dataclass(frozen=True)
class PeriodicSequence:
    """An integer-valued, periodic function of Z.

    ``value_at(k) == window[k mod period]`` for every integer ``k`` (Euclidean
    mod, so arbitrarily negative ``k`` is fine).
    """

    period: int
    window: tuple[int, ...]

    def __init__(self, period: int, window: Iterable[int]):
        values = tuple(int(v) for v in window)
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        if len(values) != period:
            raise ValueError(
                f"window length {len(values)} does not match period {period}"
            )
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "window", values)

    def value_at(self, k: int) -> int:
        return self.window[k % self.period]

    def window_sum(self) -> int:
        return sum(self.window)

    def shift_by(self, steps: int) -> "PeriodicSequence":
        """Apply R**steps (L**-steps for negative): result[k] = self[k - steps]."""
        p = self.period
        return PeriodicSequence(p, tuple(self.window[(i - steps) % p] for i in range(p)))

    def shift_right(self) -> "PeriodicSequence":
        return self.shift_by(1)

    def shift_left(self) -> "PeriodicSequence":
        return self.shift_by(-1)

    def difference(self) -> "PeriodicSequence":
        """D = I - L; the window of the result always sums to zero."""
        return self - self.shift_left()

    def upsample(self) -> "PeriodicSequence":
        """Duplicate every term: result[k] = self[floor(k/2)], period doubles."""
        return PeriodicSequence(
            2 * self.period, tuple(self.window[i // 2] for i in range(2 * self.period))
        )

    def __add__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        self._check_same_period(other)
        return PeriodicSequence(
            self.period, tuple(a + b for a, b in zip(self.window, other.window))
        )

    def __sub__(self, other: "PeriodicSequence") -> "PeriodicSequence":
        self._check_same_period(other)
        return PeriodicSequence(
            self.period, tuple(a - b for a, b in zip(self.window, other.window))
        )

    def __neg__(self) -> "PeriodicSequence":
        return PeriodicSequence(self.period, tuple(-a for a in self.window))

    def _check_same_period(self, other: "PeriodicSequence") -> None:
        if not isinstance(other, PeriodicSequence):
            raise TypeError(f"expected PeriodicSequence, got {type(other).__name__}")
        if self.period != other.period:
            raise ValueError(
                f"declared periods differ ({self.period} vs {other.period}); "
                "up-sample or re-window explicitly before combining"
            )


def unit_vector(period: int) -> PeriodicSequence:
    """The periodic unit vector: 1 at every multiple of ``period``, else 0."""
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    return PeriodicSequence(period, (1,) + (0,) * (period - 1))


TRANSITION_KINDS = ("pascal", "corridor", "trinomial")


def transition(seq: PeriodicSequence, kind: str) -> PeriodicSequence:
    """One row-to-row step of the named recurrence.

    * ``"pascal"``:    I + R          (binomial/Pascal recurrence)
    * ``"corridor"``:  L + R          (two-choice corridor state update)
    * ``"trinomial"``: I + R + R**2   (three-choice / Motzkin recurrence)
    """
    if kind == "pascal":
        return seq + seq.shift_right()
    if kind == "corridor":
        return seq.shift_left() + seq.shift_right()
    if kind == "trinomial":
        return seq + seq.shift_by(1) + seq.shift_by(2)
    raise ValueError(f"unknown transition kind {kind!r}; expected one of {TRANSITION_KINDS}")
