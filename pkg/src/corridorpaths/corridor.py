"""Corridor path counting: two-choice, infinite-width, and three-choice walks.

An ``m``-corridor is the lattice strip ``N x {0..m}``.  A corridor path starts
at ``(0, y0)``, takes up-right / down-right unit steps, and never leaves the
strip.  The count of length-``n`` paths equals the range of row ``n`` of the
circular Pascal array of order ``d = m + 2`` (with the matching start window),
so the operator route computes counts without any enumeration.

The dual-corridor state is the bookkeeping device behind that identity: two
mirrored corridors (heights ``1..d-1`` and ``-1..-(d-1)``) carry signed
per-vertex path counts, extended 2d-periodically, and evolve by ``L + R``.

Every operator-route count here is paired with an explicit depth-first
enumeration oracle (``*_bruteforce``).  The oracles are exponential by nature
and refuse lengths above a cap instead of silently taking forever.
"""
from __future__ import annotations

from dataclasses import dataclass

from .pascal import p_row, sigma_entry_direct, trinomial_row
from .periodic import PeriodicSequence, transition

__all__ = [
    "DEFAULT_BINARY_CAP",
    "DEFAULT_TERNARY_CAP",
    "EnumerationCapError",
    "CorridorQuery",
    "CorridorResult",
    "DualCorridorState",
    "initial_state",
    "state_at",
    "corridor_count",
    "corridor_sequence",
    "corridor_result",
    "endpoint_counts",
    "corridor_count_bruteforce",
    "bruteforce_endpoint_counts",
    "infinite_corridor_count",
    "motzkin_corridor_count",
    "motzkin_sequence",
    "motzkin_bruteforce",
]

DEFAULT_BINARY_CAP = 24
DEFAULT_TERNARY_CAP = 15


class EnumerationCapError(ValueError):
    """Raised when a brute-force oracle is asked to exceed its length cap."""


@dataclass(frozen=True)
class CorridorQuery:
    """(width m, length n, start height y0), with 0 <= y0 <= m."""

    m: int
    n: int
    y0: int = 0

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"corridor width m must be >= 0, got {self.m}")
        if self.n < 0:
            raise ValueError(f"path length n must be >= 0, got {self.n}")
        if not 0 <= self.y0 <= self.m:
            raise ValueError(f"start height y0 must be in [0, {self.m}], got {self.y0}")

    @property
    def d(self) -> int:
        return self.m + 2


@dataclass(frozen=True)
class CorridorResult:
    """A corridor count, optionally with per-endpoint counts (final height 0..m)."""

    query: CorridorQuery
    count: int
    endpoints: tuple[int, ...] | None = None


@dataclass(frozen=True)
class DualCorridorState:
    """Signed incoming-path counts ``v[n, k]`` of the dual corridor at step n.

    The sequence has period ``2d``; it vanishes at ``k = 0`` and ``k = d``, is
    antisymmetric (``v[-k] = -v[k]``), and is nonnegative on ``k = 1..d-1``.
    """

    d: int
    n: int
    seq: PeriodicSequence

    def __post_init__(self):
        d, seq = self.d, self.seq
        if seq.period != 2 * d:
            raise ValueError(f"state sequence must have period {2 * d}, got {seq.period}")
        if seq.value_at(0) != 0 or seq.value_at(d) != 0:
            raise ValueError("state must vanish at k = 0 and k = d")
        for k in range(1, d):
            if seq.value_at(-k) != -seq.value_at(k):
                raise ValueError(f"state must be antisymmetric; fails at k = {k}")
            if seq.value_at(k) < 0:
                raise ValueError(f"state must be >= 0 on 1..d-1; fails at k = {k}")

    def value_at(self, k: int) -> int:
        return self.seq.value_at(k)


def initial_state(d: int, y0: int = 0) -> DualCorridorState:
    """Step-0 state for a walk starting at height ``y0 + 1`` of the shifted
    corridor: +1 at ``k = y0 + 1``, -1 at ``k = -(y0 + 1)``, zeros elsewhere.

    Identical to ``L**y0`` applied to the difference row ``q_0``.
    """
    _check_state_params(d, 0, y0)
    window = [0] * (2 * d)
    window[y0 + 1] = 1
    window[2 * d - (y0 + 1)] = -1
    return DualCorridorState(d, 0, PeriodicSequence(2 * d, window))


def state_at(d: int, n: int, y0: int = 0) -> DualCorridorState:
    """State after ``n`` steps: ``(L + R)**n`` applied to the initial state.

    Equals ``L**(n + y0)`` applied to the difference row ``q_n``.
    """
    _check_state_params(d, n, y0)
    seq = initial_state(d, y0).seq
    for _ in range(n):
        seq = transition(seq, "corridor")
    return DualCorridorState(d, n, seq)


def _check_state_params(d: int, n: int, y0: int) -> None:
    if d < 2:
        raise ValueError(f"order d must be >= 2, got {d}")
    if n < 0:
        raise ValueError(f"step n must be >= 0, got {n}")
    if not 0 <= y0 <= d - 2:
        raise ValueError(f"y0 must satisfy 0 <= y0 <= d-2 = {d - 2}, got {y0}")


def corridor_count(m: int, n: int, y0: int = 0) -> int:
    """Number of length-``n`` up/down paths in ``N x {0..m}`` from ``(0, y0)``.

    Computed as the difference of two up-sampled Pascal-array entries on the
    extremal diagonals: ``p[n, n+y0] - p[n, n+y0+d]`` with ``d = m + 2``.
    """
    q = CorridorQuery(m, n, y0)
    up = p_row(q.d, n, y0).seq
    return up.value_at(n + y0) - up.value_at(n + y0 + q.d)


def corridor_sequence(m: int, n_max: int, y0: int = 0) -> list[int]:
    """Counts for lengths 0..n_max in one pass over the up-sampled rows."""
    q = CorridorQuery(m, n_max, y0)
    seq = p_row(q.d, 0, y0).seq
    out = []
    for n in range(n_max + 1):
        out.append(seq.value_at(n + y0) - seq.value_at(n + y0 + q.d))
        seq = seq + seq.shift_by(2)  # p_{n+1} = (I + R**2) p_n
    return out


def endpoint_counts(m: int, n: int, y0: int = 0) -> tuple[int, ...]:
    """Per-final-height counts (heights 0..m), read from the dual-corridor state."""
    q = CorridorQuery(m, n, y0)
    state = state_at(q.d, n, y0)
    return tuple(state.value_at(k) for k in range(1, q.d))


def corridor_result(
    m: int, n: int, y0: int = 0, include_endpoints: bool = False
) -> CorridorResult:
    """Bundle a corridor count with its query, optionally with the
    per-endpoint breakdown."""
    query = CorridorQuery(m, n, y0)
    endpoints = endpoint_counts(m, n, y0) if include_endpoints else None
    return CorridorResult(query, corridor_count(m, n, y0), endpoints)


def corridor_count_bruteforce(
    m: int, n: int, y0: int = 0, cap: int = DEFAULT_BINARY_CAP
) -> int:
    """Oracle: count by explicit enumeration of {+1, -1} step sequences."""
    return sum(bruteforce_endpoint_counts(m, n, y0, cap))


def bruteforce_endpoint_counts(
    m: int, n: int, y0: int = 0, cap: int = DEFAULT_BINARY_CAP
) -> tuple[int, ...]:
    """Oracle variant of :func:`endpoint_counts`, by depth-first enumeration."""
    CorridorQuery(m, n, y0)
    if n > cap:
        raise EnumerationCapError(
            f"path length {n} exceeds the enumeration cap {cap} "
            "(2**n step sequences); raise the cap explicitly if intended"
        )
    counts = [0] * (m + 1)

    def walk(height: int, remaining: int) -> None:
        if remaining == 0:
            counts[height] += 1
            return
        if height + 1 <= m:
            walk(height + 1, remaining - 1)
        if height - 1 >= 0:
            walk(height - 1, remaining - 1)

    walk(y0, n)
    return tuple(counts)


def infinite_corridor_count(n: int, y0: int = 0) -> int:
    """Paths of length ``n`` from ``(0, y0)`` in the half-plane ``N x N``.

    For ``m >= n + y0`` the upper wall is unreachable, so the count equals the
    ``m = n + y0`` corridor count, which collapses to a single circular Pascal
    entry.  For ``y0 = 0`` this is the central binomial coefficient
    ``C(n, floor(n/2))``.
    """
    if n < 0:
        raise ValueError(f"path length n must be >= 0, got {n}")
    if y0 < 0:
        raise ValueError(f"start height y0 must be >= 0, got {y0}")
    return sigma_entry_direct(n + y0 + 2, n, (n + y0) // 2, y0)


def motzkin_corridor_count(d: int, n: int, y0: int = 0) -> int:
    """Three-choice (up/stay/down) paths in ``N x {1..d-1}`` from ``(0, y0+1)``.

    Same extremal-diagonal difference as :func:`corridor_count`, but on the
    trinomial-transition array.  Starts other than ``(0, 1)`` (``y0 > 0``) are
    an extension supported by operator iteration only.
    """
    _check_state_params(d, n, y0)
    row = trinomial_row(d, n, y0)
    return row.value_at(n + y0) - row.value_at(n + y0 + d)


def motzkin_sequence(d: int, n_max: int, y0: int = 0) -> list[int]:
    """Three-choice counts for lengths 0..n_max in one pass."""
    _check_state_params(d, n_max, y0)
    seq = trinomial_row(d, 0, y0)
    out = []
    for n in range(n_max + 1):
        out.append(seq.value_at(n + y0) - seq.value_at(n + y0 + d))
        seq = transition(seq, "trinomial")
    return out


def motzkin_bruteforce(
    d: int, n: int, y0: int = 0, cap: int = DEFAULT_TERNARY_CAP
) -> int:
    """Oracle: enumerate {+1, 0, -1} step sequences staying in ``[1, d-1]``."""
    _check_state_params(d, n, y0)
    if n > cap:
        raise EnumerationCapError(
            f"path length {n} exceeds the enumeration cap {cap} "
            "(3**n step sequences); raise the cap explicitly if intended"
        )

    def walk(height: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for step in (1, 0, -1):
            nxt = height + step
            if 1 <= nxt <= d - 1:
                total += walk(nxt, remaining - 1)
        return total

    return walk(y0 + 1, n)
