"""Bridge-number bounds along the principal path of a regular tunnel."""
from __future__ import annotations

from dataclasses import dataclass

from .corridor import PRIMITIVE, _as_sstring, build_corridor, first_regular_index
from .errors import InvalidInput
from .exactnum import fibonacci


@dataclass(frozen=True)
class IterationResult:
    """Values on tau_{m-2}, tau_{m-1} (the seeds) and on tau_m ... tau_n."""

    m: int
    seeds: tuple[int, int]
    values: tuple[int, ...]

    @property
    def final(self) -> int:
        return self.values[-1]

    @property
    def sequence(self) -> tuple[int, ...]:
        return self.seeds + self.values


def additive_iteration(s, seed_a: int, seed_b: int) -> IterationResult:
    """Assign seeds to tau_{m-2}, tau_{m-1}; each later tau_k gets the sum over its pair."""
    s = _as_sstring(s)
    m = first_regular_index(s)
    if seed_a < 1 or seed_b < 1:
        raise InvalidInput("seeds must be positive")
    g = build_corridor(s)
    value = {m - 2: seed_a, m - 1: seed_b}
    for k in range(m, g.n + 1):
        other = g.carried_at(k)
        assert other != PRIMITIVE
        value[k] = value[k - 1] + value[other]
    return IterationResult(m, (seed_a, seed_b), tuple(value[k] for k in range(m, g.n + 1)))


def lower_bound(s, c2: int, c3: int) -> int:
    """Lower bound for br(K_tau), given the bridge numbers c2, c3 of the knots
    at tau_{m-2} and tau_{m-1}. Only as good as those seeds."""
    return additive_iteration(s, c2, c3).final


def upper_bound(s) -> int:
    m = first_regular_index(s)
    return additive_iteration(s, m, m + 1).final


def cheapest_descent(b2: int, b3: int, j_max: int) -> list[int]:
    """b_2, ..., b_{j_max} with b_{2n} = b_{2n-1} + b_{2n-2}, b_{2n+1} = b_{2n} + b_{2n-2}."""
    if j_max < 2:
        raise InvalidInput(f"j_max must be at least 2, got {j_max}")
    if b2 > b3:
        raise InvalidInput(f"need b2 <= b3, got {b2} > {b3}")
    b = {2: b2, 3: b3}
    for j in range(4, j_max + 1):
        b[j] = b[j - 1] + b[j - 2] if j % 2 == 0 else b[j - 1] + b[j - 3]
    return [b[j] for j in range(2, j_max + 1)]


def _pell_like(d: int, a1: int, a2: int) -> int:
    if d < 1:
        raise InvalidInput(f"depth must be >= 1, got {d}")
    prev, cur = a1, a2
    if d == 1:
        return a1
    for _ in range(d - 2):
        prev, cur = cur, 2 * cur + prev
    return cur


def min_bridge_at_depth(d: int) -> int:
    """Smallest bridge number of a knot with a depth-d tunnel: 2, 4, 10, 24, 58, ..."""
    return _pell_like(d, 2, 4)


def torus_min_bridge_at_depth(d: int) -> int:
    """Same, restricted to torus knots: 2, 5, 12, 29, 70, ..."""
    return _pell_like(d, 2, 5)


def semisimple_upper(m: int) -> int:
    if m < 1:
        raise InvalidInput(f"cabling count must be >= 1, got {m}")
    return m + 1


def fibonacci_upper(n: int, m: int) -> int:
    """m F_{n-m+2} + F_{n-m+1} for n cablings of which the first m give semisimple tunnels."""
    if not n > m >= 2:
        raise InvalidInput(f"need n > m >= 2, got n={n}, m={m}")
    return m * fibonacci(n - m + 2) + fibonacci(n - m + 1)


def max_bridge(n: int) -> int:
    """Largest bridge number reachable with n cablings: F_{n+2}."""
    if n < 1:
        raise InvalidInput(f"cabling count must be >= 1, got {n}")
    return fibonacci(n + 2)
