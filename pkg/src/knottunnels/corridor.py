"""The s-string of a tunnel, its corridor graph, and breadth-first depth/path counts.

Tunnels along the principal path are numbered 0..n; ``PRIMITIVE`` stands for
the single vertex to which both primitive disks are identified.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidInput, NotRegularError, SStringError

PRIMITIVE = -1


def vertex_label(v: int) -> str:
    return "P" if v == PRIMITIVE else f"T{v}"


@dataclass(frozen=True)
class SString:
    """Binary parameters s_2 ... s_n; ``bits[0]`` is s_2."""

    bits: str = ""

    def __post_init__(self):
        bad = set(self.bits) - {"0", "1"}
        if bad:
            raise SStringError(f"s-string may contain only 0 and 1, found {''.join(sorted(bad))!r}")

    @property
    def n(self) -> int:
        return len(self.bits) + 1

    def s(self, i: int) -> int:
        """The parameter s_i, for 2 <= i <= n."""
        if not 2 <= i <= self.n:
            raise IndexError(f"s_{i} out of range 2..{self.n}")
        return int(self.bits[i - 2])

    @property
    def is_regular(self) -> bool:
        return "1" in self.bits

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits


def parse_sstring(text: str) -> SString:
    return SString(text.strip())


def _as_sstring(s) -> SString:
    return s if isinstance(s, SString) else SString(s)


@dataclass(frozen=True)
class CorridorGraph:
    """``carried[i-1]`` is the pair member of mu_i other than tau_{i-1}."""

    n: int
    carried: tuple[int, ...]

    def neighbors(self, i: int) -> tuple[int, ...]:
        if i == 0:
            return (PRIMITIVE,)
        return (i - 1, self.carried[i - 1])

    def carried_at(self, i: int) -> int:
        return self.carried[i - 1]


def build_corridor(s) -> CorridorGraph:
    s = _as_sstring(s)
    carried = [PRIMITIVE]
    for i in range(2, s.n + 1):
        carried.append(i - 2 if s.s(i) else carried[-1])
    return CorridorGraph(s.n, tuple(carried))


@dataclass(frozen=True)
class DepthProfile:
    depth: tuple[int, ...]
    counts: tuple[int, ...]


def depth_profile(g: CorridorGraph) -> DepthProfile:
    # Every neighbor of tau_i has a smaller index, so one pass in index order
    # settles distances exactly as a BFS from the primitive vertex would.
    dist = {PRIMITIVE: 0}
    paths = {PRIMITIVE: 1}
    for i in range(g.n + 1):
        nbrs = g.neighbors(i)
        d = min(dist[v] for v in nbrs)
        dist[i] = d + 1
        paths[i] = sum(paths[v] for v in set(nbrs) if dist[v] == d)
    return DepthProfile(
        tuple(dist[i] for i in range(g.n + 1)),
        tuple(paths[i] for i in range(g.n + 1)),
    )


def depth(s) -> int:
    return depth_profile(build_corridor(s)).depth[-1]


def count_minimal_oracle(s) -> int:
    """Number of minimal giant-step sequences, by direct path counting."""
    return depth_profile(build_corridor(s)).counts[-1]


def first_regular_index(s) -> int:
    """Subscript m of the first s_m = 1, i.e. tau_m is the first tunnel of depth 2."""
    s = _as_sstring(s)
    pos = s.bits.find("1")
    if pos < 0:
        raise NotRegularError(f"s-string {s.bits!r} has no 1: tunnel is not regular")
    return pos + 2


class TunnelClass(enum.Enum):
    TRIVIAL = "trivial"
    SIMPLE = "simple"
    SEMISIMPLE = "semisimple"
    REGULAR = "regular"

    def __str__(self) -> str:
        return self.value


def classify(s, cabling_count: int) -> TunnelClass:
    s = _as_sstring(s)
    if cabling_count < 0:
        raise InvalidInput("cabling count must be nonnegative")
    if len(s):
        if cabling_count != s.n + 1:
            raise InvalidInput(
                f"s-string of length {len(s)} needs {s.n + 1} cablings, got {cabling_count}")
    elif cabling_count > 2:
        raise InvalidInput(f"{cabling_count} cablings need an s-string of length {cabling_count - 2}")
    if cabling_count == 0:
        return TunnelClass.TRIVIAL
    if cabling_count == 1:
        return TunnelClass.SIMPLE
    return TunnelClass.REGULAR if s.is_regular else TunnelClass.SEMISIMPLE
