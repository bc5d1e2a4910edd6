"""Differential self-check: fast vs. breadth-first counts, and torus trace invariants."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .bounds import additive_iteration
from .corridor import build_corridor, depth_profile, first_regular_index
from .giantsteps import count_minimal_fast
from .torus import cabling_trace, normalize, torus_classify


@dataclass
class Check:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, case) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = str(case)


@dataclass
class VerifyReport:
    max_len: int
    max_pq: int
    strings: int = 0
    pairs: int = 0
    checks: dict[str, Check] = field(default_factory=dict)

    def check(self, name: str) -> Check:
        return self.checks.setdefault(name, Check(name))

    @property
    def ok(self) -> bool:
        return all(c.failures == 0 for c in self.checks.values())

    @property
    def mismatches(self) -> int:
        return self.checks["oracle-equivalence"].failures if "oracle-equivalence" in self.checks else 0

    @property
    def violations(self) -> int:
        return sum(c.failures for name, c in self.checks.items() if name.startswith("torus-"))

    def summary(self) -> str:
        return (f"{self.mismatches} mismatches over {self.strings} strings; "
                f"{self.violations} violations over all coprime pairs")


def all_sstrings(max_len: int, min_len: int = 1):
    for n in range(min_len, max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


def coprime_pairs(max_pq: int):
    for p in range(3, max_pq + 1):
        for q in range(2, p):
            if gcd(p, q) == 1:
                yield p, q


def verify(max_len: int, max_pq: int) -> VerifyReport:
    if max_len < 1 or max_pq < 3:
        raise ValueError("need max_len >= 1 and max_pq >= 3")
    rep = VerifyReport(max_len, max_pq)

    equiv = rep.check("oracle-equivalence")
    steps = rep.check("depth-steps")
    for s in all_sstrings(max_len):
        rep.strings += 1
        prof = depth_profile(build_corridor(s))
        equiv.record(count_minimal_fast(s).count == prof.counts[-1], s)
        d = prof.depth
        steps.record(d[0] == 1 and all(b - a in (0, 1) for a, b in zip(d, d[1:])), s)

    unimodular = rep.check("torus-unimodular")
    rowsum = rep.check("torus-row-sum")
    parity = rep.check("torus-odd-slopes")
    count = rep.check("torus-cabling-count")
    classes = rep.check("torus-classification")
    exact = rep.check("torus-additive-exact")
    mirror = rep.check("torus-mirror")
    for p, q in coprime_pairs(max_pq):
        rep.pairs += 1
        tr = cabling_trace(normalize(p, q))
        unimodular.record(all(st.matrix.det == 1 and min(st.matrix.a, st.matrix.b, st.matrix.c, st.matrix.d) >= 0
                              for st in tr.steps), (p, q))
        rowsum.record(tr.steps[-1].stage_knot == (p, q), (p, q))
        parity.record(all(st.slope % 2 == 1 for st in tr.steps), (p, q))
        count.record(len(tr.steps) == -1 + sum(tr.cf[1:]), (p, q))

        s = tr.s_string
        congruent = p % q in (1, q - 1)
        flat = not s.is_regular
        shallow = depth_profile(build_corridor(s)).depth[-1] <= 1
        regular = torus_classify(p, q).value == "regular"
        classes.record(congruent == flat == shallow == (not regular), (p, q))

        if s.is_regular:
            m = first_regular_index(s)
            # tau_j is produced by letter j+1, i.e. steps[j]
            seeds = tr.steps[m - 2].stage_knot[1], tr.steps[m - 1].stage_knot[1]
            exact.record(additive_iteration(s, *seeds).final == q, (p, q))

        mtr = cabling_trace(normalize(p, -q))
        mirror.record(mtr.slopes == [-x for x in tr.slopes] and mtr.m0 == -tr.m0, (p, q))
    return rep
