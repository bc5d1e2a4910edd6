"""Cabling sequence of the short tunnel of a (p, q) torus knot.

Matrices are M(K_rho, K_lambda): the rows are the (p, q) coordinates of the
two knots of the principal pair. A ``U`` step replaces the rho row by the row
sum, an ``L`` step replaces the lambda row.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .corridor import SString, TunnelClass, classify, depth
from .errors import InvalidInput, NotCoprimeError, TrivialKnotError
from .exactnum import L, Mat2, SimpleSlope, U, cf_expand, simple_slope

_LETTER = {"U": U, "L": L}


@dataclass(frozen=True)
class NormalizedTorus:
    p: int
    q: int
    mirrored: bool = False

    @property
    def is_trivial(self) -> bool:
        return self.q <= 1


def normalize(p: int, q: int) -> NormalizedTorus:
    if p == 0 or q == 0:
        raise InvalidInput(f"torus parameters must be nonzero, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"gcd({p}, {q}) = {gcd(p, q)}: that is a torus link, not a knot")
    mirrored = (p < 0) != (q < 0)
    a, b = sorted((abs(p), abs(q)), reverse=True)
    return NormalizedTorus(a, b, mirrored)


def _as_normalized(nt) -> NormalizedTorus:
    if isinstance(nt, NormalizedTorus):
        return nt
    return normalize(*nt)


def letter_word(cf) -> str:
    """Chronological nontrivial cablings: U^{n_2} L^{n_3} U^{n_4} ... with the last run shortened by one."""
    cf = tuple(cf)
    if len(cf) < 2:
        raise TrivialKnotError("a one-term continued fraction describes the trivial knot")
    runs = [n for n in cf[1:]]
    runs[-1] -= 1
    return "".join(("U" if i % 2 == 0 else "L") * n for i, n in enumerate(runs))


@dataclass(frozen=True)
class CablingStep:
    letter: str
    matrix: Mat2
    slope: int
    stage_knot: tuple[int, int]


@dataclass(frozen=True)
class CablingTrace:
    """``steps[0]`` is the simple cabling; its slope is the denominator of m0."""

    knot: NormalizedTorus
    cf: tuple[int, ...]
    letters: str
    m0: SimpleSlope
    steps: tuple[CablingStep, ...]

    @property
    def slopes(self) -> list[int]:
        return [st.slope for st in self.steps[1:]]

    @property
    def s_string(self) -> SString:
        return _sstring_from_letters(self.letters)

    def slope_line(self) -> str:
        return ", ".join([str(self.m0)] + [str(m) for m in self.slopes])


def cabling_trace(nt) -> CablingTrace:
    nt = _as_normalized(nt)
    if nt.is_trivial:
        raise TrivialKnotError(f"({nt.p}, {nt.q}) is the trivial knot: no nontrivial cablings")
    cf = cf_expand(nt.p, nt.q)
    letters = letter_word(cf)
    sign = -1 if nt.mirrored else 1
    matrix = Mat2(1, 0, cf[0], 1)
    steps = []
    for letter in letters:
        matrix = _LETTER[letter] @ matrix
        steps.append(CablingStep(letter, matrix, sign * matrix.permanent, matrix.row_sum))
    m0 = simple_slope(sign, 2 * cf[0] + 1)
    return CablingTrace(nt, cf, letters, m0, tuple(steps))


def _sstring_from_letters(letters: str) -> SString:
    # s_i compares the disks retained by cablings i and i+1 (letters are
    # 1-indexed); equal letters retain the same slot's disk.
    return SString("".join("0" if letters[i - 1] == letters[i] else "1"
                           for i in range(2, len(letters))))


def s_string(nt) -> SString:
    return cabling_trace(nt).s_string


def torus_depth(nt) -> int:
    nt = _as_normalized(nt)
    if nt.is_trivial:
        return 0
    return depth(s_string(nt))


def torus_classify(p: int, q: int) -> TunnelClass:
    """Class of the short tunnel, read off from p mod q."""
    nt = normalize(p, q)
    p, q = nt.p, nt.q
    if q <= 1:
        return TunnelClass.TRIVIAL
    if q == 2:
        return TunnelClass.SIMPLE
    if p % q in (1, q - 1):
        return TunnelClass.SEMISIMPLE
    return TunnelClass.REGULAR


def torus_classify_from_trace(nt) -> TunnelClass:
    nt = _as_normalized(nt)
    if nt.is_trivial:
        return TunnelClass.TRIVIAL
    tr = cabling_trace(nt)
    return classify(tr.s_string, len(tr.letters))


def torus_bridge_number(nt) -> int:
    return _as_normalized(nt).q
