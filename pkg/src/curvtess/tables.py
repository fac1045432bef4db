"""Vertex patterns with positive or vanishing curvature, derived by enumeration.

A pattern (a_1 <= ... <= a_N) has curvature ``1 - N/2 + sum(1/a_i)``. Positive
patterns come in families whose last entry ``k`` ranges over an interval,
possibly unbounded; zero-curvature patterns are finitely many.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Sequence

from .curvature import format_pattern, format_q, pattern_curvature
from .errors import InvalidArgument

MAX_LENGTH = 6


@dataclass(frozen=True)
class PatternFamily:
    """``fixed`` followed by a parameter k in [lo, hi] (hi None = unbounded).

    Non-parametric families (lo is None) are single patterns. ``constant`` is
    the ``a`` of the curvature form ``a + 1/k``, or the curvature itself for a
    single pattern.
    """

    fixed: tuple
    lo: int | None
    hi: int | None
    constant: Fraction

    @property
    def parametric(self) -> bool:
        return self.lo is not None

    @property
    def length(self) -> int:
        return len(self.fixed) + (1 if self.parametric else 0)

    def sort_key(self):
        return (self.length, self.fixed)

    def contains(self, pattern: Sequence[int]) -> bool:
        p = tuple(pattern)
        if not self.parametric:
            return p == self.fixed
        if len(p) != self.length or p[:-1] != self.fixed:
            return False
        k = p[-1]
        return k >= self.lo and (self.hi is None or k <= self.hi)

    def pattern(self, k: int | None = None) -> tuple:
        if not self.parametric:
            return self.fixed
        self._check_k(k)
        return self.fixed + (k,)

    def _check_k(self, k):
        if k is None or k < self.lo or (self.hi is not None and k > self.hi):
            raise InvalidArgument(f"k={k} outside {self.range_text} for {self.label}")

    @property
    def label(self) -> str:
        if not self.parametric:
            return format_pattern(self.fixed)
        return "(" + ",".join(str(x) for x in self.fixed) + ",k)"

    @property
    def range_text(self) -> str:
        if not self.parametric:
            return ""
        if self.hi is None:
            return f"k≥{self.lo}"
        return f"{self.lo}≤k≤{self.hi}"

    @property
    def form_text(self) -> str:
        a = self.constant
        if not self.parametric:
            return format_q(a)
        if a == 0:
            return "1/k"
        if a > 0:
            return f"{format_q(a)}+1/k"
        return f"1/k-{format_q(-a)}"

    def row(self) -> str:
        if not self.parametric:
            return f"{self.label}\t{self.form_text}"
        return f"{self.label}\t{self.range_text}\t{self.form_text}"

    def as_dict(self) -> dict:
        return {
            "fixed": list(self.fixed),
            "parametric": self.parametric,
            "lo": self.lo,
            "hi": self.hi,
            "curvature": self.form_text,
            "constant": format_q(self.constant),
        }


def family_curvature(family: PatternFamily, k: int | None = None) -> Fraction:
    if not family.parametric:
        return family.constant
    family._check_k(k)
    return family.constant + Fraction(1, k)


def _largest_below(s: Fraction) -> int:
    """Largest integer k with 1/k > s, for s > 0."""
    t = 1 / s
    return t.numerator // t.denominator - (1 if t.denominator == 1 else 0)


@lru_cache(maxsize=None)
def enumerate_families(sign: str = "positive", length: int | None = None) -> tuple[PatternFamily, ...]:
    """All families of positive-curvature patterns, or all zero-curvature patterns.

    Depth-first over nondecreasing prefixes; ``need`` is the amount the
    remaining reciprocals must exceed (positive) or equal (zero).
    """
    if sign not in ("positive", "zero"):
        raise InvalidArgument(f"sign must be 'positive' or 'zero', got {sign!r}")
    out: list[PatternFamily] = []
    lengths = range(3, MAX_LENGTH + 1) if length is None else [length]

    def walk(prefix: tuple, n: int):
        slots = n - len(prefix)
        need = Fraction(n, 2) - 1 - sum(Fraction(1, a) for a in prefix)
        last = prefix[-1] if prefix else 3
        if slots == 1:
            if sign == "positive":
                if need <= 0:
                    out.append(PatternFamily(prefix, last, None, -need))
                else:
                    hi = _largest_below(need)
                    if hi >= last:
                        out.append(PatternFamily(prefix, last, hi, -need))
            elif need > 0 and (1 / need).denominator == 1:
                k = (1 / need).numerator
                if k >= last:
                    out.append(PatternFamily(prefix + (k,), None, None, Fraction(0)))
            return
        # an earlier slot is never unbounded: need > (n-2)/6 > 0 here
        assert need > 0, (prefix, n)
        a = last
        while True:
            bound = Fraction(slots, a)
            if bound < need or (sign == "positive" and bound == need):
                break
            walk(prefix + (a,), n)
            a += 1

    for n in lengths:
        walk((), n)
    out.sort(key=PatternFamily.sort_key)
    return tuple(out)


@lru_cache(maxsize=None)
def _index():
    pos = {f.fixed: f for f in enumerate_families("positive")}
    zero = {f.fixed: f for f in enumerate_families("zero")}
    return pos, zero


def match_pattern(pattern: Sequence[int]) -> PatternFamily | None:
    """The unique family containing ``pattern``; None means negative curvature."""
    p = tuple(sorted(pattern))
    pos, zero = _index()
    if p in zero:
        return zero[p]
    fam = pos.get(p[:-1])
    if fam is not None and fam.contains(p):
        return fam
    return None


def family_sign(family: PatternFamily) -> str:
    return "positive" if family.parametric else "zero"


def render_table(sign: str = "positive", fmt: str = "text") -> str:
    fams = enumerate_families(sign)
    if fmt == "json":
        return json.dumps([f.as_dict() for f in fams], indent=2) + "\n"
    if fmt != "text":
        raise InvalidArgument(f"unknown format {fmt!r}")
    return "".join(f.row() + "\n" for f in fams)


def golden_table(sign: str) -> str:
    name = {"positive": "table1.txt", "zero": "table2.txt"}[sign]
    return resources.files("curvtess").joinpath("data").joinpath(name).read_text(encoding="utf-8")
