"""Collatz-style maps on the integers and their loop encodings.

A weak map sends x to floor((m*x - a) / d); spelling out the remainder
gives an equivalent generalized map with one affine branch per residue
class mod d, T(x) = (m_i * x - r_i) / d for x = i (mod d), where
divisibility forces m_i * i = r_i (mod d).  `to_slc` encodes the
positive (or negative) strictly monotone restriction of a weak map as a
constraint loop, which is what ties these maps to the termination
analyzer.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Dict, Optional, Tuple, Union

from .poly2 import HPoly, hpoly


class ReductionPreconditionError(ValueError):
    """The loop encoding needs an expanding map (m > d)."""


@dataclass(frozen=True)
class WeakCollatz:
    """x -> floor((m*x - a) / d) with gcd(|m|, d) = 1, d >= 2, m != 0."""

    d: int
    m: int
    a: int

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("modulus d must be >= 2")
        if self.m == 0:
            raise ValueError("multiplier m must be nonzero")
        if gcd(abs(self.m), self.d) != 1:
            raise ValueError("m must be coprime to d")


@dataclass(frozen=True)
class GenCollatz:
    """Branch map T(x) = (m_i * x - r_i) / d for x = i (mod d)."""

    d: int
    m: Tuple[int, ...]
    r: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.d < 2:
            raise ValueError("modulus d must be >= 2")
        if len(self.m) != self.d or len(self.r) != self.d:
            raise ValueError("need exactly d multipliers and offsets")
        for i, (mi, ri) in enumerate(zip(self.m, self.r)):
            if mi == 0:
                raise ValueError(f"branch {i}: multiplier must be nonzero")
            if gcd(abs(mi), self.d) != 1:
                raise ValueError(f"branch {i}: multiplier must be coprime to d")
            if (mi * i - ri) % self.d != 0:
                raise ValueError(f"branch {i}: m_i*i must equal r_i mod d")


Mapping = Union[WeakCollatz, GenCollatz]


def weak_apply(t: WeakCollatz, x: int) -> int:
    return (t.m * x - t.a) // t.d


def gen_apply(t: GenCollatz, x: int) -> int:
    i = x % t.d
    num = t.m[i] * x - t.r[i]
    assert num % t.d == 0
    return num // t.d


def apply_map(t: Mapping, x: int) -> int:
    if isinstance(t, WeakCollatz):
        return weak_apply(t, x)
    return gen_apply(t, x)


def as_generalized(t: WeakCollatz) -> GenCollatz:
    """The branch form of a weak map: r_i = a + ((m*i - a) mod d)."""
    r = tuple(t.a + ((t.m * i - t.a) % t.d) for i in range(t.d))
    return GenCollatz(t.d, (t.m,) * t.d, r)


# ---------------------------------------------------------------------------
# orbits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitResult:
    outcome: str  # "entered-cycle" | "exceeded-bound" | "exceeded-steps"
    prefix: Tuple[int, ...]
    first_index: Optional[int] = None
    period: Optional[int] = None


@dataclass(frozen=True)
class ReachResult:
    outcome: str  # "reached-target" | "entered-cycle" | "exceeded-bound" | "exceeded-steps"
    prefix: Tuple[int, ...]
    k: Optional[int] = None
    first_index: Optional[int] = None
    period: Optional[int] = None


def orbit(t: Mapping, n: int, max_steps: int, abs_bound: int) -> OrbitResult:
    """Iterate until a repeated value, a bound escape, or step exhaustion.

    The prefix lists every computed value in order; on a repeat it ends
    with the second occurrence.
    """
    values = [n]
    seen = {n: 0}
    if abs(n) > abs_bound:
        return OrbitResult("exceeded-bound", tuple(values))
    for _ in range(max_steps):
        v = apply_map(t, values[-1])
        values.append(v)
        if v in seen:
            first = seen[v]
            return OrbitResult("entered-cycle", tuple(values), first, len(values) - 1 - first)
        seen[v] = len(values) - 1
        if abs(v) > abs_bound:
            return OrbitResult("exceeded-bound", tuple(values))
    return OrbitResult("exceeded-steps", tuple(values))


def reachability_scan(t: WeakCollatz, n: int, max_steps: int, abs_bound: int) -> ReachResult:
    """Search the orbit for k with m * T^k(n) = a (mod d)."""
    values = [n]
    seen = {n: 0}
    if (t.m * n - t.a) % t.d == 0:
        return ReachResult("reached-target", tuple(values), k=0)
    if abs(n) > abs_bound:
        return ReachResult("exceeded-bound", tuple(values))
    for _ in range(max_steps):
        v = weak_apply(t, values[-1])
        values.append(v)
        if (t.m * v - t.a) % t.d == 0:
            return ReachResult("reached-target", tuple(values), k=len(values) - 1)
        if v in seen:
            first = seen[v]
            return ReachResult(
                "entered-cycle", tuple(values), first_index=first, period=len(values) - 1 - first
            )
        seen[v] = len(values) - 1
        if abs(v) > abs_bound:
            return ReachResult("exceeded-bound", tuple(values))
    return ReachResult("exceeded-steps", tuple(values))


def residue_histogram(t: Mapping, n: int, steps: int, alpha: int = 1) -> Dict[int, int]:
    """Counts of T^k(n) mod d**alpha over k = 0 .. steps-1."""
    if alpha < 1:
        raise ValueError("alpha must be >= 1")
    mod = t.d**alpha
    counts: Dict[int, int] = {}
    v = n
    for k in range(steps):
        counts[v % mod] = counts.get(v % mod, 0) + 1
        if k + 1 < steps:
            v = apply_map(t, v)
    return counts


# ---------------------------------------------------------------------------
# loop encoding
# ---------------------------------------------------------------------------


def to_slc(t: WeakCollatz, sign: str = "+") -> HPoly:
    """The strictly increasing positive (or decreasing negative)
    restriction of the weak map as a constraint loop.

    Rows bound d*x' between m*x - a - d + 1 and m*x - a - 1, i.e. x' is
    floor((m*x - a) / d) away from an exact multiple; the sign rows pin
    0 < x < x' (or x' < x < 0).  Needs m > d so the map can expand.
    """
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    if t.m <= t.d:
        raise ReductionPreconditionError("encoding requires m > d")
    m, d, a = t.m, t.d, t.a
    rows = [
        (m, -d, a + d - 1),
        (-m, d, -a - 1),
    ]
    if sign == "+":
        rows += [(-1, 0, -1), (1, -1, -1)]
    else:
        rows += [(1, 0, -1), (-1, 1, -1)]
    return hpoly(rows)
