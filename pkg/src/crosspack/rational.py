"""Exact rational scalars and affine-in-r symbolic arithmetic.

``Rat`` is an arbitrary-precision rational (backed by ``gmpy2.mpq``); every
coordinate, distance and radius in this package is a Rat.  ``AffR``
represents a quantity of the form ``a*r + b`` where ``r`` is the packing
radius left symbolic, so inequalities between lengths can be decided once
for a whole half-open interval of radii instead of at a single radius.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from gmpy2 import mpq

Rat = mpq
RatLike = Union[mpq, int, str]


def rat(value: RatLike, den: int | None = None) -> Rat:
    """Build a Rat from an int, a "p/q" string, or a (num, den) pair."""
    if den is not None:
        return mpq(value, den)
    return mpq(value)


def format_rat(x: Rat) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(mpq(x))


def parse_rat(s: str) -> Rat:
    s = s.strip().replace("−", "-")  # tolerate unicode minus
    return mpq(s)


class Verdict(enum.Enum):
    """Outcome of comparing two affine functions over a radius interval."""

    ALWAYS_LESS = "always_less"
    ALWAYS_LEQ = "always_leq"
    ALWAYS_GREATER = "always_greater"
    ALWAYS_GEQ = "always_geq"
    MIXED = "mixed"


class MixedSignError(ValueError):
    """An affine function changes sign inside the interval.

    Carries the root so the caller can split the interval there.
    """

    def __init__(self, f: "AffR", root: Rat):
        super().__init__(f"{f} changes sign at r={format_rat(root)}")
        self.f = f
        self.root = root


@dataclass(frozen=True)
class AffR:
    """The affine function a*r + b of the radius parameter."""

    a: Rat
    b: Rat

    def __post_init__(self):
        object.__setattr__(self, "a", mpq(self.a))
        object.__setattr__(self, "b", mpq(self.b))

    def __call__(self, r: RatLike) -> Rat:
        return self.a * mpq(r) + self.b

    def __add__(self, other: "AffR") -> "AffR":
        return AffR(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "AffR") -> "AffR":
        return AffR(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "AffR":
        return AffR(-self.a, -self.b)

    def scale(self, c: RatLike) -> "AffR":
        c = mpq(c)
        return AffR(self.a * c, self.b * c)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def root(self) -> Rat:
        """The zero of the function; requires nonzero slope."""
        if self.a == 0:
            raise ZeroDivisionError("constant AffR has no root")
        return -self.b / self.a

    def __str__(self) -> str:
        return f"{format_rat(self.a)}*r+{format_rat(self.b)}"

    @staticmethod
    def const(b: RatLike) -> "AffR":
        return AffR(mpq(0), mpq(b))

    def to_json(self) -> dict:
        return {"a": format_rat(self.a), "b": format_rat(self.b)}

    @staticmethod
    def from_json(obj: dict) -> "AffR":
        return AffR(parse_rat(obj["a"]), parse_rat(obj["b"]))


# 2r, the minimum separation required between packing points.
TWO_R = AffR(mpq(2), mpq(0))


@dataclass(frozen=True)
class RInterval:
    """An interval of radii with individually open/closed endpoints."""

    lo: Rat
    hi: Rat
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", mpq(self.lo))
        object.__setattr__(self, "hi", mpq(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        if self.lo == self.hi and (self.lo_open or self.hi_open):
            raise ValueError("degenerate interval must be closed on both ends")

    def __contains__(self, r: RatLike) -> bool:
        r = mpq(r)
        lo_ok = r > self.lo if self.lo_open else r >= self.lo
        hi_ok = r < self.hi if self.hi_open else r <= self.hi
        return lo_ok and hi_ok

    def is_subinterval_of(self, other: "RInterval") -> bool:
        lo_ok = self.lo > other.lo or (
            self.lo == other.lo and (self.lo_open or not other.lo_open)
        )
        hi_ok = self.hi < other.hi or (
            self.hi == other.hi and (self.hi_open or not other.hi_open)
        )
        return lo_ok and hi_ok

    def midpoint(self) -> Rat:
        return (self.lo + self.hi) / 2

    def sample_radii(self) -> list[Rat]:
        """Endpoints (when closed) plus the midpoint, deduplicated."""
        pts = []
        if not self.lo_open:
            pts.append(self.lo)
        pts.append(self.midpoint())
        if not self.hi_open:
            pts.append(self.hi)
        out: list[Rat] = []
        for p in pts:
            if p not in out:
                out.append(p)
        return out

    def __str__(self) -> str:
        lo_b = "(" if self.lo_open else "["
        hi_b = ")" if self.hi_open else "]"
        return f"{lo_b}{format_rat(self.lo)},{format_rat(self.hi)}{hi_b}"

    @staticmethod
    def parse(s: str) -> "RInterval":
        """Parse "(lo,hi]" / "[lo,hi]" / "(lo,hi)" / "[lo,hi)"."""
        s = s.strip()
        if len(s) < 5 or s[0] not in "([" or s[-1] not in ")]":
            raise ValueError(f"malformed interval: {s!r}")
        body = s[1:-1]
        parts = body.split(",")
        if len(parts) != 2:
            raise ValueError(f"malformed interval: {s!r}")
        lo, hi = parse_rat(parts[0]), parse_rat(parts[1])
        if hi <= lo:
            raise ValueError(f"interval endpoints out of order: {s!r}")
        return RInterval(lo, hi, lo_open=(s[0] == "("), hi_open=(s[-1] == ")"))


def _strictly_negative_on(f: AffR, I: RInterval) -> bool:
    """Exact test for f(r) < 0 on all of I.

    f is affine, so the sign on the interior follows from the endpoint
    values; a zero value at an open endpoint is admissible when the slope
    pushes the function negative just inside the interval.
    """
    vlo, vhi = f(I.lo), f(I.hi)
    if I.lo == I.hi:
        return vlo < 0
    if I.lo_open:
        lo_ok = vlo < 0 or (vlo == 0 and f.a < 0)
    else:
        lo_ok = vlo < 0
    if I.hi_open:
        hi_ok = vhi < 0 or (vhi == 0 and f.a > 0)
    else:
        hi_ok = vhi < 0
    return lo_ok and hi_ok


def _nonpositive_on(f: AffR, I: RInterval) -> bool:
    return f(I.lo) <= 0 and f(I.hi) <= 0


def affr_cmp_interval(f: AffR, g: AffR, I: RInterval) -> Verdict:
    """Compare f and g over the whole interval I.

    Sound and complete for affine functions: ALWAYS_LESS is returned iff
    f(r) < g(r) for every r in I, and so on; MIXED means neither direction
    holds uniformly.
    """
    h = f - g
    if _strictly_negative_on(h, I):
        return Verdict.ALWAYS_LESS
    if _nonpositive_on(h, I):
        return Verdict.ALWAYS_LEQ
    if _strictly_negative_on(-h, I):
        return Verdict.ALWAYS_GREATER
    if _nonpositive_on(-h, I):
        return Verdict.ALWAYS_GEQ
    return Verdict.MIXED


def affr_abs_interval(f: AffR, I: RInterval) -> AffR:
    """Resolve |f| to f or -f on an interval where f has constant sign.

    Raises MixedSignError (carrying the sign-change root) when f takes both
    signs inside I; the caller is expected to split the interval there.
    """
    zero = AffR.const(0)
    v = affr_cmp_interval(f, zero, I)
    if v in (Verdict.ALWAYS_GEQ, Verdict.ALWAYS_GREATER):
        return f
    if v in (Verdict.ALWAYS_LEQ, Verdict.ALWAYS_LESS):
        return -f
    raise MixedSignError(f, f.root())
