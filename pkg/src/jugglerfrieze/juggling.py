"""Juggling functions: the periodic bijections that shape a frieze.

A juggling function of period n is a bijection pi: Z -> Z such that
i <= pi(i) <= i + n and pi(i + n) = pi(i) + n for every i.  Think of a
juggler throwing at each moment i the ball that will land at moment
pi(i); pi(i) = i means no ball is touched at that moment (a "loop"),
pi(i) = i + n is a maximal throw (a "coloop").

A pattern is written in siteswap notation, the list of throw heights
(pi(1)-1, ..., pi(n)-n).  The period n is always part of the data: the
same throw list with a repeated block is a different juggling function.
"""
from __future__ import annotations

from typing import Iterable


class SiteswapError(ValueError):
    """A throw list or pattern string that defines no juggling function."""


def residue(a: int, n: int) -> int:
    """The representative of a modulo n lying in [1, n].

    >>> [residue(a, 5) for a in (1, 5, 6, 0, -4)]
    [1, 5, 1, 5, 1]
    """
    return (a - 1) % n + 1


class JugglingFunction:
    """An n-periodic bijection of Z, stored by its values on [1, n]."""

    __slots__ = ("period", "values", "_inverse")

    def __init__(self, values: Iterable[int]):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if n == 0:
            raise SiteswapError("empty pattern")
        for i, v in enumerate(vals, start=1):
            if not i <= v <= i + n:
                raise SiteswapError(
                    f"throw at position {i} has height {v - i}, outside [0, {n}]")
        if sorted(residue(v, n) for v in vals) != list(range(1, n + 1)):
            raise SiteswapError("landing times collide modulo the period")
        inverse = [0] * n
        for i, v in enumerate(vals, start=1):
            r = residue(v, n)
            inverse[r - 1] = i - (v - r)
        self.period = n
        self.values = vals
        self._inverse = tuple(inverse)

    @classmethod
    def uniform(cls, period: int, balls: int) -> "JugglingFunction":
        """The constant-throw function a -> a + balls of the given period."""
        if not 0 <= balls <= period:
            raise SiteswapError("ball count must lie in [0, period]")
        return cls(i + balls for i in range(1, period + 1))

    def __call__(self, a: int) -> int:
        i = residue(a, self.period)
        return self.values[i - 1] + (a - i)

    def inverse(self, b: int) -> int:
        r = residue(b, self.period)
        return self._inverse[r - 1] + (b - r)

    @property
    def throws(self) -> tuple[int, ...]:
        return tuple(v - i for i, v in enumerate(self.values, start=1))

    @property
    def balls(self) -> int:
        return sum(self.throws) // self.period

    def dual(self) -> "JugglingFunction":
        """The dual function a -> pi^{-1}(a) + n.

        >>> format_siteswap(parse_siteswap("53635514").dual())
        '23345357'
        """
        n = self.period
        return JugglingFunction(self.inverse(a) + n for a in range(1, n + 1))

    def s_set(self, a: int, b: int) -> tuple[int, ...]:
        """Sorted set of moments i with a < i whose ball lands before b."""
        return tuple(i for i in range(a + 1, b) if self(i) < b)

    def landing_schedule(self, a: int) -> tuple[int, ...]:
        """Landing times of the balls in the air just before moment a.

        >>> parse_siteswap("23345357").landing_schedule(1)
        (1, 2, 4, 7)
        """
        return tuple(b for b in range(a, a + self.period) if self.inverse(b) < a)

    def necklace(self) -> tuple[tuple[int, ...], ...]:
        """Residues of the landing schedules at 1..n, each sorted."""
        n = self.period
        return tuple(
            tuple(sorted(residue(b, n) for b in self.landing_schedule(a)))
            for a in range(1, n + 1))

    def loops(self) -> tuple[int, ...]:
        return tuple(a for a in range(1, self.period + 1) if self(a) == a)

    def coloops(self) -> tuple[int, ...]:
        return tuple(a for a in range(1, self.period + 1)
                     if self(a) == a + self.period)

    def is_uniform(self) -> bool:
        return len(set(self.throws)) == 1

    def classify(self) -> dict:
        return {"loops": set(self.loops()), "coloops": set(self.coloops()),
                "uniform": self.is_uniform()}

    def __eq__(self, other) -> bool:
        return (isinstance(other, JugglingFunction)
                and self.values == other.values)

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"JugglingFunction({list(self.values)!r})"

    def to_json(self) -> dict:
        return {"period": self.period, "throws": list(self.throws)}

    @classmethod
    def from_json(cls, obj: dict) -> "JugglingFunction":
        throws = [int(t) for t in obj["throws"]]
        if int(obj["period"]) != len(throws):
            raise SiteswapError("period does not match the number of throws")
        return cls(i + t for i, t in enumerate(throws, start=1))


def parse_siteswap(text: str) -> JugglingFunction:
    """Parse a siteswap pattern.

    A contiguous digit string means one throw per digit; throws above 9
    need the comma-separated form.

    >>> parse_siteswap("53635514").values
    (6, 5, 9, 7, 10, 11, 8, 12)
    >>> parse_siteswap("3, 3, 0").throws
    (3, 3, 0)
    """
    text = text.strip()
    if not text:
        raise SiteswapError("empty pattern")
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        try:
            throws = [int(p) for p in parts]
        except ValueError:
            raise SiteswapError(f"bad throw list {text!r}") from None
    elif text.isdigit():
        throws = [int(ch) for ch in text]
    else:
        raise SiteswapError(f"bad pattern {text!r}")
    if any(t < 0 for t in throws):
        raise SiteswapError("negative throw height")
    return JugglingFunction(i + t for i, t in enumerate(throws, start=1))


def format_siteswap(pi: JugglingFunction) -> str:
    """Inverse of parse_siteswap: digits when possible, else commas."""
    throws = pi.throws
    if all(t <= 9 for t in throws):
        return "".join(str(t) for t in throws)
    return ",".join(str(t) for t in throws)
