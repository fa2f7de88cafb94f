"""Periodic friezes shaped by a juggling function, and their checks.

A frieze of shape pi is stored as one fundamental domain: for each
column b in [1, n] the entries C[a, b] with a in [b, b+n].  The entry
accessor reduces arbitrary integer positions into this window, so the
stored object behaves like the full doubly infinite unitriangular
array with C[a+n, b+n] = C[a, b].
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .juggling import JugglingFunction
from .matrices import Matrix, as_rational, rational_to_json


class PeriodicFrieze:
    """One fundamental domain of a frieze with a given juggling shape."""

    __slots__ = ("shape", "columns")

    def __init__(self, shape: JugglingFunction, columns: Iterable[Iterable]):
        n = shape.period
        cols = tuple(tuple(as_rational(x) for x in col) for col in columns)
        if len(cols) != n or any(len(col) != n + 1 for col in cols):
            raise ValueError(f"need {n} columns of {n + 1} entries each")
        self.shape = shape
        self.columns = cols

    def entry(self, a: int, b: int) -> Fraction:
        n = self.shape.period
        shift = (b - 1) // n
        a -= shift * n
        b -= shift * n
        d = a - b
        if d < 0 or d > n:
            return Fraction(0)
        return self.columns[b - 1][d]

    def minor(self, rows: Sequence[int], cols: Sequence[int]) -> Fraction:
        return Matrix([[self.entry(a, b) for b in cols] for a in rows],
                      cols=len(cols)).det()

    def translate(self, s: int) -> "PeriodicFrieze":
        """The frieze (a, b) -> C[a+s, b+s], with the shape shifted to
        match (uniform shapes are unchanged)."""
        n = self.shape.period
        shifted = JugglingFunction(
            self.shape(b + s) - s for b in range(1, n + 1))
        cols = [[self.entry(b + d + s, b + s) for d in range(n + 1)]
                for b in range(1, n + 1)]
        return PeriodicFrieze(shifted, cols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PeriodicFrieze)
                and self.shape == other.shape
                and self.columns == other.columns)

    def __hash__(self) -> int:
        return hash((self.shape, self.columns))

    def __repr__(self) -> str:
        return (f"PeriodicFrieze(shape={list(self.shape.values)!r}, "
                f"columns={self.columns!r})")

    def to_json(self) -> dict:
        return {
            "siteswap": list(self.shape.throws),
            "columns": {
                str(b): [rational_to_json(x) for x in self.columns[b - 1]]
                for b in range(1, self.shape.period + 1)
            },
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PeriodicFrieze":
        throws = [int(t) for t in obj["siteswap"]]
        shape = JugglingFunction(i + t for i, t in enumerate(throws, start=1))
        n = shape.period
        try:
            cols = [obj["columns"][str(b)] for b in range(1, n + 1)]
        except KeyError as missing:
            raise ValueError(f"missing column {missing}") from None
        return cls(shape, cols)


@dataclass
class FriezeReport:
    """Pass/fail evidence from the determinant checks of a frieze."""

    prefrieze_ok: bool
    frieze_failures: list = field(default_factory=list)
    tame_failures: list = field(default_factory=list)
    checked_pairs: int = 0

    @property
    def ok(self) -> bool:
        return (self.prefrieze_ok and not self.frieze_failures
                and not self.tame_failures)

    def to_json(self) -> dict:
        return {
            "prefrieze_ok": self.prefrieze_ok,
            "is_frieze": self.ok,
            "checked_pairs": self.checked_pairs,
            "frieze_failures": [
                {"a": a, "b": b, "det": rational_to_json(d)}
                for a, b, d in self.frieze_failures],
            "tame_failures": [
                {"a": a, "b": b, "det": rational_to_json(d)}
                for a, b, d in self.tame_failures],
        }


def boundary_sign(pi: JugglingFunction, b: int) -> int:
    """Sign forced at the boundary position (pi(b), b)."""
    return (-1) ** len(pi.s_set(b, pi(b)))


def is_prefrieze(c: PeriodicFrieze) -> bool:
    """Diagonal of 1s, signed boundary along pi, zeros outside the cone."""
    pi = c.shape
    n = pi.period
    for b in range(1, n + 1):
        for a in range(b, b + n + 1):
            x = c.entry(a, b)
            if a == b:
                if x != 1:
                    return False
            elif a == pi(b):
                if x != boundary_sign(pi, b):
                    return False
            elif a > pi(b) or pi.inverse(a) > b:
                if x != 0:
                    return False
    return True


def frieze_minor(c: PeriodicFrieze, a: int, b: int) -> Fraction:
    """The unit-determinant condition attached to the interval [a, b]."""
    dual = c.shape.dual()
    i_set = set(dual.s_set(a - 1, b + 1))
    i_img = {dual(i) for i in i_set}
    rows = [x for x in range(a, b + 1) if x not in i_set]
    cols = [x for x in range(a, b + 1) if x not in i_img]
    return c.minor(rows, cols)


def tameness_minor(c: PeriodicFrieze, a: int, b: int) -> Fraction:
    """The vanishing condition attached to the interval [a, b]."""
    dual = c.shape.dual()
    j_set = set(dual.s_set(a, b))
    j_img = {dual(j) for j in j_set}
    rows = [x for x in range(a + 1, b + 1) if x not in j_set]
    cols = [x for x in range(a, b) if x not in j_img]
    return c.minor(rows, cols)


def is_tameness_pair(pi: JugglingFunction, a: int, b: int) -> bool:
    """Whether the interval [a, b] carries a vanishing condition.

    The two strict inequalities cannot be merged or weakened; intervals
    failing both are exempt even when their minor is nonzero.
    """
    dual = pi.dual()
    return (dual(a) < b < a + pi.period) or (b < a + pi.period < pi(b))


def check_frieze(c: PeriodicFrieze) -> FriezeReport:
    """Evaluate every determinant condition over one period.

    The unit conditions are checked for the full redundant family
    a <= b < a+n; the vanishing conditions only for intervals that
    actually carry one.
    """
    pi = c.shape
    n = pi.period
    report = FriezeReport(prefrieze_ok=is_prefrieze(c))
    for a in range(1, n + 1):
        for b in range(a, a + n):
            det = frieze_minor(c, a, b)
            report.checked_pairs += 1
            if det != 1:
                report.frieze_failures.append((a, b, det))
        for b in range(a + 1, a + n):
            if not is_tameness_pair(pi, a, b):
                continue
            det = tameness_minor(c, a, b)
            report.checked_pairs += 1
            if det != 0:
                report.tame_failures.append((a, b, det))
    return report


def is_frieze(c: PeriodicFrieze) -> bool:
    return is_prefrieze(c) and check_frieze(c).ok


def dual_frieze(c: PeriodicFrieze) -> PeriodicFrieze:
    """The dual array of near-diagonal minors; an involution on friezes.

    Entry (a, b) of the dual is the minor of c on rows [b+1, a] and
    columns [b, a-1].  A loop of the shape contributes the extra slot
    value (-1)**balls at (b+n, b), which the minors cannot see.
    """
    pi = c.shape
    n = pi.period
    k = pi.balls
    loop_slot = Fraction((-1) ** k)
    cols = []
    for b in range(1, n + 1):
        col = [c.minor(range(b + 1, a + 1), range(b, a))
               for a in range(b, b + n)]
        col.append(loop_slot if pi(b) == b else Fraction(0))
        cols.append(col)
    return PeriodicFrieze(pi.dual(), cols)


def is_sl_frieze(c: PeriodicFrieze, k: int, h: int) -> bool:
    """Classical frieze test: uniform shape with h balls and period h+k."""
    pi = c.shape
    if not pi.is_uniform():
        raise ValueError("frieze shape is not uniform")
    if pi.balls != h or pi.period != h + k:
        raise ValueError(
            f"shape has {pi.balls} balls and period {pi.period}, "
            f"expected {h} and {h + k}")
    return is_frieze(c)


def is_positive(c: PeriodicFrieze) -> bool:
    """Entries not forced to vanish are positive after the sign twist."""
    pi = c.shape
    for b in range(1, pi.period + 1):
        for a in range(b, pi(b) + 1):
            if pi.inverse(a) >= b and a != b:
                continue
            if (-1) ** len(pi.s_set(b, a)) * c.entry(a, b) <= 0:
                return False
    return True


def frieze_from_quiddity(quiddity: Sequence[int]) -> PeriodicFrieze:
    """Build the classical frieze of height n-2 whose second row is the
    given n-periodic quiddity sequence; raises if the diamond rule does
    not close up with positive integers."""
    n = len(quiddity)
    if n < 3:
        raise ValueError("quiddity needs period at least 3")
    rows = _propagate_quiddity([int(q) for q in quiddity], n - 2)
    if rows is None:
        raise ValueError("quiddity row does not generate an integral frieze")
    return _strip_to_frieze(rows, n)


def _propagate_quiddity(quiddity: list[int], h: int) -> list[list[int]] | None:
    """Rows 0..h of the strip, or None when a diamond fails."""
    n = len(quiddity)
    rows = [[1] * n, list(quiddity)]
    if h == 1:
        return rows[:2] if all(q == 1 for q in quiddity) else None
    for d in range(2, h + 1):
        prev, prev2 = rows[d - 1], rows[d - 2]
        row = []
        for b in range(n):
            num = prev[b] * prev[(b + 1) % n] - 1
            den = prev2[(b + 1) % n]
            if num % den:
                return None
            v = num // den
            if d < h and v < 1:
                return None
            if d == h and v != 1:
                return None
            row.append(v)
        rows.append(row)
    return rows


def _strip_to_frieze(rows: list[list[int]], n: int) -> PeriodicFrieze:
    h = len(rows) - 1
    shape = JugglingFunction.uniform(n, h)
    cols = [[rows[d][b] for d in range(h + 1)] + [0] * (n - h)
            for b in range(n)]
    return PeriodicFrieze(shape, cols)


def enumerate_sl2_positive(height: int, entry_bound: int) -> list[PeriodicFrieze]:
    """All positive integral friezes of the given height whose diamonds
    have determinant 1, with second-row entries bounded by entry_bound.

    Entrywise-distinct translates are counted as distinct friezes.
    """
    if height < 1:
        raise ValueError("height must be at least 1")
    if entry_bound < 1:
        raise ValueError("entry bound must be at least 1")
    n = height + 2
    found = []

    def partial_ok(prefix: list[int]) -> bool:
        j = len(prefix)
        rows = [[1] * j, prefix]
        for d in range(2, height + 1):
            width = j - d + 1
            if width <= 0:
                break
            prev, prev2 = rows[d - 1], rows[d - 2]
            row = []
            for b in range(width):
                num = prev[b] * prev[b + 1] - 1
                den = prev2[b + 1]
                if num % den:
                    return False
                v = num // den
                if v < 1 and d < height:
                    return False
                if d == height and v != 1:
                    return False
                row.append(v)
            rows.append(row)
        return True

    def extend(prefix: list[int]) -> None:
        if len(prefix) == n:
            rows = _propagate_quiddity(prefix, height)
            if rows is not None:
                f = _strip_to_frieze(rows, n)
                if is_frieze(f):
                    found.append(f)
            return
        for v in range(1, entry_bound + 1):
            prefix.append(v)
            if partial_ok(prefix):
                extend(prefix)
            prefix.pop()

    extend([])
    return found
