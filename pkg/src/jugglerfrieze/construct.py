"""From matrices to friezes and back.

A k x n matrix whose landing-schedule minors are all 1 and whose
interval ranks respect the juggling function determines a frieze of
the dual shape, either through one determinant per entry or through
the twist of the matrix.  Both directions of that correspondence live
here, together with positive complements and the inverse twist.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .juggling import JugglingFunction, residue
from .matrices import Matrix, cyclic_submatrix, sign_power
from .frieze import PeriodicFrieze


@dataclass
class UnimodularCertificate:
    """Evidence for (or against) unimodularity of a matrix."""

    kind: str  # "consecutive" for uniform shapes, else "positroid"
    checked_minors: list = field(default_factory=list)
    rank_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (all(d == 1 for _, d in self.checked_minors)
                and not self.rank_violations)

    def bad_minors(self) -> list:
        return [(cols, d) for cols, d in self.checked_minors if d != 1]


def is_consecutively_unimodular(m: Matrix) -> bool:
    """Every k cyclically consecutive columns have determinant 1."""
    k, n = m.nrows, m.ncols
    if k > n:
        raise ValueError("more rows than columns")
    return all(
        cyclic_submatrix(m, range(a, a + k)).det() == 1
        for a in range(1, n + 1))


def is_pi_unimodular(m: Matrix, pi: JugglingFunction) -> UnimodularCertificate:
    """Check the landing-schedule minors and the interval rank bounds."""
    n = pi.period
    k = pi.balls
    if m.nrows != k or m.ncols != n:
        raise ValueError(
            f"matrix is {m.nrows}x{m.ncols}, shape needs {k}x{n}")
    cert = UnimodularCertificate(
        kind="consecutive" if pi.is_uniform() else "positroid")
    for a in range(1, n + 1):
        sched = pi.landing_schedule(a)
        cols = tuple(sorted(residue(b, n) for b in sched))
        cert.checked_minors.append((cols, cyclic_submatrix(m, sched).det()))
    for a in range(1, n + 1):
        sched = set(pi.landing_schedule(a))
        for b in range(a, a + n):
            allowed = len(sched & set(range(a, b + 1)))
            if allowed >= min(k, b - a + 1):
                continue  # bound cannot bind
            r = cyclic_submatrix(m, range(a, b + 1)).rank()
            if r > allowed:
                cert.rank_violations.append(((a, b), r, allowed))
    return cert


def twist(m: Matrix, pi: JugglingFunction) -> Matrix:
    """Column a of the twist pairs to 1 with column a of m and to 0 with
    the other landing-schedule columns; loops give zero columns."""
    n = pi.period
    k = pi.balls
    if m.nrows != k or m.ncols != n:
        raise ValueError("matrix shape does not match the juggling function")
    cols = []
    for a in range(1, n + 1):
        sched = pi.landing_schedule(a)
        sub = cyclic_submatrix(m, sched)
        if sub.det() != 1:
            raise ValueError(f"landing-schedule minor at {a} is not 1")
        if pi(a) == a:
            cols.append([Fraction(0)] * k)
            continue
        order = sorted(residue(b, n) for b in sched)
        rhs = [int(r == residue(a, n)) for r in order]
        cols.append(list(sub.transpose().solve(rhs)))
    return Matrix.from_columns(cols)


def positive_complement(m: Matrix) -> Matrix:
    """An (n-k) x n matrix whose maximal minors equal those of m on
    complementary column sets.

    Built from a kernel basis by negating the odd-numbered columns and
    rescaling one row; the defining identity is then verified on every
    column subset and a failure raises rather than returning silently.
    """
    k, n = m.nrows, m.ncols
    if m.rank() != k:
        raise ValueError("matrix does not have full row rank")
    basis = m.kernel_basis()
    flipped = Matrix([[(-x if j % 2 == 0 else x) for j, x in enumerate(row)]
                      for row in basis.entries], cols=n)
    minors = m.maximal_minors()
    if k == n:
        if minors[tuple(range(1, n + 1))] != 1:
            raise ValueError("square matrix must have determinant 1")
        return flipped
    comp_minors = flipped.maximal_minors()
    full = tuple(range(1, n + 1))
    pivot = next(cols for cols, d in minors.items() if d != 0)
    co_pivot = tuple(j for j in full if j not in pivot)
    comp = flipped.scale_row(0, minors[pivot] / comp_minors[co_pivot])
    comp_minors = comp.maximal_minors()
    for cols, d in minors.items():
        co = tuple(j for j in full if j not in cols)
        if comp_minors[co] != d:
            raise ValueError(
                f"complement identity fails on columns {cols}: "
                f"{comp_minors[co]} != {d}")
    return comp


def frieze_entry(m: Matrix, pi: JugglingFunction, a: int, b: int) -> Fraction:
    """Entry (a, b) of the frieze of m, for arbitrary integers a, b."""
    n = pi.period
    k = pi.balls
    if pi(a) == a:
        if a == b:
            return Fraction(1)
        if a == b + n:
            return Fraction((-1) ** k)
        return Fraction(0)
    if not b <= a < b + n:
        return Fraction(0)
    sched = pi.landing_schedule(a)
    rest = [x for x in sched if x != a]
    if residue(b, n) in {residue(x, n) for x in rest}:
        return Fraction(0)
    sign = (-1) ** len(pi.dual().s_set(b, a))
    return sign * cyclic_submatrix(m, rest + [b]).det()


def _require_unimodular(m: Matrix, pi: JugglingFunction) -> None:
    cert = is_pi_unimodular(m, pi)
    if not cert.ok:
        raise ValueError(
            f"matrix is not unimodular for this juggling function: "
            f"bad minors {cert.bad_minors()}, "
            f"rank violations {cert.rank_violations}")


def build_frieze_det(m: Matrix, pi: JugglingFunction) -> PeriodicFrieze:
    """The frieze of m, one schedule-exchange determinant per entry."""
    _require_unimodular(m, pi)
    n = pi.period
    cols = [[frieze_entry(m, pi, a, b) for a in range(b, b + n + 1)]
            for b in range(1, n + 1)]
    return PeriodicFrieze(pi.dual(), cols)


def build_frieze_twist(m: Matrix, pi: JugglingFunction) -> PeriodicFrieze:
    """The same frieze via the twist: unwrap twist(m)^T m around the
    diagonal, flipping the sign of the wrapped entries when the ball
    count is even; a loop splits its diagonal zero into 1 and (-1)**k."""
    _require_unimodular(m, pi)
    n = pi.period
    k = pi.balls
    product = twist(m, pi).transpose() * m
    wrap_sign = (-1) ** (k - 1)
    cols = []
    for b in range(1, n + 1):
        col = []
        for a in range(b, b + n):
            ra = residue(a, n)
            if pi(ra) == ra:
                col.append(Fraction(int(a == b)))
            else:
                v = product[ra - 1, b - 1]
                col.append(v if ra >= b else wrap_sign * v)
        col.append(Fraction((-1) ** k) if pi(b) == b else Fraction(0))
        cols.append(col)
    return PeriodicFrieze(pi.dual(), cols)


def inverse_twist(m: Matrix, pi: JugglingFunction) -> Matrix:
    """A matrix whose twist has the same maximal minors as m.

    Computed as the positive complement of the twist of the positive
    complement, which inverts the twist on the level of row spans.
    """
    _require_unimodular(m, pi)
    return positive_complement(twist(positive_complement(m), pi.dual()))


def frieze_to_matrix(c: PeriodicFrieze) -> Matrix:
    """Invert the frieze construction.

    Returns the unique (up to unimodular row operations, then pinned by
    a normalization) matrix whose frieze is c.  The kernel of c acting
    on superperiodic sequences is read off from one period of rows, and
    its orthogonal complement is the row space of the answer.
    """
    sigma = c.shape
    pi = sigma.dual()
    n = pi.period
    k = pi.balls
    rows = []
    for a in range(1, n + 1):
        row = [Fraction(0)] * n
        for b in range(a - n, a + 1):
            r = residue(b, n)
            row[r - 1] += c.entry(a, b) * sign_power((k - 1) * ((b - r) // n))
        rows.append(row)
    system = Matrix(rows, cols=n)
    solutions = system.kernel_basis()
    if solutions.nrows != n - k:
        raise ValueError(
            f"solution space has dimension {solutions.nrows}, "
            f"expected {n - k}: not a frieze of this shape")
    candidate = solutions.kernel_basis()
    d = cyclic_submatrix(candidate, pi.landing_schedule(1)).det()
    if d == 0:
        raise ValueError("normalization minor vanishes")
    result = candidate.scale_row(0, 1 / d)
    _require_unimodular(result, pi)
    if build_frieze_det(result, pi) != c:
        raise ValueError("inversion failed to reproduce the frieze")
    return result
