"""Complete sets of orthogonal projectors and their order measure.

The order of a projector family on an n-dimensional space is
max over projectors of min(dim, n - dim): it is large only when some
outcome's subspace is far from both trivial extremes.  The measure
depends on dimensions alone, so dimension profiles are the primary
input; explicit matrices are supported at small scale for exact
validation of the four defining properties.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import as_rational
from .errors import IncompleteCsopError, ShapeMismatchError
from .tensor import RationalMatrix, matrix


@dataclass(frozen=True)
class CsopProfile:
    """Total space dimension plus one subspace dimension per outcome."""

    total_dim: int
    projector_dims: tuple

    def __post_init__(self):
        if self.total_dim < 1:
            raise IncompleteCsopError(f"total_dim must be >= 1, got {self.total_dim}")
        if any(d < 0 for d in self.projector_dims):
            raise IncompleteCsopError("projector dimensions must be non-negative")
        if sum(self.projector_dims) != self.total_dim:
            raise IncompleteCsopError(
                f"projector dimensions {self.projector_dims} sum to "
                f"{sum(self.projector_dims)}, not {self.total_dim}"
            )


@dataclass(frozen=True)
class CsopMatrices:
    """An explicit projector family over exact rationals."""

    total_dim: int
    projectors: tuple  # of RationalMatrix


def csop_matrices(grids: Sequence) -> CsopMatrices:
    """Build a CsopMatrices from raw grids, checking shapes only."""
    mats = tuple(m if isinstance(m, RationalMatrix) else matrix(m) for m in grids)
    if not mats:
        raise ShapeMismatchError("need at least one projector")
    n = mats[0].rows
    for m in mats:
        if m.rows != m.cols or m.rows != n:
            raise ShapeMismatchError("projectors must be square matrices of equal size")
    return CsopMatrices(total_dim=n, projectors=mats)


def _matmul(a: RationalMatrix, b: RationalMatrix) -> list:
    n = a.rows
    return [
        [sum((a.entries[i][k] * b.entries[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]


def validate_csop(p: CsopMatrices) -> bool:
    """Exact check of idempotence, self-adjointness, pairwise orthogonality,
    and completeness (sum equals the identity)."""
    mats = p.projectors
    n = p.total_dim
    for m in mats:
        if m.rows != m.cols or m.rows != n:
            raise ShapeMismatchError("projectors must be square matrices of equal size")
    for m in mats:
        for i in range(n):
            for j in range(n):
                if m.entries[i][j] != m.entries[j][i]:
                    return False
        if _matmul(m, m) != [list(row) for row in m.entries]:
            return False
    for a in range(len(mats)):
        for b in range(a + 1, len(mats)):
            prod = _matmul(mats[a], mats[b])
            if any(x != 0 for row in prod for x in row):
                return False
    total = [[Fraction(0)] * n for _ in range(n)]
    for m in mats:
        for i in range(n):
            for j in range(n):
                total[i][j] += m.entries[i][j]
    for i in range(n):
        for j in range(n):
            if total[i][j] != (1 if i == j else 0):
                return False
    return True


def _rank(m: RationalMatrix) -> int:
    """Exact rank by Gaussian elimination over Fractions."""
    grid = [list(row) for row in m.entries]
    rank = 0
    rows, cols = m.rows, m.cols
    for col in range(cols):
        pivot = next((r for r in range(rank, rows) if grid[r][col] != 0), None)
        if pivot is None:
            continue
        grid[rank], grid[pivot] = grid[pivot], grid[rank]
        inv = grid[rank][col]
        for r in range(rank + 1, rows):
            if grid[r][col] != 0:
                factor = grid[r][col] / inv
                grid[r] = [x - factor * y for x, y in zip(grid[r], grid[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def profile_of(p: CsopMatrices) -> CsopProfile:
    """Dimension profile of an explicit family, via exact ranks."""
    return CsopProfile(
        total_dim=p.total_dim,
        projector_dims=tuple(_rank(m) for m in p.projectors),
    )


def csop_order(profile: CsopProfile) -> int:
    """max over outcomes of min(dim, n - dim)."""
    n = profile.total_dim
    return max(min(d, n - d) for d in profile.projector_dims)


@dataclass(frozen=True)
class OrderTrendReport:
    """Per-profile order data for a sequence of growing instances.

    ``bounded`` flags whether every order stayed within ``factor`` times
    the first profile's order.  Advisory only: boundedness of an infinite
    sequence is not decidable from finitely many samples.
    """

    orders: tuple
    per_outcome: tuple  # per profile: tuple of min(dim, n - dim) per outcome
    bounded: bool
    factor: Fraction


def order_trend(profiles: Sequence[CsopProfile], factor=2) -> OrderTrendReport:
    if not profiles:
        raise IncompleteCsopError("need at least one profile")
    factor = as_rational(factor)
    orders = tuple(csop_order(p) for p in profiles)
    per_outcome = tuple(
        tuple(min(d, p.total_dim - d) for d in p.projector_dims) for p in profiles
    )
    ceiling = orders[0] * factor
    return OrderTrendReport(
        orders=orders,
        per_outcome=per_outcome,
        bounded=all(o <= ceiling for o in orders),
        factor=factor,
    )
