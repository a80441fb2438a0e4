"""AND / OR Kronecker compositions of weighted dynamical graphs.

Given graphs computing f = g + K and f' = g' + K', both constructions
build a graph over the product vertex set (row-major index map, the
composite ancilla at (0,0) -> 0) whose value on product inputs
x'' = x (x) x' satisfies, exactly:

    AND:  g''(x'') = f(x) * f'(x') - K*K'            (shift K'' = K*K')
    OR:   g''(x'') = f + f' - f*f' - (K + K' - K*K') (shift K'' = K + K' - K*K')

so f'' = g'' + K'' is the product (AND) or the inclusion-exclusion sum
(OR) of the factor functions on product inputs.  Both constructions
have closed-form L1 norms that the build cross-checks exactly:

    AND:  (L + |K|) * (L' + |K'|) - |K*K'|
    OR:   |1-K'| * L + |1-K| * L' + L * L'

The closed forms are exact, not just bounds: the three contribution
roles (left edge x right diagonal, left diagonal x right edge, edge x
edge) land on disjoint composite index patterns, so no cancellation can
occur.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    WDG,
    Assignment,
    RationalLike,
    as_rational,
    l1_norm,
    matrix_of,
    wdg_of_matrix,
)
from .errors import SizeBudgetExceededError, WdgError
from .tensor import RationalMatrix, add, identity, kronecker, scale

AND = "and"
OR = "or"

DEFAULT_ENTRY_BUDGET = 1 << 20  # max matrix entries for one composition stage


@dataclass(frozen=True)
class ComposedResult:
    """A composed graph plus its predicted (and verified) L1 norm."""

    wdg: WDG
    shift: Fraction
    predicted_l1: Fraction
    mode: str


def _check_mode(mode: str) -> str:
    if mode not in (AND, OR):
        raise WdgError(f"mode must be '{AND}' or '{OR}', got {mode!r}")
    return mode


def predicted_l1(
    mode: str,
    l1_a: RationalLike,
    k_a: RationalLike,
    l1_b: RationalLike,
    k_b: RationalLike,
) -> Fraction:
    """Closed-form L1 norm of the composition, from factor norms and shifts."""
    la, ka = as_rational(l1_a), as_rational(k_a)
    lb, kb = as_rational(l1_b), as_rational(k_b)
    if _check_mode(mode) == AND:
        return (la + abs(ka)) * (lb + abs(kb)) - abs(ka * kb)
    return abs(1 - kb) * la + abs(1 - ka) * lb + la * lb


def _as_rational_matrix(wdg: WDG) -> RationalMatrix:
    m = matrix_of(wdg)
    return RationalMatrix(rows=m.dimension, cols=m.dimension, entries=m.entries)


def _build(mode: str, matrix: RationalMatrix, shift: Fraction, expected_l1: Fraction) -> ComposedResult:
    # wdg_of_matrix re-validates symmetry and the zero diagonal, which both
    # constructions guarantee; a failure here means the formula was broken.
    wdg = wdg_of_matrix(matrix.entries, shift=shift)
    actual = l1_norm(wdg)
    if actual != expected_l1:
        raise WdgError(
            f"composed L1 {actual} does not match the closed form {expected_l1}"
        )
    return ComposedResult(wdg=wdg, shift=shift, predicted_l1=expected_l1, mode=mode)


def compose_and(d1: WDG, d2: WDG) -> ComposedResult:
    """Product composition: f''(x (x) x') = f(x) * f'(x')."""
    n, m = d1.dimension, d2.dimension
    k1, k2 = d1.shift, d2.shift
    a = add(_as_rational_matrix(d1), scale(identity(n), Fraction(2) * k1 / n))
    b = add(_as_rational_matrix(d2), scale(identity(m), Fraction(2) * k2 / m))
    composed = add(
        scale(kronecker(a, b), Fraction(1, 2)),
        scale(identity(n * m), Fraction(-2) * k1 * k2 / (n * m)),
    )
    expected = predicted_l1(AND, l1_norm(d1), k1, l1_norm(d2), k2)
    return _build(AND, composed, k1 * k2, expected)


def compose_or(d1: WDG, d2: WDG) -> ComposedResult:
    """Inclusion-exclusion composition: f'' = f + f' - f * f' on product inputs."""
    n, m = d1.dimension, d2.dimension
    k1, k2 = d1.shift, d2.shift
    kr1 = scale(identity(n), (1 - k1) / n)
    kr2 = scale(identity(m), (1 - k2) / m)
    mr1 = add(kr1, scale(_as_rational_matrix(d1), Fraction(-1, 2)))
    mr2 = add(kr2, scale(_as_rational_matrix(d2), Fraction(-1, 2)))
    composed = scale(add(kronecker(kr1, kr2), scale(kronecker(mr1, mr2), -1)), 2)
    expected = predicted_l1(OR, l1_norm(d1), k1, l1_norm(d2), k2)
    return _build(OR, composed, k1 + k2 - k1 * k2, expected)


def compose(mode: str, d1: WDG, d2: WDG) -> ComposedResult:
    return compose_and(d1, d2) if _check_mode(mode) == AND else compose_or(d1, d2)


def product_assignment(a: Assignment, b: Assignment) -> Assignment:
    """The composite assignment for the Kronecker product of two inputs.

    Prepends the implicit ancilla +1 to each factor, takes the Kronecker
    product of the full vectors, and drops the composite ancilla again.
    """
    full_a = (1,) + tuple(a)
    full_b = (1,) + tuple(b)
    return tuple(x * y for x in full_a for y in full_b)[1:]


def iterate_compose(
    base: WDG,
    depth: int,
    mode: str,
    entry_budget: int = DEFAULT_ENTRY_BUDGET,
) -> list:
    """Stages D_1 = base, D_{i+1} = compose(D_i, base), up to ``depth``.

    Raises SizeBudgetExceededError before building any stage whose
    matrix would exceed ``entry_budget`` entries.
    """
    _check_mode(mode)
    if depth < 1:
        raise WdgError(f"depth must be >= 1, got {depth}")
    stages = [
        ComposedResult(wdg=base, shift=base.shift, predicted_l1=l1_norm(base), mode=mode)
    ]
    for _ in range(1, depth):
        current = stages[-1].wdg
        next_dim = current.dimension * base.dimension
        if next_dim * next_dim > entry_budget:
            raise SizeBudgetExceededError(
                f"stage matrix would have {next_dim * next_dim} entries "
                f"(budget {entry_budget})"
            )
        stages.append(compose(mode, current, base))
    return stages
