"""Exact strict-inequality feasibility over the rationals.

The single operation decides whether a finite system of strict linear
inequalities ``a_i . x + c_i > 0`` has a real solution, and produces an exact
rational solution when one exists. It is the decision kernel behind
essential-term extraction for tropical polynomials.

Method: maximize a slack ``delta`` subject to ``a_i . x + c_i >= delta`` and
``delta <= 1``. The system is strictly feasible iff the optimum is positive,
and rational data guarantees a rational optimal point. The LP is solved by
primal simplex with fraction-free (integer) pivoting; a permanent switch to
Bland's rule after a pivot budget guards against cycling. Worst-case simplex
pivoting is exponential; exactness of the verdict is preferred here over the
polynomial-time guarantee an interior-point or ellipsoid method would give.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Hashable, Mapping, Optional, Sequence


@dataclass(frozen=True)
class LinearSystem:
    """Strict inequalities ``coeffs . x + constant > 0`` over shared variables."""

    variables: tuple[Hashable, ...]
    constraints: tuple[tuple[tuple[Fraction, ...], Fraction], ...]

    def __post_init__(self):
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variables")
        for coeffs, _ in self.constraints:
            if len(coeffs) != len(self.variables):
                raise ValueError("constraint dimension does not match variable list")

    @classmethod
    def build(
        cls,
        variables: Sequence[Hashable],
        rows: Sequence[tuple[Mapping[Hashable, Fraction | int], Fraction | int]],
    ) -> "LinearSystem":
        """Assemble from sparse rows ``({var: coeff}, constant)``."""
        variables = tuple(variables)
        pos = {v: i for i, v in enumerate(variables)}
        constraints = []
        for coeff_map, const in rows:
            vec = [Fraction(0)] * len(variables)
            for v, c in coeff_map.items():
                vec[pos[v]] = Fraction(c)
            constraints.append((tuple(vec), Fraction(const)))
        return cls(variables, tuple(constraints))

    def satisfied_by(self, point: Mapping[Hashable, Fraction]) -> bool:
        """Exact check that every strict inequality holds at the point."""
        values = [Fraction(point[v]) for v in self.variables]
        for coeffs, const in self.constraints:
            if sum(c * x for c, x in zip(coeffs, values)) + const <= 0:
                return False
        return True


def strict_feasible(system: LinearSystem) -> Optional[dict[Hashable, Fraction]]:
    """A rational point satisfying every strict inequality, or None if none exists.

    Total: never raises on well-formed systems. The empty system is feasible
    (returns the all-zero point).
    """
    k = len(system.variables)
    m = len(system.constraints)
    zero_point = {v: Fraction(0) for v in system.variables}
    if m == 0:
        return zero_point

    # Clear denominators row by row; positive rescaling preserves the verdict.
    rows_int: list[tuple[list[int], int]] = []
    for coeffs, const in system.constraints:
        scale = lcm(*(f.denominator for f in coeffs), const.denominator)
        rows_int.append(([int(f * scale) for f in coeffs], int(const * scale)))

    if k == 0:
        return zero_point if all(c > 0 for _, c in rows_int) else None

    consts = [c for _, c in rows_int]
    delta0 = min(min(consts), 1)

    # Columns: delta_hat, x+ (k), x- (k), slacks (m+1), rhs.
    nstruct = 1 + 2 * k
    ncols = nstruct + (m + 1) + 1
    rhs_col = ncols - 1
    tableau: list[list[int]] = []
    for i, (a, c) in enumerate(rows_int):
        row = [0] * ncols
        row[0] = 1
        for j, aj in enumerate(a):
            row[1 + j] = -aj
            row[1 + k + j] = aj
        row[nstruct + i] = 1
        row[rhs_col] = c - delta0
        tableau.append(row)
    bound_row = [0] * ncols
    bound_row[0] = 1
    bound_row[nstruct + m] = 1
    bound_row[rhs_col] = 1 - delta0
    tableau.append(bound_row)

    profit = [0] * ncols
    profit[0] = 1  # maximize delta_hat

    basis = [nstruct + i for i in range(m + 1)]
    det = 1
    pivots = 0
    bland_after = 100 + 20 * (m + k)

    while True:
        if pivots <= bland_after:
            col = max(range(ncols - 1), key=lambda j: profit[j])
        else:
            col = next((j for j in range(ncols - 1) if profit[j] > 0), 0)
        if profit[col] <= 0:
            break
        # Ratio test: min rhs/entry over positive entries; ties by basis label
        # (Bland's leaving rule), which is what guarantees termination.
        best = None  # (row index, rhs, entry)
        for i, row in enumerate(tableau):
            e = row[col]
            if e <= 0:
                continue
            if best is None:
                best = (i, row[rhs_col], e)
                continue
            lhs, rhs = row[rhs_col] * best[2], best[1] * e
            if lhs < rhs or (lhs == rhs and basis[i] < basis[best[0]]):
                best = (i, row[rhs_col], e)
        if best is None:
            raise AssertionError("slack LP cannot be unbounded: delta is capped at 1")
        r = best[0]
        pivot_row = tableau[r]
        p = pivot_row[col]
        for i in range(len(tableau)):
            if i == r:
                continue
            row = tableau[i]
            f = row[col]
            if f:
                tableau[i] = [(p * a - f * b) // det for a, b in zip(row, pivot_row)]
            elif p != det:
                tableau[i] = [(p * a) // det for a in row]
        f = profit[col]
        if f:
            profit = [(p * a - f * b) // det for a, b in zip(profit, pivot_row)]
        elif p != det:
            profit = [(p * a) // det for a in profit]
        basis[r] = col
        det = p
        pivots += 1

    objective = Fraction(-profit[rhs_col], det)  # optimal delta_hat
    if delta0 + objective <= 0:
        return None

    values = [Fraction(0)] * nstruct
    for i, b in enumerate(basis):
        if b < nstruct:
            values[b] = Fraction(tableau[i][rhs_col], det)
    point = {
        v: values[1 + j] - values[1 + k + j] for j, v in enumerate(system.variables)
    }
    # Per-constraint exactness check on the integer-scaled rows.
    xs = [point[v] for v in system.variables]
    for a, c in rows_int:
        if sum(ai * xi for ai, xi in zip(a, xs)) + c <= 0:
            raise AssertionError("simplex returned a point violating a constraint")
    return point
