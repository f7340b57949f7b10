"""Tropical matrices indexed by finite posets.

A matrix assigns a max-plus scalar to every ordered pair of poset elements,
with finite entries permitted only where the first element is below the
second. Matrices over one poset form a semigroup under the max-plus product;
the n-chain gives the upper triangular matrices.

Everything here is exact and immutable; matrices are dense because index sets
in scope stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .posets import Label, Poset, chain_poset
from .scalars import (
    BOTTOM,
    RationalLike,
    TropScalar,
    parse_scalar,
    render_scalar,
    trop,
    tropical_add,
    tropical_mul,
)


@dataclass(frozen=True)
class TropMatrix:
    """A square max-plus matrix over a poset, with order-respecting support.

    ``rows`` is dense in the poset's element order. Construction rejects a
    finite entry at any pair (i, j) with i not below j.
    """

    poset: Poset
    rows: tuple[tuple[TropScalar, ...], ...]

    def __post_init__(self):
        n = len(self.poset)
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("matrix shape does not match the poset")
        for a, row in zip(self.poset.elements, self.rows):
            for b, entry in zip(self.poset.elements, row):
                if not entry.is_bottom and not self.poset.leq(a, b):
                    raise ValueError(
                        f"finite entry at ({a!r}, {b!r}) but {a!r} is not below {b!r}"
                    )

    @classmethod
    def from_rows(
        cls, poset: Poset, rows: Sequence[Sequence[RationalLike | str | TropScalar | None]]
    ) -> "TropMatrix":
        return cls(poset, tuple(tuple(trop(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, poset: Poset) -> "TropMatrix":
        n = len(poset)
        return cls(
            poset,
            tuple(
                tuple(TropScalar(0) if i == j else BOTTOM for j in range(n))
                for i in range(n)
            ),
        )

    def entry(self, a: Label, b: Label) -> TropScalar:
        return self.rows[self.poset.index(a)][self.poset.index(b)]

    def is_finitary(self) -> bool:
        """Support exactly equal to the order relation (no accidental bottoms)."""
        for a, row in zip(self.poset.elements, self.rows):
            for b, entry in zip(self.poset.elements, row):
                if entry.is_bottom == self.poset.leq(a, b):
                    return False
        return True

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        return mat_mul(self, other)

    def to_json(self) -> list[list[str]]:
        return [[render_scalar(x) for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, poset: Poset, rows: Sequence[Sequence[str | int]]) -> "TropMatrix":
        return cls(poset, tuple(tuple(parse_scalar(str(x)) for x in row) for row in rows))


def mat_mul(m: TropMatrix, n: TropMatrix) -> TropMatrix:
    """Max-plus matrix product; both factors must share one poset."""
    if m.poset != n.poset:
        raise ValueError("matrix index sets differ")
    size = len(m.poset)
    cols = list(zip(*n.rows))
    out = []
    for i in range(size):
        row = m.rows[i]
        out_row = []
        for j in range(size):
            acc = BOTTOM
            col = cols[j]
            for k in range(size):
                acc = tropical_add(acc, tropical_mul(row[k], col[k]))
            out_row.append(acc)
        out.append(tuple(out_row))
    return TropMatrix(m.poset, tuple(out))


def scale_matrix(mu: RationalLike, m: TropMatrix) -> TropMatrix:
    """Add mu to every finite entry (tropical scalar multiple)."""
    mu = Fraction(mu)
    return TropMatrix(
        m.poset,
        tuple(
            tuple(x if x.is_bottom else TropScalar(x.value + mu) for x in row)
            for row in m.rows
        ),
    )


def ut_matrix(rows: Sequence[Sequence[RationalLike | str | TropScalar | None]]) -> TropMatrix:
    """Upper triangular matrix over the n-chain, n taken from the row count."""
    return TropMatrix.from_rows(chain_poset(len(rows)), rows)


def is_idempotent(m: TropMatrix) -> bool:
    return mat_mul(m, m) == m


class IdempotentKind(Enum):
    """Structure of a 2x2 upper triangular idempotent, by diagonal support."""

    NOT_IDEMPOTENT = "not_idempotent"
    ZERO = "zero"                      # every entry bottom
    FULL_DIAGONAL = "full_diagonal"    # both diagonal entries 0
    UPPER_DIAGONAL = "upper_diagonal"  # only the (1,1) entry 0
    LOWER_DIAGONAL = "lower_diagonal"  # only the (2,2) entry 0


@dataclass(frozen=True)
class IdempotentClass:
    kind: IdempotentKind
    parameter: TropScalar | None  # the top-right entry, when idempotent


def classify_idempotent_ut2(m: TropMatrix) -> IdempotentClass:
    """Sort a 2x2 upper triangular matrix into the four idempotent families.

    Diagonal entries of an idempotent must be 0 or bottom; the top-right entry
    is free exactly when some diagonal entry is 0.
    """
    if len(m.poset) != 2 or m.poset.max_chain_length() != 2:
        raise ValueError("classification requires a matrix over the 2-chain")
    zero = TropScalar(0)
    d1, d2, x = m.rows[0][0], m.rows[1][1], m.rows[0][1]
    if d1 == zero and d2 == zero:
        return IdempotentClass(IdempotentKind.FULL_DIAGONAL, x)
    if d1 == zero and d2.is_bottom:
        return IdempotentClass(IdempotentKind.UPPER_DIAGONAL, x)
    if d1.is_bottom and d2 == zero:
        return IdempotentClass(IdempotentKind.LOWER_DIAGONAL, x)
    if d1.is_bottom and d2.is_bottom and x.is_bottom:
        return IdempotentClass(IdempotentKind.ZERO, None)
    return IdempotentClass(IdempotentKind.NOT_IDEMPOTENT, None)


def idempotent_leq(e: TropMatrix, f: TropMatrix) -> bool:
    """Natural partial order on idempotents: e <= f iff e = e*f = f*e."""
    if not is_idempotent(e) or not is_idempotent(f):
        raise ValueError("idempotent order is defined on idempotents only")
    return mat_mul(e, f) == e and mat_mul(f, e) == e


def matrices_from_assignment(
    poset: Poset, assignment: dict[str, Iterable[Iterable[str | int]]]
) -> dict[str, TropMatrix]:
    """Decode a letter -> row-major matrix JSON assignment over one poset."""
    return {s: TropMatrix.from_json(poset, rows) for s, rows in assignment.items()}
