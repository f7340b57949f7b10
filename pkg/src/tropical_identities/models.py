"""Concrete algebraic models and their tropical matrix embeddings.

* the bicyclic monoid (pairs of naturals under the standard normal-form
  product) and its rational extension, with the 2x2 triangular embedding;
* the free monogenic inverse monoid, as integer triples, with its 3x3
  embedding over the poset 1 <= 3, 2 <= 3 (1 and 2 incomparable);
* the per-path divisor construction exhibiting a poset matrix semigroup as a
  morphic image of a product of triangular matrix semigroups.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Mapping, TypeVar

from .matrices import TropMatrix, mat_mul
from .posets import Path, Poset
from .scalars import BOTTOM, RationalLike, TropScalar, render_scalar

T = TypeVar("T")

_CHAIN2 = Poset.chain((1, 2))


# -- bicyclic monoid ---------------------------------------------------------


@dataclass(frozen=True)
class Bicyclic:
    """q^i p^j in the bicyclic monoid, or a point of its rational extension.

    The natural monoid takes i, j nonnegative integers; the same product
    formula on arbitrary rationals gives the extension, and the matrix
    embedding below is faithful on all of it.
    """

    i: Fraction
    j: Fraction

    def __post_init__(self):
        object.__setattr__(self, "i", Fraction(self.i))
        object.__setattr__(self, "j", Fraction(self.j))

    @property
    def is_natural(self) -> bool:
        return (
            self.i.denominator == 1
            and self.j.denominator == 1
            and self.i >= 0
            and self.j >= 0
        )

    def __str__(self) -> str:
        return f"q^{self.i} p^{self.j}"

    def to_json(self) -> dict:
        return {
            "i": render_scalar(TropScalar(self.i)),
            "j": render_scalar(TropScalar(self.j)),
        }


BICYCLIC_ONE = Bicyclic(0, 0)
BICYCLIC_P = Bicyclic(0, 1)
BICYCLIC_Q = Bicyclic(1, 0)


def bicyclic_mul(x: Bicyclic, y: Bicyclic) -> Bicyclic:
    """(a,b)(c,d) = (a - b + max(b,c), d - c + max(b,c))."""
    m = max(x.j, y.i)
    return Bicyclic(x.i - x.j + m, y.j - y.i + m)


def embed_bicyclic_ut2(x: Bicyclic) -> TropMatrix:
    """The faithful 2x2 triangular representation q^i p^j -> [[i-j, i+j], [-inf, j-i]]."""
    return TropMatrix.from_rows(
        _CHAIN2, [[x.i - x.j, x.i + x.j], [None, x.j - x.i]]
    )


# -- free monogenic inverse monoid -------------------------------------------


@dataclass(frozen=True)
class Fmim:
    """A triple (i, j, k) with i, j >= 0 and -j <= k <= i.

    These triples with the max/translate product below realize the free
    inverse monoid on one generator; the idempotents are exactly the k = 0
    triples.
    """

    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0 or not -self.j <= self.k <= self.i:
            raise ValueError(f"invalid triple ({self.i}, {self.j}, {self.k})")

    def __str__(self) -> str:
        return f"({self.i},{self.j},{self.k})"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "k": self.k}


FMIM_ONE = Fmim(0, 0, 0)
FMIM_GENERATOR = Fmim(1, 0, 1)


def fmim_mul(x: Fmim, y: Fmim) -> Fmim:
    """(i,j,k)(i',j',k') = (max(i, i'+k), max(j, j'-k), k+k')."""
    product = Fmim(max(x.i, y.i + x.k), max(x.j, y.j - x.k), x.k + y.k)
    # Closure is a theorem; the constructor just re-checked it.
    return product


def fmim_poset() -> Poset:
    """The three-element index set with 1 <= 3 and 2 <= 3, 1 and 2 incomparable."""
    return Poset.close((1, 2, 3), [(1, 3), (2, 3)])


_FMIM_POSET = fmim_poset()


def embed_fmim_ut3(x: Fmim) -> TropMatrix:
    """The faithful 3x3 representation (i,j,k) -> [[k,-inf,i],[-inf,-k,j],[-inf,-inf,0]].

    The image has full support on the order relation of :func:`fmim_poset`,
    so it lies in the finitary part of that poset's matrix semigroup; reindex
    along 1 < 2 < 3 to view it inside the upper triangular 3x3 matrices.
    """
    return TropMatrix.from_rows(
        _FMIM_POSET,
        [[x.k, None, x.i], [None, -x.k, x.j], [None, None, 0]],
    )


def fmim_idempotent_leq(e: Fmim, f: Fmim) -> bool:
    """Natural partial order on idempotents: e <= f iff e = ef = fe."""
    if e.k != 0 or f.k != 0:
        raise ValueError("idempotent order is defined on idempotents only")
    return fmim_mul(e, f) == e and fmim_mul(f, e) == e


# -- word evaluation ----------------------------------------------------------


def eval_word(w: str, assignment: Mapping[str, T], mul: Callable[[T, T], T]) -> T:
    """Left-to-right fold of the model product over a nonempty word."""
    if not w:
        raise ValueError("cannot evaluate the empty word")
    missing = sorted(set(w) - set(assignment))
    if missing:
        raise ValueError(f"assignment missing letters {missing}")
    acc = assignment[w[0]]
    for ch in w[1:]:
        acc = mul(acc, assignment[ch])
    return acc


# -- divisors: per-path projections ------------------------------------------


@dataclass(frozen=True)
class Divisor:
    """A family of triangular matrices, one per directed path of a poset.

    Componentwise multiplication makes these a direct product of triangular
    matrix semigroups; :func:`divisor_phi` maps products of projections back
    onto the poset matrix semigroup.
    """

    poset: Poset
    parts: Mapping[Path, TropMatrix]

    def __post_init__(self):
        object.__setattr__(self, "parts", MappingProxyType(dict(self.parts)))
        for path in self.parts:
            if not self.poset.is_path(path):
                raise ValueError(f"{path!r} is not a path of the poset")


def _path_chain(path: Path) -> Poset:
    return Poset.chain(path)


def divisor_psi(m: TropMatrix, poset: Poset) -> Divisor:
    """Restrict a matrix to every directed path of its poset."""
    if m.poset != poset:
        raise ValueError("matrix is not indexed by the given poset")
    parts = {}
    for path in poset.all_paths():
        chain = _path_chain(path)
        rows = tuple(tuple(m.entry(a, b) for b in path) for a in path)
        parts[path] = TropMatrix(chain, rows)
    return Divisor(poset, parts)


def divisor_mul(d: Divisor, e: Divisor) -> Divisor:
    """Direct-product multiplication: per-path triangular products."""
    if d.poset != e.poset or set(d.parts) != set(e.parts):
        raise ValueError("divisor elements live over different path families")
    return Divisor(d.poset, {p: mat_mul(d.parts[p], e.parts[p]) for p in d.parts})


def divisor_phi(d: Divisor) -> TropMatrix:
    """Entrywise max over all paths through both indices; bottom where none."""
    elements = d.poset.elements
    rows = []
    for a in elements:
        row = []
        for b in elements:
            acc = BOTTOM
            for path, part in d.parts.items():
                if a in path and b in path:
                    entry = part.entry(a, b)
                    if acc < entry:
                        acc = entry
            row.append(acc)
        rows.append(tuple(row))
    return TropMatrix(d.poset, tuple(rows))
