"""Exact arithmetic in the max-plus semiring.

Scalars are either an exact rational number or the bottom element ``-inf``.
Bottom is the neutral element for tropical addition (max) and absorbing for
tropical multiplication (classical addition), and it is a structural variant
of :class:`TropScalar`, never a sentinel numeric value.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]


class TropScalar:
    """A max-plus scalar: an exact rational, or bottom (``-inf``).

    Instances are immutable and totally ordered, with bottom as the least
    element.
    """

    __slots__ = ("_value",)

    def __init__(self, value: RationalLike | None):
        if value is None:
            object.__setattr__(self, "_value", None)
        else:
            object.__setattr__(self, "_value", Fraction(value))

    def __setattr__(self, name, value):
        raise AttributeError("TropScalar is immutable")

    @property
    def is_bottom(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Fraction:
        """The rational value; raises on bottom."""
        if self._value is None:
            raise ValueError("bottom has no rational value")
        return self._value

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropScalar):
            return NotImplemented
        return self._value == other._value

    def __hash__(self) -> int:
        return hash(("trop", self._value))

    def __lt__(self, other: "TropScalar") -> bool:
        if not isinstance(other, TropScalar):
            return NotImplemented
        if self._value is None:
            return other._value is not None
        if other._value is None:
            return False
        return self._value < other._value

    def __le__(self, other: "TropScalar") -> bool:
        return self == other or self < other

    def __gt__(self, other: "TropScalar") -> bool:
        return not self <= other

    def __ge__(self, other: "TropScalar") -> bool:
        return not self < other

    def __repr__(self) -> str:
        return f"TropScalar({self._value!r})" if self._value is not None else "BOTTOM"

    def __str__(self) -> str:
        return render_scalar(self)


#: The additive zero of the semiring (tropical ``-inf``).
BOTTOM = TropScalar(None)


def trop(x: RationalLike | str | TropScalar | None) -> TropScalar:
    """Coerce ints, Fractions, ``"p/q"`` strings, ``"-inf"`` or None to a scalar."""
    if isinstance(x, TropScalar):
        return x
    if x is None:
        return BOTTOM
    if isinstance(x, str):
        if x.strip() == "-inf":
            return BOTTOM
        return TropScalar(Fraction(x))
    return TropScalar(x)


def tropical_add(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical sum: max(a, b), with bottom neutral."""
    return a if b < a else b


def tropical_mul(a: TropScalar, b: TropScalar) -> TropScalar:
    """Tropical product: classical a + b, with bottom absorbing."""
    if a._value is None or b._value is None:
        return BOTTOM
    return TropScalar(a._value + b._value)


def classical_scale(lam: RationalLike, a: TropScalar) -> TropScalar:
    """Classical scaling lam * a, fixing bottom.

    For nonnegative lam this is the scaling under which coefficient-free
    polynomials are homogeneous.
    """
    if a._value is None:
        return BOTTOM
    return TropScalar(Fraction(lam) * a._value)


def render_scalar(a: TropScalar) -> str:
    """Serialize to ``"-inf"`` or a rational string (``"3"``, ``"-5/2"``)."""
    if a._value is None:
        return "-inf"
    v = a._value
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_scalar(text: str) -> TropScalar:
    """Inverse of :func:`render_scalar`; accepts ``"p"``, ``"p/q"`` and ``"-inf"``."""
    return trop(text)
