"""Formal tropical polynomials and their equivalence.

A formal polynomial is a finite map from monomials (exponent vectors over a
declared variable set) to rational coefficients; the absent monomial has
coefficient bottom, and the empty map is the bottom polynomial. Two formal
polynomials can define the same max-of-affine function; equivalence is decided
by deleting every term that is never the strict unique maximum (the
*inessential* terms) and comparing the canonical remainders formally.

Essentiality of one term among m terms is the strict feasibility of m-1 linear
inequalities, decided exactly by :func:`tropical_identities.lp.strict_feasible`.
For single-variable polynomials the same question is answered without any LP
by extracting the strict upper convex hull of the (exponent, coefficient)
point set; points lying on a hull chord are inessential.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from types import MappingProxyType
from typing import Iterable, Mapping, Optional, Tuple, Union

from .lp import LinearSystem, strict_feasible
from .scalars import BOTTOM, TropScalar, render_scalar, trop

#: A variable is a plain letter, or a (letter, vertex) pair.
Var = Union[str, Tuple[str, object]]
#: A monomial is a sorted tuple of (variable, positive exponent) pairs.
Monomial = Tuple[Tuple[Var, int], ...]


def _label_key(x) -> tuple:
    return (0, x) if isinstance(x, int) else (1, str(x))


def _var_key(v: Var) -> tuple:
    if isinstance(v, str):
        return (0, v)
    letter, vertex = v
    return (1, letter, _label_key(vertex))


def monomial(exponents: Mapping[Var, int]) -> Monomial:
    """Normalize an exponent map: drop zeros, sort, reject negatives."""
    items = []
    for v, e in exponents.items():
        if e < 0:
            raise ValueError(f"negative exponent for {v!r}")
        if e:
            items.append((v, int(e)))
    return tuple(sorted(items, key=lambda p: _var_key(p[0])))


def _exponent(mono: Monomial, v: Var) -> int:
    for w, e in mono:
        if w == v:
            return e
    return 0


@dataclass(frozen=True, eq=True)
class TropPoly:
    """A formal tropical polynomial over a declared variable set.

    ``terms`` maps monomials to finite rational coefficients; equality is
    formal (same variable set, same term map). Instances are immutable.
    """

    variables: tuple[Var, ...]
    terms: Mapping[Monomial, Fraction]

    def __post_init__(self):
        object.__setattr__(
            self, "variables", tuple(sorted(set(self.variables), key=_var_key))
        )
        declared = set(self.variables)
        for mono in self.terms:
            for v, _ in mono:
                if v not in declared:
                    raise ValueError(f"term uses undeclared variable {v!r}")
        object.__setattr__(self, "terms", MappingProxyType(dict(self.terms)))

    @classmethod
    def build(
        cls,
        variables: Iterable[Var],
        terms: Iterable[tuple[Mapping[Var, int] | Monomial, Fraction | int]],
    ) -> "TropPoly":
        """Assemble a polynomial, merging duplicate monomials with max."""
        merged: dict[Monomial, Fraction] = {}
        for mono, coeff in terms:
            if not isinstance(mono, tuple):
                mono = monomial(mono)
            coeff = Fraction(coeff)
            old = merged.get(mono)
            if old is None or coeff > old:
                merged[mono] = coeff
        return cls(tuple(variables), merged)

    @classmethod
    def bottom(cls, variables: Iterable[Var]) -> "TropPoly":
        return cls(tuple(variables), {})

    @property
    def is_bottom(self) -> bool:
        return not self.terms

    @property
    def is_zero_flat(self) -> bool:
        """True when every coefficient is 0 (a max of sums of variables)."""
        return all(c == 0 for c in self.terms.values())

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in the canonical order: graded lexicographic, descending."""
        def key(item):
            mono, _ = item
            vec = tuple(_exponent(mono, v) for v in self.variables)
            return (sum(vec), vec)

        return sorted(self.terms.items(), key=key, reverse=True)


def evaluate(f: TropPoly, point: Mapping[Var, TropScalar | Fraction | int]) -> TropScalar:
    """Evaluate at a point assigning every declared variable.

    The bottom polynomial evaluates to bottom; a variable at bottom raised to
    a positive exponent annihilates its term.
    """
    vals: dict[Var, TropScalar] = {}
    for v in f.variables:
        if v not in point:
            raise ValueError(f"point does not assign variable {v!r}")
        vals[v] = trop(point[v])
    best = BOTTOM
    for mono, coeff in f.terms.items():
        acc = Fraction(coeff)
        dead = False
        for v, e in mono:
            x = vals[v]
            if x.is_bottom:
                dead = True
                break
            acc += e * x.value
        if not dead:
            term_value = TropScalar(acc)
            if best < term_value:
                best = term_value
    return best


class _TermTable:
    """Aligned exponent vectors and pre-scaled integer coefficients."""

    def __init__(self, variables: tuple[Var, ...], items: list[tuple[Monomial, Fraction]]):
        self.variables = variables
        self.vecs = [tuple(_exponent(m, v) for v in variables) for m, _ in items]
        self.coeff_scale = lcm(*(c.denominator for _, c in items)) if items else 1
        self.scaled_coeffs = [int(c * self.coeff_scale) for _, c in items]
        self.coeffs = [c for _, c in items]

    def scaled_values(self, point_values: list[Fraction]) -> list[int]:
        # All term values at the point, multiplied by one common denominator
        # so that comparisons run on plain integers.
        scale = lcm(self.coeff_scale, *(x.denominator for x in point_values)) if point_values else self.coeff_scale
        mult = scale // self.coeff_scale
        pts = [int(x * scale) for x in point_values]
        return [
            c * mult + sum(e * p for e, p in zip(vec, pts))
            for vec, c in zip(self.vecs, self.scaled_coeffs)
        ]


def _decide_essential(table: _TermTable, idx: int, seeds: set[int]) -> bool:
    """Can term idx strictly exceed every other term somewhere?

    Constraint generation: solve against a small active set of competitors
    and grow it with whichever terms the candidate point fails to beat.
    Infeasibility against any subset already certifies inessentiality, and a
    point beating all terms certifies essentiality, so the loop is exact.
    """
    variables = table.variables
    vecs = table.vecs
    me = vecs[idx]
    my_coeff = table.coeffs[idx]

    def row(other: int):
        diff = {v: Fraction(me[j] - vecs[other][j]) for j, v in enumerate(variables)}
        return (diff, my_coeff - table.coeffs[other])

    active = {i for i in seeds if i != idx}
    active.add(idx - 1 if idx else len(vecs) - 1)
    while True:
        system = LinearSystem.build(variables, [row(i) for i in sorted(active)])
        point = strict_feasible(system)
        if point is None:
            return False
        values = table.scaled_values([point[v] for v in variables])
        violated = [
            i for i, val in enumerate(values)
            if val >= values[idx] and i != idx and i not in active
        ]
        if not violated:
            return True
        # A few strongest violators per round keep the LPs small.
        violated.sort(key=lambda i: values[i], reverse=True)
        active.update(violated[:8])


def essential_terms(f: TropPoly) -> frozenset[Monomial]:
    """The terms that strictly exceed all others somewhere on finite points.

    Requires a nonempty polynomial. Terms observed to be the strict unique
    maximum at a probe point are certified essential with no LP (the point
    itself is the certificate); the rest are decided exactly by incremental
    strict-feasibility questions over the declared variables.
    """
    if f.is_bottom:
        raise ValueError("the bottom polynomial has no terms")
    items = list(f.terms.items())
    if len(items) == 1:
        return frozenset([items[0][0]])
    table = _TermTable(f.variables, items)
    certified: set[int] = set()
    seeds: set[int] = set()  # probe maximizers: strong blockers for the rest
    for point in _probe_points(f.variables):
        values = table.scaled_values([point[v] for v in f.variables])
        best = max(values)
        winners = [i for i, val in enumerate(values) if val == best]
        seeds.add(winners[0])
        if len(winners) == 1:
            certified.add(winners[0])
    essential = []
    carry: set[int] = set()  # last blocking set; neighbours often share it
    for idx, (mono, _) in enumerate(items):
        if idx in certified:
            essential.append(mono)
            continue
        verdict, blockers = _decide_essential(table, idx, seeds | carry)
        if verdict:
            essential.append(mono)
        elif len(blockers) <= 16:
            carry = blockers
    return frozenset(essential)


def essentialize(f: TropPoly) -> TropPoly:
    """The unique equivalent polynomial with only essential terms.

    Idempotent; term map is stored in the canonical order so serialized forms
    compare byte for byte.
    """
    if f.is_bottom:
        return f
    keep = essential_terms(f)
    ordered = {m: c for m, c in f.sorted_terms() if m in keep}
    return TropPoly(f.variables, ordered)


_PROBE_RANGES = (3, 9, 27, 243)
_PROBES_PER_RANGE = 3


def _probe_points(variables: tuple[Var, ...]) -> list[dict[Var, Fraction]]:
    # Deterministic sample points; a hit gives a cheap non-equivalence
    # certificate before any LP runs. Never used to conclude equivalence.
    rng = random.Random("tropical-identities-probes")
    points = []
    for bound in _PROBE_RANGES:
        for _ in range(_PROBES_PER_RANGE):
            points.append({v: Fraction(rng.randint(-bound, bound)) for v in variables})
    return points


def equivalent(f: TropPoly, g: TropPoly) -> bool:
    """Whether f and g define the same function on finite points.

    Decided by comparing essentialized forms; identical verdict to comparing
    the functions everywhere.
    """
    if f.variables != g.variables:
        raise ValueError("polynomials declare different variable sets")
    if dict(f.terms) == dict(g.terms):
        return True
    for point in _probe_points(f.variables):
        if evaluate(f, point) != evaluate(g, point):
            return False
    return dict(essentialize(f).terms) == dict(essentialize(g).terms)


def separating_point(f: TropPoly, g: TropPoly) -> Optional[dict[Var, Fraction]]:
    """A finite rational point where f and g evaluate differently.

    Returns None iff the polynomials are equivalent. When the quick probes
    miss, a point is recovered from the essential term that witnesses the
    difference: it must strictly beat its own polynomial's other terms and
    every term of the other polynomial somewhere.
    """
    if f.variables != g.variables:
        raise ValueError("polynomials declare different variable sets")
    for point in _probe_points(f.variables):
        if evaluate(f, point) != evaluate(g, point):
            return point
    ef, eg = essentialize(f), essentialize(g)
    if dict(ef.terms) == dict(eg.terms):
        return None

    def search(a: TropPoly, b: TropPoly) -> Optional[dict[Var, Fraction]]:
        for mono, coeff in a.sorted_terms():
            if b.terms.get(mono) == coeff:
                continue
            rows = []
            for other, ocoeff in a.terms.items():
                if other != mono:
                    diff = {v: Fraction(_exponent(mono, v) - _exponent(other, v)) for v in a.variables}
                    rows.append((diff, coeff - ocoeff))
            for other, ocoeff in b.terms.items():
                diff = {v: Fraction(_exponent(mono, v) - _exponent(other, v)) for v in a.variables}
                rows.append((diff, coeff - ocoeff))
            return_point = strict_feasible(LinearSystem.build(a.variables, rows))
            if return_point is not None:
                return return_point
        return None

    point = search(ef, eg)
    if point is None:
        point = search(eg, ef)
    if point is None:
        raise AssertionError("non-equivalent polynomials admit a separating point")
    return point


def univariate_essential(f: TropPoly) -> frozenset[tuple[int, Fraction]]:
    """Essential (exponent, coefficient) pairs of a single-variable polynomial.

    Strict upper convex hull of the term points; collinear middles are
    discarded because a tie on the hull chord never strictly exceeds both
    neighbours.
    """
    if len(f.variables) > 1:
        raise ValueError("univariate routine requires at most one variable")
    pts = sorted((_exponent(mono, f.variables[0]) if f.variables else 0, coeff)
                 for mono, coeff in f.terms.items())
    if len(pts) <= 1:
        return frozenset(pts)
    hull: list[tuple[int, Fraction]] = []
    for p in pts:
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            cross = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return frozenset(hull)


def equivalent_univariate(f: TropPoly, g: TropPoly) -> bool:
    """Function equality for single-variable polynomials, hull-based, no LP."""
    if len(f.variables) > 1 or len(g.variables) > 1:
        raise ValueError("univariate comparison requires single-variable polynomials")
    if f.variables != g.variables:
        raise ValueError("polynomials declare different variable sets")
    return univariate_essential(f) == univariate_essential(g)


def univariate_separating_point(f: TropPoly, g: TropPoly) -> Optional[Fraction]:
    """A rational x where single-variable f and g differ, or None.

    The difference of two piecewise linear functions can only change sign or
    vanish at line crossings, so scanning midpoints between consecutive
    crossings (plus outer points) is complete.
    """
    if equivalent_univariate(f, g):
        return None
    lines = []
    for poly in (f, g):
        v = poly.variables[0] if poly.variables else None
        for mono, coeff in poly.terms.items():
            lines.append((_exponent(mono, v) if v else 0, coeff))
    xs = set()
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            (e1, c1), (e2, c2) = lines[i], lines[j]
            if e1 != e2:
                xs.add(Fraction(c2 - c1, e1 - e2))
    candidates: list[Fraction] = []
    if not xs:
        candidates.append(Fraction(0))
    else:
        bs = sorted(xs)
        candidates.append(bs[0] - 1)
        candidates.extend((bs[i] + bs[i + 1]) / 2 for i in range(len(bs) - 1))
        candidates.append(bs[-1] + 1)
        candidates.extend(bs)
    var = f.variables[0] if f.variables else (g.variables[0] if g.variables else None)
    for x in candidates:
        point = {var: x} if var is not None else {}
        if evaluate(f, point) != evaluate(g, point):
            return x
    raise AssertionError("non-equivalent univariate polynomials differ at a breakpoint")


def substitute(f: TropPoly, assignment: Mapping[Var, Fraction | int]) -> TropPoly:
    """Fix some variables to finite rationals, merging collapsed terms with max."""
    remaining = tuple(v for v in f.variables if v not in assignment)
    new_terms: list[tuple[dict, Fraction]] = []
    for mono, coeff in f.terms.items():
        shifted = Fraction(coeff)
        kept: dict[Var, int] = {}
        for v, e in mono:
            if v in assignment:
                shifted += e * Fraction(assignment[v])
            else:
                kept[v] = e
        new_terms.append((kept, shifted))
    return TropPoly.build(remaining, new_terms)


def poly_add(f: TropPoly, g: TropPoly) -> TropPoly:
    """Tropical sum of polynomials: union of terms, max on clashes."""
    if f.variables != g.variables:
        raise ValueError("polynomials declare different variable sets")
    return TropPoly.build(f.variables, list(f.terms.items()) + list(g.terms.items()))


def poly_mul(f: TropPoly, g: TropPoly) -> TropPoly:
    """Tropical product: pairwise exponent sums and coefficient sums."""
    if f.variables != g.variables:
        raise ValueError("polynomials declare different variable sets")
    terms = []
    for m1, c1 in f.terms.items():
        d1 = dict(m1)
        for m2, c2 in g.terms.items():
            combined = dict(d1)
            for v, e in m2:
                combined[v] = combined.get(v, 0) + e
            terms.append((combined, c1 + c2))
    return TropPoly.build(f.variables, terms)


def render_var(v: Var) -> str:
    if isinstance(v, str):
        return f"x({v})"
    letter, vertex = v
    return f"x({letter},{vertex})"


def render_poly(f: TropPoly) -> str:
    """Human-readable form: ``max(...)`` of terms like ``c + 2*x(a,1) + x(b,2)``."""
    if f.is_bottom:
        return "-inf"
    rendered = []
    for mono, coeff in f.sorted_terms():
        parts = []
        if coeff != 0 or not mono:
            parts.append(render_scalar(TropScalar(coeff)))
        for v, e in mono:
            parts.append(render_var(v) if e == 1 else f"{e}*{render_var(v)}")
        rendered.append(" + ".join(parts))
    if len(rendered) == 1:
        return rendered[0]
    return "max(" + ", ".join(rendered) + ")"


def poly_to_json(f: TropPoly) -> dict:
    """Canonical JSON: variables plus ordered (exponents, coefficient) pairs."""
    return {
        "variables": [render_var(v) for v in f.variables],
        "terms": [
            {
                "exponents": {render_var(v): e for v, e in mono},
                "coefficient": render_scalar(TropScalar(coeff)),
            }
            for mono, coeff in f.sorted_terms()
        ],
    }
