"""Deciding identities and extracting falsifying witnesses.

An identity holds in the n x n upper triangular max-plus matrices iff, for
every subword u of length below n, the gap-count polynomials of the two sides
along the canonical chain (1, ..., |u|+1) are equivalent; one chain per length
suffices because renaming path vertices is a bijection on the polynomial
variables. A poset-indexed matrix semigroup satisfies exactly the identities
of the triangular matrices of its maximum chain length, so poset checking
reduces to the same loop.

Failures are constructive: the separating point of the first failing
polynomial pair (in lexicographic (|u|, u) order) is turned into an explicit
letter-to-matrix assignment whose two side products differ in one recorded
entry, and for n = 2 into a pair assignment in the bicyclic monoid. Witnesses
are always re-verified by direct evaluation before they are returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Mapping, Optional

from .matrices import TropMatrix, mat_mul
from .models import (
    BICYCLIC_ONE,
    BICYCLIC_P,
    Bicyclic,
    Fmim,
    bicyclic_mul,
    eval_word,
    fmim_mul,
)
from .polynomials import (
    TropPoly,
    equivalent,
    equivalent_univariate,
    evaluate,
    render_var,
    separating_point,
    substitute,
    univariate_separating_point,
)
from .posets import Poset, chain_poset
from .scalars import BOTTOM, TropScalar, render_scalar
from .words import Identity, build_f_t_w, build_f_u_rho, content


@dataclass(frozen=True)
class Failure:
    """Provenance of a FAILS verdict: which comparison failed and where.

    ``family`` is "chain" when the polynomials compared were the gap-count
    family along ``path``, and "letter" when they were the per-letter
    prefix-count family (then ``path`` is empty and ``u`` is the letter).
    """

    u: str
    path: tuple
    point: Mapping
    left_value: TropScalar
    right_value: TropScalar
    family: str = "chain"


@dataclass(frozen=True)
class Verdict:
    holds: bool
    n: int
    failure: Optional[Failure]
    method: str

    def to_json(self) -> dict:
        data: dict = {
            "result": "holds" if self.holds else "fails",
            "n": self.n,
            "method": self.method,
            "witness": None,
        }
        if self.failure is not None:
            data["failing_u"] = self.failure.u
            data["path"] = [str(v) for v in self.failure.path]
            data["point"] = {
                render_var(v): render_scalar(TropScalar(x))
                for v, x in sorted(self.failure.point.items(), key=lambda kv: render_var(kv[0]))
            }
            data["left_value"] = render_scalar(self.failure.left_value)
            data["right_value"] = render_scalar(self.failure.right_value)
        return data


@dataclass(frozen=True)
class Witness:
    """A letter assignment falsifying an identity, with its audit trail.

    ``left_value`` and ``right_value`` are the full evaluations of the two
    sides; re-evaluating the assignment reproduces them, and they differ (at
    ``position`` for matrix models).
    """

    model: str  # "ut" | "poset" | "bicyclic" | "fmim"
    n: Optional[int]
    assignment: Mapping[str, object]
    left_value: object
    right_value: object
    position: Optional[tuple] = None

    def to_json(self) -> dict:
        return {
            "model": self.model,
            "n": self.n,
            "assignment": {s: v.to_json() for s, v in sorted(self.assignment.items())},
            "left_value": self.left_value.to_json(),
            "right_value": self.right_value.to_json(),
            "position": list(map(str, self.position)) if self.position else None,
        }


def check_identity(identity: Identity, n: int, *, two_letter_fast: bool = False) -> Verdict:
    """HOLDS iff the identity is satisfied by all n x n upper triangular matrices.

    Compares the gap-count polynomial families of the two sides along the
    canonical chains (1, ..., i+1) for every subword length i < n, in
    lexicographic order, stopping at the first failure. For n = 1 this
    degenerates to content equality. ``two_letter_fast`` switches to the
    univariate route, valid only when n = 2 over a two-letter alphabet.
    """
    if n < 1:
        raise ValueError("matrix dimension must be >= 1")
    if two_letter_fast:
        if n != 2 or len(identity.alphabet) != 2:
            raise ValueError("the fast path applies only to n = 2 over two letters")
        return check_identity_two_letter(identity)
    for i in range(n):
        tau = tuple(range(1, i + 2))
        for u_letters in itertools.product(identity.alphabet, repeat=i):
            u = "".join(u_letters)
            f = build_f_u_rho(identity.left, u, tau, identity.alphabet)
            g = build_f_u_rho(identity.right, u, tau, identity.alphabet)
            if not equivalent(f, g):
                point = separating_point(f, g)
                failure = Failure(
                    u, tau, point, evaluate(f, point), evaluate(g, point), "chain"
                )
                return Verdict(False, n, failure, "general")
    return Verdict(True, n, None, "general")


def check_identity_ut2(identity: Identity) -> Verdict:
    """The dedicated 2 x 2 route: per-letter prefix-count polynomials only."""
    for t in identity.alphabet:
        f = build_f_t_w(identity.left, t, identity.alphabet)
        g = build_f_t_w(identity.right, t, identity.alphabet)
        if not equivalent(f, g):
            point = separating_point(f, g)
            failure = Failure(
                t, (), point, evaluate(f, point), evaluate(g, point), "letter"
            )
            return Verdict(False, 2, failure, "ut2-letter")
    return Verdict(True, 2, None, "ut2-letter")


def check_identity_two_letter(identity: Identity) -> Verdict:
    """Two letters, n = 2: four univariate comparisons, hull-based, no LP.

    Substituting +1 and -1 for the second letter's variable in each
    prefix-count polynomial preserves the verdict because the polynomials are
    coefficient-free, hence homogeneous under nonnegative scaling. A failing
    univariate pair lifts back to a separating point of the corresponding
    chain-family comparison: free variable and sign on the first vertex,
    zeros on the second.
    """
    if len(identity.alphabet) != 2:
        raise ValueError("the two-letter route requires a two-letter alphabet")
    first, second = identity.alphabet
    for z in identity.alphabet:
        f = build_f_t_w(identity.left, z, identity.alphabet)
        g = build_f_t_w(identity.right, z, identity.alphabet)
        for sign in (1, -1):
            fu = substitute(f, {second: sign})
            gu = substitute(g, {second: sign})
            if not equivalent_univariate(fu, gu):
                x = univariate_separating_point(fu, gu)
                letter_point = {first: x, second: Fraction(sign)}
                tau = (1, 2)
                point = {(s, 1): letter_point[s] for s in identity.alphabet}
                point.update({(s, 2): Fraction(0) for s in identity.alphabet})
                fc = build_f_u_rho(identity.left, z, tau, identity.alphabet)
                gc = build_f_u_rho(identity.right, z, tau, identity.alphabet)
                lv, rv = evaluate(fc, point), evaluate(gc, point)
                if lv == rv:
                    raise AssertionError("univariate failure did not lift to the chain family")
                failure = Failure(z, tau, point, lv, rv, "chain")
                return Verdict(False, 2, failure, "two-letter")
    return Verdict(True, 2, None, "two-letter")


def check_poset(identity: Identity, poset: Poset) -> Verdict:
    """Identities over a poset-indexed semigroup: those of its longest chain."""
    return check_identity(identity, poset.max_chain_length())


def falsifying_witness(identity: Identity, n: int) -> Witness:
    """An explicit matrix assignment falsifying the identity in dimension n.

    The diagonal of the letter matrices carries the separating point (zero on
    vertices off the failing chain); the only finite off-diagonal entries are
    zeros placed along the chain at the letters of the failing subword. The
    two side products then differ exactly at (chain start, chain end), and
    their entries there reproduce the two polynomial values. Raises on a
    holding identity.
    """
    verdict = check_identity(identity, n)
    if verdict.holds:
        raise ValueError("identity holds; no falsifying witness exists")
    failure = verdict.failure
    u, tau = failure.u, failure.path
    poset = chain_poset(n)
    assignment = {}
    for s in identity.alphabet:
        rows = [[BOTTOM] * n for _ in range(n)]
        for p in range(1, n + 1):
            value = failure.point.get((s, p), Fraction(0))
            rows[p - 1][p - 1] = TropScalar(value)
        for k in range(1, len(u) + 1):
            if u[k - 1] == s:
                rows[tau[k - 1] - 1][tau[k] - 1] = TropScalar(0)
        assignment[s] = TropMatrix(poset, tuple(tuple(r) for r in rows))
    left = eval_word(identity.left, assignment, mat_mul)
    right = eval_word(identity.right, assignment, mat_mul)
    position = (tau[0], tau[-1])
    lv, rv = left.entry(*position), right.entry(*position)
    if lv == rv:
        raise AssertionError("witness construction failed to separate the sides")
    if (lv, rv) != (failure.left_value, failure.right_value):
        raise AssertionError("witness entries disagree with the polynomial values")
    return Witness("ut", n, assignment, left, right, position)


def bicyclic_witness(identity: Identity) -> Witness:
    """A bicyclic assignment falsifying any identity that fails at n = 2.

    Content mismatch at some letter z: send z to p and all else to 1. With
    equal content, take the separating point of the failing per-letter
    polynomial pair, scale it to even integers (exactness is preserved since
    the polynomials are coefficient-free), then pick even upper entries, the
    distinguished letter's dominating all others; halving turns the resulting
    triangular matrices into bicyclic pairs. Verified by direct bicyclic
    evaluation before returning; a failed largeness bound is an assertion
    error, never a silent wrong answer.
    """
    cl, cr = content(identity.left), content(identity.right)
    unbalanced = [s for s in identity.alphabet if cl.get(s, 0) != cr.get(s, 0)]
    if unbalanced:
        z = unbalanced[0]
        assignment = {
            s: (BICYCLIC_P if s == z else BICYCLIC_ONE) for s in identity.alphabet
        }
        return _verified_bicyclic(identity, assignment)

    verdict = check_identity_ut2(identity)
    if verdict.holds:
        raise ValueError("identity holds in the bicyclic monoid; no witness exists")
    t = verdict.failure.u
    xbar: dict[str, Fraction] = {s: Fraction(v) for s, v in verdict.failure.point.items()}
    d = lcm(*(v.denominator for v in xbar.values()))
    x = {s: int(2 * d * v) for s, v in xbar.items()}  # even integers

    values: dict[str, list[int]] = {s: [] for s in identity.alphabet}
    for side in (identity.left, identity.right):
        for s in identity.alphabet:
            val = evaluate(build_f_t_w(side, s, identity.alphabet), x)
            if not val.is_bottom:
                assert val.value.denominator == 1
                values[s].append(int(val.value))
    bound = max(abs(v) for s in identity.alphabet for v in values[s])
    x_max = max(abs(v) for v in x.values())
    upper_base = 2 * x_max * (len(identity.left) + len(identity.right)) + 2
    upper = {s: upper_base for s in identity.alphabet}
    upper[t] = upper_base + 2 * (bound + 1)

    for s in identity.alphabet:
        assert upper[s] > x[s] and upper[s] >= 0 and upper[s] % 2 == 0
    _assert_domination(values, identity.alphabet, upper, t)

    assignment = {}
    for s in identity.alphabet:
        i_s = upper[s] // 2
        j_s = (upper[s] - x[s]) // 2
        assert (upper[s] - x[s]) % 2 == 0
        assignment[s] = Bicyclic(i_s, j_s)
    return _verified_bicyclic(identity, assignment)


def _assert_domination(values, alphabet, upper, t):
    # Each side's top-right product entry must come from the distinguished
    # letter alone; a violation means the largeness bound was too small.
    t_vals = values[t]
    assert t_vals, "distinguished letter must occur in both sides"
    floor = min(upper[t] + v for v in t_vals)
    for s in alphabet:
        if s == t:
            continue
        for v in values[s]:
            assert upper[s] + v < floor, "largeness bound failed to dominate"


def _verified_bicyclic(identity: Identity, assignment: dict[str, Bicyclic]) -> Witness:
    left = eval_word(identity.left, assignment, bicyclic_mul)
    right = eval_word(identity.right, assignment, bicyclic_mul)
    assert left != right, "bicyclic witness failed to separate the sides"
    return Witness("bicyclic", None, assignment, left, right, None)


_MODEL_PRODUCTS = {
    "ut": mat_mul,
    "poset": mat_mul,
    "bicyclic": bicyclic_mul,
    "fmim": fmim_mul,
}


def verify_witness(identity: Identity, witness: Witness) -> bool:
    """True iff direct evaluation of both sides under the assignment differs."""
    try:
        mul = _MODEL_PRODUCTS[witness.model]
    except KeyError:
        raise ValueError(f"unsupported witness model {witness.model!r}") from None
    left = eval_word(identity.left, witness.assignment, mul)
    right = eval_word(identity.right, witness.assignment, mul)
    return left != right


def matrix_difference_position(left: TropMatrix, right: TropMatrix) -> Optional[tuple]:
    """First index pair (declaration order) where two matrices differ."""
    for a in left.poset.elements:
        for b in left.poset.elements:
            if left.entry(a, b) != right.entry(a, b):
                return (a, b)
    return None


def monoid_identity_instances(identity: Identity) -> tuple[list[Identity], list[str]]:
    """Reduce a monoid identity to finitely many semigroup instances.

    Substituting the empty word for each subset of letters produces a family
    of semigroup identities; the monoid identity holds iff every instance
    holds and no substitution empties exactly one side. (In matrix monoids a
    nonempty word never evaluates to the identity under all assignments, so a
    one-sided collapse is already a refutation.) Returns the both-nonempty
    instances, deduplicated, and the erasing subsets, each as a sorted string,
    that collapse exactly one side.
    """
    instances: list[Identity] = []
    seen = set()
    collapses: list[str] = []
    letters = identity.alphabet
    for r in range(len(letters) + 1):
        for erased in itertools.combinations(letters, r):
            gone = set(erased)
            new_left = "".join(c for c in identity.left if c not in gone)
            new_right = "".join(c for c in identity.right if c not in gone)
            if not new_left and not new_right:
                continue
            if not new_left or not new_right:
                collapses.append("".join(erased))
                continue
            key = (new_left, new_right)
            if key not in seen:
                seen.add(key)
                remaining = sorted(set(new_left) | set(new_right))
                instances.append(Identity(new_left, new_right, tuple(remaining)))
    return instances, collapses
