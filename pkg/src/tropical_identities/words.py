"""Words, identities, and the polynomial families attached to them.

An identity is a pair of nonempty words over a shared finite alphabet. Each
word w yields two families of coefficient-free tropical polynomials:

* per letter t, a polynomial in one variable per letter whose terms record
  the letter counts of the prefix before each occurrence of t;
* per subword u and chain of vertices rho (one vertex more than |u|), a
  polynomial in one variable per (letter, vertex) pair whose terms record,
  for every scattered occurrence of u in w, the letter counts of the gaps
  between consecutive occurrence positions.

Equivalence of these families between the two sides of an identity is exactly
what the checkers in :mod:`tropical_identities.checking` decide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .polynomials import TropPoly, Var


@dataclass(frozen=True)
class Identity:
    """A semigroup identity: two nonempty words over one alphabet."""

    left: str
    right: str
    alphabet: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(sorted(set(self.alphabet))))
        if not self.left or not self.right:
            raise ValueError("identity sides must be nonempty")
        for side in (self.left, self.right):
            for ch in side:
                if ch not in self.alphabet:
                    raise ValueError(f"letter {ch!r} is outside the alphabet")

    def __str__(self) -> str:
        return f"{self.left} = {self.right}"


def _is_letter(c: str) -> bool:
    return "a" <= c <= "z" or "A" <= c <= "Z"


def _is_digit(c: str) -> bool:
    return "0" <= c <= "9"


def _expand_word(text: str) -> str:
    """Expand ``ab^2a`` / ``ab2a`` into ``abba``; raises on malformed input."""
    s = "".join(text.split())  # whitespace is insignificant everywhere
    out: list[str] = []
    i = 0
    while i < len(s):
        c = s[i]
        if not _is_letter(c):
            raise ValueError(f"malformed token {c!r} in word {text!r}")
        i += 1
        exponent = 1
        caret = i < len(s) and s[i] == "^"
        if caret:
            i += 1
        if i < len(s) and _is_digit(s[i]):
            if s[i] == "0":
                raise ValueError(f"exponent may not start with 0 in word {text!r}")
            j = i
            while j < len(s) and _is_digit(s[j]):
                j += 1
            exponent = int(s[i:j])
            i = j
        elif caret:
            raise ValueError(f"dangling '^' in word {text!r}")
        out.append(c * exponent)
    if not out:
        raise ValueError("empty side")
    return "".join(out)


def parse_identity(text: str, alphabet: Optional[Sequence[str]] = None) -> Identity:
    """Parse ``word = word``; exponents bind to the single preceding letter.

    The alphabet defaults to the letters that appear; supplying one rejects
    identities that mention letters outside it.
    """
    parts = text.split("=")
    if len(parts) != 2:
        raise ValueError("an identity is exactly two words separated by '='")
    left, right = (_expand_word(p) for p in parts)
    letters = set(left) | set(right)
    if alphabet is None:
        alphabet = tuple(sorted(letters))
    else:
        alphabet = tuple(sorted(set(alphabet)))
        outside = letters - set(alphabet)
        if outside:
            raise ValueError(f"letters {sorted(outside)} are outside the supplied alphabet")
    return Identity(left, right, alphabet)


def content(w: str) -> dict[str, int]:
    """Letter multiplicities of a word."""
    out: dict[str, int] = {}
    for ch in w:
        out[ch] = out.get(ch, 0) + 1
    return out


def prefix_count(w: str, s: str, i: int) -> int:
    """Occurrences of s among the first i letters of w (0 <= i <= |w|)."""
    if not 0 <= i <= len(w):
        raise ValueError(f"prefix index {i} out of range for a word of length {len(w)}")
    return w.count(s, 0, i)


def between_count(w: str, s: str, p: int, q: int) -> int:
    """Occurrences of s strictly between positions p and q (1-based positions)."""
    if not (0 <= p < q <= len(w) + 1):
        raise ValueError(f"invalid gap ({p}, {q}) for a word of length {len(w)}")
    return w.count(s, p, q - 1)


def _prefix_table(w: str, alphabet: Sequence[str]) -> dict[str, list[int]]:
    table = {s: [0] * (len(w) + 1) for s in alphabet}
    for i, ch in enumerate(w, start=1):
        for s in alphabet:
            table[s][i] = table[s][i - 1] + (1 if ch == s else 0)
    return table


def build_f_t_w(w: str, t: str, alphabet: Sequence[str]) -> TropPoly:
    """Prefix-count polynomial of w at letter t, one variable per letter.

    One coefficient-free term per occurrence of t, recording how many times
    each letter occurred before it; duplicate terms merge. Bottom iff t does
    not occur in w.
    """
    alphabet = tuple(sorted(alphabet))
    pre = _prefix_table(w, alphabet)
    terms = []
    for i, ch in enumerate(w, start=1):
        if ch == t:
            terms.append(({s: pre[s][i - 1] for s in alphabet}, 0))
    return TropPoly.build(alphabet, terms)


def build_f_u_rho(
    w: str, u: str, rho: Sequence, alphabet: Sequence[str]
) -> TropPoly:
    """Gap-count polynomial of w along a scattered subword u and chain rho.

    rho must have exactly |u| + 1 distinct vertices. One coefficient-free term
    per occurrence of u as a scattered subword of w: the exponent of variable
    (s, rho[k]) is the number of occurrences of s strictly between the k-th
    and (k+1)-th occurrence positions (with sentinels 0 and |w|+1). Bottom iff
    u is not a scattered subword of w.
    """
    rho = tuple(rho)
    if len(rho) != len(u) + 1:
        raise ValueError(f"chain of {len(rho)} vertices does not fit a subword of length {len(u)}")
    if len(set(rho)) != len(rho):
        raise ValueError("chain vertices must be distinct")
    alphabet = tuple(sorted(alphabet))
    variables: list[Var] = [(s, v) for s in alphabet for v in rho]
    pre = _prefix_table(w, alphabet)

    def beta(s: str, p: int, q: int) -> int:
        return pre[s][q - 1] - pre[s][p]

    positions = {s: [i for i, ch in enumerate(w, start=1) if ch == s] for s in alphabet}
    terms = []

    def emit(alphas: tuple[int, ...]):
        bounds = (0,) + alphas + (len(w) + 1,)
        exps: dict[Var, int] = {}
        for k in range(len(u) + 1):
            for s in alphabet:
                e = beta(s, bounds[k], bounds[k + 1])
                if e:
                    exps[(s, rho[k])] = e
        terms.append((exps, 0))

    def descend(k: int, prefix: tuple[int, ...]):
        if k == len(u):
            emit(prefix)
            return
        last = prefix[-1] if prefix else 0
        for pos in positions.get(u[k], ()):  # letters outside w give no occurrence
            if pos > last:
                descend(k + 1, prefix + (pos,))

    descend(0, ())
    return TropPoly.build(variables, terms)
