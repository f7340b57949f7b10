"""Finite partially ordered index sets.

A poset here is a finite list of labelled elements together with a reflexive,
transitive, antisymmetric relation. Posets index the rows and columns of
tropical matrices; their chains bound which products can be nonzero.

Paths (strictly increasing tuples of elements) are enumerated in a fixed
lexicographic order so that downstream polynomial variable sets and reports
are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence, Tuple

Label = Hashable
Path = Tuple[Label, ...]


@dataclass(frozen=True)
class Poset:
    """A finite poset: element labels plus a closed order relation.

    Use :meth:`Poset.close` to build one from generating pairs; the
    constructor itself trusts its input to be reflexively and transitively
    closed and antisymmetric.
    """

    elements: tuple[Label, ...]
    relation: frozenset[tuple[Label, Label]]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {e: k for k, e in enumerate(self.elements)})

    @classmethod
    def close(cls, elements: Sequence[Label], pairs: Iterable[tuple[Label, Label]]) -> "Poset":
        """Reflexive-transitive closure of the declared pairs.

        Raises ValueError on duplicate labels, pairs mentioning unknown
        labels, or a cycle (antisymmetry failure).
        """
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate element labels")
        known = set(elements)
        leq = {(e, e) for e in elements}
        for a, b in pairs:
            if a not in known or b not in known:
                raise ValueError(f"relation pair ({a!r}, {b!r}) mentions unknown element")
            leq.add((a, b))
        # Warshall closure over the small element set.
        for k in elements:
            for i in elements:
                if (i, k) in leq:
                    for j in elements:
                        if (k, j) in leq:
                            leq.add((i, j))
        for a, b in leq:
            if a != b and (b, a) in leq:
                raise ValueError(f"cycle detected: {a!r} and {b!r} are mutually related")
        return cls(elements, frozenset(leq))

    @classmethod
    def chain(cls, elements: Sequence[Label]) -> "Poset":
        """The total order in which the given elements appear."""
        elements = tuple(elements)
        pairs = [(elements[i], elements[j]) for i in range(len(elements)) for j in range(i, len(elements))]
        return cls.close(elements, pairs)

    @classmethod
    def antichain(cls, elements: Sequence[Label]) -> "Poset":
        return cls.close(elements, [])

    def leq(self, a: Label, b: Label) -> bool:
        return (a, b) in self.relation

    def strictly_less(self, a: Label, b: Label) -> bool:
        return a != b and (a, b) in self.relation

    def index(self, a: Label) -> int:
        return self._index[a]

    def __len__(self) -> int:
        return len(self.elements)

    def above(self, a: Label) -> list[Label]:
        """Elements strictly above a, in declaration order."""
        return [b for b in self.elements if self.strictly_less(a, b)]

    def max_chain_length(self) -> int:
        """Vertex count of the longest chain (longest path in the strict DAG)."""
        longest: dict[Label, int] = {}

        def visit(v: Label) -> int:
            if v in longest:
                return longest[v]
            best = 1
            for w in self.above(v):
                best = max(best, 1 + visit(w))
            longest[v] = best
            return best

        return max(visit(v) for v in self.elements)

    def paths(self, k: int) -> list[Path]:
        """All k-vertex strictly increasing paths, in lexicographic order.

        Lexicographic means by position in the declared element list. Returns
        the empty list when no path of that length exists.
        """
        if k < 1:
            raise ValueError("path length must be >= 1")
        out: list[Path] = []

        def extend(prefix: tuple[Label, ...]):
            if len(prefix) == k:
                out.append(prefix)
                return
            for e in self.elements:
                if self.strictly_less(prefix[-1], e):
                    extend(prefix + (e,))

        for e in self.elements:
            extend((e,))
        return out

    def paths_between(self, k: int, start: Label, end: Label) -> list[Path]:
        """k-vertex paths with fixed endpoints (k = 1 requires start == end)."""
        return [p for p in self.paths(k) if p[0] == start and p[-1] == end]

    def all_paths(self) -> list[Path]:
        """Every directed path, all lengths, shortest first then lexicographic."""
        out: list[Path] = []
        for k in range(1, self.max_chain_length() + 1):
            out.extend(self.paths(k))
        return out

    def is_path(self, vertices: Sequence[Label]) -> bool:
        vs = tuple(vertices)
        if not vs or len(set(vs)) != len(vs):
            return False
        return all(self.strictly_less(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    # -- JSON wire format ---------------------------------------------------

    def to_json(self) -> dict:
        nonreflexive = sorted([str(a), str(b)] for a, b in self.relation if a != b)
        return {"elements": [str(e) for e in self.elements], "leq": nonreflexive}

    @classmethod
    def from_json(cls, data: dict | str) -> "Poset":
        """Parse ``{"elements": [...], "leq": [[a, b], ...]}``; closure implied."""
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "elements" not in data:
            raise ValueError("poset JSON must be an object with an 'elements' list")
        elements = [str(e) for e in data["elements"]]
        pairs = [(str(a), str(b)) for a, b in data.get("leq", [])]
        return cls.close(elements, pairs)


def chain_poset(n: int) -> Poset:
    """The n-chain on labels 1..n, the index set of upper triangular matrices."""
    if n < 1:
        raise ValueError("chain length must be >= 1")
    return Poset.chain(tuple(range(1, n + 1)))
