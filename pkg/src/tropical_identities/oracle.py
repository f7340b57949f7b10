"""Randomized falsification, the independent cross-check for every verdict.

The oracle samples letter assignments in a chosen model, evaluates both sides
of the identity directly, and returns the first verified differing assignment.
It can refute but never prove: silence after all trials is evidence, not a
certificate. Small integer entries suffice in practice because the separating
regions of coefficient-free polynomial families are scale-invariant open
cones.

Sampling is deterministic given the seed: each trial draws from its own
stream keyed by (seed, trial index).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .checking import Witness, matrix_difference_position
from .matrices import TropMatrix, mat_mul
from .models import Bicyclic, Fmim, bicyclic_mul, eval_word, fmim_mul
from .posets import Poset, chain_poset
from .scalars import BOTTOM, TropScalar
from .words import Identity

#: A model is an upper triangular dimension (int), a poset, or a named monoid.
ModelSpec = Union[int, Poset, str]


@dataclass(frozen=True)
class OracleConfig:
    """Trial budget, entry magnitude, bottom density and RNG seed.

    ``entry_range`` of None defaults to max(|left|, |right|) of the identity
    under test. ``bottom_probability`` applies to strictly-above-diagonal
    entries only; diagonals stay finite.
    """

    trials: int = 200
    entry_range: Optional[int] = None
    bottom_probability: float = 0.25
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trial count must be >= 1")
        if self.entry_range is not None and self.entry_range < 1:
            raise ValueError("entry range must be >= 1")
        if not 0 <= self.bottom_probability <= 1:
            raise ValueError("bottom probability must lie in [0, 1]")


def _trial_rng(seed: int, index: int) -> random.Random:
    # Keyed stream per trial: stable across runs and platforms.
    return random.Random(f"{seed}:{index}")


def _sample_matrix(poset: Poset, rng: random.Random, bound: int, p_bottom: float) -> TropMatrix:
    rows = []
    for a in poset.elements:
        row = []
        for b in poset.elements:
            if a == b:
                row.append(TropScalar(rng.randint(-bound, bound)))
            elif poset.strictly_less(a, b) and rng.random() >= p_bottom:
                row.append(TropScalar(rng.randint(-bound, bound)))
            else:
                row.append(BOTTOM)
        rows.append(tuple(row))
    return TropMatrix(poset, tuple(rows))


def random_falsify(
    identity: Identity, model: ModelSpec, cfg: OracleConfig = OracleConfig()
) -> Optional[Witness]:
    """First sampled assignment under which the two sides differ, or None.

    ``model`` is a matrix dimension (upper triangular), a poset, or one of
    "bicyclic" / "fmim". Any returned witness has already been re-verified by
    direct evaluation.
    """
    bound = cfg.entry_range or max(len(identity.left), len(identity.right))
    if isinstance(model, int):
        poset: Optional[Poset] = chain_poset(model)
        tag, n = "ut", model
    elif isinstance(model, Poset):
        poset, tag, n = model, "poset", None
    elif model in ("bicyclic", "fmim"):
        poset, tag, n = None, model, None
    else:
        raise ValueError(f"unknown oracle model {model!r}")

    for trial in range(cfg.trials):
        rng = _trial_rng(cfg.seed, trial)
        if poset is not None:
            assignment = {
                s: _sample_matrix(poset, rng, bound, cfg.bottom_probability)
                for s in identity.alphabet
            }
            left = eval_word(identity.left, assignment, mat_mul)
            right = eval_word(identity.right, assignment, mat_mul)
            if left != right:
                return Witness(
                    tag, n, assignment, left, right,
                    matrix_difference_position(left, right),
                )
        elif tag == "bicyclic":
            assignment = {
                s: Bicyclic(rng.randint(0, bound), rng.randint(0, bound))
                for s in identity.alphabet
            }
            left = eval_word(identity.left, assignment, bicyclic_mul)
            right = eval_word(identity.right, assignment, bicyclic_mul)
            if left != right:
                return Witness(tag, None, assignment, left, right, None)
        else:
            assignment = {}
            for s in identity.alphabet:
                i = rng.randint(0, bound)
                j = rng.randint(0, bound)
                assignment[s] = Fmim(i, j, rng.randint(-j, i))
            left = eval_word(identity.left, assignment, fmim_mul)
            right = eval_word(identity.right, assignment, fmim_mul)
            if left != right:
                return Witness(tag, None, assignment, left, right, None)
    return None
