"""Twisted Weyl action on GL(r) weights and the cohomology classifier.

Weights are integer tuples of length r.  Permutations are tuples p acting
by (p.v)[i] = v[p[i]], so slot p[i] of the input lands in slot i.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .partitions import canonical, height


@dataclass(frozen=True)
class Dominant:
    pass


@dataclass(frozen=True)
class Regular:
    w: tuple[int, ...]
    length: int
    dominant_rep: tuple[int, ...]


@dataclass(frozen=True)
class NonRegular:
    pass


BwbClass = Dominant | Regular | NonRegular


def identity_perm(r: int) -> tuple[int, ...]:
    return tuple(range(r))


def apply_perm(w: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(v[w[i]] for i in range(len(w)))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Composite with apply(compose(p, q), v) == apply(p, apply(q, v))."""
    return tuple(q[p[i]] for i in range(len(p)))


def inversions(w: tuple[int, ...]) -> int:
    """Coxeter length: inversion count of the one-line word."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w))
               if w[i] > w[j])


def rho(r: int) -> tuple[int, ...]:
    return tuple(range(r, 0, -1))


def twisted_action(w: tuple[int, ...], alpha: tuple[int, ...]) -> tuple[int, ...]:
    """w . alpha = w(alpha + rho) - rho."""
    if len(w) != len(alpha):
        raise ValueError(f"length mismatch: |w|={len(w)}, |alpha|={len(alpha)}")
    r = len(alpha)
    shifted = tuple(alpha[i] + r - i for i in range(r))
    moved = apply_perm(w, shifted)
    return tuple(moved[i] - (r - i) for i in range(r))


def classify(alpha: tuple[int, ...]) -> BwbClass:
    """Classify a weight under the twisted Weyl action.

    NonRegular iff alpha + rho has a repeated entry; Dominant iff alpha is
    already non-increasing; otherwise Regular with the unique sorting
    permutation, its inversion count, and the dominant representative.
    """
    r = len(alpha)
    shifted = tuple(alpha[i] + r - i for i in range(r))
    if len(set(shifted)) < r:
        return NonRegular()
    if all(alpha[i] >= alpha[i + 1] for i in range(r - 1)):
        return Dominant()
    w = tuple(sorted(range(r), key=lambda i: -shifted[i]))
    return Regular(w=w, length=inversions(w), dominant_rep=twisted_action(w, alpha))


def classify_bruteforce(alpha: tuple[int, ...]) -> BwbClass:
    """Oracle: scan all r! permutations for sorters of alpha + rho."""
    r = len(alpha)
    shifted = tuple(alpha[i] + r - i for i in range(r))
    sorters = []
    for w in permutations(range(r)):
        moved = apply_perm(w, shifted)
        if all(moved[i] > moved[i + 1] for i in range(r - 1)):
            sorters.append(w)
    if not sorters:
        return NonRegular()
    assert len(sorters) == 1
    w = sorters[0]
    if w == identity_perm(r):
        return Dominant()
    return Regular(w=w, length=inversions(w), dominant_rep=twisted_action(w, alpha))


def bwb_cohomology(delta: tuple[int, ...], i: int,
                   r: int) -> tuple[int, tuple[int, ...]] | None:
    """Cohomology of the i-th dual-quotient power twisted by a Schur power
    of the corank-1 sub-bundle on GL(r)/P.

    Returns (degree, shape) for the single non-vanishing group, or None.
    """
    delta = canonical(delta)
    if height(delta) > r - 1:
        raise ValueError(f"height({delta}) must be <= {r - 1}")
    if i < 0:
        raise ValueError("power must be non-negative")
    alpha = delta + (0,) * (r - 1 - len(delta)) + (i,)
    cls = classify(alpha)
    if isinstance(cls, NonRegular):
        return None
    if isinstance(cls, Dominant):
        return 0, canonical(alpha)
    return cls.length, canonical(cls.dominant_rep)
