"""Generalized Koszul resolutions and pushforward rules, at the level of
labeled graded complexes (no differentials).

Degree conventions, pinned per display:
  * theorem_resolution lives in degrees -K..0 with the seed term at 0,
  * jshriek_jlower lives in degrees 0..K with the K-th staircase term at 0,
  * unstable_resolution_twisted lives in degrees 0..K-1, leftmost at 0.
Top exterior powers of V are dropped on sight (det V trivialized).
"""

from __future__ import annotations

from dataclasses import dataclass

from .bundles import BundleLabel, GradedComplex, from_nondual, is_zero_schur, normalize
from .partitions import (
    canonical,
    complement,
    height,
    strip,
    staircase,
    width,
)
from .schur import pieri_filtration


@dataclass(frozen=True)
class TorsionCokernel:
    """Symbolic tag for the torsion cokernel sheaf; carries no rank data."""

    delta: tuple[int, ...]
    h_rank: int

    def __str__(self) -> str:
        rows = ",".join(str(x) for x in self.delta)
        return f"push of S^({rows}) of the rank-{self.h_rank} dual bundle"


def _wedge(s: int, d: int) -> tuple[int, ...]:
    # exterior power of V as a column; the top power is trivialized away
    if s > d:
        raise ValueError(f"wedge^{s} of a {d}-dimensional space is zero")
    return () if s in (0, d) else (1,) * s


def theorem_resolution(delta: tuple[int, ...], d: int,
                       r: int) -> tuple[GradedComplex, TorsionCokernel]:
    """The length-K free resolution attached to a seed diagram.

    Terms: S^{delta_k}S^dual ⊗ wedge^{s_k}V in degree -k for k = 1..K and
    the seed Schur power in degree 0, with K = d-r+1.
    """
    delta = canonical(delta)
    if not 0 < r <= d:
        raise ValueError(f"need 0 < r <= d, got r={r}, d={d}")
    if height(delta) >= r:
        raise ValueError(f"height({delta}) must be < {r}")
    if width(delta) > d - r + 1:
        raise ValueError(f"width({delta}) must be <= {d - r + 1}")
    K = d - r + 1
    chain = staircase(delta, r, K)
    items = [(0, normalize(delta, 0, r), 1)]
    for k in range(1, K + 1):
        items.append((-k, normalize(chain.delta(k), 0, r,
                                    v_shape=_wedge(chain.s(k), d)), 1))
    return GradedComplex.from_items(items), TorsionCokernel(delta, r - 1)


def unstable_resolution_twisted(delta_target: tuple[int, ...], d: int,
                                r: int) -> GradedComplex:
    """Direct route for the down-shift on a full-width generator: strip the
    first row, resolve, cancel the leftmost term, twist by O(-1).

    The leftmost term of the seed resolution must normalize to the target
    twisted by O(1); anything else is an internal consistency failure.
    """
    delta_target = canonical(delta_target)
    if not 0 < r < d:
        raise ValueError(f"need 0 < r < d, got r={r}, d={d}")
    if height(delta_target) > r or width(delta_target) != d - r:
        raise ValueError(
            f"{delta_target} is not a full-width box diagram for (d,r)=({d},{r})")
    seed = strip(delta_target, "first-row")
    K = d - r + 1
    chain = staircase(seed, r, K)
    assert chain.s(K) == d, "stripped seed must absorb the full exterior power"
    leftmost = normalize(chain.delta(K), 0, r)
    expected = normalize(delta_target, 1, r)
    assert leftmost == expected, (
        f"input-cancelling term mismatch: {leftmost} != {expected}")
    items = []
    for k in range(K):
        items.append((K - 1 - k, normalize(chain.delta(k), -1, r,
                                           v_shape=_wedge(chain.s(k), d)), 1))
    return GradedComplex.from_items(items)


def jshriek_jlower(delta: tuple[int, ...], d: int, r: int) -> GradedComplex:
    """Shriek-pullback of the pushforward, on the correspondence stack.

    Terms: the non-dual Schur power of the complement diagram eps_k,
    bracket-twisted by d-r, with wedge^{s_k}V, in degree K-k for k = 0..K.
    """
    delta = canonical(delta)
    if not 0 < r <= d:
        raise ValueError(f"need 0 < r <= d, got r={r}, d={d}")
    if height(delta) >= r:
        raise ValueError(f"height({delta}) must be < {r}")
    if width(delta) > d - r + 1:
        raise ValueError(f"width({delta}) must be <= {d - r + 1}")
    K = d - r + 1
    chain = staircase(delta, r, K)
    items = []
    for k in range(K + 1):
        eps = complement(chain.delta(k), d - r + 1, r)
        items.append((K - k, from_nondual(eps, r, bracket_twist=d - r,
                                          v_shape=_wedge(chain.s(k), d)), 1))
    return GradedComplex.from_items(items)


def epsilon_sequence(delta: tuple[int, ...], d: int, r: int) -> list[tuple[int, ...]]:
    """The complement diagrams eps_0..eps_K of the staircase (for tests)."""
    delta = canonical(delta)
    K = d - r + 1
    chain = staircase(delta, r, K)
    return [complement(chain.delta(k), d - r + 1, r) for k in range(K + 1)]


def _h_label(alpha: tuple[int, ...], rank_h: int, det_power: int = 0) -> BundleLabel:
    # S^alpha H ⊗ (det H^dual)^{det_power}, in canonical dual form
    return from_nondual(alpha, rank_h, side="H", extra_twist=det_power)


def _check_pushdown_args(gamma: tuple[int, ...], d: int, r: int, locus: str) -> None:
    if locus not in ("stack", "open"):
        raise ValueError(f"locus must be 'stack' or 'open', got {locus!r}")
    if not 0 < r <= d:
        raise ValueError(f"need 0 < r <= d, got r={r}, d={d}")
    if height(gamma) > r:
        raise ValueError(f"height({gamma}) must be <= {r}")
    if width(gamma) > d - r + 1:
        raise ValueError(
            f"width({gamma}) > {d - r + 1} is outside the pushforward rules")


def pushdown_pi(gamma: tuple[int, ...], d: int, r: int,
                locus: str = "stack") -> GradedComplex:
    """Closed-form pushdown of a Schur power of the rank-r bundle to the
    corank-1 base.

    On the stack locus only the degree-0 piece survives; on the open locus
    a width-(d-r+1) diagram additionally contributes its first-row-stripped
    piece, det-twisted, in degree d-r.
    """
    gamma = canonical(gamma)
    _check_pushdown_args(gamma, d, r, locus)
    rank_h = r - 1
    items = []
    if not is_zero_schur(gamma, rank_h):
        items.append((0, _h_label(gamma, rank_h), 1))
    if locus == "open" and width(gamma) == d - r + 1:
        tail = strip(gamma, "first-row")
        if not is_zero_schur(tail, rank_h):
            items.append((d - r, _h_label(tail, rank_h, det_power=1), 1))
    return GradedComplex.from_items(items)


def pushdown_pi_bruteforce(gamma: tuple[int, ...], d: int, r: int,
                           locus: str = "stack") -> GradedComplex:
    """Oracle: expand through the corank-1 filtration and push each
    determinant-power piece down by the per-power rules."""
    gamma = canonical(gamma)
    _check_pushdown_args(gamma, d, r, locus)
    rank_h = r - 1
    items = []
    for (alpha, t), mult in pieri_filtration(gamma, rank_h).items():
        if t == 0:
            items.append((0, _h_label(alpha, rank_h), mult))
        elif locus == "open" and t == d - r + 1:
            items.append((d - r, _h_label(alpha, rank_h, det_power=1), mult))
        # all other powers push down to zero on their locus
    return GradedComplex.from_items(items)
