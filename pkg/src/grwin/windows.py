"""Kapranov index sets and window generator enumeration."""

from __future__ import annotations

from functools import cache

from .bundles import BundleLabel, normalize
from .partitions import partitions_in_box, size, width


@cache
def gamma_set(d: int, r: int) -> tuple[tuple[int, ...], ...]:
    """Partitions in the (d-r) x r box, in Kapranov's order.

    Ordered by size, then first-row-major within each size, so the list
    starts O, dual-taut, Sym^2, ... as in the rank-2 collection.
    """
    if not 0 < r <= d:
        raise ValueError(f"need 0 < r <= d, got r={r}, d={d}")
    box = partitions_in_box(d - r, r)
    return tuple(sorted(box, key=lambda p: (size(p), tuple(-x for x in p))))


def gamma_split(d: int, r: int) -> tuple[tuple[tuple[int, ...], ...],
                                         tuple[tuple[int, ...], ...]]:
    """Split the index set by width: (< d-r, == d-r)."""
    narrow = []
    wide = []
    for p in gamma_set(d, r):
        (wide if width(p) == d - r else narrow).append(p)
    return tuple(narrow), tuple(wide)


def window_generators(d: int, r: int, k: int) -> list[BundleLabel]:
    """Normalized labels of the k-th window's generating bundles."""
    if not 0 < r < d:
        raise ValueError(f"window generators need 0 < r < d, got r={r}, d={d}")
    return [normalize(delta, k, r) for delta in gamma_set(d, r)]


def in_window(label: BundleLabel, d: int, r: int, k: int) -> bool:
    """Membership of a (normalized) label in the k-th window's generator set.

    The V factor is pure multiplicity and is ignored; bracket twists
    disqualify (those labels live on the correspondence stack).
    """
    if label.side != "S" or label.taut_rank != r or label.bracket_twist:
        return False
    extra = label.det_twist - k
    if extra < 0:
        return False
    # unfold: candidate diagram = schur plus `extra` full-height columns
    padded = label.schur + (0,) * (r - len(label.schur))
    candidate = tuple(x + extra for x in padded) if extra else label.schur
    return width(candidate) <= d - r
