"""Symbolic equivariant bundle labels and graded complexes.

A label stands for S^{schur}(taut)^dual ⊗ O(det_twist) ⊗ S^{v_shape}V, with
an optional extra O<bracket_twist> factor for labels living on the
correspondence stack (S-side Schur power carrying a second, corank-1 side
determinant twist).  On the H side the det_twist itself is the <k> twist.

Canonical form keeps height(schur) < taut_rank by folding full-height
columns into the determinant twist.  det V is globally trivialized, so
builders drop top exterior powers of V before constructing labels.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator

from .partitions import canonical, complement, height, width
from .schur import schur_dimension


@dataclass(frozen=True)
class StackParams:
    d: int
    r: int

    def __post_init__(self) -> None:
        if not 0 < self.r <= self.d:
            raise ValueError(f"need 0 < r <= d, got r={self.r}, d={self.d}")

    @property
    def sigma(self) -> int:
        # relative-dimension gap between the two correspondence legs
        return 2 * (self.d - self.r) + 1


@dataclass(frozen=True, order=True)
class BundleLabel:
    schur: tuple[int, ...]
    taut_rank: int
    det_twist: int
    side: str = "S"
    v_shape: tuple[int, ...] = ()
    bracket_twist: int = 0

    def __post_init__(self) -> None:
        if self.side not in ("S", "H"):
            raise ValueError(f"side must be 'S' or 'H', got {self.side!r}")
        if self.taut_rank < 0:
            raise ValueError("taut_rank must be non-negative")
        if self.taut_rank and height(self.schur) >= self.taut_rank:
            raise ValueError(
                f"label not canonical: height({self.schur}) >= rank {self.taut_rank}")
        if self.taut_rank == 0 and (self.schur or self.det_twist):
            raise ValueError("rank-0 side carries only the trivial label")
        if self.side == "H" and self.bracket_twist:
            raise ValueError("bracket twist is redundant on the H side")


def is_zero_schur(schur: tuple[int, ...], taut_rank: int) -> bool:
    """A Schur power of a rank-n bundle vanishes above height n."""
    return height(schur) > taut_rank


def normalize(schur: Iterable[int], det_twist: int, taut_rank: int,
              side: str = "S", v_shape: Iterable[int] = (),
              bracket_twist: int = 0) -> BundleLabel:
    """Fold full-height columns into the determinant twist.

    Raises on labels of vanishing bundles (height > rank); callers filter
    those out first.
    """
    schur = canonical(schur)
    v_shape = canonical(v_shape)
    if is_zero_schur(schur, taut_rank):
        raise ValueError(
            f"S^{schur} of a rank-{taut_rank} bundle is zero; drop the term")
    if taut_rank == 0:
        return BundleLabel((), 0, 0, side, v_shape, bracket_twist)
    if height(schur) == taut_rank:
        c = schur[taut_rank - 1]
        schur = canonical(x - c for x in schur)
        det_twist += c
    return BundleLabel(schur, taut_rank, det_twist, side, v_shape, bracket_twist)


def from_nondual(gamma: Iterable[int], taut_rank: int, side: str = "S",
                 v_shape: Iterable[int] = (), bracket_twist: int = 0,
                 extra_twist: int = 0) -> BundleLabel:
    """Label for the Schur power S^gamma(taut) of the non-dual bundle.

    Uses the rectangle complement: S^gamma(taut) equals the complement
    Schur power of the dual twisted by (det taut^dual)^{-width}.
    """
    gamma = canonical(gamma)
    if is_zero_schur(gamma, taut_rank):
        raise ValueError(
            f"S^{gamma} of a rank-{taut_rank} bundle is zero; drop the term")
    w = width(gamma)
    if taut_rank == 0:
        return BundleLabel((), 0, 0, side, canonical(v_shape), bracket_twist)
    return normalize(complement(gamma, w, taut_rank), extra_twist - w,
                     taut_rank, side, v_shape, bracket_twist)


def to_nondual(label: BundleLabel, w: int) -> tuple[tuple[int, ...], int]:
    """Inverse of from_nondual: (gamma, leftover det twist) boxed at width w."""
    if width(label.schur) > w:
        raise ValueError(f"{label.schur} wider than box width {w}")
    gamma = complement(label.schur, w, label.taut_rank)
    return gamma, label.det_twist + w


def rank(label: BundleLabel, params: StackParams) -> int:
    return (schur_dimension(label.schur, label.taut_rank)
            * schur_dimension(label.v_shape, params.d))


def relabel_to_x(label: BundleLabel) -> BundleLabel:
    """Rename an H-side label to the ambient-stack alphabet (H -> S, <k> -> (k))."""
    if label.side != "H":
        raise ValueError("relabel_to_x expects an H-side label")
    return replace(label, side="S")


def expand_v(label: BundleLabel, d: int) -> tuple[BundleLabel, int]:
    """Replace the V factor by its multiplicity: (stripped label, dim)."""
    mult = schur_dimension(label.v_shape, d)
    return replace(label, v_shape=()), mult


@dataclass(frozen=True)
class GradedComplex:
    """Map homological degree -> multiset of labels; no differentials."""

    terms: tuple[tuple[int, tuple[tuple[BundleLabel, int], ...]], ...] = field(default=())

    @staticmethod
    def from_items(items: Iterable[tuple[int, BundleLabel, int]]) -> "GradedComplex":
        by_degree: dict[int, Counter] = {}
        ranks = set()
        for degree, label, mult in items:
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError("multiplicities are positive")
            ranks.add((label.side, label.taut_rank))
            by_degree.setdefault(degree, Counter())[label] += mult
        if len({r for _, r in ranks}) > 1:
            raise ValueError(f"labels mix tautological ranks: {sorted(ranks)}")
        packed = tuple(
            (degree, tuple(sorted(by_degree[degree].items())))
            for degree in sorted(by_degree))
        return GradedComplex(packed)

    def items(self) -> Iterator[tuple[int, BundleLabel, int]]:
        for degree, labels in self.terms:
            for label, mult in labels:
                yield degree, label, mult

    def degrees(self) -> list[int]:
        return [degree for degree, _ in self.terms]

    def at(self, degree: int) -> Counter:
        for deg, labels in self.terms:
            if deg == degree:
                return Counter(dict(labels))
        return Counter()

    def __len__(self) -> int:
        return len(self.terms)

    def map_labels(self, fn) -> "GradedComplex":
        return GradedComplex.from_items(
            (degree, fn(label), mult) for degree, label, mult in self.items())

    def tensor_det(self, m: int) -> "GradedComplex":
        """Tensor by the m-th power of the side determinant line."""
        return self.map_labels(lambda lb: replace(lb, det_twist=lb.det_twist + m))

    def shift(self, n: int) -> "GradedComplex":
        return GradedComplex.from_items(
            (degree - n, label, mult) for degree, label, mult in self.items())

    def expand_multiplicities(self, d: int) -> "GradedComplex":
        """Drop V factors, multiplying each term by its V-dimension."""
        out = []
        for degree, label, mult in self.items():
            stripped, dim = expand_v(label, d)
            if dim:
                out.append((degree, stripped, mult * dim))
        return GradedComplex.from_items(out)

    def alternating_rank_sum(self, params: StackParams) -> int:
        return sum((-1) ** degree * mult * rank(label, params)
                   for degree, label, mult in self.items())


def label_to_json(label: BundleLabel, multiplicity: int | None = None) -> dict:
    doc: dict = {
        "schur": list(label.schur),
        "twist": label.det_twist,
        "side": label.side,
        "v_shape": list(label.v_shape),
        "rank": label.taut_rank,
    }
    if label.bracket_twist:
        doc["bracket"] = label.bracket_twist
    if multiplicity is not None:
        doc["multiplicity"] = multiplicity
    return doc


def label_from_json(doc: dict) -> BundleLabel:
    return BundleLabel(
        schur=canonical(doc["schur"]),
        taut_rank=doc["rank"],
        det_twist=doc["twist"],
        side=doc["side"],
        v_shape=canonical(doc["v_shape"]),
        bracket_twist=doc.get("bracket", 0),
    )


def complex_to_json(cx: GradedComplex) -> list[dict]:
    return [
        {"degree": degree,
         "terms": [label_to_json(label, mult) for label, mult in labels]}
        for degree, labels in cx.terms
    ]


def complex_from_json(doc: list[dict]) -> GradedComplex:
    items = []
    for entry in doc:
        for term in entry["terms"]:
            items.append((entry["degree"], label_from_json(term),
                          term["multiplicity"]))
    return GradedComplex.from_items(items)


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, sort_keys=False)
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)
