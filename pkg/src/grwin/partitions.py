"""Young diagram arithmetic: complements, row/column surgery, staircases.

Partitions are plain tuples of non-increasing positive integers (trailing
zeros trimmed).  All functions treat them as immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


def canonical(rows: Iterable[int]) -> tuple[int, ...]:
    """Validate and canonicalize a row-length sequence.

    Raises ValueError if rows are negative or increase.
    """
    rows = tuple(int(x) for x in rows)
    for i, x in enumerate(rows):
        if x < 0:
            raise ValueError(f"negative row length in {rows}")
        if i > 0 and rows[i - 1] < x:
            raise ValueError(f"row lengths must be non-increasing: {rows}")
    while rows and rows[-1] == 0:
        rows = rows[:-1]
    return rows


def height(p: tuple[int, ...]) -> int:
    return len(p)


def width(p: tuple[int, ...]) -> int:
    return p[0] if p else 0


def size(p: tuple[int, ...]) -> int:
    return sum(p)


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    """True if inner fits inside outer row by row."""
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sum(1 for x in p if x > j) for j in range(width(p)))


def column_height(p: tuple[int, ...], c: int) -> int:
    """Height of column c (1-based) of the diagram."""
    if c < 1:
        raise ValueError("column index is 1-based")
    return sum(1 for x in p if x >= c)


def complement(gamma: tuple[int, ...], w: int, h: int) -> tuple[int, ...]:
    """180-degree rotated complement of gamma inside the w x h rectangle."""
    if w < 0 or h < 0:
        raise ValueError("rectangle dimensions must be non-negative")
    if height(gamma) > h or width(gamma) > w:
        raise ValueError(f"{gamma} does not fit in a {w}x{h} rectangle")
    padded = gamma + (0,) * (h - len(gamma))
    return canonical(w - padded[h - 1 - i] for i in range(h))


def add_full_column(delta: tuple[int, ...], r: int) -> tuple[int, ...]:
    """Add one column of height r on the left (each of the first r rows +1)."""
    if height(delta) > r:
        raise ValueError(f"height({delta}) exceeds column height {r}")
    padded = delta + (0,) * (r - len(delta))
    return canonical(x + 1 for x in padded)


def strip(delta: tuple[int, ...], what: str) -> tuple[int, ...]:
    """Delete the first row or the first column of the diagram."""
    if what == "first-row":
        return canonical(delta[1:])
    if what == "first-column":
        return canonical(x - 1 for x in delta if x > 0)
    raise ValueError(f"unknown strip mode {what!r}")


@dataclass(frozen=True)
class StaircaseResult:
    """Column-filling sequence: steps[k-1] = (delta_k, s_k) for k = 1..K."""

    seed: tuple[int, ...]
    height_param: int
    steps: tuple[tuple[tuple[int, ...], int], ...]

    def delta(self, k: int) -> tuple[int, ...]:
        """delta_k, with delta_0 = seed."""
        return self.seed if k == 0 else self.steps[k - 1][0]

    def s(self, k: int) -> int:
        """Boxes added up to step k (s_0 = 0)."""
        return 0 if k == 0 else self.steps[k - 1][1]

    def __len__(self) -> int:
        return len(self.steps)


def _fill_column(rows: tuple[int, ...], col: int, target: int) -> tuple[int, ...]:
    # grow column `col` to height `target`: rows 1..target get >= col boxes
    padded = list(rows) + [0] * max(0, target - len(rows))
    for i in range(target):
        padded[i] = max(padded[i], col)
    return canonical(padded)


def staircase(seed: tuple[int, ...], r: int, K: int) -> StaircaseResult:
    """Run the column-filling procedure for K steps.

    Step 1 fills column 1 to height r; step k fills column k to one more
    than the height of column k-1 of the seed.  s_k is the total number of
    boxes added after step k.
    """
    seed = canonical(seed)
    if height(seed) >= r:
        raise ValueError(f"seed height {height(seed)} must be < {r}")
    if K < 1:
        raise ValueError("step count must be >= 1")
    steps = []
    cur = seed
    for k in range(1, K + 1):
        target = r if k == 1 else column_height(seed, k - 1) + 1
        cur = _fill_column(cur, k, target)
        steps.append((cur, size(cur) - size(seed)))
    return StaircaseResult(seed=seed, height_param=r, steps=tuple(steps))


def staircase_closed_form(seed: tuple[int, ...], r: int, k: int) -> tuple[int, ...]:
    """Independent closed form for delta_k: insert k below the rows taller
    than column k and add one box to every deeper row."""
    if height(seed) >= r:
        raise ValueError(f"seed height {height(seed)} must be < {r}")
    h_k = column_height(seed, k)
    padded = seed + (0,) * (r - 1 - len(seed))
    return canonical(padded[:h_k] + (k,) + tuple(x + 1 for x in padded[h_k:]))


def partitions_in_box(w: int, h: int) -> list[tuple[int, ...]]:
    """All partitions with width <= w and height <= h."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], maxrow: int, rows_left: int) -> None:
        out.append(prefix)
        if rows_left == 0:
            return
        for x in range(maxrow, 0, -1):
            rec(prefix + (x,), x, rows_left - 1)

    rec((), w, h)
    return out


def partitions_of(n: int, max_height: int | None = None,
                  max_width: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of n, optionally bounded in height and width."""
    if n < 0:
        return []
    maxw = n if max_width is None else min(max_width, n)
    maxh = n if max_height is None else max_height
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, maxrow: int, rows_left: int) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        if rows_left == 0 or maxrow == 0:
            return
        for x in range(min(maxrow, remaining), 0, -1):
            rec(prefix + (x,), remaining - x, x, rows_left - 1)

    rec((), n, maxw, maxh)
    return out


def ascii_diagram(p: tuple[int, ...]) -> str:
    """One '□'-row per partition row; '∅' for the empty diagram."""
    if not p:
        return "∅"
    return "\n".join("□" * x for x in p)


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse a comma-separated row list; empty string means ∅."""
    text = text.strip()
    if not text:
        return ()
    try:
        rows = [int(part) for part in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: expected comma-separated integers")
    return canonical(rows)


def format_partition(p: tuple[int, ...]) -> str:
    return ",".join(str(x) for x in p)
