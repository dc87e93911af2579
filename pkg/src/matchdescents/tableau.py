"""
Integer partitions, standard Young tableaux, Robinson-Schensted in both
directions, and jeu-de-taquin slides.

Shapes are tuples of weakly decreasing positive row lengths.  Tableaux
are stored row-major in English notation, cells addressed (row, column)
1-based.  A tableau need not be filled with 1..n: intermediate tableaux
appearing in insertion/deletion sequences carry arbitrary distinct
positive labels, with the same strict row/column order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import perm
from .perm import DescentSet, ParseError, Word

Shape = tuple[int, ...]


def check_shape(parts: Sequence[int]) -> Shape:
    parts = tuple(parts)
    if any(p <= 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not a partition: {parts!r}")
    return parts


def height(shape: Shape) -> int:
    return len(shape)


def transpose_shape(shape: Shape) -> Shape:
    """
    The conjugate partition (column lengths).

    >>> transpose_shape((4, 3, 2))
    (3, 3, 2, 1)
    """
    if not shape:
        return ()
    return tuple(sum(1 for p in shape if p >= c) for c in range(1, shape[0] + 1))


def odd_cols(shape: Shape) -> int:
    """Number of columns of odd length."""
    return sum(1 for c in transpose_shape(shape) if c % 2 == 1)


def partitions(n: int) -> Iterator[Shape]:
    """All partitions of n, in reverse lexicographic order."""

    def gen(remaining: int, bound: int, prefix: tuple[int, ...]) -> Iterator[Shape]:
        if remaining == 0:
            yield prefix
            return
        for part in range(min(bound, remaining), 0, -1):
            yield from gen(remaining - part, part, prefix + (part,))

    yield from gen(n, n, ())


Cell = tuple[int, int]


@dataclass(frozen=True)
class StandardTableau:
    """A filling with distinct entries, strictly increasing in rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        check_shape(tuple(len(r) for r in self.rows))
        entries = [e for row in self.rows for e in row]
        if len(set(entries)) != len(entries):
            raise ValueError("repeated entries in tableau")
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row not increasing: {row}")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("column not increasing")

    @property
    def shape(self) -> Shape:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, cell: Cell) -> int:
        r, c = cell
        return self.rows[r - 1][c - 1]

    def find(self, x: int) -> Cell:
        for r, row in enumerate(self.rows, start=1):
            for c, e in enumerate(row, start=1):
                if e == x:
                    return (r, c)
        raise ValueError(f"{x} not in tableau")

    def entries(self) -> frozenset[int]:
        return frozenset(e for row in self.rows for e in row)

    def __str__(self) -> str:
        return format_tableau(self)


EMPTY_TABLEAU = StandardTableau(())


def from_rows(rows: Sequence[Sequence[int]]) -> StandardTableau:
    return StandardTableau(tuple(tuple(r) for r in rows))


def des(t: StandardTableau) -> DescentSet:
    """
    Descents of a standard tableau on {1..n}: entries whose successor
    sits in a strictly lower row.
    """
    n = t.size
    if t.entries() != frozenset(range(1, n + 1)):
        raise ValueError("descent set requires entries 1..n")
    row_of = {t.entry((r, c)): r for r in range(1, len(t.rows) + 1) for c in range(1, len(t.rows[r - 1]) + 1)}
    return DescentSet(n, frozenset(i for i in range(1, n) if row_of[i + 1] > row_of[i]))


def rs_insert(t: StandardTableau, x: int) -> tuple[StandardTableau, Cell]:
    """
    Robinson-Schensted row insertion of x, returning the new tableau and
    the cell added to the shape.
    """
    if x in t.entries():
        raise ValueError(f"{x} already present")
    rows = [list(r) for r in t.rows]
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            cell = (r + 1, 1)
            break
        row = rows[r]
        # bump the smallest entry larger than x, or append at the end
        bump_idx = next((i for i, e in enumerate(row) if e > x), None)
        if bump_idx is None:
            row.append(x)
            cell = (r + 1, len(row))
            break
        x, row[bump_idx] = row[bump_idx], x
        r += 1
    return from_rows(rows), cell


def reverse_rs_insert(t: StandardTableau, corner: Cell) -> tuple[StandardTableau, int]:
    """
    Undo a row insertion that ended at the given outer corner: unbump
    upward and return (smaller tableau, expelled letter).
    """
    r, c = corner
    if r < 1 or r > len(t.rows) or c != len(t.rows[r - 1]):
        raise ValueError(f"{corner} is not an outer corner")
    if r < len(t.rows) and len(t.rows[r]) >= c:
        raise ValueError(f"{corner} is not an outer corner")
    rows = [list(row) for row in t.rows]
    x = rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    for row in reversed(rows[: r - 1]):
        # replace the largest entry smaller than x
        i = max(i for i, e in enumerate(row) if e < x)
        x, row[i] = row[i], x
    return from_rows(rows), x


def rs_pair(word: Word) -> tuple[StandardTableau, StandardTableau]:
    """The RS insertion and recording tableaux of a permutation."""
    p = EMPTY_TABLEAU
    q_rows: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        p, (r, c) = rs_insert(p, x)
        if r > len(q_rows):
            q_rows.append([])
        q_rows[r - 1].append(step)
    return p, from_rows(q_rows)


def rs_pair_p(word: Word) -> StandardTableau:
    return rs_pair(word)[0]


def rs_pair_q(word: Word) -> StandardTableau:
    return rs_pair(word)[1]


def rs_inverse(p_tab: StandardTableau, q_tab: StandardTableau) -> Word:
    """
    The unique permutation whose RS pair is (p_tab, q_tab).  Both must
    be standard of the same shape with entries 1..n.
    """
    if p_tab.shape != q_tab.shape:
        raise ValueError("shape mismatch")
    n = q_tab.size
    if q_tab.entries() != frozenset(range(1, n + 1)):
        raise ValueError("recording tableau must hold 1..n")
    word = [0] * n
    p = p_tab
    for step in range(n, 0, -1):
        corner = q_tab.find(step)
        p, x = reverse_rs_insert(p, corner)
        word[step - 1] = x
    return perm.check_perm(word)


def jdt_delete(t: StandardTableau, x: int) -> StandardTableau:
    """
    Remove the cell holding x and close the hole with forward
    jeu-de-taquin slides (the smaller of the right/below neighbors moves
    in; a lone neighbor moves unconditionally).
    """
    r, c = t.find(x)
    rows = [list(row) for row in t.rows]
    while True:
        right = rows[r - 1][c] if c < len(rows[r - 1]) else None
        below = rows[r][c - 1] if r < len(rows) and len(rows[r]) >= c else None
        if right is None and below is None:
            break
        if below is None or (right is not None and right < below):
            rows[r - 1][c - 1] = right
            c += 1
        else:
            rows[r - 1][c - 1] = below
            r += 1
    rows[r - 1].pop()
    if not rows[r - 1]:
        rows.pop()
    return from_rows(rows)


def reverse_jdt_place(t: StandardTableau, x: int, corner: Cell) -> StandardTableau:
    """
    Inverse of jdt_delete: open a hole at the given outer corner, slide
    it inward past larger entries, and write x into it.
    """
    r, c = corner
    shape = t.shape
    enlarged = list(shape)
    if r == len(shape) + 1:
        if c != 1:
            raise ValueError(f"invalid corner {corner}")
        enlarged.append(1)
    elif 1 <= r <= len(shape) and c == shape[r - 1] + 1:
        enlarged[r - 1] += 1
        check_shape(enlarged)
    else:
        raise ValueError(f"invalid corner {corner}")
    if x in t.entries():
        raise ValueError(f"{x} already present")
    rows = [list(row) for row in t.rows]
    if r > len(rows):
        rows.append([])
    rows[r - 1].append(0)  # the hole
    while True:
        left = rows[r - 1][c - 2] if c > 1 else None
        above = rows[r - 2][c - 1] if r > 1 else None
        candidates = [v for v in (left, above) if v is not None and v > x]
        if not candidates:
            break
        if above is not None and above > x and (left is None or above >= left):
            rows[r - 1][c - 1] = above
            r -= 1
        else:
            rows[r - 1][c - 1] = left
            c -= 1
        # open the hole at the new position
        rows[r - 1][c - 1] = 0
    rows[r - 1][c - 1] = x
    return from_rows(rows)


def q_inverse_shuffle(q_tab: StandardTableau) -> Word:
    """
    Invert the recording-tableau map on shuffles of a fixed-point-free
    involution with a trailing increasing run of large letters.

    Given a standard tableau with k odd columns, recover the unique word
    tau in I_{n-k,0} shuffled with [n-k+1..n] whose recording tableau it
    is: k reverse insertions from the bottoms of the rightmost odd
    columns yield the positions of the large letters, the standardized
    residue determines the small involution.
    """
    n = q_tab.size
    if q_tab.entries() != frozenset(range(1, n + 1)):
        raise ValueError("tableau must hold 1..n")
    k = odd_cols(q_tab.shape)
    t = q_tab
    big_positions: list[int] = []  # tau^{-1}(n), tau^{-1}(n-1), ...
    for _ in range(k):
        cols = transpose_shape(t.shape)
        col = max(c for c, length in enumerate(cols, start=1) if length % 2 == 1)
        t, pos = reverse_rs_insert(t, (cols[col - 1], col))
        big_positions.append(pos)
    # residue: the P tableau of tau^{-1} restricted to the small letters
    residue_word = perm.standardize(tuple(e for row in t.rows for e in row))
    rank = {v: r for r, v in zip(residue_word, (e for row in t.rows for e in row))}
    q_sigma = from_rows(tuple(tuple(rank[e] for e in row) for row in t.rows))
    sigma = rs_inverse(q_sigma, q_sigma)
    if not perm.is_involution(sigma) or perm.fixed_points(sigma):
        raise ValueError("residue tableau does not encode a fixed-point-free involution")
    word = [0] * n
    for offset, pos in enumerate(big_positions):
        word[pos - 1] = n - offset
    small_positions = [i for i in range(1, n + 1) if word[i - 1] == 0]
    for pos, v in zip(small_positions, sigma):
        word[pos - 1] = v
    return perm.check_perm(word)


# ---------------------------------------------------------------------------
# Enumeration

def enumerate_syt(shape: Shape) -> Iterator[StandardTableau]:
    """All standard Young tableaux of a shape, in a fixed order."""
    shape = check_shape(shape)
    n = sum(shape)

    def gen(rows: list[list[int]], step: int) -> Iterator[StandardTableau]:
        if step > n:
            yield from_rows(rows)
            return
        for r in range(len(shape)):
            c = len(rows[r])
            if c >= shape[r]:
                continue
            if r > 0 and len(rows[r - 1]) <= c:
                continue
            rows[r].append(step)
            yield from gen(rows, step + 1)
            rows[r].pop()

    yield from gen([[] for _ in shape], 1)


def enumerate_syt_n(n: int) -> Iterator[StandardTableau]:
    for shape in partitions(n):
        yield from enumerate_syt(shape)


def enumerate_syt_nk(n: int, k: int) -> Iterator[StandardTableau]:
    """Tableaux of size n with exactly k odd columns."""
    if (n - k) % 2 != 0 or not 0 <= k <= n:
        raise ValueError(f"invalid (n, k) = ({n}, {k})")
    for shape in partitions(n):
        if odd_cols(shape) == k:
            yield from enumerate_syt(shape)


def enumerate_syt_nkj(n: int, k: int, j: int) -> Iterator[StandardTableau]:
    """Tableaux with k odd columns and height in {2j, 2j+1}."""
    if (n - k) % 2 != 0 or not 0 <= k <= n or not 0 <= j <= (n - k) // 2:
        raise ValueError(f"invalid (n, k, j) = ({n}, {k}, {j})")
    for shape in partitions(n):
        if odd_cols(shape) == k and 2 * j <= height(shape) <= 2 * j + 1:
            yield from enumerate_syt(shape)


def hook_length_count(shape: Shape) -> int:
    """|SYT(shape)| via the hook length formula."""
    shape = check_shape(shape)
    cols = transpose_shape(shape)
    n = sum(shape)
    num = 1
    for i in range(2, n + 1):
        num *= i
    den = 1
    for r, row_len in enumerate(shape, start=1):
        for c in range(1, row_len + 1):
            den *= (row_len - c) + (cols[c - 1] - r) + 1
    return num // den


# ---------------------------------------------------------------------------
# Codecs: rows separated by '/', entries by commas, e.g. '1,2,4,6/3,5,8/7'

def parse_tableau(text: str) -> StandardTableau:
    try:
        rows = tuple(tuple(int(e) for e in chunk.split(",")) for chunk in text.strip().split("/"))
    except ValueError as exc:
        raise ParseError(f"bad tableau text: {text!r}") from exc
    try:
        return from_rows(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_tableau(t: StandardTableau) -> str:
    return "/".join(",".join(map(str, row)) for row in t.rows)


def parse_shape(text: str) -> Shape:
    try:
        return check_shape(tuple(int(e) for e in text.strip().split(","))) if text.strip() else ()
    except ValueError as exc:
        raise ParseError(f"bad shape text: {text!r}") from exc


def format_shape(shape: Shape) -> str:
    return ",".join(map(str, shape))
