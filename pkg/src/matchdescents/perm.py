"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation is represented by a tuple ``word`` of length n with
``word[i-1] == pi(i)``.  All statistics used elsewhere in the library
(descent sets, cycle structure, shuffles) reduce to adjacent comparisons
on this form; cycle notation is an I/O codec only.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]


class ParseError(ValueError):
    """Malformed textual input for a combinatorial object."""


def is_perm(word: Sequence[int]) -> bool:
    """
    Check that word is a permutation of {1, ..., n} where n = len(word).

    >>> [is_perm(w) for w in [(), (1,), (2, 1), (1, 1), (2, 3)]]
    [True, True, True, False, False]
    """
    n = len(word)
    return sorted(word) == list(range(1, n + 1))


def check_perm(word: Sequence[int]) -> Word:
    word = tuple(word)
    if not is_perm(word):
        raise ValueError(f"not a permutation of [n]: {word!r}")
    return word


def identity(n: int) -> Word:
    return tuple(range(1, n + 1))


def inverse(word: Word) -> Word:
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)


def compose(a: Word, b: Word) -> Word:
    """The permutation a∘b, mapping i to a(b(i))."""
    return tuple(a[b[i] - 1] for i in range(len(b)))


@dataclass(frozen=True)
class DescentSet:
    """
    A subset of positions with an explicit ambient size.

    Linear descent sets live in [n-1]; cyclic ones in [n].  Keeping the
    ambient n on the value prevents confusing the two in multiset
    comparisons and makes the mod-n shift well defined.
    """

    n: int
    members: frozenset[int]
    cyclic: bool = False

    def __post_init__(self) -> None:
        bound = self.n if self.cyclic else self.n - 1
        if not all(1 <= i <= bound for i in self.members):
            raise ValueError(f"descent set {set(self.members)} not within [{bound}]")

    def restrict_linear(self) -> "DescentSet":
        """Intersect a cyclic set with [n-1]."""
        return DescentSet(self.n, frozenset(i for i in self.members if i < self.n))

    def shifted(self) -> "DescentSet":
        """1 + members (mod n), staying in {1, ..., n}.  Cyclic sets only."""
        if not self.cyclic:
            raise ValueError("shift is defined for cyclic descent sets")
        return DescentSet(self.n, frozenset(i % self.n + 1 for i in self.members), cyclic=True)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, sorted(self.members))) + "}"


def des(word: Word) -> DescentSet:
    """
    The descent set {i in [n-1] : pi(i) > pi(i+1)}.

    >>> str(des((6, 2, 4, 3, 7, 1, 5, 8)))
    '{1,3,5}'
    """
    n = len(word)
    return DescentSet(n, frozenset(i for i in range(1, n) if word[i - 1] > word[i]))


def cellini_cdes(word: Word) -> DescentSet:
    """
    Cellini's cyclic descent set: descents of the word read cyclically,
    with position n comparing pi(n) against pi(1).

    >>> str(cellini_cdes((3, 2, 1, 4)))
    '{1,2,4}'
    """
    n = len(word)
    members = {i for i in range(1, n) if word[i - 1] > word[i]}
    if n >= 1 and word[n - 1] > word[0]:
        members.add(n)
    return DescentSet(n, frozenset(members), cyclic=True)


def fixed_points(word: Word) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(word, start=1) if v == i)


def cycles(word: Word) -> list[tuple[int, ...]]:
    """Disjoint cycles, each starting at its smallest element, sorted by it."""
    seen = [False] * len(word)
    out = []
    for i in range(1, len(word) + 1):
        if seen[i - 1]:
            continue
        cyc = []
        j = i
        while not seen[j - 1]:
            seen[j - 1] = True
            cyc.append(j)
            j = word[j - 1]
        out.append(tuple(cyc))
    return out


def cycle_type(word: Word) -> tuple[int, ...]:
    """Cycle lengths, sorted non-increasing."""
    return tuple(sorted((len(c) for c in cycles(word)), reverse=True))


def is_involution(word: Word) -> bool:
    return all(word[v - 1] == i for i, v in enumerate(word, start=1))


def conjugate_w0(word: Word) -> Word:
    """Conjugation by the longest permutation w0(i) = n+1-i."""
    n = len(word)
    return tuple(n + 1 - word[n - i] for i in range(1, n + 1))


def standardize(letters: Sequence[int]) -> Word:
    """
    The permutation of [len(letters)] with the same relative order.

    >>> standardize((4, 6, 1, 3))
    (3, 4, 1, 2)
    """
    if len(set(letters)) != len(letters):
        raise ValueError(f"repeated letters in {letters!r}")
    rank = {v: r for r, v in enumerate(sorted(letters), start=1)}
    return tuple(rank[v] for v in letters)


def shuffles(word_a: Sequence[int], word_b: Sequence[int]) -> list[Word]:
    """
    All interleavings of two words on disjoint letter sets, ordered
    lexicographically by the positions taken by word_a.

    The union of the letter sets must be relabelable to an interval; the
    results are returned as raw words (tuples), not standardized.

    >>> shuffles((3, 1, 2), (4,))
    [(3, 1, 2, 4), (3, 1, 4, 2), (3, 4, 1, 2), (4, 3, 1, 2)]
    """
    if set(word_a) & set(word_b):
        raise ValueError("letter sets of the two words overlap")
    n = len(word_a) + len(word_b)
    out = []
    for positions in itertools.combinations(range(n), len(word_a)):
        word = [0] * n
        it_a = iter(word_a)
        it_b = iter(word_b)
        pos_a = set(positions)
        for i in range(n):
            word[i] = next(it_a) if i in pos_a else next(it_b)
        out.append(tuple(word))
    return out


def shuffle_sets(set_a: Iterable[Sequence[int]], set_b: Iterable[Sequence[int]]) -> list[Word]:
    """All shuffles of a word from set_a with a word from set_b."""
    out = []
    for a in set_a:
        for b in set_b:
            out.extend(shuffles(a, b))
    return out


def enumerate_sn(n: int) -> Iterator[Word]:
    """All of S_n in lexicographic order."""
    return iter(itertools.permutations(range(1, n + 1)))


# ---------------------------------------------------------------------------
# Codecs

_ONE_LINE_RE = re.compile(r"^\[\s*(\d+(\s*,\s*\d+)*)?\s*\]$")


def parse_one_line(text: str) -> Word:
    """Parse '[6,2,4,3,7,1,5,8]' into a word."""
    text = text.strip()
    if not _ONE_LINE_RE.match(text):
        raise ParseError(f"bad one-line notation: {text!r}")
    inner = text[1:-1].strip()
    word = tuple(int(t) for t in inner.split(",")) if inner else ()
    return check_perm(word)


def format_one_line(word: Word) -> str:
    return "[" + ",".join(map(str, word)) + "]"


def parse_cycles(text: str, n: int) -> Word:
    """
    Parse cycle notation like '(1,6)(3,4)(5,7)' into a word of size n.
    Fixed points may be omitted or written as singletons.

    >>> parse_cycles("(1,6)(3,4)(5,7)", 8)
    (6, 2, 4, 3, 7, 1, 5, 8)
    """
    text = "".join(text.split())
    if text == "()":
        text = ""
    if not re.fullmatch(r"(\(\d+(,\d+)*\))*", text):
        raise ParseError(f"bad cycle notation: {text!r}")
    word = list(range(1, n + 1))
    seen: set[int] = set()
    for chunk in re.findall(r"\(([^()]*)\)", text):
        entries = [int(t) for t in chunk.split(",")]
        for e in entries:
            if not 1 <= e <= n:
                raise ParseError(f"entry {e} out of range [1,{n}]")
            if e in seen:
                raise ParseError(f"overlapping cycles at {e}")
            seen.add(e)
        for a, b in zip(entries, entries[1:] + entries[:1]):
            word[a - 1] = b
    return tuple(word)


def format_cycles(word: Word) -> str:
    """Cycle notation, omitting fixed points; identity prints as '()'."""
    parts = ["(" + ",".join(map(str, c)) + ")" for c in cycles(word) if len(c) > 1]
    return "".join(parts) if parts else "()"
