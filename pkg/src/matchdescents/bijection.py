"""
The composite bijection on involutions with fixed points.

An involution with k fixed points is split into its fixed-point set and
a fixed-point-free core (res), the core is pushed through the
crossing/nesting-swapping involution, and the pair is re-embedded as a
shuffle of the core with an increasing run of the k largest letters
(emb).  Reading off the recording tableau and taking the RS preimage of
its diagonal pair (q) lands back in the involutions with k fixed
points.  The composite transports the geometric descent set to the
standard one and the crossing number to the nesting number.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import matching as matching_mod
from . import oscillating, perm, tableau
from .perm import Word
from .tableau import StandardTableau


@dataclass(frozen=True)
class ShuffleElement:
    """A word in I_{n-k,0} shuffled with the increasing run n-k+1..n."""

    word: Word
    k: int

    def __post_init__(self) -> None:
        perm.check_perm(self.word)
        n = len(self.word)
        k = self.k
        if not 0 <= k <= n or (n - k) % 2 != 0:
            raise ValueError(f"invalid split k={k} for n={n}")
        big_positions = [i for i, v in enumerate(self.word) if v > n - k]
        if [self.word[i] for i in big_positions] != list(range(n - k + 1, n + 1)):
            raise ValueError("large letters do not form an increasing run")
        sigma = self.small_involution()
        if not perm.is_involution(sigma) or perm.fixed_points(sigma):
            raise ValueError("small letters do not standardize to a fixed-point-free involution")

    @property
    def n(self) -> int:
        return len(self.word)

    def small_involution(self) -> Word:
        """The subword of letters <= n-k, standardized."""
        small = tuple(v for v in self.word if v <= self.n - self.k)
        return perm.standardize(small)

    def big_letter_positions(self) -> frozenset[int]:
        return frozenset(i for i, v in enumerate(self.word, start=1) if v > self.n - self.k)


def res(word: Word) -> tuple[frozenset[int], Word]:
    """
    Split an involution into (fixed points, fixed-point-free core): the
    core is the standardization of the restriction to the moved letters.
    """
    if not perm.is_involution(word):
        raise ValueError(f"not an involution: {word}")
    fixed = perm.fixed_points(word)
    moved = [v for i, v in enumerate(word, start=1) if i not in fixed]
    return fixed, perm.standardize(moved)


def emb(fixed: frozenset[int], sigma: Word, n: int) -> ShuffleElement:
    """
    Re-embed: positions in ``fixed`` carry n-k+1..n increasing, the rest
    carry sigma's word on the small letters.
    """
    k = len(fixed)
    if len(sigma) != n - k or not fixed <= frozenset(range(1, n + 1)):
        raise ValueError(f"size mismatch: |J|={k}, |sigma|={len(sigma)}, n={n}")
    word = [0] * n
    for big, pos in enumerate(sorted(fixed), start=n - k + 1):
        word[pos - 1] = big
    small_positions = [i for i in range(1, n + 1) if i not in fixed]
    for pos, v in zip(small_positions, sigma):
        word[pos - 1] = v
    return ShuffleElement(tuple(word), k)


def phi(word: Word) -> ShuffleElement:
    """res, then the crossing/nesting involution on the core, then emb."""
    fixed, sigma = res(word)
    sigma_image = matching_mod.to_involution(
        oscillating.chen_iota(matching_mod.from_involution(sigma))
    )
    return emb(fixed, sigma_image, len(word))


def phi_inverse(t: ShuffleElement) -> Word:
    fixed = t.big_letter_positions()
    sigma_image = matching_mod.to_involution(
        oscillating.chen_iota(matching_mod.from_involution(t.small_involution()))
    )
    n = t.n
    word = [0] * n
    for pos in fixed:
        word[pos - 1] = pos
    small_positions = [i for i in range(1, n + 1) if i not in fixed]
    for a, b in zip(small_positions, (small_positions[v - 1] for v in sigma_image)):
        word[a - 1] = b
    return perm.check_perm(word)


def q_map(t: ShuffleElement) -> Word:
    """The RS preimage of the diagonal pair of the recording tableau."""
    q_tab = tableau.rs_pair_q(t.word)
    return tableau.rs_inverse(q_tab, q_tab)


def q_map_inverse(word: Word) -> ShuffleElement:
    """Invert the recording-tableau map on an involution with k fixed points."""
    if not perm.is_involution(word):
        raise ValueError(f"not an involution: {word}")
    q_tab = tableau.rs_pair_q(word)
    shuffle_word = tableau.q_inverse_shuffle(q_tab)
    return ShuffleElement(shuffle_word, len(perm.fixed_points(word)))


def iota_hat(word: Word) -> Word:
    """The composite bijection; preserves the fixed-point count and maps
    the geometric descent set / crossing number of the input to the
    standard descent set / nesting number of the output."""
    return q_map(phi(word))


def iota_hat_inverse(word: Word) -> Word:
    return phi_inverse(q_map_inverse(word))


def h_map(word: Word) -> StandardTableau:
    """Recording tableau of the composite image; a bijection from
    involutions with k fixed points to tableaux with k odd columns."""
    return tableau.rs_pair_q(iota_hat(word))


def h_map_inverse(t: StandardTableau) -> Word:
    return iota_hat_inverse(tableau.rs_inverse(t, t))


def shuffle_cr_ne(t: ShuffleElement) -> tuple[int, int]:
    """Crossing and nesting numbers of the standardized small-letter core."""
    core = matching_mod.from_involution(t.small_involution())
    return matching_mod.crossing_number(core), matching_mod.nesting_number(core)
