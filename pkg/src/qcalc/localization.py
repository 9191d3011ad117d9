"""Restrictions of Schubert and Schubert-cell classes at the fixed point
w0 * block-w0, and the two ratio formulas built from them.

The grid word is the reduced word for w0 * block-w0 spelled by the cells
strictly above the block antidiagonal (letter s_{q+p-1} at cell (q, p)),
read rows bottom to top and west to east within a row.  Roots are
transported by the inverse partial product acting on the subscripts of
the concatenated alphabet z, where z_q is the variable labeling row q;
with that convention the root at a grid cell is exactly its row label
minus its column label.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import blockperm
from .blockperm import (
    BlockStructure,
    composite,
    identity,
    length,
    regions,
)
from .poly import Poly, Variable, exact_divide, xvar
from .quiver import Dims, RankArray, hom_rank_array


class NotReducedWord(Exception):
    pass


@dataclass(frozen=True)
class Word:
    """A word in simple transpositions with the alphabet it restricts in."""

    letters: tuple[int, ...]
    zvars: tuple[Variable, ...]  # z_1 .. z_d
    cells: tuple | None = None  # (q, p) tags when grid-derived

    @property
    def d(self) -> int:
        return len(self.zvars)

    def value(self) -> tuple:
        return composite(self.letters, self.d)


def generic_word(letters: tuple[int, ...], d: int) -> Word:
    """A word over the flat alphabet z_q = x^0_q, for convention tests."""
    return Word(tuple(letters), tuple(xvar(0, q) for q in range(1, d + 1)))


@lru_cache(maxsize=None)
def grid_word(dims: Dims) -> Word:
    """The strict-region word; its value is w0 * block-w0."""
    bs = BlockStructure(dims)
    cells = sorted(regions(dims).strict_cells, key=lambda c: (-c[0], c[1]))
    letters = tuple(q + p - 1 for q, p in cells)
    zvars = tuple(bs.row_var(q) for q in range(1, dims.d + 1))
    return Word(letters, zvars, tuple(cells))


def roots(word: Word) -> list[Poly]:
    """The root beta_j attached to each word position.

    beta_j is the inverse of the partial product of the first j-1
    letters, acting on the subscripts of z_{t_j} - z_{t_j + 1}.
    """
    uinv = list(identity(word.d))
    out = []
    for t in word.letters:
        out.append(Poly.var(word.zvars[uinv[t - 1] - 1]) - Poly.var(word.zvars[uinv[t] - 1]))
        uinv[t - 1], uinv[t] = uinv[t], uinv[t - 1]
    return out


def _require_reduced(word: Word):
    if length(word.value()) != len(word.letters):
        raise NotReducedWord(f"word {word.letters} is not reduced")


def _factored_sum(
    word: Word, targets: frozenset, reduced: bool
) -> tuple[tuple[int, ...], Poly]:
    """The subword sum with its forced positions kept as separate factors.

    Returns (common, rest): common lists the positions taken by every
    contributing subset, and rest is the sum over subsets of the product
    of the remaining roots (h-weighted per skipped position when not
    reduced), so the full sum is rest times the product of the common
    roots.  Keeping the forced block factored makes the ratio formulas
    cancel it without ever expanding it.
    """
    subsets = [
        J
        for J, _ in blockperm.subword_subsets(
            word.letters, word.d, targets, reduced
        )
    ]
    if not subsets:
        return (), Poly.zero()
    common = frozenset(subsets[0]).intersection(*subsets[1:])
    betas = roots(word)
    hbar = Poly.hbar()
    L = len(word.letters)
    total = Poly.zero()
    for J in subsets:
        term = Poly.one() if reduced else hbar ** (L - len(J))
        for j in J:
            if j not in common:
                term = term * betas[j]
        total = total + term
    return tuple(sorted(common)), total


def _subword_sum(word: Word, targets: frozenset, reduced: bool) -> Poly:
    """Sum over position subsets whose ordered product lands in targets.

    Reduced mode takes products of reduced subwords only; otherwise each
    skipped position contributes a factor of h.
    """
    common, rest = _factored_sum(word, targets, reduced)
    betas = roots(word)
    for j in common:
        rest = rest * betas[j]
    return rest


def ajs_billey(v: tuple, word: Word) -> Poly:
    """Restriction of the Schubert class of v at the word's value: the sum
    over reduced subwords for v of the product of their roots."""
    _require_reduced(word)
    return _subword_sum(word, frozenset([tuple(v)]), reduced=True)


def csm_restriction(v: tuple, word: Word) -> Poly:
    """Restriction of the CSM class of the Schubert cell of v: the sum over
    all subwords with ordered product v, h-weighted by skipped letters."""
    _require_reduced(word)
    return _subword_sum(word, frozenset([tuple(v)]), reduced=False)


def _ratio(dims: Dims, targets: frozenset, reduced: bool) -> Poly:
    """A subword sum divided by the Hom-orbit restriction.

    Both polynomials are products of forced-position roots times small
    sums, so the quotient cancels shared positions factor by factor and
    only divides out what is left; exact_divide still certifies that
    the division is exact.
    """
    word = grid_word(dims)
    num_common, num_rest = _factored_sum(word, targets, reduced)
    den_common, den_rest = _hom_factored(dims)
    betas = roots(word)
    den_set = frozenset(den_common)
    for j in num_common:
        if j not in den_set:
            num_rest = num_rest * betas[j]
    num_set = frozenset(num_common)
    for j in den_common:
        if j not in num_set:
            num_rest = exact_divide(num_rest, betas[j])
    if den_rest != Poly.one():
        num_rest = exact_divide(num_rest, den_rest)
    return num_rest


def quiver_poly_ratio(r: RankArray) -> Poly:
    """Restriction of [X_{z(r)}] divided by that of [X_{z(Hom)}]."""
    targets = frozenset([blockperm.zelevinsky_permutation(r)])
    return _ratio(r.dims, targets, reduced=True)


def csm_ratio(r: RankArray) -> Poly:
    """Sum of cell restrictions over perm(r), divided by the Hom class."""
    return _ratio(r.dims, frozenset(blockperm.perm_set(r)), reduced=False)


@lru_cache(maxsize=None)
def _hom_factored(dims: Dims) -> tuple[tuple[int, ...], Poly]:
    word = grid_word(dims)
    z = blockperm.zelevinsky_permutation(hom_rank_array(dims))
    return _factored_sum(word, frozenset([z]), reduced=True)


def _hom_restriction(dims: Dims) -> Poly:
    """Restriction of [X_{z(Hom)}] at the grid word's value, expanded."""
    common, rest = _hom_factored(dims)
    betas = roots(grid_word(dims))
    for j in common:
        rest = rest * betas[j]
    return rest
