"""Permutations of {1..d} with the block structure of a dimension vector.

Rows of the d x d grid are grouped into blocks of sizes r_0..r_n top to
bottom.  Column blocks are labeled right to left: the rightmost block
has index 0 and size r_0, so block column j has size r_j.  Composition
is fixed once and for all as (v o w)(k) = v(w(k)); a word of simple
transpositions (t_1, ..., t_L) composes first-applied-first, i.e. its
value is s_{t_L} o ... o s_{t_1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, permutations

from .quiver import Dims, RankArray, hom_rank_array, lace_array

Permutation = tuple  # one-line notation, values 1..d


class SizeMismatch(Exception):
    pass


def identity(d: int) -> Permutation:
    return tuple(range(1, d + 1))


def compose(v: Permutation, w: Permutation) -> Permutation:
    """(v o w)(k) = v(w(k))."""
    if len(v) != len(w):
        raise SizeMismatch(f"{len(v)} vs {len(w)}")
    return tuple(v[wk - 1] for wk in w)


def inverse(v: Permutation) -> Permutation:
    out = [0] * len(v)
    for k, vk in enumerate(v, start=1):
        out[vk - 1] = k
    return tuple(out)


def length(v: Permutation) -> int:
    """Number of inversions."""
    return sum(
        1
        for a in range(len(v))
        for b in range(a + 1, len(v))
        if v[a] > v[b]
    )


def left_mul_s(t: int, v: Permutation) -> Permutation:
    """s_t o v: swap the values t and t+1 in the one-line notation."""
    return tuple(
        t + 1 if x == t else t if x == t + 1 else x for x in v
    )


def simple(t: int, d: int) -> Permutation:
    v = list(range(1, d + 1))
    v[t - 1], v[t] = v[t], v[t - 1]
    return tuple(v)


def w0(d: int) -> Permutation:
    return tuple(range(d, 0, -1))


def block_w0(dims: Dims) -> Permutation:
    """Antidiagonal permutation in each diagonal block of sizes r_0..r_n."""
    out = []
    offset = 0
    for size in dims.r:
        out.extend(range(offset + size, offset, -1))
        offset += size
    return tuple(out)


def composite(word: tuple[int, ...], d: int) -> Permutation:
    """Value of a word, first-applied-first."""
    v = identity(d)
    for t in word:
        v = left_mul_s(t, v)
    return v


def is_reduced_word(word: tuple[int, ...], d: int) -> bool:
    v = identity(d)
    for t in word:
        sv = left_mul_s(t, v)
        if length(sv) <= length(v):
            return False
        v = sv
    return True


def all_reduced_words(v: Permutation) -> list[tuple[int, ...]]:
    """Every reduced word for v, in lexicographic order.

    Words are built back to front: the last letter of a reduced word for
    v is any descent t of v (a position with v values t+1 before t).
    """
    if v == identity(len(v)):
        return [()]
    out = []
    for t in range(1, len(v)):
        sv = left_mul_s(t, v)
        if length(sv) < length(v):
            out.extend(word + (t,) for word in all_reduced_words(sv))
    return sorted(out)


def rothe_diagram(v: Permutation) -> set[tuple[int, int]]:
    """Cells (q, p) with v(q) > p and v^{-1}(p) > q."""
    vinv = inverse(v)
    d = len(v)
    return {
        (q, p)
        for q in range(1, d + 1)
        for p in range(1, d + 1)
        if v[q - 1] > p and vinv[p - 1] > q
    }


@dataclass(frozen=True)
class BlockStructure:
    """Row/column block bookkeeping and the cell label alphabets."""

    dims: Dims

    @cached_property
    def _row_blocks(self) -> tuple[tuple[int, int], ...]:
        # (block index, offset within block) for each row 1..d
        out = []
        for i, size in enumerate(self.dims.r):
            out.extend((i, a) for a in range(1, size + 1))
        return tuple(out)

    @cached_property
    def _col_blocks(self) -> tuple[tuple[int, int], ...]:
        out = []
        for j in range(self.dims.n, -1, -1):
            out.extend((j, b) for b in range(1, self.dims.r[j] + 1))
        return tuple(out)

    def row_block(self, q: int) -> int:
        return self._row_blocks[q - 1][0]

    def col_block(self, p: int) -> int:
        return self._col_blocks[p - 1][0]

    def row_var(self, q: int) -> tuple:
        """The alphabet variable labeling row q."""
        i, a = self._row_blocks[q - 1]
        return ("x", i, a)

    def col_var(self, p: int) -> tuple:
        """The alphabet variable labeling column p (block cols right to left)."""
        j, b = self._col_blocks[p - 1]
        return ("x", j, b)


@dataclass(frozen=True)
class Regions:
    strict_cells: frozenset
    dhom_cells: frozenset

    @property
    def L(self) -> int:
        return len(self.strict_cells)


@lru_cache(maxsize=None)
def regions(dims: Dims) -> Regions:
    """Cells strictly above the block antidiagonal and superantidiagonal."""
    bs = BlockStructure(dims)
    row_blocks = bs._row_blocks
    col_blocks = bs._col_blocks
    strict, dhom = set(), set()
    for q in range(1, dims.d + 1):
        for p in range(1, dims.d + 1):
            i = row_blocks[q - 1][0]
            j = col_blocks[p - 1][0]
            if j >= i + 1:
                strict.add((q, p))
            if j >= i + 2:
                dhom.add((q, p))
    return Regions(frozenset(strict), frozenset(dhom))


def block_counts(r: RankArray) -> dict[tuple[int, int], int]:
    """1-counts m(i, j) of the Zelevinsky permutation's blocks.

    Lace counts s_ji sit on and below the block diagonal, the
    superantidiagonal block carries r_{i,i+1}, and everything above it
    is empty.
    """
    dims = r.dims
    s = lace_array(r)
    m = {}
    for i in range(dims.n + 1):
        for j in range(dims.n + 1):
            if j <= i:
                m[(i, j)] = s[(j, i)]
            elif j == i + 1:
                m[(i, j)] = r[i, i + 1]
            else:
                m[(i, j)] = 0
    return m


def _row_ranges(dims: Dims) -> list[range]:
    offsets = [sum(dims.r[:i]) for i in range(dims.n + 2)]
    return [range(offsets[i] + 1, offsets[i + 1] + 1) for i in range(dims.n + 1)]


def _col_ranges(dims: Dims) -> list[range]:
    # index j -> global column numbers, block columns labeled right to left
    offsets = {}
    start = 1
    for j in range(dims.n, -1, -1):
        offsets[j] = range(start, start + dims.r[j])
        start += dims.r[j]
    return [offsets[j] for j in range(dims.n + 1)]


def zelevinsky_permutation(r: RankArray) -> Permutation:
    """The minimal-length permutation with the block counts of r.

    Within each block row, read top to bottom, the ones go to column
    blocks left to right; within each column block the receiving columns
    are ordered by row index.  This placement has no inversion inside a
    block row or block column.
    """
    dims = r.dims
    m = block_counts(r)
    row_ranges = _row_ranges(dims)
    col_ranges = _col_ranges(dims)
    rows_into_block_col: dict[int, list[int]] = {j: [] for j in range(dims.n + 1)}
    for i in range(dims.n + 1):
        rows = list(row_ranges[i])
        pos = 0
        for j in range(dims.n, -1, -1):  # column blocks left to right
            for _ in range(m[(i, j)]):
                rows_into_block_col[j].append(rows[pos])
                pos += 1
    v = [0] * dims.d
    for j in range(dims.n + 1):
        for row, col in zip(sorted(rows_into_block_col[j]), col_ranges[j]):
            v[row - 1] = col
    return tuple(v)


def perm_set(r: RankArray) -> list[Permutation]:
    """All permutations whose block 1-counts equal those of z(r), sorted."""
    dims = r.dims
    m = block_counts(r)
    row_ranges = _row_ranges(dims)
    col_ranges = _col_ranges(dims)
    block_cols = list(range(dims.n, -1, -1))  # left to right

    def distributions(rows: list[int], counts: list[int]):
        """Partitions of rows into ordered groups of the given sizes."""
        if not counts:
            yield []
            return
        first, rest = counts[0], counts[1:]
        for chosen in combinations(rows, first):
            remaining = [x for x in rows if x not in chosen]
            for tail in distributions(remaining, rest):
                yield [list(chosen)] + tail

    per_row_choices = []
    for i in range(dims.n + 1):
        counts = [m[(i, j)] for j in block_cols]
        per_row_choices.append(list(distributions(list(row_ranges[i]), counts)))

    out = []

    def rec(i: int, assigned: dict[int, list[int]]):
        if i == dims.n + 1:
            # match rows to columns within each block column
            choices_per_block = []
            for j in range(dims.n + 1):
                rows = assigned[j]
                cols = list(col_ranges[j])
                choices_per_block.append(
                    [list(zip(rows, perm)) for perm in permutations(cols)]
                )
            def build(jdx: int, pairs: list[tuple[int, int]]):
                if jdx == len(choices_per_block):
                    v = [0] * dims.d
                    for row, col in pairs:
                        v[row - 1] = col
                    out.append(tuple(v))
                    return
                for choice in choices_per_block[jdx]:
                    build(jdx + 1, pairs + choice)
            build(0, [])
            return
        for dist in per_row_choices[i]:
            for jdx, j in enumerate(block_cols):
                assigned[j].extend(dist[jdx])
            rec(i + 1, assigned)
            for jdx, j in enumerate(block_cols):
                for _ in dist[jdx]:
                    assigned[j].pop()

    rec(0, {j: [] for j in range(dims.n + 1)})
    return sorted(set(out))


def counts_of(v: Permutation, dims: Dims) -> dict[tuple[int, int], int]:
    """Block 1-counts of an arbitrary permutation (filter-semantics oracle)."""
    bs = BlockStructure(dims)
    m: dict[tuple[int, int], int] = {}
    for q, p in enumerate(v, start=1):
        key = (bs.row_block(q), bs.col_block(p))
        m[key] = m.get(key, 0) + 1
    for i in range(dims.n + 1):
        for j in range(dims.n + 1):
            m.setdefault((i, j), 0)
    return m


def zelevinsky_hom(dims: Dims) -> Permutation:
    return zelevinsky_permutation(hom_rank_array(dims))


# -- subword enumeration (shared by pipe dreams and localization) -----------

class TargetPruner:
    """Length-distance cutoffs toward a set of target permutations.

    remaining(u, lu) bounds from below the number of letters any
    completion starting at the partial product u must still take.  For
    few targets the Bruhat distance min_t l(t * u^-1) is computed
    exactly (in reduced mode a continuation exists only when every step
    raises length, so the distance must equal l(t) - l(u)); for large
    target sets only the length gap |l(t) - l(u)| is used, since each
    taken letter moves the length by exactly one.
    """

    _EXACT_LIMIT = 64

    def __init__(self, targets: frozenset, reduced: bool):
        self.targets = targets
        self.reduced = reduced
        self.exact = len(targets) <= self._EXACT_LIMIT
        self.lengths = sorted({length(t) for t in targets})
        self._memo: dict[Permutation, int] = {}

    def remaining(self, u: Permutation, lu: int) -> int:
        cached = self._memo.get(u)
        if cached is not None:
            return cached
        if self.exact:
            best = None
            uinv = inverse(u)
            for t in self.targets:
                dist = length(compose(t, uinv))
                if self.reduced and dist != length(t) - lu:
                    continue
                if best is None or dist < best:
                    best = dist
            value = len(u) * len(u) if best is None else best
        else:
            value = min(abs(lt - lu) for lt in self.lengths)
        self._memo[u] = value
        return value


def subword_feasibility(letters: tuple[int, ...], targets: frozenset, reduced: bool):
    """A memoized test: can the suffix from position k extend the partial
    product u to some target?  Shared by subword enumeration and the
    subword-sum recursions; the distance cutoff only shortcuts the exact
    depth-first answer."""
    L = len(letters)
    pruner = TargetPruner(targets, reduced)
    feas: dict[tuple[int, Permutation], bool] = {}

    def feasible(k: int, u: Permutation) -> bool:
        if k == L:
            return u in targets
        key = (k, u)
        cached = feas.get(key)
        if cached is not None:
            return cached
        if pruner.remaining(u, length(u)) > L - k:
            result = False
        else:
            su = left_mul_s(letters[k], u)
            if reduced:
                result = feasible(k + 1, u) or (
                    length(su) > length(u) and feasible(k + 1, su)
                )
            else:
                result = feasible(k + 1, u) or feasible(k + 1, su)
        feas[key] = result
        return result

    return feasible


def subword_subsets(
    letters: tuple[int, ...], d: int, targets: frozenset, reduced: bool
):
    """Pairs (J, v): index subsets of the word whose ordered product is a
    target v.  In reduced mode every taken letter must increase length,
    so J is a reduced word for v.  A memoized feasibility table plus the
    distance cutoff keeps the search output-sensitive.
    """
    L = len(letters)
    feasible = subword_feasibility(letters, targets, reduced)

    chosen: list[int] = []

    def rec(k: int, u: Permutation):
        if k == L:
            if u in targets:
                yield tuple(chosen), u
            return
        if feasible(k + 1, u):
            yield from rec(k + 1, u)
        su = left_mul_s(letters[k], u)
        if (not reduced or length(su) > length(u)) and feasible(k + 1, su):
            chosen.append(k)
            yield from rec(k + 1, su)
            chosen.pop()

    yield from rec(0, identity(d))
