"""Rank arrays, lace arrays, lacing diagrams and quiver representations.

An orbit of the change-of-basis action on Hom = Hom(V_0,V_1) x ... x
Hom(V_{n-1},V_n) is indexed equivalently by a rank array r (the ranks
r_ij of all composite maps V_i -> V_j) or by a lace array s (s_pq counts
indecomposable summands supported on the interval [p, q]).  This module
converts between the two, builds the canonical block 0/1 representative
of an orbit, measures ranks exactly over the integers, and forms the
big d x d Zelevinsky matrix of a representation.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass


class NotRealizable(Exception):
    """The rank array has a negative derived lace entry at (p, q)."""

    def __init__(self, p: int, q: int, value: int):
        super().__init__(f"derived lace entry s[{p},{q}] = {value} < 0")
        self.p, self.q = p, q


class BadRowSums(Exception):
    """A lace array whose interval counts do not add up to the dims."""


@dataclass(frozen=True)
class Dims:
    """The dimension vector (r_0, ..., r_n); d is the total."""

    r: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        if not self.r or any(x < 1 for x in self.r):
            raise ValueError(f"dimension vector must be positive, got {self.r}")

    @property
    def n(self) -> int:
        return len(self.r) - 1

    @property
    def d(self) -> int:
        return sum(self.r)

    def pairs(self) -> list[tuple[int, int]]:
        """All index pairs (i, j) with 0 <= i <= j <= n."""
        n = self.n
        return [(i, j) for i in range(n + 1) for j in range(i, n + 1)]


class RankArray:
    """Prescribed ranks r_ij of all composites; r_ii is forced to r_i."""

    __slots__ = ("dims", "entries", "_key")

    def __init__(self, dims: Dims, entries: dict[tuple[int, int], int]):
        full = dict(entries)
        for i, ri in enumerate(dims.r):
            if full.setdefault((i, i), ri) != ri:
                raise ValueError(f"diagonal entry r[{i},{i}] must be {ri}")
        for i, j in full:
            if not (0 <= i <= j <= dims.n):
                raise ValueError(f"bad rank index ({i},{j})")
        for i, j in dims.pairs():
            if (i, j) not in full:
                raise ValueError(f"missing rank entry ({i},{j})")
            if full[(i, j)] < 0:
                raise ValueError(f"negative rank entry ({i},{j})")
        self.dims = dims
        self.entries = full
        self._key = (dims, tuple(sorted(full.items())))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if i < 0 or j > self.dims.n:
            return 0
        return self.entries[(i, j)]

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, RankArray) and self._key == other._key

    def __repr__(self):
        return f"RankArray(dims={self.dims.r}, entries={self.entries})"


class LaceArray:
    """Multiplicities s_pq of the interval summands of an orbit."""

    __slots__ = ("dims", "entries", "_key")

    def __init__(self, dims: Dims, entries: dict[tuple[int, int], int]):
        full = {pq: entries.get(pq, 0) for pq in dims.pairs()}
        if any(v < 0 for v in full.values()):
            raise ValueError("negative lace entry")
        for i, ri in enumerate(dims.r):
            total = sum(v for (p, q), v in full.items() if p <= i <= q)
            if total != ri:
                raise BadRowSums(
                    f"laces through row {i} total {total}, expected {ri}"
                )
        self.dims = dims
        self.entries = full
        self._key = (dims, tuple(sorted(full.items())))

    def __getitem__(self, pq: tuple[int, int]) -> int:
        return self.entries.get(pq, 0)

    def __hash__(self):
        return hash(self._key)

    def __eq__(self, other):
        return isinstance(other, LaceArray) and self._key == other._key

    def __repr__(self):
        return f"LaceArray(dims={self.dims.r}, entries={self.entries})"

    def laces(self) -> list[tuple[int, int]]:
        """The intervals with multiplicity, sorted by (start, end)."""
        out = []
        for (p, q) in sorted(self.entries):
            out.extend([(p, q)] * self.entries[(p, q)])
        return out


@dataclass(frozen=True)
class Rep:
    """A quiver representation: integer matrices phi_k of shape r_k x r_{k-1}."""

    dims: Dims
    phi: tuple[tuple[tuple[int, ...], ...], ...]

    def __post_init__(self):
        r = self.dims.r
        if len(self.phi) != self.dims.n:
            raise ValueError("expected one matrix per arrow")
        for k, mat in enumerate(self.phi, start=1):
            if len(mat) != r[k] or any(len(row) != r[k - 1] for row in mat):
                raise ValueError(f"phi_{k} must be {r[k]} x {r[k-1]}")


def lace_array(r: RankArray) -> LaceArray:
    """The lace array of a rank array, by inclusion-exclusion on ranks.

    s_pq = r_pq - r_{p-1,q} - r_{p,q+1} + r_{p-1,q+1}, with out-of-range
    entries read as zero.  A negative entry means no representation has
    these composite ranks.
    """
    entries = {}
    for p, q in r.dims.pairs():
        s = r[p, q] - r[p - 1, q] - r[p, q + 1] + r[p - 1, q + 1]
        if s < 0:
            raise NotRealizable(p, q, s)
        entries[(p, q)] = s
    return LaceArray(r.dims, entries)


def rank_array(s: LaceArray) -> RankArray:
    """The rank array of a lace array: r_ij counts laces covering [i, j]."""
    entries = {}
    for i, j in s.dims.pairs():
        entries[(i, j)] = sum(
            v for (p, q), v in s.entries.items() if p <= i and q >= j
        )
    return RankArray(s.dims, entries)


def hom_rank_array(dims: Dims) -> RankArray:
    """The rank array of the dense orbit: r_ij = min(r_i, ..., r_j)."""
    entries = {(i, j): min(dims.r[i : j + 1]) for i, j in dims.pairs()}
    return RankArray(dims, entries)


def enumerate_lace_arrays(dims: Dims) -> list[LaceArray]:
    """All lace arrays for dims, in lexicographic order of their entries."""
    pairs = dims.pairs()
    results: list[LaceArray] = []

    def rec(idx: int, partial: dict[tuple[int, int], int]):
        if idx == len(pairs):
            results.append(LaceArray(dims, dict(partial)))
            return
        p, q = pairs[idx]
        # remaining capacity at each row p..q
        cap = min(
            dims.r[i]
            - sum(v for (a, b), v in partial.items() if a <= i <= b)
            for i in range(p, q + 1)
        )
        # rows that no later interval can reach must be filled exactly
        for value in range(cap + 1):
            partial[(p, q)] = value
            if _rows_completable(dims, pairs, idx, partial):
                rec(idx + 1, partial)
        del partial[(p, q)]

    rec(0, {})
    return results


def _rows_completable(dims, pairs, idx, partial) -> bool:
    remaining_pairs = pairs[idx + 1 :]
    for i, ri in enumerate(dims.r):
        have = sum(v for (a, b), v in partial.items() if a <= i <= b)
        if have > ri:
            return False
        if have < ri and not any(a <= i <= b for a, b in remaining_pairs):
            return False
    return True


def enumerate_rank_arrays(dims: Dims) -> list[RankArray]:
    """Rank arrays of all orbits, in the order of enumerate_lace_arrays."""
    return [rank_array(s) for s in enumerate_lace_arrays(dims)]


def representative(s: LaceArray) -> Rep:
    """The block 0/1 representation that is the direct sum of the laces.

    Laces are sorted by (start, end); within each level the laces passing
    through it take basis vectors in that order.
    """
    dims = s.dims
    laces = s.laces()
    index_at: list[dict[int, int]] = [dict() for _ in range(dims.n + 1)]
    counters = [0] * (dims.n + 1)
    for lace_id, (p, q) in enumerate(laces):
        for i in range(p, q + 1):
            index_at[i][lace_id] = counters[i]
            counters[i] += 1
    assert counters == list(dims.r)
    phi = []
    for k in range(1, dims.n + 1):
        mat = [[0] * dims.r[k - 1] for _ in range(dims.r[k])]
        for lace_id, (p, q) in enumerate(laces):
            if p <= k - 1 and k <= q:
                mat[index_at[k][lace_id]][index_at[k - 1][lace_id]] = 1
        phi.append(tuple(tuple(row) for row in mat))
    return Rep(dims, tuple(phi))


def generic_representative(s: LaceArray, seed: int = 0) -> Rep:
    """A point of the orbit of s in general position, with integer entries.

    The 0/1 representative is moved by pseudorandom unimodular changes of
    basis at every level, so composite ranks are untouched.  General
    position matters for the Zelevinsky matrix: the direct-sum point can
    sit in a deeper Bruhat stratum than the orbit's dense one (and for
    some orbits every 0/1 point does), while a generic point realizes
    the northwest rank profile of the Zelevinsky permutation.
    """
    rng = random.Random(f"{seed}:{s.dims.r}:{sorted(s.entries.items())}")
    base = representative(s)
    g, g_inv = [], []
    for size in s.dims.r:
        lower = _unit_triangular(size, rng, below=True)
        upper = _unit_triangular(size, rng, below=False)
        g.append(_mat_mul(lower, upper))
        g_inv.append(_mat_mul(_unit_triangular_inverse(upper), _unit_triangular_inverse(lower)))
    phi = []
    for k in range(1, s.dims.n + 1):
        mat = _mat_mul(g[k], _mat_mul([list(row) for row in base.phi[k - 1]], g_inv[k - 1]))
        phi.append(tuple(tuple(row) for row in mat))
    return Rep(s.dims, tuple(phi))


def _unit_triangular(n: int, rng, below: bool) -> list[list[int]]:
    m = _identity(n)
    for i in range(n):
        for j in range(n):
            if (j < i) if below else (j > i):
                m[i][j] = rng.randint(1, 97)
    return m


def _unit_triangular_inverse(m: list[list[int]]) -> list[list[int]]:
    """Integer inverse of a unit triangular matrix, by substitution."""
    n = len(m)
    lower = all(m[i][j] == 0 for i in range(n) for j in range(i + 1, n))
    rows = range(n) if lower else range(n - 1, -1, -1)
    inv = [[0] * n for _ in range(n)]
    for col in range(n):
        for i in rows:
            acc = 1 if i == col else 0
            for k in range(n):
                if k != i and m[i][k] != 0:
                    acc -= m[i][k] * inv[k][col]
            inv[i][col] = acc
    return inv


def integer_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev_pivot = 1
    row = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(row, nrows) if m[i][col] != 0), None)
        if pivot_row is None:
            continue
        m[row], m[pivot_row] = m[pivot_row], m[row]
        pivot = m[row][col]
        for i in range(row + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (pivot * m[i][j] - m[i][col] * m[row][j]) // prev_pivot
            m[i][col] = 0
        prev_pivot = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def _mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def rank_array_of(rep: Rep) -> RankArray:
    """Exact ranks of all composite maps of a representation."""
    dims = rep.dims
    entries = {}
    for i in range(dims.n + 1):
        comp = _identity(dims.r[i])
        entries[(i, i)] = dims.r[i]
        for j in range(i + 1, dims.n + 1):
            comp = _mat_mul([list(row) for row in rep.phi[j - 1]], comp)
            entries[(i, j)] = integer_rank(comp)
    return RankArray(dims, entries)


def zelevinsky_matrix(rep: Rep) -> list[list[int]]:
    """The d x d matrix with identity blocks on the block antidiagonal
    and the maps (as row-vector-action matrices) on the superantidiagonal.

    Block rows have sizes r_0..r_n top to bottom; block columns are
    labeled right to left, so block column j starts at offset
    r_n + ... + r_{j+1} from the left.
    """
    dims = rep.dims
    d = dims.d
    row_off = [sum(dims.r[:i]) for i in range(dims.n + 1)]
    col_off = [sum(dims.r[j + 1 :]) for j in range(dims.n + 1)]
    z = [[0] * d for _ in range(d)]
    for i in range(dims.n + 1):
        for a in range(dims.r[i]):
            z[row_off[i] + a][col_off[i] + a] = 1
    for i in range(dims.n):
        phi = rep.phi[i]  # r_{i+1} x r_i
        for a in range(dims.r[i]):
            for b in range(dims.r[i + 1]):
                z[row_off[i] + a][col_off[i + 1] + b] = phi[b][a]
    return z


def nw_rank_profile(matrix: list[list[int]]) -> dict[tuple[int, int], int]:
    """Ranks of all top-q x left-p corners (1-based q, p)."""
    d = len(matrix)
    return {
        (q, p): integer_rank([row[:p] for row in matrix[:q]])
        for q in range(1, d + 1)
        for p in range(1, d + 1)
    }


# -- JSON input ------------------------------------------------------------

def parse_input(obj: dict | str) -> RankArray:
    """Parse {"dims": [...], "rank": {"i,j": v}} or {"dims": [...], "lace": ...}.

    Diagonal rank entries are optional and default to the dims.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "dims" not in obj:
        raise ValueError('input must carry a "dims" array')
    dims = Dims(tuple(obj["dims"]))

    def read_entries(raw: dict) -> dict[tuple[int, int], int]:
        out = {}
        for key, value in raw.items():
            i, j = (int(part) for part in key.split(","))
            out[(i, j)] = int(value)
        return out

    if "rank" in obj:
        entries = read_entries(obj["rank"])
        for i, j in dims.pairs():
            if i != j and (i, j) not in entries:
                raise ValueError(f"missing rank entry ({i},{j})")
        return RankArray(dims, entries)
    if "lace" in obj:
        return rank_array(LaceArray(dims, read_entries(obj["lace"])))
    raise ValueError('input must carry a "rank" or "lace" object')


def to_json(r: RankArray) -> dict:
    return {
        "dims": list(r.dims.r),
        "rank": {f"{i},{j}": r[i, j] for i, j in r.dims.pairs() if i != j},
    }
