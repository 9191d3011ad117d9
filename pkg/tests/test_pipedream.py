"""Pipe dream tracing, enumeration, and both pipe dream formulas."""

from itertools import combinations

import pytest

from qcalc.blockperm import composite, regions, zelevinsky_permutation
from qcalc.pipedream import (
    PipeDream,
    RegionViolation,
    csm_pd,
    csm_pd_full_region,
    enumerate_pipe_dreams,
    locus_pipe_dreams,
    quiver_poly_pd,
    region_cells,
    trace,
    weight,
)
from qcalc.poly import Poly, xvar
from qcalc.quiver import Dims, RankArray, hom_rank_array


def _all_cells(d):
    return [(q, p) for q in range(1, d + 1) for p in range(1, d + 1) if q + p <= d]


def test_cross_region_check():
    with pytest.raises(RegionViolation):
        PipeDream(Dims((1, 1)), frozenset([(1, 2)]))
    with pytest.raises(RegionViolation):
        PipeDream(Dims((2, 1)), frozenset([(0, 1)]))


def test_trace_empty_is_identity():
    for d in range(1, 6):
        dream = PipeDream(Dims((d,)) if d == 1 else Dims((1, d - 1)), frozenset())
        assert trace(dream) == tuple(range(1, d + 1))


def test_trace_equals_subword_composite_exhaustive():
    """The trace of any dream is the ordered product of its cross letters,
    rows read bottom to top and west to east (all dreams with d <= 5)."""
    for r in [(5,), (1, 4), (2, 3), (1, 1, 3), (1, 2, 2), (1, 1, 1, 1, 1)]:
        dims = Dims(r)
        d = dims.d
        if d > 5:
            continue
        cells = _all_cells(d)
        order = sorted(cells, key=lambda c: (-c[0], c[1]))
        for size in range(len(cells) + 1):
            for chosen in combinations(cells, size):
                dream = PipeDream(dims, frozenset(chosen))
                word = tuple(q + p - 1 for q, p in order if (q, p) in dream.crosses)
                assert trace(dream) == composite(word, d)


def test_region_cells_reading_order():
    cells = region_cells(Dims((1, 2)), "full")
    assert cells == [(2, 1), (1, 1), (1, 2)]
    with pytest.raises(ValueError):
        region_cells(Dims((1, 2)), "banana")


def test_enumeration_oldpd_counts():
    dims = Dims((1, 3, 3, 1))
    r = RankArray(
        dims, {(0, 1): 1, (0, 2): 1, (0, 3): 0, (1, 2): 2, (1, 3): 1, (2, 3): 1}
    )
    z = zelevinsky_permutation(r)
    assert len(enumerate_pipe_dreams(dims, z, "full", "reduced")) == 21
    assert len(enumerate_pipe_dreams(dims, z, "strict", "reduced")) == 9


def test_enumeration_traces_match():
    dims = Dims((2, 2, 1))
    r = RankArray(dims, {(0, 1): 1, (0, 2): 0, (1, 2): 1})
    z = zelevinsky_permutation(r)
    for dream in enumerate_pipe_dreams(dims, z, "strict", "reduced"):
        assert trace(dream) == z
        assert len(dream.crosses) == len(
            [c for c in dream.crosses]
        )  # crosses are a set
    for dream, v in locus_pipe_dreams(dims, frozenset([z]), "strict", "all"):
        assert trace(dream) == v == z


def test_weight_requires_strict_crosses():
    dims = Dims((1, 2))
    dream = PipeDream(dims, frozenset([(2, 1)]))  # on the block antidiagonal
    with pytest.raises(RegionViolation):
        weight(dream)
    with pytest.raises(ValueError):
        weight(PipeDream(dims, frozenset()), "banana")


def test_csm_pd_121_hom():
    dims = Dims((1, 2, 1))
    a = Poly.var(xvar(0, 1))
    b1 = Poly.var(xvar(1, 1))
    b2 = Poly.var(xvar(1, 2))
    c = Poly.var(xvar(2, 1))
    h = Poly.hbar()
    expected = (
        h**4
        + h**2 * (a - b2) * (b2 - c)
        + h**2 * (a - b1) * (b1 - c)
        + h**3 * (a - b1)
        + h**3 * (b1 - c)
    )
    assert csm_pd(hom_rank_array(dims)) == expected


def test_quiver_poly_pd_final_example():
    dims = Dims((2, 2, 1))
    r = RankArray(dims, {(0, 1): 1, (0, 2): 0, (1, 2): 1})
    a1 = Poly.var(xvar(0, 1))
    a2 = Poly.var(xvar(0, 2))
    b1 = Poly.var(xvar(1, 1))
    b2 = Poly.var(xvar(1, 2))
    c = Poly.var(xvar(2, 1))
    expected = (a1 - b2) * (a2 - b2) + (a2 - b1) * (b2 - c) + (a1 - b2) * (b2 - c)
    assert quiver_poly_pd(r) == expected


def test_leading_hbar_recovers_quiver_poly():
    from qcalc.blockperm import length

    for dims in [Dims((1, 2, 1)), Dims((2, 2, 1)), Dims((2, 1, 2))]:
        from qcalc.quiver import enumerate_rank_arrays

        reg = regions(dims)
        for r in enumerate_rank_arrays(dims):
            z = zelevinsky_permutation(r)
            csm = csm_pd(r)
            assert csm.hbar_coefficient(reg.L - length(z)) == quiver_poly_pd(r)


def test_full_region_probe_runs():
    dims = Dims((1, 1))
    r = hom_rank_array(dims)
    assert csm_pd_full_region(r) == csm_pd(r)
