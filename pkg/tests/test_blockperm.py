"""Permutations, reduced words, block structure, and subword search."""

from itertools import permutations

from qcalc.blockperm import (
    BlockStructure,
    all_reduced_words,
    block_counts,
    block_w0,
    compose,
    composite,
    counts_of,
    identity,
    inverse,
    is_reduced_word,
    left_mul_s,
    length,
    perm_set,
    regions,
    rothe_diagram,
    simple,
    subword_subsets,
    w0,
    zelevinsky_hom,
    zelevinsky_permutation,
)
from qcalc.quiver import Dims, RankArray, enumerate_rank_arrays, hom_rank_array


def test_group_axioms_s4():
    perms = [tuple(p) for p in permutations(range(1, 5))]
    e = identity(4)
    for v in perms:
        assert compose(v, e) == v and compose(e, v) == v
        assert compose(v, inverse(v)) == e
        assert length(inverse(v)) == length(v)
    assert compose((2, 1, 3, 4), (1, 3, 2, 4)) == (2, 3, 1, 4)


def test_length_counts_inversions():
    assert length((1, 2, 3)) == 0
    assert length((3, 2, 1)) == 3
    assert length(w0(4)) == 6


def test_left_mul_s_swaps_values():
    v = (3, 1, 2)
    assert left_mul_s(1, v) == (3, 2, 1)  # swaps the values 1 and 2
    assert left_mul_s(2, v) == (2, 1, 3)
    assert simple(2, 4) == (1, 3, 2, 4)


def test_composite_and_reduced_words():
    assert composite((1, 2, 1), 3) == w0(3)
    assert is_reduced_word((1, 2, 1), 3)
    assert not is_reduced_word((1, 1), 3)
    assert sorted(all_reduced_words(w0(3))) == [(1, 2, 1), (2, 1, 2)]
    for v in permutations(range(1, 5)):
        for word in all_reduced_words(tuple(v)):
            assert len(word) == length(tuple(v))
            assert composite(word, 4) == tuple(v)


def test_block_w0():
    assert block_w0(Dims((1, 2, 1))) == (1, 3, 2, 4)
    assert block_w0(Dims((2, 2))) == (2, 1, 4, 3)


def test_rothe_diagram():
    assert rothe_diagram((2, 1, 3)) == {(1, 1)}
    assert len(rothe_diagram(w0(4))) == 6
    # |rothe| = length, exhaustively in S_4
    for v in permutations(range(1, 5)):
        assert len(rothe_diagram(tuple(v))) == length(tuple(v))


def test_block_structure_labels():
    bs = BlockStructure(Dims((1, 2, 1)))
    assert [bs.row_block(q) for q in (1, 2, 3, 4)] == [0, 1, 1, 2]
    # columns are labeled right to left
    assert [bs.col_block(p) for p in (1, 2, 3, 4)] == [2, 1, 1, 0]
    assert bs.row_var(2) == ("x", 1, 1)
    assert bs.col_var(2) == ("x", 1, 1)
    assert bs.col_var(4) == ("x", 0, 1)


def test_regions_332():
    reg = regions(Dims((3, 3, 2)))
    assert reg.L == len(reg.strict_cells)
    assert reg.dhom_cells < reg.strict_cells
    assert len(reg.dhom_cells) == 6


def test_zelevinsky_permutation_examples():
    assert zelevinsky_permutation(hom_rank_array(Dims((3, 3, 2)))) == (3, 4, 5, 1, 2, 6, 7, 8)
    r = RankArray(
        Dims((1, 3, 3, 1)),
        {(0, 1): 1, (0, 2): 1, (0, 3): 0, (1, 2): 2, (1, 3): 1, (2, 3): 1},
    )
    assert zelevinsky_permutation(r) == (5, 2, 3, 6, 1, 4, 8, 7)
    r2 = RankArray(Dims((1, 2, 1)), {(0, 1): 1, (0, 2): 0, (1, 2): 1})
    assert zelevinsky_permutation(r2) == (2, 1, 4, 3)
    assert zelevinsky_hom(Dims((3, 3, 2))) == (3, 4, 5, 1, 2, 6, 7, 8)


def test_perm_set_12():
    r = RankArray(Dims((1, 2)), {(0, 1): 1})
    assert sorted(perm_set(r)) == [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1)]


def test_perm_set_121_hom():
    r = hom_rank_array(Dims((1, 2, 1)))
    assert sorted(perm_set(r)) == [(2, 1, 3, 4), (2, 3, 1, 4), (3, 1, 2, 4), (3, 2, 1, 4)]


def test_perm_set_counts_and_minimum():
    for dims in [Dims((1, 2, 1)), Dims((2, 2)), Dims((1, 1, 2)), Dims((2, 2, 1)), Dims((3, 3))]:
        for r in enumerate_rank_arrays(dims):
            z = zelevinsky_permutation(r)
            members = perm_set(r)
            assert z in members
            assert all(counts_of(v, dims) == block_counts(r) for v in members)
            # z(r) is the unique minimal-length member
            assert [v for v in members if length(v) == length(z)] == [z]


def test_subword_subsets_against_brute_force():
    letters = (1, 2, 1, 2)
    d = 3
    for reduced in (True, False):
        for target in permutations(range(1, 4)):
            expected = []
            for mask in range(1 << len(letters)):
                J = tuple(k for k in range(len(letters)) if mask >> k & 1)
                if reduced and not is_reduced_word(tuple(letters[k] for k in J), d):
                    continue
                if composite(tuple(letters[k] for k in J), d) == tuple(target):
                    expected.append(J)
            got = sorted(
                J
                for J, v in subword_subsets(letters, d, frozenset([tuple(target)]), reduced)
            )
            assert got == sorted(expected), (reduced, target)


def test_subword_subsets_multi_target():
    letters = (2, 1, 3, 2, 1)
    d = 4
    targets = frozenset([(2, 1, 3, 4), (1, 3, 2, 4), (2, 3, 1, 4)])
    pairs = list(subword_subsets(letters, d, targets, reduced=False))
    for J, v in pairs:
        assert v in targets
        assert composite(tuple(letters[k] for k in J), d) == v
    singles = [
        (J, v)
        for t in targets
        for J, v in subword_subsets(letters, d, frozenset([t]), reduced=False)
    ]
    assert sorted(pairs) == sorted(singles)
