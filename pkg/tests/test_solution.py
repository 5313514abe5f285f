from itertools import product

import pytest

from ybsets.solution import (
    FLAGS,
    IncompleteTable,
    NotAPermutation,
    NotBijective,
    QuadraticSet,
    check_axioms,
    from_left_actions,
    from_pair_map,
    trivial_solution,
    violates,
)


def test_flip_is_trivial_solution():
    qs = from_pair_map(["x1", "x2"], {(x, y): (y, x) for x in range(2) for y in range(2)})
    assert qs.left_table == ((0, 1), (0, 1))
    rep = check_axioms(qs)
    assert all(rep.flags.values())
    assert rep.tags == ["braided set", "symmetric set", "square-free symmetric set"]


def test_pair_map_must_be_bijective():
    pairs = {(0, 0): (0, 0), (0, 1): (0, 1), (1, 0): (0, 1), (1, 1): (1, 1)}
    with pytest.raises(NotBijective):
        from_pair_map(["x1", "x2"], pairs)


def test_missing_pair():
    with pytest.raises(IncompleteTable):
        from_pair_map(["x1", "x2"], {(0, 0): (0, 0)})


def test_actions_must_be_permutations():
    with pytest.raises(NotAPermutation):
        from_left_actions(["a", "b"], [[0, 0], [0, 1]])


def test_tables_agree_with_pair_map(ex3):
    qs = ex3.qs
    for x, y in product(range(qs.size), repeat=2):
        assert qs.r(x, y) == (qs.L(x, y), qs.R(y, x))


def test_identity_actions_give_trivial_solution():
    qs = from_left_actions(["p", "q", "s"], [[0, 1, 2]] * 3)
    assert qs == trivial_solution(3, ["p", "q", "s"])
    assert all(qs.r(x, y) == (y, x) for x in range(3) for y in range(3))


def test_l1_fails_for_bad_actions():
    # L_1 = id, L_2 = (1 2 3), L_3 = (1 3 2)
    qs = from_left_actions(["1", "2", "3"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]])
    rep = check_axioms(qs)
    assert rep.flags["l1"] is False and rep.flags["lri"]
    assert violates(qs, "l1", rep.witnesses["l1"])
    assert not rep.is_braided


def test_ex14_is_square_free_symmetric(ex1):
    rep = check_axioms(ex1.qs)
    assert ex1.qs.size == 14
    assert all(rep.flags[f] for f in FLAGS)
    assert rep.is_square_free_symmetric


def test_ex5_is_square_free_symmetric(ex3):
    assert check_axioms(ex3.qs).is_square_free_symmetric


def test_witnesses_reevaluate():
    # a non-involutive, non-square-free quadratic set
    n = 3
    pairs = {}
    for x, y in product(range(n), repeat=2):
        pairs[(x, y)] = ((y + 1) % n, x)
    qs = from_pair_map(["a", "b", "c"], pairs)
    rep = check_axioms(qs)
    for flag in FLAGS:
        if not rep.flags[flag]:
            assert violates(qs, flag, rep.witnesses[flag]), flag
    assert not rep.flags["square_free"]


def test_one_element_solution():
    qs = trivial_solution(1)
    assert check_axioms(qs).is_square_free_symmetric


def test_lri_by_construction(corpus):
    for sols in corpus.values():
        for qs in sols:
            assert check_axioms(qs).flags["lri"]


def test_basic_equivalences_on_corpus(corpus):
    for sols in corpus.values():
        for qs in sols:
            rep = check_axioms(qs)
            f = rep.flags
            assert f["nondegenerate"] and f["involutive"] and f["square_free"]
            assert f["l1"] == f["r1"] == f["lr3"] == f["braid_direct"]
            if f["l1"]:
                assert f["cl1"] and f["cl2"] and f["cr1"] and f["cr2"]


def test_equality_and_hash():
    a = trivial_solution(2)
    b = trivial_solution(2)
    assert a == b and hash(a) == hash(b)
    assert isinstance(a, QuadraticSet)
