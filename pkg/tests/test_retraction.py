import pytest

from ybsets.retraction import (
    NotSymmetricSet,
    left_actions_are_automorphisms,
    level2_criterion,
    mpl,
    retract,
)
from ybsets.solution import check_axioms, from_left_actions, from_pair_map, trivial_solution


def _oracle_classes(qs):
    # group elements with identical left-action rows, by brute comparison
    out = []
    for x in range(qs.size):
        for cls in out:
            if all(qs.L(cls[0], z) == qs.L(x, z) for z in range(qs.size)):
                cls.append(x)
                break
        else:
            out.append([x])
    return sorted(tuple(c) for c in out)


def test_trivial_retracts_to_a_point():
    step = retract(trivial_solution(4))
    assert step.induced.size == 1
    assert mpl(trivial_solution(4)).level == 1


def test_one_element_has_level_zero():
    res = mpl(trivial_solution(1))
    assert res.level == 0 and str(res) == "Finite(0) [1]"


def test_ex5_retract(ex3):
    qs = ex3.qs
    step = retract(qs)
    names = [tuple(qs.names[x] for x in c) for c in step.classes]
    assert names == [("a",), ("x1", "x3"), ("x2", "x4")]
    ind = step.induced
    a = ind.index("[a]")
    assert ind.left_table[a] == (0, 2, 1)  # ([x1] [x2])
    assert ind.left_table[1] == ind.left_table[2] == (0, 1, 2)


def test_ex5_level(ex3):
    res = mpl(ex3.qs)
    assert res.level == 3
    assert res.chain == (5, 3, 2, 1)
    assert not level2_criterion(ex3.qs)


def test_ex14_retract(ex1):
    qs = ex1.qs
    step = retract(qs)
    assert sorted(step.classes) == _oracle_classes(qs)
    assert len(step.classes) == 3
    assert all(step.induced.r(x, y) == (y, x) for x in range(3) for y in range(3))
    assert mpl(qs).level == 2
    assert level2_criterion(qs)


def test_ex42_level(ex2):
    assert mpl(ex2.qs).level == 2
    assert level2_criterion(ex2.qs)


def test_trivial_solution_is_not_level_two():
    assert not level2_criterion(trivial_solution(3))


def test_requires_symmetric_set():
    n = 2
    pairs = {(x, y): (x, y) for x in range(n) for y in range(n)}
    qs = from_pair_map(["p", "q"], pairs)  # r = id is degenerate
    with pytest.raises(NotSymmetricSet):
        mpl(qs)


def test_corpus_properties(corpus_mpl):
    for n, rows in corpus_mpl.items():
        for qs, level in rows:
            assert level is not None
            assert level2_criterion(qs) == (level == 2)
            if n <= 4:
                assert level <= 2
            if level == 2:
                assert left_actions_are_automorphisms(qs)


def test_retraction_preserves_flags(corpus):
    keep = ("square_free", "lri", "cl1", "cl2", "cr1", "cr2")
    for qs in corpus[5]:
        cur = qs
        while cur.size > 1:
            step = retract(cur)
            assert sorted(step.classes) == _oracle_classes(cur)
            before, after = check_axioms(cur), check_axioms(step.induced)
            for f in keep:
                if before.flags[f]:
                    assert after.flags[f], f
            cur = step.induced


def test_order_five_has_level_three(corpus_mpl):
    levels = [lvl for _, lvl in corpus_mpl[5]]
    assert 3 in levels


def test_lri_build_of_ex5_table(ex3):
    qs = ex3.qs
    again = from_left_actions(qs.names, qs.left_table)
    assert again == qs
