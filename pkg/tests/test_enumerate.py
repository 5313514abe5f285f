from itertools import permutations, product

import pytest

from ybsets.enumerate import (
    CSV_HEADER,
    CapExceeded,
    canonical_form,
    classify,
    enumerate_sfss,
    from_table,
    relabel,
)
from ybsets.solution import check_axioms, from_left_actions


def _brute(n):
    names = [f"x{i + 1}" for i in range(n)]
    perms = list(permutations(range(n)))
    out = []
    for acts in product(perms, repeat=n):
        if any(acts[x][x] != x for x in range(n)):
            continue
        try:
            qs = from_left_actions(names, acts)
        except ValueError:
            continue
        if check_axioms(qs).is_square_free_symmetric:
            out.append(qs.left_table)
    return sorted(out)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_matches_brute_force(n):
    got = [qs.left_table for qs in enumerate_sfss(n)]
    assert got == _brute(n)


def test_frozen_counts(corpus):
    assert {n: len(v) for n, v in corpus.items()} == {1: 1, 2: 1, 3: 4, 4: 30, 5: 396}


def test_dedup_counts():
    assert [len(list(enumerate_sfss(n, dedup=True))) for n in range(1, 6)] == [1, 1, 2, 5, 17]


def test_canonical_form_is_fixed(corpus):
    for qs in corpus[4]:
        key = canonical_form(qs)
        assert canonical_form(from_table(key)) == key
        assert relabel(qs, tuple(range(4))) == qs.left_table


def test_relabel_preserves_axioms(ex3):
    t = relabel(ex3.qs, (4, 3, 2, 1, 0))
    assert check_axioms(from_table(t)).is_square_free_symmetric


def test_ex5_appears(ex3, corpus):
    key = canonical_form(ex3.qs)
    assert key in {canonical_form(qs) for qs in corpus[5]}


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_sfss(7))
    with pytest.raises(ValueError):
        list(enumerate_sfss(0))


def test_classification(corpus):
    rows = classify(qs for n in (3, 4, 5) for qs in corpus[n])
    by_n = {r.n: r for r in rows}
    assert by_n[3].by_mpl == {1: 1, 2: 3}
    assert by_n[4].by_mpl == {1: 1, 2: 29}
    assert by_n[5].by_mpl == {1: 1, 2: 335, 3: 60}
    assert by_n[5].abelian_count == 336
    assert by_n[5].diagonalizable_count == 336
    assert by_n[5].csv() == "5,396,1:1;2:335;3:60,336,336"
    assert CSV_HEADER.count(",") == by_n[5].csv().count(",")
