import pytest

from ybsets.permgroup import (
    GroupTooLarge,
    NotAbelian,
    NotInGroup,
    Perm,
    element_coordinates,
    generate,
    invariant_factors,
    is_abelian,
    lambda_order,
    left_action_group,
    orbits,
    restriction_group,
    structure_from_basis,
)
from ybsets.solution import trivial_solution


def _brute_closure(gens):
    # plain fixed-point iteration, independent of the BFS in generate()
    m = len(gens[0])
    elems = {Perm.identity(m)} | set(gens)
    while True:
        new = {a * b for a in elems for b in elems} | elems
        if new == elems:
            return elems
        elems = new


def test_perm_basics():
    p = Perm.from_cycles(5, [(0, 1, 2)])
    assert p.order() == 3
    assert p * p.inverse() == Perm.identity(5)
    assert p ** 3 == Perm.identity(5)
    assert p.cycles() == [(0, 1, 2)]
    assert p.cycle_type() == [1, 1, 3]
    assert (p * Perm.from_cycles(5, [(3, 4)]))(3) == 4


def test_trivial_group():
    g = generate(3, [Perm.identity(3)])
    assert g.order == 1
    st = invariant_factors(g)
    assert st.rank == 0 and st.total_order == 1
    assert is_abelian(g) == (True, None)


def test_words_reproduce_elements():
    gens = [Perm.from_cycles(6, [(0, 1, 2, 3, 4, 5)]), Perm.from_cycles(6, [(0, 1)])]
    g = generate(6, gens, ["c", "t"])
    assert g.order == 720
    assert g.elements[0] == Perm.identity(6)
    for p, w in zip(g.elements, g.words):
        assert g.evaluate(w) == p


def test_generate_matches_brute_closure(ex3):
    g = left_action_group(ex3.qs)
    assert set(g.elements) == _brute_closure(list(g.generators))
    again = generate(5, list(g.elements))
    assert set(again.elements) == set(g.elements)


def test_group_cap():
    gens = [Perm.from_cycles(7, [(0, 1, 2, 3, 4, 5, 6)]), Perm.from_cycles(7, [(0, 1)])]
    with pytest.raises(GroupTooLarge):
        generate(7, gens, max_size=100)


def test_ex14_restriction_is_cyclic_12(ex1):
    qs = ex1.qs
    dec = orbits(qs)
    assert dec.sizes() == [12, 1, 1] and dec.t0 == 1
    g = restriction_group(qs, 0, dec)
    assert g.order == 12
    st = invariant_factors(g)
    assert st.orders == (12,)
    assert restriction_group(qs, 1, dec).order == 1


def test_ex14_coordinates_in_pinned_basis(ex1):
    qs = ex1.qs
    dec = orbits(qs)
    pts = dec.orbits[0]
    a, b = qs.index("a"), qs.index("b")
    La = Perm(qs.left_table[a]).restrict(pts)
    Lb = Perm(qs.left_table[b]).restrict(pts)
    u = La * La * Lb * Lb * Lb
    st = structure_from_basis(12, [u], [(a, a, b, b, b)])
    assert u.cycle_type() == [12]
    assert element_coordinates(st, La) == (2,)
    assert element_coordinates(st, Lb) == (3,)
    assert element_coordinates(st, Perm.identity(12)) == (0,)
    with pytest.raises(NotInGroup):
        element_coordinates(st, Perm.from_cycles(12, [(0, 1)]))


def test_ex42_groups(ex2):
    qs = ex2.qs
    dec = orbits(qs)
    assert dec.sizes() == [18, 16, 8] and dec.t0 == 3
    orders = [invariant_factors(restriction_group(qs, i, dec)).orders for i in range(3)]
    assert orders == [(3, 6), (4, 4), (2, 4)]
    assert is_abelian(restriction_group(qs, 0, dec))[0]


def test_ex5_is_dihedral(ex3):
    g = left_action_group(ex3.qs)
    assert g.order == 8
    ok, wit = is_abelian(g)
    assert not ok and wit is not None
    with pytest.raises(NotAbelian):
        invariant_factors(g)
    orders = sorted(p.order() for p in g.elements)
    assert orders == [1, 2, 2, 2, 2, 2, 4, 4]


def test_orbit_ordering():
    dec = orbits(trivial_solution(3))
    assert dec.orbits == ((0,), (1,), (2,)) and dec.t0 == 0


def test_lambda_order_first_coordinate_fastest():
    assert lambda_order((2, 3))[:4] == [(0, 0), (1, 0), (0, 1), (1, 1)]
    assert len(lambda_order((3, 6))) == 18
    assert lambda_order(()) == [()]


def test_invariant_factors_on_products():
    # C2 x C4 x C4 acting on disjoint blocks, generated redundantly
    c2 = Perm.from_cycles(10, [(0, 1)])
    c4a = Perm.from_cycles(10, [(2, 3, 4, 5)])
    c4b = Perm.from_cycles(10, [(6, 7, 8, 9)])
    g = generate(10, [c2 * c4a, c4a, c4b * c2, c4b])
    st = invariant_factors(g)
    assert st.orders == (2, 4, 4)
    assert len(st.coords) == g.order == 32
    for a, b in zip(st.orders, st.orders[1:]):
        assert b % a == 0
    # divisibility forces C6 = C2 x C3 to come out as a single factor
    c6 = generate(5, [Perm.from_cycles(5, [(0, 1)]), Perm.from_cycles(5, [(2, 3, 4)])])
    assert invariant_factors(c6).orders == (6,)


def test_level2_groups_on_corpus(level2_corpus):
    for qs in level2_corpus:
        assert is_abelian(left_action_group(qs))[0]
        dec = orbits(qs)
        for i in range(dec.t0):
            g = restriction_group(qs, i, dec)
            assert g.order == len(dec.orbits[i])
            # point stabilizers are trivial: the orbit map is a bijection
            assert len({p[0] for p in g.elements}) == g.order
            st = invariant_factors(g)
            assert st.total_order == g.order
            assert len(set(st.coords.values())) == g.order
