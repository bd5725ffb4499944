import pytest

from fiatcell import (
    Decomposition,
    Element,
    InputError,
    Shadow,
    antichains,
    build_bn,
    cell_partition,
    cell_poset,
    quotient_by_upset,
    thick_ideals,
    upsets_by_enumeration,
    validate_shadow,
    window_shadow,
)
from fiatcell.udot import bn_element_monomials, shift_shadow


def arrow_pair_shadow():
    """Partial two-object shadow whose involution swaps the non-identities.

    The products f g and g f are left out of the table, as are the identity
    actions f e0 and e0 g (dual entries, so the involution stays valid), so
    {e0}, {f} and {g} are all up-closed but {f} is not *-stable.
    """
    e0 = Element("e0", 0, 0, is_identity=True)
    e1 = Element("e1", 1, 1, is_identity=True)
    f = Element("f", 0, 1)
    g = Element("g", 1, 0)
    table = {
        (e0, e0): Decomposition({e0: 1}),
        (e1, e1): Decomposition({e1: 1}),
        (e1, f): Decomposition({f: 1}),
        (g, e1): Decomposition({g: 1}),
    }
    return Shadow(
        objects=(0, 1),
        elements=(e0, e1, f, g),
        table=table,
        involution={e0: e0, e1: e1, f: g, g: f},
        partial=True,
    )


def test_antichains_of_chains():
    for n in range(1, 6):
        poset = cell_poset(build_bn(n))
        chains = antichains(poset)
        # in a chain only singletons and the empty set are antichains
        assert chains == [()] + [(i,) for i in range(len(poset.cells))]


def test_thick_ideal_count_matches_upsets():
    for n in range(1, 6):
        s = build_bn(n)
        poset = cell_poset(s)
        ideals = thick_ideals(s, poset)
        assert len(ideals) == n // 2 + 2
        assert len(ideals) == len(upsets_by_enumeration(poset))
        assert len({members for _, members in ideals}) == len(ideals)


def test_window_ideal_count_matches_upsets():
    for k in (0, 2, 4):
        s = window_shadow(k)
        poset = cell_poset(s)
        assert len(thick_ideals(s, poset)) == len(upsets_by_enumeration(poset))


def test_b2_ideals_listed():
    s = build_bn(2)
    ideals = thick_ideals(s)
    assert len(ideals) == 3
    assert ideals[0] == ((), frozenset())
    sizes = sorted(len(members) for _, members in ideals)
    assert sizes == [0, 9, 10]


def test_ideal_members_are_up_closed():
    from fiatcell import principal_ideal

    s = build_bn(4)
    for _, members in thick_ideals(s):
        for a in members:
            assert principal_ideal(s, a, "two-sided") <= members


def test_quotient_by_empty_set_is_identity():
    s = build_bn(2)
    assert quotient_by_upset(s, frozenset()) == s


def test_quotient_of_b4_by_top_cell():
    s = build_bn(4)
    top = cell_poset(s).cells[0]
    q = quotient_by_upset(s, top)
    validate_shadow(q)
    assert len(cell_partition(q, "two-sided").classes) == 2
    assert q.objects == (1, 2, 3)
    assert q.involution is not None


def test_quotient_equals_shifted_smaller_rank():
    for n in (3, 4, 5):
        big = build_bn(n)
        q = quotient_by_upset(big, cell_poset(big).cells[0])
        small = shift_shadow(build_bn(n - 2), bn_element_monomials(n - 2), 1)
        assert q == small


def test_quotient_cells_are_images():
    s = build_bn(4)
    top = cell_poset(s).cells[0]
    q = quotient_by_upset(s, top)
    old = {
        frozenset(e.name for e in cls) - {e.name for e in top}
        for cls in cell_partition(s, "two-sided").classes
    }
    old.discard(frozenset())
    new = {
        frozenset(e.name for e in cls)
        for cls in cell_partition(q, "two-sided").classes
    }
    assert new == old


def test_quotient_rejects_non_up_closed():
    s = build_bn(2)
    with pytest.raises(InputError, match="not up-closed"):
        quotient_by_upset(s, frozenset({s.element("F0^(1)")}))
    with pytest.raises(InputError, match="unknown element"):
        quotient_by_upset(s, frozenset({Element("ghost", 0, 0)}))


def test_quotient_identity_removal_guard():
    s = arrow_pair_shadow()
    # {e0} is up-closed here because the products through f and g are absent,
    # but f still touches object 0
    with pytest.raises(InputError, match="still touches"):
        quotient_by_upset(s, frozenset({s.element("e0")}))


def test_quotient_drops_non_stable_involution():
    s = arrow_pair_shadow()
    q = quotient_by_upset(s, frozenset({s.element("f")}))
    validate_shadow(q)
    assert q.involution is None
    assert [e.name for e in q.elements] == ["e0", "e1", "g"]
    assert q.partial


def test_quotient_keeps_stable_involution():
    s = arrow_pair_shadow()
    q = quotient_by_upset(s, frozenset({s.element("f"), s.element("g")}))
    validate_shadow(q)
    assert q.involution == {q.element("e0"): q.element("e0"),
                            q.element("e1"): q.element("e1")}


def test_quotient_by_everything_is_empty():
    s = window_shadow(2)
    q = quotient_by_upset(s, frozenset(s.elements))
    assert q.elements == () and q.objects == () and q.table == {}
