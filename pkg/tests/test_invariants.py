import pytest

from gnsatoms.core import DomainError, GapSet, InvalidGapSet
from gnsatoms.enumeration import iter_family, FamilyQuery, ordinary
from gnsatoms.fixtures import (
    ATOM_EH3,
    FAMILY_32_21,
    CORNER_43,
    IRREDUCIBLE_53,
    MF_44_11_33,
    MF_44_22_33,
    NON_ATOM_44,
)
from gnsatoms.invariants import (
    _ceh_definitional,
    _ceh_fast,
    corner,
    corner_special_gaps,
    frobenius,
    irreducible_via_decompositions,
    is_ani,
    is_atomic,
    is_irreducible,
    profile,
    pseudo_frobenius,
    slab,
    special_gaps,
    unitary_extension,
)

import oracles

O32 = ordinary((3, 2))
EMPTY = GapSet(2, [])
D1_ONE = GapSet(1, [(1,)])


def test_corner():
    assert corner(CORNER_43) == (4, 3)
    assert corner(EMPTY) == (0, 0)
    assert corner(IRREDUCIBLE_53) == (5, 3)
    with pytest.raises(InvalidGapSet):
        corner(GapSet(2, [(1, 1)]))


def test_frobenius():
    assert frobenius(NON_ATOM_44) == (3, 3)
    assert frobenius(CORNER_43) is None
    assert frobenius(D1_ONE) == (1,)
    assert frobenius(EMPTY) is None


def test_pseudo_frobenius():
    assert pseudo_frobenius(CORNER_43) == [(0, 1), (1, 1), (1, 2), (3, 0)]
    assert pseudo_frobenius(D1_ONE) == [(1,)]
    # every gap of an ordinary GNS is pseudo-Frobenius; doubling removes (1,0)
    assert pseudo_frobenius(O32) == oracles.pseudo_frobenius(O32.gaps, 2) == O32.sorted()
    assert special_gaps(O32) == [(0, 1), (1, 1), (2, 0), (2, 1)]


def test_special_gaps():
    assert special_gaps(CORNER_43) == [(0, 1), (1, 1), (1, 2), (3, 0)]
    assert special_gaps(IRREDUCIBLE_53) == [(4, 2)]
    assert special_gaps(NON_ATOM_44) == [(2, 3), (3, 3)]


def test_slabs():
    assert slab(IRREDUCIBLE_53, 1) == ([(4, 0), (4, 1), (4, 2)], [(4, 2)])
    assert slab(IRREDUCIBLE_53, 2)[0] == [(1, 2), (4, 2)]
    with pytest.raises(IndexError):
        slab(IRREDUCIBLE_53, 3)
    with pytest.raises(IndexError):
        slab(IRREDUCIBLE_53, 0)
    with pytest.raises(DomainError):
        slab(EMPTY, 1)


def test_corner_special_gaps():
    assert corner_special_gaps(CORNER_43) == [(0, 1), (1, 1)]
    assert corner_special_gaps(O32) == [(0, 1), (1, 1), (2, 0), (2, 1)]
    assert corner_special_gaps(IRREDUCIBLE_53) == [(4, 2)]
    assert corner_special_gaps(EMPTY) == []


def test_irreducibility():
    assert is_irreducible(IRREDUCIBLE_53)
    assert not is_irreducible(sorted(MF_44_22_33)[0])
    assert is_irreducible(sorted(MF_44_11_33)[0])
    with pytest.raises(DomainError):
        is_irreducible(EMPTY)


def test_irreducible_via_decompositions():
    assert irreducible_via_decompositions(IRREDUCIBLE_53)
    assert not irreducible_via_decompositions(NON_ATOM_44)
    assert not irreducible_via_decompositions(GapSet(1, [(k,) for k in range(1, 6)]))
    with pytest.raises(DomainError):
        irreducible_via_decompositions(CORNER_43)


def test_atomic_and_ani():
    assert not is_atomic(NON_ATOM_44)
    assert is_atomic(ATOM_EH3)
    assert special_gaps(ATOM_EH3) == [(2, 1), (2, 2), (3, 1)]
    assert corner_special_gaps(ATOM_EH3) == [(2, 1)]
    assert is_atomic(IRREDUCIBLE_53)
    assert is_ani(ATOM_EH3)
    assert not is_ani(IRREDUCIBLE_53)
    assert not is_ani(NON_ATOM_44)
    with pytest.raises(DomainError):
        is_atomic(EMPTY)


def test_unitary_extension():
    assert unitary_extension(CORNER_43, (0, 1)) == GapSet(2, [(1, 0), (1, 1), (1, 2), (3, 0)])
    assert unitary_extension(O32, (1, 1)) == FAMILY_32_21["S2"]
    with pytest.raises(InvalidGapSet):
        unitary_extension(CORNER_43, (1, 0))


def test_profile_document():
    doc = profile(CORNER_43).to_dict()
    assert doc["corner"] == [4, 3]
    assert doc["ceh"] == [[0, 1], [1, 1]]
    assert doc["slabs"][0] == {"i": 1, "h": [[3, 0]], "mh": [[3, 0]]}
    assert doc["irreducible"] is False and doc["atomic"] is False
    empty = profile(EMPTY).to_dict()
    assert empty["corner"] == [0, 0] and empty["genus"] == 0
    assert empty["irreducible"] is None and empty["slabs"] == []


# Every GNS with small corner against the brute-force definitions.

SMALL_CORNERS = [(2, 2), (3, 2), (2, 3), (3, 3), (4, 2), (4, 3), (5,), (8,), (2, 2, 2)]


@pytest.mark.parametrize("c", SMALL_CORNERS)
def test_invariants_match_definitions(c):
    d = len(c)
    for g in oracles.family(c):
        H = GapSet(d, g)
        p = profile(H)
        assert p.corner == c
        assert p.pf == oracles.pseudo_frobenius(g, d)
        assert p.eh == oracles.special_gaps(g)
        assert p.ceh == oracles.corner_special_gaps(g, d)
        assert p.frobenius == (tuple(x - 1 for x in c) if tuple(x - 1 for x in c) in g else None)


@pytest.mark.parametrize("c", [(3, 2), (3, 3), (4, 3), (6,)])
def test_irreducible_and_atomic_match_intersection_search(c):
    for g in oracles.family(c):
        H = GapSet(len(c), g)
        p = profile(H)
        assert p.irreducible == (not oracles.is_intersection(g))
        assert p.atomic == (not oracles.is_intersection(g, same_corner=True))
        if p.frobenius is not None:
            assert irreducible_via_decompositions(H) == p.irreducible


@pytest.mark.parametrize("c", [(4, 4), (5, 3), (3, 3, 2)])
def test_fast_ceh_equals_definitional(c):
    for node in iter_family(FamilyQuery(c)):
        H = node.gapset
        eh = special_gaps(H)
        assert _ceh_fast(H, eh, c) == _ceh_definitional(H, eh, c)


def test_corner_monotone_under_inclusion():
    # T inside S (fewer gaps) never has a larger corner.
    for c in [(3, 3), (4, 2)]:
        fam = sorted(oracles.family(c), key=sorted)
        for g in fam:
            for h in special_gaps(GapSet(2, g)):
                assert all(a <= b for a, b in zip(corner(GapSet(2, g - {h})), c))
