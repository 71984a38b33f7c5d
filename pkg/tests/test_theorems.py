import pytest

from gnsatoms.core import DomainError, GapSet, GNSError
from gnsatoms.fixtures import IRREDUCIBLE_53, MF_44_11_33, MF_44_22_33, NON_ATOM_44
from gnsatoms.theorems import (
    REGISTRY,
    GapPair,
    all_maximals_irreducible,
    ani_sufficient,
    describe,
    exists_eh_pair,
    family_index,
    incomparable_eh_pairs,
    is_multiple,
    m_g,
    m_tilde,
    pairs_upto,
    verify_pair,
    verify_proposition,
    verify_teo_ani,
)

import oracles


def test_is_multiple():
    assert is_multiple((3, 3), (1, 1)) == 3
    assert is_multiple((4, 0), (2, 0)) == 2
    assert is_multiple((3, 2), (1, 1)) is None
    assert is_multiple((0, 0), (1, 1)) is None
    with pytest.raises(ValueError):
        is_multiple((1, 1), (0, 0))


def test_gap_pair_validation():
    assert GapPair((1, 1), (3, 3)).corner == (4, 4)
    with pytest.raises(GNSError):
        GapPair((0, 0), (1, 1))
    with pytest.raises(GNSError):
        GapPair((1, 2), (2, 1))


def test_closed_forms_on_worked_pairs():
    assert ani_sufficient(((2, 2), (3, 3)))
    assert not ani_sufficient(((1, 1), (3, 3)))
    assert all_maximals_irreducible(((1, 1), (3, 3))) is True
    assert all_maximals_irreducible(((2, 2), (3, 3))) is False
    assert exists_eh_pair(((2, 2), (3, 3)))
    assert not exists_eh_pair(((1, 1), (3, 3)))
    # 2 g1 - g2 leaves N_0^2 and 2 g1 is not below g2
    assert all_maximals_irreducible(((1, 2), (3, 3))) is None


def _mf_all_irreducible(g1, g2):
    c = tuple(x + 1 for x in g2)
    mf = oracles.maximal(oracles.family(c, tuple(sorted({g1, g2}))))
    return all(len(oracles.special_gaps(g)) == 1 for g in mf)


def test_all_irreducible_criterion_against_subset_search():
    for g in pairs_upto((4, 4)):
        truth = _mf_all_irreducible(g.g1, g.g2)
        assert truth == (not exists_eh_pair(g))
        closed = all_maximals_irreducible(g)
        if closed is not None:
            assert closed == truth


def test_maximal_gap_sets():
    S = sorted(MF_44_22_33)[0]
    assert m_tilde(S, ((2, 2), (3, 3))) == []
    with pytest.raises(DomainError):
        m_tilde(GapSet(2, [(0, 1)]), ((0, 1), (0, 2)))
    with pytest.raises(DomainError):
        m_g(IRREDUCIBLE_53, (3, 0))
    # irreducible: F - x lies in S for every gap x other than F/2
    assert m_g(IRREDUCIBLE_53, (4, 2)) == []
    assert m_g(NON_ATOM_44, (3, 3)) == [(2, 3)]


def test_family_index_inclusion_matches_subset_search():
    ix = family_index((3, 3))
    for i, H in enumerate(ix.gapsets):
        assert ix.is_intersection(i) == oracles.is_intersection(H.gaps, same_corner=True)
        assert ix.is_maximal(i) == (frozenset(H.gaps) in oracles.maximal(oracles.family((3, 3))))


@pytest.mark.parametrize("id", [i for i in REGISTRY if i != "converse-irreducible-ceh-empty"])
def test_registry_small_sweep(id):
    r = verify_proposition(id, (3, 3))
    assert r.counterexamples == []
    assert r.checked + r.vacuous > 0


@pytest.mark.parametrize("id", [i for i in REGISTRY if i != "converse-irreducible-ceh-empty"])
def test_registry_d1_sweep(id):
    assert verify_proposition(id, (8,)).counterexamples == []


def test_false_converse_has_counterexample():
    r = verify_proposition("converse-irreducible-ceh-empty", (5, 3))
    assert r.verdict == "counterexamples found"
    assert [list(p) for p in IRREDUCIBLE_53.sorted()] in r.counterexamples


def test_report_document_and_errors():
    r = verify_proposition("atom-iff-ceh", (3, 2))
    doc = r.to_dict()
    assert doc["id"] == "atom-iff-ceh" and doc["bound"] == [3, 2]
    assert doc["verdict"] == "verified at this scale" and r.verified
    with pytest.raises(KeyError):
        verify_proposition("no-such-id", (3, 3))
    with pytest.raises(KeyError):
        describe("no-such-id")
    assert all(describe(i) for i in REGISTRY)


def test_pair_reports():
    r = verify_teo_ani(((2, 2), (3, 3)))
    assert r.params["members"] == 14 and r.params["all_non_irreducible"] and r.verified
    r = verify_teo_ani(((1, 1), (3, 3)))
    assert r.params["members"] == 22 and r.params["all_irreducible"] and r.verified
    assert verify_pair("all-irreducible-criterion", ((1, 2), (3, 3))).vacuous == 1
    with pytest.raises(KeyError):
        verify_pair("atom-iff-ceh", ((1, 1), (2, 2)))


def test_incomparable_special_pairs_exist():
    # |EH| = 2 with incomparable special gaps; the pair statements skip these.
    found = incomparable_eh_pairs((3, 3))
    for H in found:
        a, b = oracles.special_gaps(H.gaps)
        assert not all(x <= y for x, y in zip(a, b)) and not all(y <= x for x, y in zip(a, b))


def test_worked_lists_are_maximal_and_typed():
    fam = oracles.family((4, 4), ((2, 2), (3, 3)))
    assert {frozenset(H.gaps) for H in MF_44_22_33} == oracles.maximal(fam)
    fam = oracles.family((4, 4), ((1, 1), (3, 3)))
    assert {frozenset(H.gaps) for H in MF_44_11_33} == oracles.maximal(fam)
    assert len(oracles.special_gaps(NON_ATOM_44.gaps)) == 2


def test_counterexamples_in_canonical_order():
    r = verify_proposition("converse-irreducible-ceh-empty", (5, 3))
    keys = [GapSet(2, g).sort_key() for g in r.counterexamples]
    assert keys == sorted(keys) and len(keys) == 8
