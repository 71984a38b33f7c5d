"""Closed-form criteria for Frobenius GNSs with two fixed gaps, and
exhaustive sweeps that check the structural results over every GNS with
corner below a bound.

Points are compared with the natural partial order throughout.  A
difference g - x with a negative coordinate is not a point of N_0^d, so it
never belongs to S.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

import numpy as np

from .core import (
    DomainError,
    GapSet,
    GNSError,
    Point,
    add,
    as_point,
    box,
    closure_violation,
    is_natural,
    lub,
    maximals,
    ones,
    partial_leq,
    partial_less,
    scale,
    sub,
)
from .enumeration import (
    FamilyQuery,
    iter_family,
    maximal_family,
    ordinary,
    smallest_gns_containing,
)
from .invariants import GnsProfile, irreducible_via_decompositions, profile


# -- arithmetic predicates -------------------------------------------------

def is_multiple(y: Iterable[int], x: Iterable[int]) -> int | None:
    """The positive integer k with y = k x, or None."""
    y, x = tuple(y), tuple(x)
    if len(y) != len(x):
        raise ValueError("dimension mismatch")
    if not any(x):
        raise ValueError("x must be non-zero")
    k = None
    for a, b in zip(y, x):
        if b == 0:
            if a != 0:
                return None
            continue
        if a % b:
            return None
        q = a // b
        if k is None:
            k = q
        elif k != q:
            return None
    return k if k is not None and k > 0 else None


@dataclass(frozen=True)
class GapPair:
    g1: Point
    g2: Point

    def __init__(self, g1, g2):
        g1, g2 = as_point(g1), as_point(g2)
        if not any(g1):
            raise GNSError("g1 must be non-zero")
        if not partial_less(g1, g2):
            raise GNSError(f"need g1 < g2, got {g1} and {g2}")
        object.__setattr__(self, "g1", g1)
        object.__setattr__(self, "g2", g2)

    @property
    def corner(self) -> Point:
        return add(self.g2, ones(len(self.g2)))


def _pair(g) -> GapPair:
    return g if isinstance(g, GapPair) else GapPair(*g)


def ani_sufficient(g) -> bool:
    """g2 is a multiple of g2 - g1 and 2 g1 != g2."""
    g = _pair(g)
    return is_multiple(g.g2, sub(g.g2, g.g1)) is not None and scale(2, g.g1) != g.g2


def exists_eh_pair(g) -> bool:
    """Closed form for: some GNS has special gaps exactly {g1, g2}."""
    g = _pair(g)
    two_g1 = scale(2, g.g1)
    if not partial_less(g.g2, two_g1):
        return False
    return (
        is_multiple(g.g2, sub(g.g2, g.g1)) is not None
        or is_multiple(g.g2, sub(two_g1, g.g2)) is None
    )


def all_maximals_irreducible(g) -> bool | None:
    """Closed form for: every member of MF(g2 + 1; g1, g2) is irreducible.

    Returns None when 2 g1 <= g2 fails and 2 g1 - g2 has a negative
    coordinate; the second condition then talks about multiples of a
    vector outside N_0^d and is left undecided.
    """
    g = _pair(g)
    two_g1 = scale(2, g.g1)
    if partial_leq(two_g1, g.g2):
        return True
    w = sub(two_g1, g.g2)
    if not is_natural(w):
        return None
    return is_multiple(g.g2, sub(g.g2, g.g1)) is None and is_multiple(g.g2, w) is not None


# -- maximal-gap sets ------------------------------------------------------

def m_tilde(H: GapSet, g) -> list[Point]:
    g = _pair(g)
    for p in (g.g1, g.g2):
        if p not in H.gaps:
            raise DomainError(f"{p} is not a gap")
    cand = [
        x for x in H.sorted()
        if scale(2, x) not in H.gaps
        and not H.in_semigroup(sub(g.g1, x))
        and not H.in_semigroup(sub(g.g2, x))
    ]
    return maximals(cand)


def m_g(H: GapSet, g: Iterable[int]) -> list[Point]:
    g = tuple(g)
    if g not in H.gaps:
        raise DomainError(f"{g} is not a gap")
    cand = [x for x in H.sorted() if scale(2, x) != g and not H.in_semigroup(sub(g, x))]
    return maximals(cand)


# -- reports ---------------------------------------------------------------

@dataclass
class VerificationReport:
    id: str
    bound: Point
    params: dict = field(default_factory=dict)
    checked: int = 0
    vacuous: int = 0
    counterexamples: list = field(default_factory=list)
    ms: float = 0.0

    @property
    def verified(self) -> bool:
        return not self.counterexamples and self.checked > 0

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "counterexamples found"
        if self.checked == 0:
            return "vacuous at this scale"
        return "verified at this scale"

    def to_dict(self) -> dict:
        doc = {
            "id": self.id,
            "bound": list(self.bound),
            "checked": self.checked,
            "vacuous": self.vacuous,
            "counterexamples": self.counterexamples,
            "ms": round(self.ms, 3),
        }
        if self.params:
            doc["params"] = self.params
        doc["verdict"] = self.verdict
        return doc


def _gaps_doc(H: GapSet) -> list[list[int]]:
    return [list(p) for p in H.sorted()]


# -- family index for inclusion brute force --------------------------------

class FamilyIndex:
    """All of F(c) with gap sets as bitmasks over the box below c - 1.

    Inclusion questions (maximality in a subfamily, intersections of two
    larger members) are answered by comparing masks directly, without the
    special-gap theory under test.
    """

    def __init__(self, c: Point):
        self.corner = c
        self.points = list(box(tuple(ci - 1 for ci in c)))
        self.bit = {p: 1 << k for k, p in enumerate(self.points)}
        self.gapsets = [n.gapset for n in iter_family(FamilyQuery(c))]
        self.profiles = [profile(H) for H in self.gapsets]
        self.masks = np.array([self.mask(H.gaps) for H in self.gapsets], dtype=np.int64)
        self._supers: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.gapsets)

    def mask(self, pts: Iterable[Point]) -> int:
        m = 0
        for p in pts:
            m |= self.bit[p]
        return m

    def supers(self, i: int) -> np.ndarray:
        """Masks of members strictly containing member i (fewer gaps)."""
        if i not in self._supers:
            s = self.masks[i]
            m = self.masks
            self._supers[i] = m[((m & ~s) == 0) & (m != s)]
        return self._supers[i]

    def is_maximal(self, i: int, forced: Iterable[Point] = ()) -> bool:
        """Member i is inclusion-maximal among members having ``forced`` as gaps."""
        x = self.mask(forced)
        sup = self.supers(i)
        return not bool(np.any((sup & x) == x))

    def is_intersection(self, i: int) -> bool:
        """Member i is the intersection of two strictly larger members."""
        sup = self.supers(i)
        if len(sup) < 2:
            return False
        s = self.masks[i]
        return bool(np.any(np.bitwise_or.outer(sup, sup) == s))

    def maximal_for_some_gap(self, i: int) -> bool:
        sup = self.supers(i)
        covered = int(np.bitwise_or.reduce(sup)) if len(sup) else 0
        return (int(self.masks[i]) & ~covered) != 0


@lru_cache(maxsize=None)
def family_index(c: Point) -> FamilyIndex:
    return FamilyIndex(c)


def corners_upto(bound: Iterable[int]) -> list[Point]:
    """Every corner c <= bound of a GNS with positive genus."""
    bound = as_point(bound)
    out = []
    for c in itertools.product(*(range(1, b + 1) for b in bound)):
        if any(ci > 1 for ci in c):
            out.append(c)
    return out


def pairs_upto(bound: Iterable[int]) -> list[GapPair]:
    """Comparable pairs 0 < g1 < g2 with g2 + 1 <= bound."""
    bound = as_point(bound)
    top = tuple(b - 1 for b in bound)
    pts = list(box(top))
    return [GapPair(a, b) for a in pts for b in pts if partial_less(a, b)]


# -- the registry ----------------------------------------------------------
#
# Per-semigroup checks take (index, i) and return True (holds), False
# (counterexample) or None (hypothesis does not fire).  Per-pair checks take
# a GapPair and return (outcome, witness-doc).

SemigroupCheck = Callable[[FamilyIndex, int], "bool | None"]
PairCheck = Callable[[GapPair], "tuple[bool | None, dict]"]

SEMIGROUP_CHECKS: dict[str, tuple[str, SemigroupCheck]] = {}
PAIR_CHECKS: dict[str, tuple[str, PairCheck]] = {}


def _semigroup(name: str, statement: str):
    def deco(fn):
        SEMIGROUP_CHECKS[name] = (statement, fn)
        return fn
    return deco


def _pairwise(name: str, statement: str):
    def deco(fn):
        PAIR_CHECKS[name] = (statement, fn)
        return fn
    return deco


def _implies(hyp: bool, concl: Callable[[], bool]) -> bool | None:
    return concl() if hyp else None


@_semigroup("corner-lub", "c(S) = lub(H(S)) + 1")
def _corner_lub(ix, i):
    return ix.profiles[i].corner == add(lub(ix.gapsets[i].gaps), ones(len(ix.corner)))


@_semigroup("corner-lub-eh", "c(S) = lub(EH(S)) + 1")
def _corner_lub_eh(ix, i):
    p = ix.profiles[i]
    return p.corner == add(lub(p.eh), ones(len(p.corner)))


@_semigroup("corner-lub-mh", "c(S) = lub(union of MH(S)^(i)) + 1")
def _corner_lub_mh(ix, i):
    p = ix.profiles[i]
    tops = [x for _, mh in p.slabs for x in mh]
    return p.corner == add(lub(tops), ones(len(p.corner)))


@_semigroup("mh-in-eh", "every MH(S)^(i) is non-empty and contained in EH(S)")
def _mh_in_eh(ix, i):
    p = ix.profiles[i]
    return all(mh and set(mh) <= set(p.eh) for _, mh in p.slabs)


@_semigroup("unique-max-frobenius", "EH(S) with a unique maximal h => S Frobenius with F(S) = h")
def _unique_max(ix, i):
    p = ix.profiles[i]
    top = maximals(p.eh)
    return _implies(len(top) == 1, lambda: p.frobenius == top[0])


@_semigroup("dominated-ceh", "h in EH(S), h < g for a gap g => h in CEH(S)")
def _dominated(ix, i):
    p = ix.profiles[i]
    H = ix.gapsets[i]
    hyp = [h for h in p.eh if any(partial_less(h, g) for g in H.gaps)]
    return _implies(bool(hyp), lambda: set(hyp) <= set(p.ceh))


@_semigroup("off-slab-ceh", "h in EH(S) outside every H(S)^(i) => h in CEH(S)")
def _off_slab(ix, i):
    p = ix.profiles[i]
    in_slab = {x for h, _ in p.slabs for x in h}
    hyp = [h for h in p.eh if h not in in_slab]
    return _implies(bool(hyp), lambda: set(hyp) <= set(p.ceh))


@_semigroup("non-ceh-singleton-slab", "h in EH(S) \\ CEH(S) => H(S)^(i) = {h} for some i")
def _singleton_slab(ix, i):
    p = ix.profiles[i]
    hyp = [h for h in p.eh if h not in p.ceh]
    return _implies(bool(hyp), lambda: all(any(layer == [h] for layer, _ in p.slabs) for h in hyp))


@_semigroup("ceh-nonempty", "|EH(S)| >= d + 1 => CEH(S) non-empty")
def _ceh_nonempty(ix, i):
    p = ix.profiles[i]
    return _implies(len(p.eh) >= len(p.corner) + 1, lambda: bool(p.ceh))


@_semigroup("ceh-pigeonhole", "|EH(S)| >= d + k => |CEH(S)| >= k for k >= 1")
def _pigeonhole(ix, i):
    p = ix.profiles[i]
    k = len(p.eh) - len(p.corner)
    return _implies(k >= 1, lambda: len(p.ceh) >= k)


@_semigroup("frobenius-ceh-empty-irreducible", "S Frobenius and CEH(S) empty => S irreducible")
def _frob_ceh_empty(ix, i):
    p = ix.profiles[i]
    return _implies(p.frobenius is not None and not p.ceh, lambda: p.irreducible)


@_semigroup("converse-irreducible-ceh-empty", "S irreducible => CEH(S) empty (false in general)")
def _converse(ix, i):
    p = ix.profiles[i]
    return _implies(p.irreducible, lambda: not p.ceh)


@_semigroup("irreducible-frobenius", "S irreducible => S Frobenius")
def _irr_frob(ix, i):
    p = ix.profiles[i]
    return _implies(p.irreducible, lambda: p.frobenius is not None)


@_semigroup("ani-frobenius-eh2", "S Frobenius, atomic, not irreducible => |EH(S)| = 2")
def _ani_frob(ix, i):
    p = ix.profiles[i]
    return _implies(p.frobenius is not None and p.atomic and not p.irreducible,
                    lambda: len(p.eh) == 2)


@_semigroup("eh-bound-atom", "S atomic => |EH(S)| <= d + 1")
def _eh_bound(ix, i):
    p = ix.profiles[i]
    return _implies(p.atomic, lambda: len(p.eh) <= len(p.corner) + 1)


@_semigroup("atom-iff-ceh", "S is an atom of F(c) <=> |CEH(S)| <= 1 (atoms found by inclusion search)")
def _atom_iff_ceh(ix, i):
    return (not ix.is_intersection(i)) == (len(ix.profiles[i].ceh) <= 1)


@_semigroup("atom-iff-maximal", "S is an atom <=> S in MF(c; h) for some gap h (both by inclusion search)")
def _atom_iff_max(ix, i):
    return (not ix.is_intersection(i)) == ix.maximal_for_some_gap(i)


@_semigroup("ceh-empty-maximal", "CEH(S) empty <=> S maximal in F(c)")
def _ceh_empty_max(ix, i):
    return (not ix.profiles[i].ceh) == ix.is_maximal(i)


@_semigroup("ceh-unit-maximal", "for every gap h: CEH(S) within {h} <=> S in MF(c; h)")
def _ceh_unit(ix, i):
    p = ix.profiles[i]
    return all(
        (set(p.ceh) <= {h}) == ix.is_maximal(i, [h]) for h in ix.gapsets[i].gaps
    )


@_semigroup("ceh-mf", "for every pair of gaps h1, h2: CEH(S) within {h1, h2} <=> S in MF(c; h1, h2)")
def _ceh_mf(ix, i):
    p = ix.profiles[i]
    gaps = ix.gapsets[i].sorted()
    return all(
        (set(p.ceh) <= {a, b}) == ix.is_maximal(i, [a, b])
        for a, b in itertools.combinations(gaps, 2)
    )


@_semigroup("irreducible-mf", "S Frobenius with F = f: S irreducible <=> S in MF(f + 1; f)")
def _irr_mf(ix, i):
    p = ix.profiles[i]
    if p.frobenius is None:
        return None
    return p.irreducible == ix.is_maximal(i, [p.frobenius])


def _lower_gaps(ix, i):
    """(profile, F(S), gaps strictly below F(S)) for Frobenius members."""
    p = ix.profiles[i]
    if p.frobenius is None:
        return None
    f = p.frobenius
    return p, f, [g for g in ix.gapsets[i].sorted() if g != f and any(g)]


@_semigroup("eh-mf-pair", "g1 < g2 = F(S): S in MF(g2 + 1; g1, g2) <=> EH(S) within {g1, g2}")
def _eh_mf_pair(ix, i):
    got = _lower_gaps(ix, i)
    if got is None or not got[2]:
        return None
    p, f, lows = got
    return all((set(p.eh) <= {g1, f}) == ix.is_maximal(i, [g1, f]) for g1 in lows)


@_semigroup("m-tilde-maximal", "g1 < g2 = F(S): m_tilde empty <=> S maximal; each m_tilde point extends S inside the family")
def _m_tilde_max(ix, i):
    got = _lower_gaps(ix, i)
    if got is None or not got[2]:
        return None
    p, f, lows = got
    H = ix.gapsets[i]
    for g1 in lows:
        mt = m_tilde(H, (g1, f))
        if (not mt) != ix.is_maximal(i, [g1, f]):
            return False
        for x in mt:
            T = H.without(x)
            if closure_violation(T) is not None or g1 not in T.gaps or f not in T.gaps:
                return False
    return True


@_semigroup("m-g-remark", "h in M_g(S) => not (2h <= g and 2h != g), for every gap g")
def _m_g_remark(ix, i):
    H = ix.gapsets[i]
    for g in H.gaps:
        for h in m_g(H, g):
            if partial_less(scale(2, h), g):
                return False
    return True


def _comparable_eh_pair(p: GnsProfile):
    if len(p.eh) != 2:
        return None
    a, b = p.eh
    if partial_less(b, a):
        a, b = b, a
    if not partial_less(a, b):
        return None
    return a, b


@_semigroup("eh-pair-mg", "EH(S) = {g1 < g2} => M_g2(S) = {g1}")
def _eh_pair_mg(ix, i):
    pr = _comparable_eh_pair(ix.profiles[i])
    if pr is None:
        return None
    return m_g(ix.gapsets[i], pr[1]) == [pr[0]]


@_semigroup("eh-pair-2g1", "EH(S) = {g1 < g2} => g2 < 2 g1")
def _eh_pair_2g1(ix, i):
    pr = _comparable_eh_pair(ix.profiles[i])
    if pr is None:
        return None
    g1, g2 = pr
    return partial_less(g2, scale(2, g1))


def incomparable_eh_pairs(bound: Iterable[int]) -> list[GapSet]:
    """GNSs below ``bound`` whose two special gaps are incomparable."""
    out = []
    for c in corners_upto(bound):
        ix = family_index(c)
        for i, p in enumerate(ix.profiles):
            if len(p.eh) == 2 and _comparable_eh_pair(p) is None:
                out.append(ix.gapsets[i])
    return sorted(out)


@_semigroup("eh-pair-maximal-criterion", "g2 = F(S), g2 < 2 g1 < 2 g2: EH(S) = {g1, g2} <=> S in MF(g2 + 1; g1, g2) and g2 - g1 a gap")
def _eh_pair_maximal(ix, i):
    got = _lower_gaps(ix, i)
    if got is None:
        return None
    p, f, lows = got
    hits = [g1 for g1 in lows if partial_less(f, scale(2, g1)) and partial_less(g1, f)]
    if not hits:
        return None
    H = ix.gapsets[i]
    return all(
        (set(p.eh) == {g1, f}) == (ix.is_maximal(i, [g1, f]) and sub(f, g1) in H.gaps)
        for g1 in hits
    )


@_semigroup("eh-pair-multiple-or-member", "EH(S) = {g1 < g2} => g2 = k (g2 - g1) or 2 g1 - g2 in S")
def _eh_pair_multiple(ix, i):
    pr = _comparable_eh_pair(ix.profiles[i])
    if pr is None:
        return None
    g1, g2 = pr
    H = ix.gapsets[i]
    return is_multiple(g2, sub(g2, g1)) is not None or H.in_semigroup(sub(scale(2, g1), g2))


@_semigroup("type-nonempty", "gap h outside PF(S) => some x in EH(S) has x - h in S")
def _type_nonempty(ix, i):
    p = ix.profiles[i]
    H = ix.gapsets[i]
    hyp = [h for h in H.sorted() if h not in p.pf]
    if not hyp:
        return None
    return all(any(H.in_semigroup(sub(x, h)) for x in p.eh) for h in hyp)


@_semigroup("pf-escape", "t in PF(S) => k t in EH(S) for some k >= 1")
def _pf_escape(ix, i):
    p = ix.profiles[i]
    H = ix.gapsets[i]
    eh = set(p.eh)

    def escapes(t):
        k = 1
        while scale(k, t) in H.gaps:
            if scale(k, t) in eh:
                return True
            k += 1
        return False

    return all(escapes(t) for t in p.pf)


@_semigroup("soma-frobenius", "S Frobenius: split test on F(S) agrees with |EH(S)| = 1")
def _soma(ix, i):
    p = ix.profiles[i]
    if p.frobenius is None:
        return None
    return irreducible_via_decompositions(ix.gapsets[i]) == p.irreducible


@_semigroup("unitary-extension", "for every gap h: S u {h} is a GNS <=> h in EH(S)")
def _unitary(ix, i):
    p = ix.profiles[i]
    H = ix.gapsets[i]
    eh = set(p.eh)
    return all((closure_violation(H.without(h)) is None) == (h in eh) for h in H.gaps)


@_semigroup("d1-ceh", "d = 1: CEH(S) = EH(S) \\ {F(S)}")
def _d1_ceh(ix, i):
    p = ix.profiles[i]
    if len(p.corner) != 1:
        return None
    return p.ceh == [x for x in p.eh if x != p.frobenius]


# pair-level statements

def _search_eh_pair(g: GapPair) -> GapSet | None:
    for H in maximal_family(g.corner, g.g1, g.g2):
        eh = profile(H).eh
        if eh == sorted([g.g1, g.g2]) and sub(g.g2, g.g1) in H.gaps:
            return H
    return None


@_pairwise("teo-ani", "every member of MF(g2 + 1; g1, g2) non-irreducible <=> g2 multiple of g2 - g1 and 2 g1 != g2")
def _teo_ani_pair(g):
    mf = maximal_family(g.corner, g.g1, g.g2)
    all_non = all(not profile(H).irreducible for H in mf)
    closed = ani_sufficient(g)
    return all_non == closed, {"members": len(mf), "all_non_irreducible": all_non, "closed_form": closed}


@_pairwise("ani-multiple-condition", "g2 multiple of g2 - g1 and 2 g1 != g2 => every Frobenius member of F(g2 + 1; g1) is non-irreducible")
def _ani_multiple(g):
    if not ani_sufficient(g):
        return None, {}
    members = [n.gapset for n in iter_family(FamilyQuery(g.corner, [g.g1]))]
    frob = [H for H in members if g.g2 in H.gaps]
    bad = [H for H in frob if profile(H).irreducible]
    return not bad, {"frobenius_members": len(frob), "irreducible": [_gaps_doc(H) for H in bad]}


@_pairwise("eh-pair-existence", "some GNS has EH = {g1, g2} <=> g2 < 2 g1 and (g2 = k (g2 - g1) or g2 not a multiple of 2 g1 - g2)")
def _eh_pair_exists(g):
    witness = _search_eh_pair(g)
    closed = exists_eh_pair(g)
    doc = {"closed_form": closed, "witness": _gaps_doc(witness) if witness else None}
    return (witness is not None) == closed, doc


@_pairwise("all-irreducible-criterion", "all members of MF(g2 + 1; g1, g2) irreducible <=> 2 g1 <= g2, or g2 not a multiple of g2 - g1 and a multiple of 2 g1 - g2")
def _all_irr_criterion(g):
    closed = all_maximals_irreducible(g)
    if closed is None:
        return None, {}
    mf = maximal_family(g.corner, g.g1, g.g2)
    all_irr = all(profile(H).irreducible for H in mf)
    return all_irr == closed, {"members": len(mf), "all_irreducible": all_irr, "closed_form": closed}


@_pairwise("all-irreducible-search", "all members of MF(g2 + 1; g1, g2) irreducible <=> no GNS has EH = {g1, g2}")
def _all_irr_search(g):
    mf = maximal_family(g.corner, g.g1, g.g2)
    all_irr = all(profile(H).irreducible for H in mf)
    closed = not exists_eh_pair(g)
    return all_irr == closed, {"members": len(mf), "all_irreducible": all_irr, "closed_form": closed}


@_pairwise("smallest-gns-family", "g2 not a multiple of g2 - g1 => <O(g2 + 1) u {g2 - g1}> lies in F(g2 + 1; g2)")
def _smallest(g):
    step = sub(g.g2, g.g1)
    if is_multiple(g.g2, step) is not None:
        return None, {}
    H = smallest_gns_containing(ordinary(g.corner), [step])
    ok = closure_violation(H) is None and g.g2 in H.gaps and lub(H.gaps) == g.g2
    return ok, {"gaps": _gaps_doc(H)}


@_pairwise("smallest-gns-pair-family", "g2 < 2 g1, g2 not a multiple of 2 g1 - g2 => <O(g2 + 1) u {2 g1 - g2}> lies in F(g2 + 1; g1, g2)")
def _smallest_pair(g):
    two_g1 = scale(2, g.g1)
    if not partial_less(g.g2, two_g1):
        return None, {}
    step = sub(two_g1, g.g2)
    if is_multiple(g.g2, step) is not None:
        return None, {}
    H = smallest_gns_containing(ordinary(g.corner), [step])
    ok = closure_violation(H) is None and {g.g1, g.g2} <= H.gaps and lub(H.gaps) == g.g2
    return ok, {"gaps": _gaps_doc(H)}


REGISTRY = sorted(SEMIGROUP_CHECKS) + sorted(PAIR_CHECKS) + ["d1-ml-bridge"]


def describe(id: str) -> str:
    if id in SEMIGROUP_CHECKS:
        return SEMIGROUP_CHECKS[id][0]
    if id in PAIR_CHECKS:
        return PAIR_CHECKS[id][0]
    if id == "d1-ml-bridge":
        return "d = 1: ML(g1, g2) = MF(g2 + 1; g1) (maximal semigroups avoiding g1, g2 by subset search)"
    raise KeyError(id)


def _sorted_examples(items: list) -> list:
    # Gap lists in canonical gap-set order; pair witnesses by their JSON text.
    if all(isinstance(x, list) for x in items):
        return sorted(items, key=lambda gaps: tuple(tuple(p) for p in gaps))
    return sorted(items, key=lambda x: json.dumps(x, sort_keys=True))


def verify_proposition(id: str, bound: Iterable[int]) -> VerificationReport:
    """Sweep every GNS (or gap pair) below ``bound`` and collect counterexamples."""
    if id not in REGISTRY:
        raise KeyError(f"unknown statement id {id!r}")
    bound = as_point(bound)
    report = VerificationReport(id, bound)
    t0 = time.perf_counter()
    if id in SEMIGROUP_CHECKS:
        check = SEMIGROUP_CHECKS[id][1]
        for c in corners_upto(bound):
            ix = family_index(c)
            for i in range(len(ix)):
                outcome = check(ix, i)
                if outcome is None:
                    report.vacuous += 1
                    continue
                report.checked += 1
                if not outcome:
                    report.counterexamples.append(_gaps_doc(ix.gapsets[i]))
    elif id in PAIR_CHECKS:
        check = PAIR_CHECKS[id][1]
        for g in pairs_upto(bound):
            outcome, doc = check(g)
            if outcome is None:
                report.vacuous += 1
                continue
            report.checked += 1
            if not outcome:
                report.counterexamples.append({"g1": list(g.g1), "g2": list(g.g2), **doc})
    else:
        _verify_d1_bridge(bound, report)
    report.counterexamples = _sorted_examples(report.counterexamples)
    report.ms = (time.perf_counter() - t0) * 1000
    return report


def numerical_semigroups_avoiding(g1: int, g2: int) -> list[GapSet]:
    """Inclusion-maximal numerical semigroups with g1, g2 as gaps, by subset search.

    Such a semigroup has every gap below g2, so it suffices to try all gap
    sets inside {1, ..., g2}.
    """
    found = []
    universe = range(1, g2 + 1)
    for r in range(len(universe) + 1):
        for gaps in itertools.combinations(universe, r):
            gs = set(gaps)
            if g1 not in gs or g2 not in gs:
                continue
            H = GapSet(1, [(x,) for x in gaps])
            if closure_violation(H) is None:
                found.append(gs)
    maximal = [gs for gs in found if not any(o < gs for o in found)]
    return sorted(GapSet(1, [(x,) for x in gs]) for gs in maximal)


def _verify_d1_bridge(bound: Point, report: VerificationReport) -> None:
    n = bound[0] - 1 if len(bound) == 1 else max(bound) - 1
    for g2 in range(2, n + 1):
        for g1 in range(1, g2):
            report.checked += 1
            lhs = numerical_semigroups_avoiding(g1, g2)
            rhs = maximal_family((g2 + 1,), (g1,))
            if lhs != rhs:
                report.counterexamples.append({"g1": g1, "g2": g2})


def verify_teo_ani(g) -> VerificationReport:
    g = _pair(g)
    t0 = time.perf_counter()
    mf = maximal_family(g.corner, g.g1, g.g2)
    profiles = [profile(H) for H in mf]
    all_non = all(not p.irreducible for p in profiles)
    closed = ani_sufficient(g)
    report = VerificationReport(
        "teo-ani",
        g.corner,
        params={
            "g1": list(g.g1),
            "g2": list(g.g2),
            "members": len(mf),
            "all_non_irreducible": all_non,
            "all_irreducible": all(p.irreducible for p in profiles),
            "closed_form": closed,
        },
        checked=1,
    )
    if all_non != closed:
        report.counterexamples = [_gaps_doc(H) for H in mf]
    report.ms = (time.perf_counter() - t0) * 1000
    return report


def sweep(bound: Iterable[int], ids: Iterable[str] | None = None) -> Iterator[VerificationReport]:
    for id in ids if ids is not None else REGISTRY:
        yield verify_proposition(id, bound)


def verify_pair(id: str, g) -> VerificationReport:
    """Run a pair-level statement on the single pair ``g``."""
    if id == "teo-ani":
        return verify_teo_ani(g)
    if id not in PAIR_CHECKS:
        raise KeyError(f"{id!r} is not a pair-level statement")
    g = _pair(g)
    t0 = time.perf_counter()
    outcome, doc = PAIR_CHECKS[id][1](g)
    report = VerificationReport(id, g.corner, params={"g1": list(g.g1), "g2": list(g.g2), **doc})
    if outcome is None:
        report.vacuous = 1
    else:
        report.checked = 1
        if not outcome:
            report.counterexamples = [{"g1": list(g.g1), "g2": list(g.g2)}]
    report.ms = (time.perf_counter() - t0) * 1000
    return report
