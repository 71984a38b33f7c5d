"""Per-semigroup invariants: corner, Frobenius, PF, EH, CEH, slabs, flags."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    DomainError,
    GapSet,
    InvalidGapSet,
    Point,
    add,
    box,
    lub,
    maximals,
    ones,
    partial_less,
    require_valid,
    scale,
    sub,
    zero,
)


# Unchecked kernels.  Callers guarantee H is a valid gap set.

def _corner(H: GapSet) -> Point:
    if not H.gaps:
        return zero(H.d)
    return add(lub(H.gaps), ones(H.d))


def _pseudo_frobenius(H: GapSet) -> list[Point]:
    # x + s lands in H for some s in S* iff some gap g > x has g - x in S.
    gaps = H.sorted()
    out = []
    for x in gaps:
        if all(sub(g, x) in H.gaps for g in gaps if partial_less(x, g)):
            out.append(x)
    return out


def _special_gaps(H: GapSet) -> list[Point]:
    return [x for x in _pseudo_frobenius(H) if scale(2, x) not in H.gaps]


def _slab(H: GapSet, i: int, c: Point) -> tuple[list[Point], list[Point]]:
    layer = [h for h in H.sorted() if h[i] == c[i] - 1]
    return layer, maximals(layer)


def _ceh_fast(H: GapSet, eh: list[Point], c: Point) -> list[Point]:
    singletons = set()
    for i in range(H.d):
        layer = [h for h in H.gaps if h[i] == c[i] - 1]
        if len(layer) == 1:
            singletons.add(layer[0])
    return [h for h in eh if h not in singletons]


def _ceh_definitional(H: GapSet, eh: list[Point], c: Point) -> list[Point]:
    return [h for h in eh if _corner(H.without(h)) == c]


def _corner_special_gaps(H: GapSet, eh: list[Point] | None = None) -> list[Point]:
    if not H.gaps:
        return []
    c = _corner(H)
    if eh is None:
        eh = _special_gaps(H)
    fast = _ceh_fast(H, eh, c)
    slow = _ceh_definitional(H, eh, c)
    assert fast == slow, f"slab criterion disagrees with corner recomputation on {H}"
    return fast


# Public operations.

def corner(H: GapSet) -> Point:
    """c(S) = lub(H) + 1, and the zero vector for S = N_0^d."""
    require_valid(H)
    return _corner(H)


def frobenius(H: GapSet) -> Point | None:
    require_valid(H)
    if not H.gaps:
        return None
    f = lub(H.gaps)
    return f if f in H.gaps else None


def pseudo_frobenius(H: GapSet) -> list[Point]:
    require_valid(H)
    return _pseudo_frobenius(H)


def special_gaps(H: GapSet) -> list[Point]:
    require_valid(H)
    return _special_gaps(H)


def slab(H: GapSet, i: int) -> tuple[list[Point], list[Point]]:
    """Return (H^(i), MH^(i)) for the 1-based axis index ``i``."""
    require_valid(H)
    if not 1 <= i <= H.d:
        raise IndexError(f"axis {i} out of range 1..{H.d}")
    if not H.gaps:
        raise DomainError("slabs are only defined for positive genus")
    return _slab(H, i - 1, _corner(H))


def corner_special_gaps(H: GapSet) -> list[Point]:
    """Special gaps whose unitary extension keeps the corner.

    A special gap h fails to be corner-special exactly when it is the only
    gap in some slab H^(i); the definitional check (recompute the corner of
    H minus h) is run alongside and must agree.
    """
    require_valid(H)
    return _corner_special_gaps(H)


def _require_positive_genus(H: GapSet, what: str) -> None:
    if not H.gaps:
        raise DomainError(f"{what} is only defined for GNSs of positive genus")


def is_irreducible(H: GapSet) -> bool:
    require_valid(H)
    _require_positive_genus(H, "irreducibility")
    return len(_special_gaps(H)) == 1


def irreducible_via_decompositions(H: GapSet) -> bool:
    """Irreducibility of a Frobenius GNS from the splittings F = h + h'.

    Exactly one of h, h' must be a gap for every split, the middle split
    F/2 + F/2 being skipped when every coordinate of F is even.
    """
    f = frobenius(H)
    if f is None:
        raise DomainError("no Frobenius element")
    half = tuple(a // 2 for a in f) if all(a % 2 == 0 for a in f) else None
    for h in box(f, include_zero=True):
        if h == half:
            continue
        if (h in H.gaps) == (sub(f, h) in H.gaps):
            return False
    return True


def is_atomic(H: GapSet) -> bool:
    require_valid(H)
    _require_positive_genus(H, "atomicity")
    return len(_corner_special_gaps(H)) <= 1


def is_ani(H: GapSet) -> bool:
    return is_atomic(H) and not is_irreducible(H)


def unitary_extension(H: GapSet, h: Point) -> GapSet:
    """Gap set of S u {h}; h must be a special gap of S."""
    require_valid(H)
    h = tuple(h)
    if h not in _special_gaps(H):
        raise InvalidGapSet(f"{h} is not a special gap, so S u {{{h}}} is not a GNS")
    return H.without(h)


# Profile.

@dataclass(frozen=True)
class GnsProfile:
    gapset: GapSet
    corner: Point
    genus: int
    frobenius: Point | None
    pf: list[Point]
    eh: list[Point]
    ceh: list[Point]
    slabs: list[tuple[list[Point], list[Point]]] = field(default_factory=list)
    # None for genus 0, where the notions are not defined.
    irreducible: bool | None = None
    atomic: bool | None = None

    @property
    def ani(self) -> bool | None:
        if self.atomic is None:
            return None
        return self.atomic and not self.irreducible

    def to_dict(self) -> dict:
        pts = lambda xs: [list(x) for x in xs]  # noqa: E731
        return {
            "corner": list(self.corner),
            "genus": self.genus,
            "frobenius": list(self.frobenius) if self.frobenius is not None else None,
            "pf": pts(self.pf),
            "eh": pts(self.eh),
            "ceh": pts(self.ceh),
            "irreducible": self.irreducible,
            "atomic": self.atomic,
            "ani": self.ani,
            "slabs": [
                {"i": i + 1, "h": pts(h), "mh": pts(mh)} for i, (h, mh) in enumerate(self.slabs)
            ],
        }


def profile(H: GapSet) -> GnsProfile:
    require_valid(H)
    if not H.gaps:
        return GnsProfile(H, zero(H.d), 0, None, [], [], [])
    c = _corner(H)
    f = add(c, tuple(-1 for _ in c))
    pf = _pseudo_frobenius(H)
    eh = [x for x in pf if scale(2, x) not in H.gaps]
    ceh = _corner_special_gaps(H, eh)
    return GnsProfile(
        gapset=H,
        corner=c,
        genus=H.genus,
        frobenius=f if f in H.gaps else None,
        pf=pf,
        eh=eh,
        ceh=ceh,
        slabs=[_slab(H, i, c) for i in range(H.d)],
        irreducible=len(eh) == 1,
        atomic=len(ceh) <= 1,
    )
