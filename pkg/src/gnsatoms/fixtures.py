"""Worked examples as literal gap sets, used for golden files and tests."""

from __future__ import annotations

from .core import GapSet

# Corner (4, 3), two maximal gaps, so not Frobenius.
CORNER_43 = GapSet(2, [(0, 1), (1, 0), (1, 1), (1, 2), (3, 0)])

# Irreducible, corner (5, 3), yet its Frobenius element is corner special.
IRREDUCIBLE_53 = GapSet(2, [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (4, 0), (4, 1), (4, 2)])

# Frobenius, corner (4, 4), EH = CEH = {(2,3), (3,3)}: not an atom.
NON_ATOM_44 = GapSet(
    2, [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (2, 3), (3, 0), (3, 1), (3, 2), (3, 3)]
)

# An atom with |EH| = 3 = d + 1.
ATOM_EH3 = GapSet(2, [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1)])

ORDINARY_32 = GapSet(2, [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1)])


def _drop(H: GapSet, *pts) -> GapSet:
    return H.without(*pts)


# F((3,2); (2,1)).  S5 = S4 and S8 = S6 in the naive procedure.
FAMILY_32_21 = {"S": ORDINARY_32}
FAMILY_32_21["S1"] = _drop(ORDINARY_32, (0, 1))
FAMILY_32_21["S2"] = _drop(ORDINARY_32, (1, 1))
FAMILY_32_21["S3"] = _drop(ORDINARY_32, (2, 0))
FAMILY_32_21["S4"] = _drop(FAMILY_32_21["S1"], (1, 1))
FAMILY_32_21["S6"] = _drop(FAMILY_32_21["S2"], (2, 0))
FAMILY_32_21["S7"] = _drop(FAMILY_32_21["S3"], (1, 0))
MAXIMAL_32_21 = ["S4", "S6", "S7"]
CEH_32_21 = {
    "S": [(0, 1), (1, 1), (2, 0), (2, 1)],
    "S1": [(1, 1), (2, 1)],
    "S2": [(0, 1), (2, 0), (2, 1)],
    "S3": [(1, 0), (1, 1)],
    "S4": [],
    "S6": [],
    "S7": [],
}

# F((3,2); (2,0)).
FAMILY_32_20 = {"S": ORDINARY_32}
FAMILY_32_20["S1"] = _drop(ORDINARY_32, (0, 1))
FAMILY_32_20["S2"] = _drop(ORDINARY_32, (1, 1))
FAMILY_32_20["S3"] = _drop(ORDINARY_32, (2, 1))
FAMILY_32_20["S4"] = _drop(FAMILY_32_20["S2"], (0, 1))
FAMILY_32_20["S5"] = _drop(FAMILY_32_20["S3"], (0, 1))
FAMILY_32_20["S6"] = _drop(FAMILY_32_20["S3"], (1, 1))
MAXIMAL_32_20 = ["S4", "S5", "S6"]
CEH_32_20 = {
    "S": [(0, 1), (1, 1), (2, 0), (2, 1)],
    "S1": [(1, 1), (2, 1)],
    "S2": [(0, 1), (2, 0), (2, 1)],
    "S3": [(0, 1), (1, 1)],
    "S4": [],
    "S5": [],
    "S6": [],
}

# Tree shapes in lex order: parent name -> children names.
TREE_32_21 = {"S": ["S1", "S2", "S3"], "S2": ["S4"], "S3": ["S6", "S7"]}
TREE_32_20 = {"S": ["S1", "S2", "S3"], "S2": ["S4"], "S3": ["S5", "S6"]}

# MF((4,4); (2,2), (3,3)): every member is non-irreducible.
MF_44_22_33 = [
    GapSet(2, g)
    for g in [
        [(1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (3, 1), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 3), (2, 1), (2, 2), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (2, 2), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 3), (2, 1), (2, 2), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (2, 2), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3), (2, 2), (3, 3)],
    ]
]

# MF((4,4); (1,1), (3,3)): every member is irreducible.
MF_44_11_33 = [
    GapSet(2, g)
    for g in [
        [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2), (3, 3)],
        [(1, 0), (1, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 2), (3, 3)],
        [(1, 0), (1, 1), (1, 2), (1, 3), (3, 0), (3, 1), (3, 2), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (1, 3), (2, 1), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (1, 2), (2, 0), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (1, 0), (1, 1), (1, 2), (1, 3), (3, 0), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 1), (1, 3), (2, 1), (2, 3), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (1, 3), (2, 1), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (3, 1), (3, 3)],
        [(0, 1), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3), (3, 1), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 3), (2, 1), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (1, 3), (3, 0), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 1), (1, 3), (2, 1), (2, 3), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 3), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (2, 0), (2, 1), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 3), (2, 1), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (2, 0), (3, 3)],
        [(0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3), (3, 3)],
    ]
]


def maximals_document(corner, avoid, gapsets, order: str = "lex") -> dict:
    """The document written by ``gnsatoms maximals`` and the golden files."""
    return {
        "corner": list(corner),
        "avoid": [list(p) for p in sorted(tuple(a) for a in avoid)],
        "order": order,
        "count": len(gapsets),
        "gapsets": [H.to_dict() for H in sorted(gapsets)],
    }


def golden_files() -> dict[str, dict]:
    """File name -> JSON document for every worked example."""
    fam21 = [FAMILY_32_21[k] for k in sorted(FAMILY_32_21)]
    fam20 = [FAMILY_32_20[k] for k in sorted(FAMILY_32_20)]
    return {
        "corner_43.json": CORNER_43.to_dict(),
        "irreducible_53.json": IRREDUCIBLE_53.to_dict(),
        "non_atom_44.json": NON_ATOM_44.to_dict(),
        "atom_eh3.json": ATOM_EH3.to_dict(),
        "family_32_21.json": {
            "corner": [3, 2],
            "avoid": [[2, 1]],
            "count": len(fam21),
            "gapsets": [H.to_dict() for H in sorted(fam21)],
        },
        "family_32_20.json": {
            "corner": [3, 2],
            "avoid": [[2, 0]],
            "count": len(fam20),
            "gapsets": [H.to_dict() for H in sorted(fam20)],
        },
        "maximals_32_21.json": maximals_document(
            (3, 2), [(2, 1)], [FAMILY_32_21[k] for k in MAXIMAL_32_21]
        ),
        "maximals_32_20.json": maximals_document(
            (3, 2), [(2, 0)], [FAMILY_32_20[k] for k in MAXIMAL_32_20]
        ),
        "maximals_44_22_33.json": maximals_document((4, 4), [(2, 2), (3, 3)], MF_44_22_33),
        "maximals_44_11_33.json": maximals_document((4, 4), [(1, 1), (3, 3)], MF_44_11_33),
    }
