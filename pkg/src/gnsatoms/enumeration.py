"""Families F(c; h_1..h_n) of GNSs with a fixed corner, as rooted trees.

The root is the ordinary GNS O(c).  Children of a node T are the unitary
extensions T u {x} by corner special gaps x that are not forced gaps.  In
the default dedup mode x must also precede, in the chosen monomial order,
every element of T* inside the box x <= c - 1; this makes each family
member appear exactly once.  With ``dedup=False`` all candidates are
expanded and repeats are dropped through a visited set.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .core import (
    DimensionError,
    GapSet,
    GNSError,
    MonomialOrder,
    Point,
    as_point,
    box,
    dumps,
    partial_leq,
    sub,
)
from .invariants import _corner_special_gaps


def ordinary(c: Iterable[int]) -> GapSet:
    """O(c): every non-zero point below c - 1 is a gap."""
    c = as_point(c)
    if any(ci == 0 for ci in c):
        raise GNSError(f"corner {c} has a zero coordinate")
    if all(ci == 1 for ci in c):
        raise GNSError(f"corner {c} gives genus 0")
    top = tuple(ci - 1 for ci in c)
    return GapSet(len(c), box(top))


@dataclass(frozen=True)
class FamilyQuery:
    corner: Point
    forced_gaps: tuple[Point, ...] = ()
    order: MonomialOrder = MonomialOrder.LEX
    maximal_only: bool = False
    dedup: bool = True

    def __init__(self, corner, forced_gaps=(), order=MonomialOrder.LEX,
                 maximal_only=False, dedup=True):
        c = as_point(corner)
        forced = tuple(sorted({as_point(g) for g in forced_gaps}))
        top = tuple(ci - 1 for ci in c)
        for g in forced:
            if len(g) != len(c):
                raise DimensionError(f"forced gap {g} is not in dimension {len(c)}")
            if not any(g):
                raise GNSError("the zero vector cannot be a forced gap")
            if not partial_leq(g, top):
                raise GNSError(f"forced gap {g} lies outside the box below {top}")
        object.__setattr__(self, "corner", c)
        object.__setattr__(self, "forced_gaps", forced)
        object.__setattr__(self, "order", MonomialOrder.parse(order))
        object.__setattr__(self, "maximal_only", bool(maximal_only))
        object.__setattr__(self, "dedup", bool(dedup))

    @property
    def d(self) -> int:
        return len(self.corner)

    @property
    def top(self) -> Point:
        return tuple(ci - 1 for ci in self.corner)


@dataclass(frozen=True)
class Node:
    gapset: GapSet
    parent: int | None
    extension: Point | None
    ceh: tuple[Point, ...] = ()


@dataclass
class EnumTree:
    query: FamilyQuery
    nodes: list[Node] = field(default_factory=list)

    @property
    def root(self) -> GapSet:
        return self.nodes[0].gapset

    def __len__(self) -> int:
        return len(self.nodes)

    def gapsets(self) -> list[GapSet]:
        return [n.gapset for n in self.nodes]

    def children(self, i: int) -> list[int]:
        return [j for j, n in enumerate(self.nodes) if n.parent == i]

    def edges(self) -> list[tuple[int, int, Point]]:
        return [(n.parent, j, n.extension) for j, n in enumerate(self.nodes) if n.parent is not None]

    def depth(self) -> int:
        depths = [0] * len(self.nodes)
        for j, n in enumerate(self.nodes):
            if n.parent is not None:
                depths[j] = depths[n.parent] + 1
        return max(depths, default=0)

    def maximal(self) -> list[GapSet]:
        forced = set(self.query.forced_gaps)
        return sorted(n.gapset for n in self.nodes if set(n.ceh) <= forced)


def _candidates(T: GapSet, ceh: Iterable[Point], q: FamilyQuery) -> list[Point]:
    forced = set(q.forced_gaps)
    cands = [x for x in ceh if x not in forced]
    if q.dedup:
        key = q.order.key
        present = [key(s) for s in box(q.top) if s not in T.gaps]
        if present:
            bound = min(present)
            cands = [x for x in cands if key(x) < bound]
    return sorted(cands, key=q.order.key)


def iter_family(q: FamilyQuery) -> Iterator[Node]:
    """Yield the family's nodes breadth first without holding the tree.

    Node indices are implicit: the k-th yielded node has index k.  Children
    follow their parent's index, in ascending monomial order of the
    extension point.
    """
    root = ordinary(q.corner)
    queue = deque([(root, None, None)])
    seen = {root.gaps} if not q.dedup else None
    index = 0
    while queue:
        T, parent, ext = queue.popleft()
        ceh = _corner_special_gaps(T)
        yield Node(T, parent, ext, tuple(ceh))
        for x in _candidates(T, ceh, q):
            child = T.without(x)
            if seen is not None:
                if child.gaps in seen:
                    continue
                seen.add(child.gaps)
            queue.append((child, index, x))
        index += 1


def enumerate_family(q: FamilyQuery) -> EnumTree:
    tree = EnumTree(q)
    tree.nodes.extend(iter_family(q))
    return tree


def maximal_elements(q: FamilyQuery) -> list[GapSet]:
    """Members S of the family with CEH(S) contained in the forced gaps."""
    forced = set(q.forced_gaps)
    return sorted(n.gapset for n in iter_family(q) if set(n.ceh) <= forced)


def family(corner: Iterable[int], *forced: Iterable[int], order="lex", dedup=True) -> EnumTree:
    return enumerate_family(FamilyQuery(corner, forced, order=order, dedup=dedup))


def maximal_family(corner: Iterable[int], *forced: Iterable[int], order="lex") -> list[GapSet]:
    return maximal_elements(FamilyQuery(corner, forced, order=order))


def smallest_gns_containing(H: GapSet, X: Iterable[Iterable[int]]) -> GapSet:
    """Gap set of <S u X>, the smallest GNS containing S and X."""
    gaps = set(H.gaps).difference(as_point(x) for x in X)
    changed = True
    while changed:
        changed = False
        for h in sorted(gaps):
            for x in box(h):
                if x == h:
                    continue
                if x not in gaps and sub(h, x) not in gaps:
                    gaps.discard(h)
                    changed = True
                    break
    return GapSet(H.d, gaps)


def d1_ml_bridge(g1: int, g2: int) -> list[GapSet]:
    """MF(g2 + 1; g1) for numerical semigroups (d = 1)."""
    if not 0 < g1 < g2:
        raise ValueError("need 0 < g1 < g2")
    return maximal_family((g2 + 1,), (g1,))


def atoms(c: Iterable[int], order="lex") -> list[GapSet]:
    return sorted(n.gapset for n in iter_family(FamilyQuery(c, order=order)) if len(n.ceh) <= 1)


def atom_cover(c: Iterable[int]) -> list[Point]:
    """A smallest set of points h whose families MF(c; h) hold every atom.

    Atoms with CEH = {h} force h into the cover; atoms with CEH empty are
    caught by any h among their gaps, and the remainder is covered by
    exhaustive search over subsets of increasing size.
    """
    q = FamilyQuery(c)
    nodes = [n for n in iter_family(q) if len(n.ceh) <= 1]
    required = sorted({n.ceh[0] for n in nodes if n.ceh})
    loose = [n.gapset for n in nodes if not n.ceh and not any(h in n.gapset for h in required)]
    if not loose:
        return required
    pool = sorted(set().union(*(S.gaps for S in loose)))
    for k in range(1, len(pool) + 1):
        for extra in itertools.combinations(pool, k):
            if all(any(h in S.gaps for h in extra) for S in loose):
                return sorted(required + list(extra))
    raise AssertionError("unreachable: every loose atom has a gap")


# Export.

def _fmt_point(p: Point) -> str:
    return "(" + ",".join(str(a) for a in p) + ")"


def _fmt_gaps(H: GapSet) -> str:
    return " ".join(_fmt_point(p) for p in H.sorted()) or "{}"


def dot_header(q: FamilyQuery) -> list[str]:
    forced = " ".join(_fmt_point(g) for g in q.forced_gaps) or "-"
    return [
        "digraph gns {",
        f'  graph [label="corner {_fmt_point(q.corner)} forced {forced} order {q.order.value}"];',
    ]


def dot_node_lines(i: int, node: Node) -> list[str]:
    lines = [f'  n{i} [label="{_fmt_gaps(node.gapset)}"];']
    if node.parent is not None:
        lines.append(f'  n{node.parent} -> n{i} [label="{_fmt_point(node.extension)}"];')
    return lines


def iter_dot(q: FamilyQuery, nodes: Iterable[Node]) -> Iterator[str]:
    """DOT text line by line; nodes may come straight from iter_family."""
    yield from dot_header(q)
    for i, node in enumerate(nodes):
        yield from dot_node_lines(i, node)
    yield "}"


def export_tree(tree: EnumTree, fmt: str = "dot") -> str:
    if fmt == "dot":
        return "\n".join(iter_dot(tree.query, tree.nodes)) + "\n"
    if fmt == "json":
        return dumps(tree_to_dict(tree))
    raise ValueError(f"unknown tree format {fmt!r} (use dot or json)")


def tree_to_dict(tree: EnumTree) -> dict:
    q = tree.query
    kids: dict[int, list[int]] = {i: [] for i in range(len(tree.nodes))}
    for p, j, _ in tree.edges():
        kids[p].append(j)
    return {
        "corner": list(q.corner),
        "forced": [list(g) for g in q.forced_gaps],
        "order": q.order.value,
        "dedup": q.dedup,
        "nodes": [
            {
                "id": i,
                "parent": n.parent,
                "extension": list(n.extension) if n.extension is not None else None,
                "gaps": [list(g) for g in n.gapset.sorted()],
                "ceh": [list(x) for x in n.ceh],
                "children": kids[i],
            }
            for i, n in enumerate(tree.nodes)
        ],
    }
