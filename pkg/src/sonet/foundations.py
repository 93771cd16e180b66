"""Finite binary relations and sequences of sets.

Net flows are stored as relations over node identifiers (opaque strings)
and executions as sequences of sets, so everything downstream leans on the
small helpers here.  Deterministic output always uses lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Sequence

Pair = tuple[str, str]
SetSequence = tuple[frozenset, ...]


@dataclass(frozen=True)
class Relation:
    """A binary relation with an explicit universe of nodes."""

    universe: frozenset
    pairs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "universe", frozenset(self.universe))
        object.__setattr__(self, "pairs", frozenset(self.pairs))
        for x, y in self.pairs:
            if x not in self.universe or y not in self.universe:
                raise ValueError(f"pair ({x!r},{y!r}) escapes the universe")

    @staticmethod
    def of(pairs: Iterable[Pair], universe: Iterable = ()) -> "Relation":
        pairs = frozenset(pairs)
        nodes = set(universe)
        for x, y in pairs:
            nodes.add(x)
            nodes.add(y)
        return Relation(frozenset(nodes), pairs)


def adjacency(pairs: Iterable[Pair]) -> dict:
    """Successor map {x: set of y with (x,y) in pairs}."""
    out: dict = {}
    for x, y in pairs:
        out.setdefault(x, set()).add(y)
    return out


def reachable_from(start, succ: dict) -> set:
    """All nodes reachable from start in one or more hops (start excluded
    unless it lies on a cycle through itself)."""
    seen: set = set()
    stack = list(succ.get(start, ()))
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(succ.get(node, ()))
    return seen


def transitive_closure(r: Relation) -> Relation:
    """R+ as a Relation over the same universe."""
    succ = adjacency(r.pairs)
    closed = set()
    for x in succ:
        for y in reachable_from(x, succ):
            closed.add((x, y))
    return Relation(r.universe, frozenset(closed))


def closure_pairs(pairs: Iterable[Pair]) -> frozenset:
    """Transitive closure as a bare pair set (no universe bookkeeping)."""
    succ = adjacency(pairs)
    return frozenset((x, y) for x in succ for y in reachable_from(x, succ))


def is_acyclic(r: Relation) -> bool:
    """True iff the relation has no directed cycle (Kahn's algorithm)."""
    indeg = {x: 0 for x in r.universe}
    succ = adjacency(r.pairs)
    for x, ys in succ.items():
        for y in ys:
            indeg[y] += 1
    ready = [x for x, d in indeg.items() if d == 0]
    removed = 0
    while ready:
        x = ready.pop()
        removed += 1
        for y in succ.get(x, ()):
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    return removed == len(r.universe)


def smallest_cycle(pairs: Iterable[Pair]) -> tuple:
    """The lexicographically smallest simple cycle, as a node tuple whose
    first element is the repeated node; () when the pairs are acyclic.

    DFS over simple paths from the smallest node on any cycle, successors
    in sorted order.  Closing the cycle beats extending the path (a closed
    tuple is a prefix of each of its extensions, hence lexicographically
    smaller), so the first cycle found is the minimum.
    """
    pairs = frozenset(pairs)
    succ = {x: sorted(ys) for x, ys in adjacency(pairs).items()}
    starts = sorted(x for x in succ if x in reachable_from(x, succ))
    if not starts:
        return ()
    start = starts[0]
    path = [start]
    used = {start}
    iters = [iter(succ.get(start, []))]
    while iters:
        here = path[-1]
        if (here, start) in pairs:
            return tuple(path)
        for cand in iters[-1]:
            if cand not in used:
                path.append(cand)
                used.add(cand)
                iters.append(iter(succ.get(cand, [])))
                break
        else:
            path.pop()
            used.discard(here)
            iters.pop()
    return ()  # pragma: no cover - a cycle through start always exists here


def as_setseq(items: Sequence[AbstractSet]) -> SetSequence:
    return tuple(frozenset(s) for s in items)


def occurring(s: Sequence[AbstractSet]) -> frozenset:
    """Union of all sets in the sequence."""
    out: set = set()
    for part in s:
        out |= set(part)
    return frozenset(out)


def restrict(s: Sequence[AbstractSet], x: AbstractSet) -> SetSequence:
    """Element-wise intersection with x; length preserved, empties kept."""
    x = frozenset(x)
    return tuple(frozenset(part) & x for part in s)


def restrict_compact(s: Sequence[AbstractSet], x: AbstractSet) -> SetSequence:
    """Restrict to x, then drop every empty set."""
    return tuple(part for part in restrict(s, x) if part)


def dedupe_consecutive(s: Sequence[AbstractSet]) -> SetSequence:
    """Collapse runs of equal consecutive sets to a single occurrence."""
    out: list = []
    for part in s:
        part = frozenset(part)
        if not out or out[-1] != part:
            out.append(part)
    return tuple(out)


def sorted_sets(sets: Iterable[AbstractSet]) -> list:
    """Canonical listing of a family of sets: each sorted, family sorted."""
    return sorted((sorted(s) for s in sets))


def fmt_set(s: AbstractSet) -> str:
    return "{" + ",".join(sorted(s)) + "}"


def fmt_setseq(s: Sequence[AbstractSet]) -> str:
    return " ".join(fmt_set(part) for part in s) if s else "λ"
