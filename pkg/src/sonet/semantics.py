"""Step semantics of acyclic nets.

Markings are sets of places, steps are sets of transitions with pairwise
disjoint presets, and firing follows (M ∪ post U) \\ pre U in exactly that
order — for nets that are not well-formed this differs from the textbook
(M \\ pre U) ∪ post U, which is kept available as a diagnostic.

Behaviour enumeration is exhaustive and deterministic: steps are explored
in lexicographic order of their sorted transition tuples, and every
enumeration honours an explicit bound instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Iterable, Optional, Sequence

from .acyclic import AcyclicNet, initial_places, preset, postset
from .errors import BoundExceeded, NotAStep, StepNotEnabled, UnknownNode

DEFAULT_BOUND = 100_000
DEFAULT_DEPTH = 64

BEHAVIOUR_KINDS = ("sseq", "mixsseq", "maxsseq", "maxmixsseq",
                   "reach", "finreach", "fseq")


@dataclass(frozen=True)
class MixedRun:
    """A run recorded with its marking snapshots: M0 U1 M1 ... Uk Mk."""

    markings: tuple
    steps: tuple

    def __post_init__(self):
        if len(self.markings) != len(self.steps) + 1:
            raise ValueError("need exactly one more marking than steps")

    @property
    def initial(self) -> frozenset:
        return self.markings[0]

    @property
    def final(self) -> frozenset:
        return self.markings[-1]

    def as_sets(self) -> tuple:
        """Flatten to the alternating list M0, U1, M1, ..., Uk, Mk."""
        out = [self.markings[0]]
        for u, m in zip(self.steps, self.markings[1:]):
            out.append(u)
            out.append(m)
        return tuple(out)


def check_step(net: AcyclicNet, u: AbstractSet) -> frozenset:
    """Normalize a step; reject empty sets, unknown transitions, and
    transition pairs whose presets overlap."""
    u = frozenset(u)
    if not u:
        raise NotAStep("a step must contain at least one transition")
    for t in sorted(u):
        if t not in net.transitions:
            raise UnknownNode(t)
    seen: set = set()
    for t in sorted(u):
        p = preset(net, t)
        if seen & p:
            raise NotAStep(
                f"pre-places {sorted(seen & p)} shared inside {sorted(u)}")
        seen |= p
    return u


def enabled_step(net: AcyclicNet, m: AbstractSet, u: AbstractSet) -> bool:
    """True iff every pre-place of the step is marked."""
    u = check_step(net, u)
    return preset(net, u) <= frozenset(m)


def fire(net: AcyclicNet, m: AbstractSet, u: AbstractSet, *,
         standard: bool = False) -> frozenset:
    """Fire an enabled step.  With standard=True uses (M \\ pre) ∪ post,
    which agrees with the default rule exactly when pre(U) ∩ post(U) = ∅."""
    u = check_step(net, u)
    m = frozenset(m)
    missing = preset(net, u) - m
    if missing:
        raise StepNotEnabled(u, missing)
    if standard:
        return (m - preset(net, u)) | postset(net, u)
    return (m | postset(net, u)) - preset(net, u)


def run(net: AcyclicNet, m0: AbstractSet,
        steps: Sequence[AbstractSet]) -> MixedRun:
    """Execute steps in order from m0, recording every marking.

    Raises StepNotEnabled with the 0-based index of the first step that
    cannot fire.  An empty list yields the single-marking run."""
    markings = [frozenset(m0)]
    fired = []
    for i, u in enumerate(steps):
        u = check_step(net, u)
        missing = preset(net, u) - markings[-1]
        if missing:
            raise StepNotEnabled(u, missing, index=i)
        fired.append(u)
        markings.append(fire(net, markings[-1], u))
    return MixedRun(tuple(markings), tuple(fired))


def serialize_step(net: AcyclicNet, m: AbstractSet, u: AbstractSet,
                   parts: Sequence[AbstractSet]) -> MixedRun:
    """Execute an enabled step as the ordered partition `parts`.

    Always succeeds for an enabled step; the final marking agrees with
    fire(net, m, u) whenever the surrounding run is well-formed."""
    u = check_step(net, u)
    listed = [frozenset(p) for p in parts]
    union: set = set()
    for part in listed:
        if not part:
            raise ValueError("partition parts must be nonempty")
        if union & part:
            raise ValueError("partition parts must be disjoint")
        union |= part
    if union != u:
        raise ValueError("parts do not partition the step")
    if not enabled_step(net, m, u):
        raise StepNotEnabled(u, preset(net, u) - frozenset(m))
    return run(net, m, listed)


def initial_marking(net: AcyclicNet) -> frozenset:
    return initial_places(net)


def enabled_transitions(net: AcyclicNet, m: AbstractSet) -> list:
    m = frozenset(m)
    return [t for t in sorted(net.transitions) if preset(net, t) <= m]


def _disjoint_subsets(ts: list, preset_of, out: list,
                      limit: Optional[int]) -> bool:
    """Grow nonempty subsets of ts with pairwise disjoint presets, in
    lexicographic order of their sorted tuples.  Returns False when limit
    was hit (out then holds the first `limit` entries)."""
    chosen: list = []

    def rec(i: int, used: frozenset) -> bool:
        for j in range(i, len(ts)):
            t = ts[j]
            p = preset_of(t)
            if used & p:
                continue
            chosen.append(t)
            out.append(frozenset(chosen))
            if limit is not None and len(out) > limit:
                chosen.pop()
                return False
            if not rec(j + 1, used | p):
                chosen.pop()
                return False
            chosen.pop()
        return True

    return rec(0, frozenset())


def enabled_steps(net: AcyclicNet, m: AbstractSet, *,
                  singles: bool = False,
                  limit: Optional[int] = None) -> list:
    """All steps enabled at m, canonically ordered.  With singles=True only
    singleton steps (the firing-sequence view).  A limit raises
    BoundExceeded with the partial list attached."""
    ts = enabled_transitions(net, m)
    if singles:
        return [frozenset({t}) for t in ts]
    out: list = []
    complete = _disjoint_subsets(ts, lambda t: preset(net, t), out, limit)
    if not complete:
        raise BoundExceeded("more enabled steps than the limit", out[:limit])
    return out


def steps(net: AcyclicNet, *, limit: Optional[int] = DEFAULT_BOUND) -> list:
    """Every step of the net regardless of marking: nonempty transition
    sets with pairwise disjoint presets."""
    out: list = []
    ok = _disjoint_subsets(sorted(net.transitions),
                           lambda t: preset(net, t), out, limit)
    if not ok:
        raise BoundExceeded("more steps than the limit", out[:limit])
    return out


class _Budget:
    """Mutable enumeration budget shared across one exploration."""

    def __init__(self, bound: Optional[int], depth: Optional[int]):
        self.left = DEFAULT_BOUND if bound is None else bound
        self.depth = DEFAULT_DEPTH if depth is None else depth
        if self.left < 1:
            raise ValueError("bound must be ≥ 1")

    def spend(self, partial) -> None:
        self.left -= 1
        if self.left < 0:
            raise BoundExceeded("behaviour enumeration bound exceeded",
                                partial)


def _explore_runs(m0: frozenset, next_steps, budget: _Budget):
    """DFS over all runs from m0; next_steps(marking) lists successor steps
    in canonical order.  Yields (steps_tuple, markings_tuple, is_maximal)
    for every prefix, the empty run included."""
    collected: list = []

    def rec(steps_so_far: tuple, markings: tuple):
        here = markings[-1]
        succ = next_steps(here)
        budget.spend(collected)
        item = (steps_so_far, markings, not succ)
        collected.append(item)
        yield item
        if len(steps_so_far) >= budget.depth:
            if succ:
                raise BoundExceeded("behaviour depth bound exceeded",
                                    collected)
            return
        for u, m2 in succ:
            yield from rec(steps_so_far + (u,), markings + (m2,))

    yield from rec((), (m0,))


def _acyclic_next(net: AcyclicNet, singles: bool):
    def nxt(m: frozenset):
        return [(u, fire(net, m, u))
                for u in enabled_steps(net, m, singles=singles)]
    return nxt


def sseq(net: AcyclicNet, *, bound: Optional[int] = None,
         depth: Optional[int] = None) -> set:
    """All step sequences from the initial marking (λ included)."""
    budget = _Budget(bound, depth)
    return {s for s, _, _ in
            _explore_runs(initial_marking(net), _acyclic_next(net, False),
                          budget)}


def fseq(net: AcyclicNet, *, bound: Optional[int] = None,
         depth: Optional[int] = None) -> set:
    """All firing sequences: step sequences built from singleton steps."""
    budget = _Budget(bound, depth)
    return {s for s, _, _ in
            _explore_runs(initial_marking(net), _acyclic_next(net, True),
                          budget)}


def mixsseq(net: AcyclicNet, *, bound: Optional[int] = None,
            depth: Optional[int] = None) -> set:
    budget = _Budget(bound, depth)
    return {MixedRun(ms, s) for s, ms, _ in
            _explore_runs(initial_marking(net), _acyclic_next(net, False),
                          budget)}


def maxsseq(net: AcyclicNet, *, bound: Optional[int] = None,
            depth: Optional[int] = None) -> set:
    """Step sequences with no enabled extension."""
    budget = _Budget(bound, depth)
    return {s for s, _, last in
            _explore_runs(initial_marking(net), _acyclic_next(net, False),
                          budget) if last}


def maxmixsseq(net: AcyclicNet, *, bound: Optional[int] = None,
               depth: Optional[int] = None) -> set:
    budget = _Budget(bound, depth)
    return {MixedRun(ms, s) for s, ms, last in
            _explore_runs(initial_marking(net), _acyclic_next(net, False),
                          budget) if last}


def reach_from(net: AcyclicNet, m0: AbstractSet, *,
               bound: Optional[int] = None) -> set:
    """Markings reachable from m0 by BFS over singleton firings.

    Singleton exploration suffices: a step fired atomically equals firing
    its transitions one at a time in producer-before-consumer order, since
    acyclicity keeps every single transition's pre and post disjoint."""
    limit = DEFAULT_BOUND if bound is None else bound
    start = frozenset(m0)
    seen = {start}
    queue = [start]
    while queue:
        m = queue.pop()
        for t in enabled_transitions(net, m):
            m2 = fire(net, m, frozenset({t}))
            if m2 not in seen:
                seen.add(m2)
                if len(seen) > limit:
                    raise BoundExceeded("reachable markings exceed bound",
                                        seen)
                queue.append(m2)
    return seen


def reach(net: AcyclicNet, *, bound: Optional[int] = None,
          depth: Optional[int] = None) -> set:
    return reach_from(net, initial_marking(net), bound=bound)


def finreach(net: AcyclicNet, *, bound: Optional[int] = None,
             depth: Optional[int] = None) -> set:
    """End markings of maximal step sequences: reachable markings where
    nothing is enabled."""
    return {m for m in reach(net, bound=bound)
            if not enabled_transitions(net, m)}


_DISPATCH = {
    "sseq": sseq, "mixsseq": mixsseq, "maxsseq": maxsseq,
    "maxmixsseq": maxmixsseq, "reach": reach, "finreach": finreach,
    "fseq": fseq,
}


def behaviours(net: AcyclicNet, kind: str, *, bound: Optional[int] = None,
               depth: Optional[int] = None) -> set:
    """Dispatch on a behaviour kind name; see BEHAVIOUR_KINDS."""
    if kind not in _DISPATCH:
        raise ValueError(f"unknown behaviour kind {kind!r}")
    return _DISPATCH[kind](net, bound=bound, depth=depth)
