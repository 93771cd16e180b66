"""Well-formedness of nets and runs, and causality between transitions.

A step sequence is well-formed when no place is filled twice: distinct
transitions inside one step must have disjoint postsets, and postsets of
later steps must avoid places already filled earlier.  A net is
well-formed when every transition occurs in some step sequence and every
step sequence is well-formed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from .acyclic import AcyclicNet, initial_places, postset, preset
from .errors import (BoundExceeded, StepNotEnabled, TransitionNeverFires,
                     UnknownNode)
from .foundations import closure_pairs, fmt_set
from .semantics import DEFAULT_BOUND, check_step, fire, fseq


@dataclass(frozen=True)
class StepSeqVerdict:
    """Outcome of checking one step sequence.

    violation_index is the 0-based position of the offending step and
    place the first (alphabetically) place filled twice."""

    ok: bool
    violation_index: Optional[int] = None
    place: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class WellFormedVerdict:
    """Outcome of the whole-net check: "ok", "not-ok", or "unknown" when
    the search bound was exhausted.  A defect comes with a replayable
    witness: either a run plus the doubly filled place, or a transition
    that never fires."""

    status: str
    witness_sequence: Optional[tuple] = None
    witness_place: Optional[str] = None
    witness_transition: Optional[str] = None
    detail: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def is_wf_stepseq(net: AcyclicNet, s: Sequence[AbstractSet],
                  m0: Optional[AbstractSet] = None) -> StepSeqVerdict:
    """Replay s (from the initial marking unless m0 is given) and look for
    a doubly filled place.  Replay failure raises StepNotEnabled with the
    0-based step index."""
    m = frozenset(initial_places(net) if m0 is None else m0)
    filled: set = set()
    for i, raw in enumerate(s):
        u = check_step(net, raw)
        missing = preset(net, u) - m
        if missing:
            raise StepNotEnabled(u, missing, index=i)
        for t in sorted(u):
            for v in sorted(u):
                if t < v:
                    twice = postset(net, t) & postset(net, v)
                    if twice:
                        return StepSeqVerdict(False, i, min(twice))
        again = postset(net, u) & filled
        if again:
            return StepSeqVerdict(False, i, min(again))
        filled |= postset(net, u)
        m = fire(net, m, u)
    return StepSeqVerdict(True)


def end_marking_formula(net: AcyclicNet,
                        s: Sequence[AbstractSet]) -> frozenset:
    """For a well-formed run the end marking is determined by the set of
    transitions that occurred: (M_init ∪ post T) \\ pre T."""
    occ: set = set()
    for u in s:
        occ |= set(u)
    return (initial_places(net) | postset(net, occ)) - preset(net, occ)


def is_well_formed(net: AcyclicNet, *,
                   bound: Optional[int] = None) -> WellFormedVerdict:
    """Search the firing-sequence state space for a double fill or a
    transition that can never occur.

    Firing sequences suffice: a step fills exactly what its transitions
    fill one at a time, so any doubly filled place shows up on some
    serialization.  States (marking, filled places) are explored in
    lexicographic transition order with memoization, which makes the
    reported witness the lexicographically least one."""
    limit = DEFAULT_BOUND if bound is None else bound
    seen: set = set()
    fired: set = set()
    path: list = []

    def visit(m: frozenset, filled: frozenset) -> Optional[WellFormedVerdict]:
        key = (m, filled)
        if key in seen:
            return None
        seen.add(key)
        if len(seen) > limit:
            return WellFormedVerdict(
                "unknown", witness_sequence=tuple(path),
                detail=f"state bound {limit} exhausted")
        for t in sorted(net.transitions):
            if preset(net, t) <= m:
                fired.add(t)
                twice = postset(net, t) & filled
                path.append(frozenset({t}))
                if twice:
                    return WellFormedVerdict(
                        "not-ok", witness_sequence=tuple(path),
                        witness_place=min(twice),
                        detail=f"{fmt_set(postset(net, t) & filled)} filled "
                               f"again by {t}")
                bad = visit(fire(net, m, frozenset({t})),
                            filled | postset(net, t))
                if bad is not None:
                    return bad
                path.pop()
        return None

    bad = visit(initial_places(net), frozenset())
    if bad is not None:
        return bad
    silent = sorted(net.transitions - fired)
    if silent:
        return WellFormedVerdict(
            "not-ok", witness_transition=silent[0],
            detail=f"transition {silent[0]} never fires")
    return WellFormedVerdict("ok")


@dataclass(frozen=True)
class CausalityReport:
    """causes holds the transitions occurring strictly before the target
    in every firing sequence that runs it; graph_predecessors the flow
    ancestors.  The two agree on backward-deterministic nets, while
    OR-style inputs make causes a proper subset."""

    target: str
    causes: frozenset
    graph_predecessors: frozenset


def causes(net: AcyclicNet, t: str, *,
           bound: Optional[int] = None) -> CausalityReport:
    if t not in net.transitions:
        raise UnknownNode(t)
    shared: Optional[set] = None
    for seq in fseq(net, bound=bound):
        flat = [next(iter(u)) for u in seq]
        for i, name in enumerate(flat):
            if name == t:
                before = set(flat[:i])
                shared = before if shared is None else shared & before
    if shared is None:
        raise TransitionNeverFires(t)
    ancestors = {u for (u, v) in closure_pairs(net.flow)
                 if v == t and u in net.transitions}
    return CausalityReport(t, frozenset(shared), frozenset(ancestors))
