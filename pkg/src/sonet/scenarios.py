"""Scenarios: the co-initial occurrence subnets of an acyclic net.

A scenario captures one conflict-free way history may unfold.  Scenarios
are determined by their transition sets, which makes enumeration a search
over transition sets rather than subnets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import AbstractSet, Optional, Sequence

from .acyclic import (AcyclicNet, OCCURRENCE, classify, coinitial_subnet,
                      initial_places, postset, preset)
from .errors import BoundExceeded, NetError, NotWellFormed
from .foundations import occurring
from .semantics import DEFAULT_BOUND, run
from .wellformed import is_wf_stepseq


@dataclass(frozen=True)
class Scenario:
    """A co-initial occurrence subnet together with its parent net."""

    net: AcyclicNet
    parent: AcyclicNet

    @property
    def transitions(self) -> frozenset:
        return self.net.transitions


def _as_scenario(parent: AcyclicNet, ts: AbstractSet) -> Scenario:
    sub = coinitial_subnet(parent, ts)
    if classify(sub) != OCCURRENCE:
        raise NetError(f"transitions {sorted(ts)} do not induce an "
                       "occurrence subnet")
    return Scenario(sub, parent)


def scenario_of(net: AcyclicNet, s: Sequence[AbstractSet]) -> Scenario:
    """The scenario a well-formed run generates: its transitions plus the
    places they touch, grown from the initial marking."""
    replay = run(net, initial_places(net), s)
    verdict = is_wf_stepseq(net, replay.steps)
    if not verdict.ok:
        raise NotWellFormed(
            f"place {verdict.place} filled twice at step "
            f"{verdict.violation_index}")
    return _as_scenario(net, occurring(replay.steps))


def same_scenario(net: AcyclicNet, s1: Sequence[AbstractSet],
                  s2: Sequence[AbstractSet]) -> bool:
    """Two well-formed runs generate the same scenario exactly when the
    same transitions occur in them."""
    a = scenario_of(net, s1)
    b = scenario_of(net, s2)
    return a.transitions == b.transitions


def _valid_transition_set(net: AcyclicNet, ts: frozenset) -> bool:
    """ts induces a scenario iff the grown place set covers every preset
    and no place gains two producers or two consumers."""
    places = set(initial_places(net)) | set(postset(net, ts))
    for t in sorted(ts):
        if not preset(net, t) <= places:
            return False
    for p in sorted(places):
        if len(preset(net, p) & ts) > 1:
            return False
        if len(postset(net, p) & ts) > 1:
            return False
    return True


def enumerate_scenarios(net: AcyclicNet, *,
                        bound: Optional[int] = None) -> set:
    """All scenarios, found by growing valid transition sets one
    transition at a time.

    Growth is complete: dropping a transition that nothing later depends
    on keeps a valid set valid, so every scenario is reachable from the
    empty one."""
    limit = DEFAULT_BOUND if bound is None else bound
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        ts = frontier.pop()
        for t in sorted(net.transitions - ts):
            grown = ts | {t}
            if grown in found:
                continue
            if _valid_transition_set(net, grown):
                found.add(grown)
                if len(found) > limit:
                    raise BoundExceeded("scenario count exceeds bound",
                                        found)
                frontier.append(grown)
    return {_as_scenario(net, ts) for ts in found}


def maximal_scenarios(net: AcyclicNet, *,
                      bound: Optional[int] = None) -> set:
    """Scenarios whose transition set no other scenario strictly extends."""
    all_scen = enumerate_scenarios(net, bound=bound)
    sets = {sc.transitions for sc in all_scen}
    return {sc for sc in all_scen
            if not any(sc.transitions < other for other in sets)}


@dataclass(frozen=True)
class CoverageReport:
    """Which parts of a net its scenarios reach."""

    covered_places: frozenset
    covered_transitions: frozenset
    covered_arcs: frozenset
    uncovered_places: frozenset
    uncovered_transitions: frozenset
    uncovered_arcs: frozenset

    @property
    def full(self) -> bool:
        return not (self.uncovered_places or self.uncovered_transitions
                    or self.uncovered_arcs)


def coverage(net: AcyclicNet, *, bound: Optional[int] = None,
             maximal_only: bool = True) -> CoverageReport:
    """Union the places, transitions, and arcs of the (maximal) scenarios
    and report what the net keeps that no scenario visits."""
    scen = (maximal_scenarios(net, bound=bound) if maximal_only
            else enumerate_scenarios(net, bound=bound))
    places: set = set()
    trans: set = set()
    arcs: set = set()
    for sc in scen:
        places |= sc.net.places
        trans |= sc.net.transitions
        arcs |= sc.net.flow
    return CoverageReport(
        frozenset(places), frozenset(trans), frozenset(arcs),
        net.places - places, net.transitions - trans, net.flow - arcs)
