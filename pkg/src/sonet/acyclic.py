"""Acyclic nets: structure, validation, neighbourhoods, subnets, classes.

A net is a triple (places, transitions, flow) with an acyclic flow relation
in which every transition consumes from at least one place and produces
into at least one place.  Validation reports every structural violation at
once instead of stopping at the first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Iterable

from .errors import UnknownNode, ValidationError, Violation
from .foundations import Pair, adjacency, reachable_from, smallest_cycle

OCCURRENCE = "occurrence"
BACKWARD_DETERMINISTIC = "backward-deterministic"
GENERAL = "general"


@dataclass(frozen=True)
class AcyclicNet:
    places: frozenset
    transitions: frozenset
    flow: frozenset

    def __post_init__(self):
        object.__setattr__(self, "places", frozenset(self.places))
        object.__setattr__(self, "transitions", frozenset(self.transitions))
        object.__setattr__(self, "flow", frozenset(self.flow))

    @property
    def nodes(self) -> frozenset:
        return self.places | self.transitions


def validate(places: Iterable, transitions: Iterable,
             arcs: Iterable[Pair]) -> AcyclicNet:
    """Build an AcyclicNet, raising ValidationError with all violations."""
    places = frozenset(places)
    transitions = frozenset(transitions)
    arcs = frozenset(tuple(a) for a in arcs)
    found = []

    if not places:
        found.append(Violation("empty-place-set", None,
                               "a net needs at least one place"))
    for node in sorted(places & transitions):
        found.append(Violation("node-clash", node,
                               "used as both place and transition"))

    nodes = places | transitions
    for x, y in sorted(arcs):
        if x not in nodes or y not in nodes:
            missing = x if x not in nodes else y
            found.append(Violation("dangling-arc", (x, y),
                                   f"endpoint {missing!r} is not a node"))
        elif (x in places) == (y in places):
            found.append(Violation("dangling-arc", (x, y),
                                   "arcs must join a place and a transition"))

    usable = {(x, y) for x, y in arcs
              if {x, y} <= nodes and (x in places) != (y in places)}
    pre = adjacency({(y, x) for x, y in usable})
    post = adjacency(usable)
    for t in sorted(transitions):
        if not pre.get(t):
            found.append(Violation("transition-without-pre", t,
                                   "no incoming arc from a place"))
        if not post.get(t):
            found.append(Violation("transition-without-post", t,
                                   "no outgoing arc to a place"))

    cycle = smallest_cycle(usable)
    if cycle:
        found.append(Violation("cyclic-flow", cycle,
                               "flow contains the cycle " + "->".join(cycle)))

    if found:
        raise ValidationError(found)
    return AcyclicNet(places, transitions, arcs)


@lru_cache(maxsize=None)
def _maps(net: AcyclicNet):
    pre = {x: frozenset(ys) for x, ys in
           adjacency({(y, x) for x, y in net.flow}).items()}
    post = {x: frozenset(ys) for x, ys in adjacency(net.flow).items()}
    return pre, post


def preset(net: AcyclicNet, x) -> frozenset:
    """Direct predecessors of a node, or of each node in a set (union)."""
    pre, _ = _maps(net)
    return _neighbs(net, x, pre)


def postset(net: AcyclicNet, x) -> frozenset:
    """Direct successors of a node, or of each node in a set (union)."""
    _, post = _maps(net)
    return _neighbs(net, x, post)


def _neighbs(net: AcyclicNet, x, table) -> frozenset:
    if isinstance(x, (set, frozenset, list, tuple)):
        out: set = set()
        for node in x:
            out |= _neighbs(net, node, table)
        return frozenset(out)
    if x not in net.nodes:
        raise UnknownNode(x)
    return table.get(x, frozenset())


def initial_places(net: AcyclicNet) -> frozenset:
    """Places with no producing transition; never empty in a valid net."""
    return frozenset(p for p in net.places if not preset(net, p))


def final_places(net: AcyclicNet) -> frozenset:
    return frozenset(p for p in net.places if not postset(net, p))


def classify(net: AcyclicNet) -> str:
    """Most specific class tag: occurrence > backward-deterministic > general."""
    backward = all(len(preset(net, p)) <= 1 for p in net.places)
    forward = all(len(postset(net, p)) <= 1 for p in net.places)
    if backward and forward:
        return OCCURRENCE
    if backward:
        return BACKWARD_DETERMINISTIC
    return GENERAL


def subnet(net: AcyclicNet, places: AbstractSet,
           transitions: AbstractSet) -> AcyclicNet:
    """The inner net on the chosen nodes; flow is restricted automatically."""
    places = frozenset(places)
    transitions = frozenset(transitions)
    unknown = (places - net.places) | (transitions - net.transitions)
    if unknown:
        raise UnknownNode(sorted(unknown)[0])
    keep = places | transitions
    flow = frozenset((x, y) for x, y in net.flow if x in keep and y in keep)
    return AcyclicNet(places, transitions, flow)


def coinitial_subnet(net: AcyclicNet, transitions: AbstractSet) -> AcyclicNet:
    """The co-initial subnet determined by a transition set: its places are
    the outer initial places plus everything those transitions produce."""
    transitions = frozenset(transitions)
    places = initial_places(net) | postset(net, transitions)
    return subnet(net, places, transitions)


def is_subnet(outer: AcyclicNet, inner: AcyclicNet) -> bool:
    """True iff inner is a subnet of outer: nodes included, flow the exact
    restriction, and every inner transition keeps its full outer pre/postset."""
    if not inner.places or not inner.places <= outer.places:
        return False
    if not inner.transitions <= outer.transitions:
        return False
    keep = inner.places | inner.transitions
    expected = frozenset((x, y) for x, y in outer.flow
                         if x in keep and y in keep)
    if inner.flow != expected:
        return False
    for t in inner.transitions:
        if preset(outer, t) - inner.places or postset(outer, t) - inner.places:
            return False
    return True


def is_coinitial_subnet(outer: AcyclicNet, inner: AcyclicNet) -> bool:
    """Subnet that additionally starts from the same initial places."""
    return is_subnet(outer, inner) and \
        initial_places(inner) == initial_places(outer)
