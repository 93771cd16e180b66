"""Communication structured acyclic nets: well-formed acyclic components
glued by buffer places.

Buffers carry tokens between components and, unlike ordinary places, may
be consumed in the same step that fills them — that is what lets
components synchronise.  A step U is enabled at M when
pre(U) ⊆ M ∪ (post(U) ∩ Q): missing buffer tokens may be supplied by U
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Optional, Sequence, Union

from .acyclic import (AcyclicNet, BACKWARD_DETERMINISTIC, OCCURRENCE,
                      classify, coinitial_subnet, validate)
from .acyclic import initial_places as an_initial_places
from .errors import (BoundExceeded, NetError, NoDecomposition, NotACsoNet,
                     NotAStep, NotWellFormed, StepNotEnabled, UnknownNode,
                     ValidationError, Violation)
from .foundations import (adjacency, closure_pairs, dedupe_consecutive,
                          reachable_from, restrict_compact)
from .semantics import DEFAULT_BOUND, MixedRun, _disjoint_subsets
from .scenarios import _valid_transition_set
from .wellformed import StepSeqVerdict, WellFormedVerdict, is_well_formed

CSO = "cso"
GENERAL = "general"

MAX_CANDIDATES = 20
MAX_SCENARIO_TRANSITIONS = 16


@dataclass(frozen=True)
class CsaNet:
    """Pairwise node-disjoint acyclic components, buffer places, and the
    buffer arcs connecting them."""

    components: tuple
    buffers: frozenset
    buffer_arcs: frozenset

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "buffers", frozenset(self.buffers))
        object.__setattr__(self, "buffer_arcs", frozenset(
            (str(a), str(b)) for a, b in self.buffer_arcs))

    @property
    def places(self) -> frozenset:
        out: frozenset = frozenset()
        for comp in self.components:
            out |= comp.places
        return out

    @property
    def transitions(self) -> frozenset:
        out: frozenset = frozenset()
        for comp in self.components:
            out |= comp.transitions
        return out

    @property
    def nodes(self) -> frozenset:
        return self.places | self.transitions | self.buffers


def validate_csa(components: Sequence, buffers: AbstractSet,
                 buffer_arcs: AbstractSet, *,
                 bound: Optional[int] = None) -> CsaNet:
    """Build a communication net, collecting every defect.

    Components may be given as AcyclicNet values or (places, transitions,
    arcs) triples.  Component indices in violation subjects are 1-based.
    Each component must itself be well-formed; buffers must be fresh
    names, each with at least one producing transition, and no buffer may
    connect a component to itself."""
    violations: list = []
    built: list = []
    for i, comp in enumerate(components, start=1):
        if isinstance(comp, AcyclicNet):
            built.append(comp)
            continue
        try:
            built.append(validate(*comp))
        except ValidationError as exc:
            built.append(None)
            violations.extend(
                Violation(v.code, f"component {i}: {v.subject}", v.detail)
                for v in exc.violations)
    buffers = frozenset(str(q) for q in buffers)
    buffer_arcs = frozenset((str(a), str(b)) for a, b in buffer_arcs)

    owner: dict = {}
    for i, comp in enumerate(built, start=1):
        if comp is None:
            continue
        for x in sorted(comp.nodes):
            if x in owner:
                violations.append(Violation(
                    "node-clash-across-components", x,
                    f"appears in components {owner[x]} and {i}"))
            else:
                owner[x] = i
    for q in sorted(buffers):
        if q in owner:
            violations.append(Violation(
                "node-clash-across-components", q,
                f"buffer also appears in component {owner[q]}"))

    for i, comp in enumerate(built, start=1):
        if comp is None:
            continue
        verdict = is_well_formed(comp, bound=bound)
        if verdict.status == "unknown":
            raise BoundExceeded(
                f"well-formedness of component {i} undecided", verdict)
        if not verdict.ok:
            violations.append(Violation(
                "component-not-well-formed", str(i), verdict.detail))

    transitions = frozenset().union(
        *(c.transitions for c in built if c is not None))
    produced: dict = {q: set() for q in buffers}
    consumed: dict = {q: set() for q in buffers}
    for a, b in sorted(buffer_arcs):
        if a in transitions and b in buffers:
            produced[b].add(a)
        elif a in buffers and b in transitions:
            consumed[a].add(b)
        else:
            violations.append(Violation(
                "dangling-arc", f"{a}->{b}",
                "must join a component transition and a buffer"))
    for q in sorted(buffers):
        if not produced[q]:
            violations.append(Violation(
                "buffer-without-producer", q,
                "every buffer needs at least one filling transition"))
        for t in sorted(produced[q]):
            for u in sorted(consumed[q]):
                if owner.get(t) == owner.get(u):
                    violations.append(Violation(
                        "buffer-within-one-component", q,
                        f"{t} fills and {u} empties it inside component "
                        f"{owner.get(t)}"))

    if violations:
        raise ValidationError(violations)
    return CsaNet(tuple(built), buffers, buffer_arcs)


@lru_cache(maxsize=None)
def _csa_maps(net: CsaNet):
    pre: dict = {x: set() for x in net.nodes}
    post: dict = {x: set() for x in net.nodes}
    for comp in net.components:
        for a, b in comp.flow:
            post[a].add(b)
            pre[b].add(a)
    for a, b in net.buffer_arcs:
        post[a].add(b)
        pre[b].add(a)
    component_of: dict = {}
    for i, comp in enumerate(net.components, start=1):
        for x in comp.nodes:
            component_of[x] = i
    return ({x: frozenset(v) for x, v in pre.items()},
            {x: frozenset(v) for x, v in post.items()},
            component_of)


def csa_preset(net: CsaNet, x: Union[str, AbstractSet]) -> frozenset:
    pre, _, _ = _csa_maps(net)
    if isinstance(x, (set, frozenset)):
        out: frozenset = frozenset()
        for y in x:
            if y not in pre:
                raise UnknownNode(y)
            out |= pre[y]
        return out
    if x not in pre:
        raise UnknownNode(x)
    return pre[x]


def csa_postset(net: CsaNet, x: Union[str, AbstractSet]) -> frozenset:
    _, post, _ = _csa_maps(net)
    if isinstance(x, (set, frozenset)):
        out: frozenset = frozenset()
        for y in x:
            if y not in post:
                raise UnknownNode(y)
            out |= post[y]
        return out
    if x not in post:
        raise UnknownNode(x)
    return post[x]


def csa_neighbourhood(net: CsaNet, x: str) -> tuple:
    return csa_preset(net, x), csa_postset(net, x)


def csa_initial_places(net: CsaNet) -> frozenset:
    """Places and buffers with no input; buffers always have a producer,
    so this is the union of the component entry places."""
    return frozenset(x for x in net.places | net.buffers
                     if not csa_preset(net, x))


def csa_final_places(net: CsaNet) -> frozenset:
    return frozenset(x for x in net.places | net.buffers
                     if not csa_postset(net, x))


def csa_initial_marking(net: CsaNet) -> frozenset:
    return csa_initial_places(net)


def classify_csa(net: CsaNet) -> str:
    """Most specific class: "cso" when components are occurrence nets,
    buffers are unbranched, and no component place lies on a cycle;
    "backward-deterministic" when components are at most backward
    deterministic and buffers have a unique filler; else "general"."""
    pre, post, _ = _csa_maps(net)
    kinds = [classify(c) for c in net.components]
    unique_fill = all(len(pre[q]) == 1 for q in net.buffers)
    if all(k == OCCURRENCE for k in kinds) and unique_fill \
            and all(len(post[q]) <= 1 for q in net.buffers):
        arcs = set()
        for comp in net.components:
            arcs |= comp.flow
        arcs |= net.buffer_arcs
        succ = {x: sorted(ys) for x, ys in adjacency(arcs).items()}
        on_cycle = {x for x in succ if x in reachable_from(x, succ)}
        if not on_cycle & net.places:
            return CSO
    if all(k in (OCCURRENCE, BACKWARD_DETERMINISTIC) for k in kinds) \
            and unique_fill:
        return BACKWARD_DETERMINISTIC
    return GENERAL


def csa_check_step(net: CsaNet, u: AbstractSet) -> frozenset:
    u = frozenset(u)
    if not u:
        raise NotAStep("a step must contain at least one transition")
    for t in sorted(u):
        if t not in net.transitions:
            raise UnknownNode(t)
    seen: set = set()
    for t in sorted(u):
        p = csa_preset(net, t)
        if seen & p:
            raise NotAStep(
                f"pre-places {sorted(seen & p)} shared inside {sorted(u)}")
        seen |= p
    return u


def csa_enabled(net: CsaNet, m: AbstractSet, u: AbstractSet) -> bool:
    """Buffers filled by the step itself may satisfy its own demand."""
    u = csa_check_step(net, u)
    supply = frozenset(m) | (csa_postset(net, u) & net.buffers)
    return csa_preset(net, u) <= supply


def csa_fire(net: CsaNet, m: AbstractSet, u: AbstractSet) -> frozenset:
    u = csa_check_step(net, u)
    m = frozenset(m)
    missing = csa_preset(net, u) - (m | (csa_postset(net, u) & net.buffers))
    if missing:
        raise StepNotEnabled(u, missing)
    return (m | csa_postset(net, u)) - csa_preset(net, u)


def csa_run(net: CsaNet, m0: AbstractSet,
            steps: Sequence[AbstractSet]) -> MixedRun:
    markings = [frozenset(m0)]
    fired = []
    for i, raw in enumerate(steps):
        u = csa_check_step(net, raw)
        if not csa_enabled(net, markings[-1], u):
            missing = csa_preset(net, u) - (
                markings[-1] | (csa_postset(net, u) & net.buffers))
            raise StepNotEnabled(u, missing, index=i)
        fired.append(u)
        markings.append(csa_fire(net, markings[-1], u))
    return MixedRun(tuple(markings), tuple(fired))


def csa_enabled_transitions(net: CsaNet, m: AbstractSet) -> list:
    m = frozenset(m)
    return [t for t in sorted(net.transitions)
            if csa_preset(net, t) <= m]


def csa_enabled_steps(net: CsaNet, m: AbstractSet, *,
                      singles: bool = False,
                      limit: Optional[int] = None) -> list:
    """All enabled steps in canonical order.

    Candidates are transitions whose non-buffer inputs are marked; buffer
    demand may be met by co-selected producers, so subsets are filtered by
    the synchronous enabling rule afterwards."""
    m = frozenset(m)
    if singles:
        return [frozenset({t}) for t in csa_enabled_transitions(net, m)]
    cands = [t for t in sorted(net.transitions)
             if csa_preset(net, t) - net.buffers <= m]
    if len(cands) > MAX_CANDIDATES:
        raise BoundExceeded(
            f"{len(cands)} step candidates exceed {MAX_CANDIDATES}")
    subsets: list = []
    _disjoint_subsets(cands, lambda t: csa_preset(net, t), subsets, None)
    out = [u for u in subsets if csa_enabled(net, m, u)]
    if limit is not None and len(out) > limit:
        raise BoundExceeded("more enabled steps than the limit",
                            out[:limit])
    return out


def _csa_explore(net: CsaNet, *, bound: Optional[int],
                 depth: Optional[int], singles: bool = False):
    from .semantics import _Budget, _explore_runs

    def nxt(m):
        return [(u, csa_fire(net, m, u))
                for u in csa_enabled_steps(net, m, singles=singles)]

    budget = _Budget(bound, depth)
    yield from _explore_runs(csa_initial_marking(net), nxt, budget)


def csa_sseq(net: CsaNet, *, bound: Optional[int] = None,
             depth: Optional[int] = None) -> set:
    return {s for s, _, _ in _csa_explore(net, bound=bound, depth=depth)}


def csa_mixsseq(net: CsaNet, *, bound: Optional[int] = None,
                depth: Optional[int] = None) -> set:
    return {MixedRun(ms, s) for s, ms, _ in
            _csa_explore(net, bound=bound, depth=depth)}


def csa_maxsseq(net: CsaNet, *, bound: Optional[int] = None,
                depth: Optional[int] = None) -> set:
    return {s for s, _, last in
            _csa_explore(net, bound=bound, depth=depth) if last}


def csa_maxmixsseq(net: CsaNet, *, bound: Optional[int] = None,
                   depth: Optional[int] = None) -> set:
    return {MixedRun(ms, s) for s, ms, last in
            _csa_explore(net, bound=bound, depth=depth) if last}


def csa_reach(net: CsaNet, *, bound: Optional[int] = None,
              depth: Optional[int] = None) -> set:
    """BFS over whole enabled steps — synchronised steps need not be
    serialisable, so singleton exploration would miss markings."""
    limit = DEFAULT_BOUND if bound is None else bound
    start = csa_initial_marking(net)
    seen = {start}
    queue = [start]
    while queue:
        m = queue.pop()
        for u in csa_enabled_steps(net, m):
            m2 = csa_fire(net, m, u)
            if m2 not in seen:
                seen.add(m2)
                if len(seen) > limit:
                    raise BoundExceeded("reachable markings exceed bound",
                                        seen)
                queue.append(m2)
    return seen


def csa_finreach(net: CsaNet, *, bound: Optional[int] = None,
                 depth: Optional[int] = None) -> set:
    return {m for m in csa_reach(net, bound=bound)
            if not csa_enabled_steps(net, m)}


def csa_fseq(net: CsaNet, *, bound: Optional[int] = None,
             depth: Optional[int] = None) -> set:
    """Firing sequences exist only in the single-component case, where no
    step ever has to synchronise across a buffer."""
    if len(net.components) != 1:
        raise NetError("firing sequences are undefined for nets with "
                       f"{len(net.components)} components")
    return {s for s, _, _ in
            _csa_explore(net, bound=bound, depth=depth, singles=True)}


_CSA_DISPATCH = {
    "sseq": csa_sseq, "mixsseq": csa_mixsseq, "maxsseq": csa_maxsseq,
    "maxmixsseq": csa_maxmixsseq, "reach": csa_reach,
    "finreach": csa_finreach, "fseq": csa_fseq,
}


def csa_behaviours(net: CsaNet, kind: str, *, bound: Optional[int] = None,
                   depth: Optional[int] = None) -> set:
    if kind not in _CSA_DISPATCH:
        raise ValueError(f"unknown behaviour kind {kind!r}")
    return _CSA_DISPATCH[kind](net, bound=bound, depth=depth)


def project(net: CsaNet, i: int,
            s: Union[MixedRun, Sequence[AbstractSet]]):
    """Restrict a behaviour to component i (1-based).

    A step sequence keeps only the component's transitions, dropping
    emptied steps.  A mixed run additionally restricts every marking and
    collapses the stutter this produces."""
    if not 1 <= i <= len(net.components):
        raise IndexError(f"component index {i} out of range "
                         f"1..{len(net.components)}")
    comp = net.components[i - 1]
    if isinstance(s, MixedRun):
        csa_run(net, s.initial, s.steps)
        flat = s.as_sets()
        keep = comp.places | comp.transitions
        shrunk = restrict_compact(flat, keep)
        return dedupe_consecutive(shrunk)
    replay = csa_run(net, csa_initial_marking(net), s)
    return restrict_compact(replay.steps, comp.transitions)


def syn_cycles(net: CsaNet) -> set:
    """Partition of the transitions of a communication occurrence net into
    synchronisation classes: t and u share a class when buffer paths run
    both ways between them."""
    if classify_csa(net) != CSO:
        raise NotACsoNet("syn-cycles are defined on communication "
                         "occurrence nets")
    cl = closure_pairs(net.buffer_arcs)
    out: set = set()
    assigned: set = set()
    for t in sorted(net.transitions):
        if t in assigned:
            continue
        cyc = frozenset({t} | {u for u in net.transitions
                               if (t, u) in cl and (u, t) in cl})
        assigned |= cyc
        out.add(cyc)
    return out


def syn_cycles_csa(net: CsaNet, *, bound: Optional[int] = None) -> set:
    """Synchronisation classes of a well-formed communication net: the
    union of the syn-cycles of its scenarios."""
    verdict = csa_is_well_formed(net, bound=bound)
    if verdict.status == "unknown":
        raise BoundExceeded("well-formedness undecided", verdict)
    if not verdict.ok:
        raise NotWellFormed(verdict.detail)
    out: set = set()
    for sc in csa_scenarios(net, bound=bound):
        out |= syn_cycles(sc.net)
    return out


def decompose_step(net: CsaNet, m: AbstractSet, u: AbstractSet) -> list:
    """Split an enabled step into the sequence of its unsplittable parts.

    Transitions that feed each other currently-empty buffers must fire
    together; the strongly connected groups of that supply relation are
    ordered so every group's demand is met when its turn comes.  Ties are
    broken lexicographically, and the result is verified by replay."""
    u = csa_check_step(net, u)
    m = frozenset(m)
    if not csa_enabled(net, m, u):
        raise StepNotEnabled(u, csa_preset(net, u) -
                             (m | (csa_postset(net, u) & net.buffers)))
    edges: set = set()
    for v in sorted(u):
        for q in sorted(csa_preset(net, v) & net.buffers - m):
            for t in sorted(csa_preset(net, q) & u):
                edges.add((t, v))
    succ = {x: sorted(ys) for x, ys in adjacency(edges).items()}
    groups: list = []
    placed: set = set()
    for t in sorted(u):
        if t in placed:
            continue
        forward = reachable_from(t, succ) | {t}
        group = frozenset(v for v in forward
                          if v == t or t in (reachable_from(v, succ) | {v}))
        placed |= group
        groups.append(group)
    after: dict = {g: set() for g in groups}
    needs: dict = {g: 0 for g in groups}
    home = {t: g for g in groups for t in g}
    for a, b in edges:
        if home[a] is not home[b] and home[b] not in after[home[a]]:
            after[home[a]].add(home[b])
            needs[home[b]] += 1
    order: list = []
    ready = sorted((g for g in groups if needs[g] == 0),
                   key=lambda g: sorted(g))
    while ready:
        g = ready.pop(0)
        order.append(g)
        for h in sorted(after[g], key=lambda x: sorted(x)):
            needs[h] -= 1
            if needs[h] == 0:
                ready.append(h)
        ready.sort(key=lambda x: sorted(x))
    if len(order) != len(groups):
        raise NoDecomposition("cyclic dependency between parts")
    here = m
    for g in order:
        if not csa_enabled(net, here, g):
            raise NoDecomposition(
                f"part {sorted(g)} is not enabled in sequence")
        here = csa_fire(net, here, g)
    if here != csa_fire(net, m, u):
        raise NoDecomposition("sequential firing diverges from the step")
    return order


def csa_is_wf_stepseq(net: CsaNet, s: Sequence[AbstractSet],
                      m0: Optional[AbstractSet] = None) -> StepSeqVerdict:
    """Double-fill check over places and buffers alike."""
    m = frozenset(csa_initial_marking(net) if m0 is None else m0)
    filled: set = set()
    for i, raw in enumerate(s):
        u = csa_check_step(net, raw)
        if not csa_enabled(net, m, u):
            raise StepNotEnabled(
                u, csa_preset(net, u) -
                (m | (csa_postset(net, u) & net.buffers)), index=i)
        for t in sorted(u):
            for v in sorted(u):
                if t < v:
                    twice = csa_postset(net, t) & csa_postset(net, v)
                    if twice:
                        return StepSeqVerdict(False, i, min(twice))
        again = csa_postset(net, u) & filled
        if again:
            return StepSeqVerdict(False, i, min(again))
        filled |= csa_postset(net, u)
        m = csa_fire(net, m, u)
    return StepSeqVerdict(True)


def _minimal_enabled_steps(net: CsaNet, m: frozenset) -> list:
    steps = csa_enabled_steps(net, m)
    return [u for u in steps if not any(v < u for v in steps)]


def csa_is_well_formed(net: CsaNet, *,
                       bound: Optional[int] = None) -> WellFormedVerdict:
    """Explore with minimal enabled steps as atomic moves.

    Any enabled step splits into minimal enabled sub-steps with the same
    fills, so double fills cannot hide inside composite steps, and every
    transition reachable by steps is reachable by these moves."""
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
        for u in _minimal_enabled_steps(net, m):
            fired.update(u)
            path.append(u)
            for t in sorted(u):
                for v in sorted(u):
                    if t < v:
                        twice = csa_postset(net, t) & csa_postset(net, v)
                        if twice:
                            return WellFormedVerdict(
                                "not-ok", witness_sequence=tuple(path),
                                witness_place=min(twice),
                                detail=f"{min(twice)} filled twice inside "
                                       f"one step by {t} and {v}")
            twice = csa_postset(net, u) & filled
            if twice:
                return WellFormedVerdict(
                    "not-ok", witness_sequence=tuple(path),
                    witness_place=min(twice),
                    detail=f"{min(twice)} filled again by {sorted(u)}")
            bad = visit(csa_fire(net, m, u), filled | csa_postset(net, u))
            if bad is not None:
                return bad
            path.pop()
        return None

    bad = visit(csa_initial_marking(net), frozenset())
    if bad is not None:
        return bad
    silent = sorted(net.transitions - fired)
    if silent:
        return WellFormedVerdict(
            "not-ok", witness_transition=silent[0],
            detail=f"transition {silent[0]} never fires")
    return WellFormedVerdict("ok")


@dataclass(frozen=True)
class CsaScenario:
    """A communication occurrence subnet co-initial with its parent."""

    net: CsaNet
    parent: CsaNet

    @property
    def transitions(self) -> frozenset:
        return self.net.transitions


def _scenario_transition_sets(net: CsaNet, *,
                              bound: Optional[int] = None) -> set:
    ts = sorted(net.transitions)
    if len(ts) > MAX_SCENARIO_TRANSITIONS:
        raise BoundExceeded(
            f"{len(ts)} transitions exceed the scenario enumeration "
            f"limit {MAX_SCENARIO_TRANSITIONS}")
    limit = DEFAULT_BOUND if bound is None else bound
    found: set = set()
    for mask in range(1 << len(ts)):
        s = frozenset(t for k, t in enumerate(ts) if mask >> k & 1)
        if _is_scenario_set(net, s):
            found.add(s)
            if len(found) > limit:
                raise BoundExceeded("scenario count exceeds bound", found)
    return found


def _is_scenario_set(net: CsaNet, s: frozenset) -> bool:
    for comp in net.components:
        if not _valid_transition_set(comp, s & comp.transitions):
            return False
    adj = frozenset(q for q in net.buffers
                    if (csa_preset(net, q) | csa_postset(net, q)) & s)
    for q in adj:
        if len(csa_preset(net, q) & s) != 1:
            return False
        if len(csa_postset(net, q) & s) > 1:
            return False
    arcs: set = set()
    places: set = set()
    for comp in net.components:
        kept_t = s & comp.transitions
        kept_p = an_initial_places(comp) | frozenset(
            b for a, b in comp.flow if a in kept_t)
        places |= kept_p
        arcs |= {(a, b) for a, b in comp.flow
                 if {a, b} <= kept_t | kept_p}
    arcs |= {(a, b) for a, b in net.buffer_arcs
             if (a in s and b in adj) or (a in adj and b in s)}
    succ = {x: sorted(ys) for x, ys in adjacency(arcs).items()}
    for p in sorted(places):
        if p in reachable_from(p, succ):
            return False
    return True


def _build_scenario(net: CsaNet, s: frozenset) -> CsaScenario:
    comps = tuple(coinitial_subnet(comp, s & comp.transitions)
                  for comp in net.components)
    adj = frozenset(q for q in net.buffers
                    if (csa_preset(net, q) | csa_postset(net, q)) & s)
    arcs = frozenset((a, b) for a, b in net.buffer_arcs
                     if (a in s and b in adj) or (a in adj and b in s))
    sub = CsaNet(comps, adj, arcs)
    if classify_csa(sub) != CSO:
        raise NetError(f"transitions {sorted(s)} do not induce a "
                       "communication occurrence subnet")
    return CsaScenario(sub, net)


def csa_scenario_of(net: CsaNet, s: Sequence[AbstractSet]) -> CsaScenario:
    """The scenario generated by a well-formed run."""
    replay = csa_run(net, csa_initial_marking(net), s)
    verdict = csa_is_wf_stepseq(net, replay.steps)
    if not verdict.ok:
        raise NotWellFormed(
            f"place {verdict.place} filled twice at step "
            f"{verdict.violation_index}")
    occ: frozenset = frozenset()
    for u in replay.steps:
        occ |= u
    if not _is_scenario_set(net, occ):
        raise NetError(f"run transitions {sorted(occ)} do not induce a "
                       "scenario")
    return _build_scenario(net, occ)


def csa_scenarios(net: CsaNet, *, bound: Optional[int] = None) -> set:
    """All co-initial communication occurrence subnets, by checking every
    transition subset: buffer loops mean scenarios cannot always be grown
    one transition at a time."""
    return {_build_scenario(net, s)
            for s in _scenario_transition_sets(net, bound=bound)}


def csa_maximal_scenarios(net: CsaNet, *,
                          bound: Optional[int] = None) -> set:
    sets = _scenario_transition_sets(net, bound=bound)
    keep = {s for s in sets if not any(s < other for other in sets)}
    return {_build_scenario(net, s) for s in keep}


@dataclass(frozen=True)
class CsaCoverageReport:
    covered_places: frozenset
    covered_transitions: frozenset
    covered_buffers: frozenset
    covered_arcs: frozenset
    covered_buffer_arcs: frozenset
    uncovered_places: frozenset
    uncovered_transitions: frozenset
    uncovered_buffers: frozenset
    uncovered_arcs: frozenset
    uncovered_buffer_arcs: frozenset

    @property
    def full(self) -> bool:
        return not (self.uncovered_places or self.uncovered_transitions
                    or self.uncovered_buffers or self.uncovered_arcs
                    or self.uncovered_buffer_arcs)


def csa_coverage(net: CsaNet, *,
                 bound: Optional[int] = None) -> CsaCoverageReport:
    places: set = set()
    trans: set = set()
    bufs: set = set()
    arcs: set = set()
    barcs: set = set()
    flow = frozenset().union(*[c.flow for c in net.components])
    for sc in csa_maximal_scenarios(net, bound=bound):
        places |= sc.net.places
        trans |= sc.net.transitions
        bufs |= sc.net.buffers
        barcs |= sc.net.buffer_arcs
        for comp in sc.net.components:
            arcs |= comp.flow
    return CsaCoverageReport(
        frozenset(places), frozenset(trans), frozenset(bufs),
        frozenset(arcs), frozenset(barcs),
        net.places - places, net.transitions - trans,
        net.buffers - bufs, flow - arcs, net.buffer_arcs - barcs)
