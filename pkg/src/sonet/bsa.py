"""Behavioural structured acyclic nets: a lower level observed by an
upper level through a place abstraction.

Each upper component is a line: one token walking through it names the
phase its lower counterpart is in.  The relation β sends upper places to
the lower markings they stand for, and a step may fire only when both its
source and target markings stay phase-consistent.  The two levels plus
their buffers otherwise behave as one communication net.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import AbstractSet, Optional, Sequence, Tuple

from .acyclic import initial_places
from .csa import (CSO, CsaNet, classify_csa, csa_enabled, csa_enabled_steps,
                  csa_fire, csa_initial_marking, csa_is_well_formed,
                  csa_is_wf_stepseq, csa_preset, csa_postset, csa_reach,
                  validate_csa, _scenario_transition_sets, _build_scenario)
from .errors import (BoundExceeded, NetError, NotWellFormed, StepNotEnabled,
                     UnknownNode, UpperMarkingNotSingleton, ValidationError,
                     Violation)
from .foundations import occurring
from .semantics import DEFAULT_BOUND, MixedRun, _Budget, _explore_runs, \
    reach_from
from .wellformed import WellFormedVerdict

REASON_UNDERLYING = "underlying"
REASON_SOURCE = "source_phase"
REASON_TARGET = "target_phase"


@dataclass(frozen=True)
class BsaNet:
    """Lower and upper communication nets with the abstraction β, a set of
    (lower place, upper place) pairs between same-index components."""

    lower: CsaNet
    upper: CsaNet
    beta: frozenset

    def __post_init__(self):
        object.__setattr__(self, "beta", frozenset(
            (str(r), str(p)) for r, p in self.beta))

    @property
    def transitions(self) -> frozenset:
        return self.lower.transitions | self.upper.transitions


def _as_csa(level) -> CsaNet:
    if isinstance(level, CsaNet):
        return level
    components, buffers, arcs = level
    return validate_csa(components, buffers, arcs)


def _line_like_violations(upper: CsaNet) -> list:
    out: list = []
    for j, comp in enumerate(upper.components, start=1):
        if len(initial_places(comp)) != 1:
            out.append(Violation(
                "upper-not-line-like", f"component {j}",
                f"entry places {sorted(initial_places(comp))}, need "
                "exactly one"))
        pre: dict = {t: 0 for t in comp.transitions}
        post: dict = {t: 0 for t in comp.transitions}
        for a, b in comp.flow:
            if b in pre:
                pre[b] += 1
            if a in post:
                post[a] += 1
        for t in sorted(comp.transitions):
            if pre[t] != 1 or post[t] != 1:
                out.append(Violation(
                    "upper-not-line-like", t,
                    f"{pre[t]} inputs and {post[t]} outputs, need one "
                    "of each"))
    return out


def validate_bsa(lower, upper, beta: AbstractSet, *,
                 bound: Optional[int] = None) -> BsaNet:
    """Build a two-level net, collecting every defect.

    Levels may be CsaNet values or (components, buffers, buffer_arcs)
    triples.  Both levels must be well-formed communication nets with the
    same number of components; upper components must be lines; β must
    match initial markings and keep every upper move lower-realisable."""
    violations: list = []
    levels = []
    for name, raw in (("lower", lower), ("upper", upper)):
        try:
            levels.append(_as_csa(raw))
        except ValidationError as exc:
            levels.append(None)
            violations.extend(
                Violation(v.code, f"{name}: {v.subject}", v.detail)
                for v in exc.violations)
    low, up = levels
    if low is None or up is None:
        raise ValidationError(violations)

    for name, level in (("lower", low), ("upper", up)):
        verdict = csa_is_well_formed(level, bound=bound)
        if verdict.status == "unknown":
            raise BoundExceeded(f"well-formedness of the {name} level "
                                "undecided", verdict)
        if not verdict.ok:
            violations.append(Violation(
                "level-not-well-formed", name, verdict.detail))

    clash = low.nodes & up.nodes
    for x in sorted(clash):
        violations.append(Violation(
            "node-clash-across-levels", x, "appears in both levels"))

    if len(low.components) != len(up.components):
        violations.append(Violation(
            "component-count-mismatch", "levels",
            f"{len(low.components)} lower vs {len(up.components)} upper "
            "components"))

    line = _line_like_violations(up)
    violations.extend(line)

    beta = frozenset((str(r), str(p)) for r, p in beta)
    lower_comp_of = {x: i for i, c in enumerate(low.components, start=1)
                     for x in c.places}
    upper_comp_of = {x: i for i, c in enumerate(up.components, start=1)
                     for x in c.places}
    placed = True
    for r, p in sorted(beta):
        if r not in lower_comp_of or p not in upper_comp_of \
                or lower_comp_of[r] != upper_comp_of[p]:
            violations.append(Violation(
                "beta-component-mismatch", f"({r},{p})",
                "must join places of same-index lower and upper "
                "components"))
            placed = False

    structure_ok = (not line and placed
                    and len(low.components) == len(up.components)
                    and not clash)
    if structure_ok:
        for i, (lc, uc) in enumerate(zip(low.components, up.components),
                                     start=1):
            entry = next(iter(initial_places(uc)))
            anchor = frozenset(r for r, p in beta if p == entry)
            if anchor != initial_places(lc):
                violations.append(Violation(
                    "beta-initial-mismatch", entry,
                    f"maps to {sorted(anchor)} but the lower component "
                    f"starts at {sorted(initial_places(lc))}"))
            for t in sorted(uc.transitions):
                src = next(a for a, b in uc.flow if b == t)
                tgt = next(b for a, b in uc.flow if a == t)
                m_src = frozenset(r for r, p in beta if p == src)
                m_tgt = frozenset(r for r, p in beta if p == tgt)
                if m_tgt not in reach_from(lc, m_src):
                    violations.append(Violation(
                        "beta-unreachable-boundary", t,
                        f"{sorted(m_tgt)} is not reachable from "
                        f"{sorted(m_src)} in lower component {i}"))

    if violations:
        raise ValidationError(violations)
    return BsaNet(low, up, beta)


@lru_cache(maxsize=None)
def underlying_csa(net: BsaNet) -> CsaNet:
    """Both levels viewed as one communication net, phases ignored."""
    return CsaNet(net.lower.components + net.upper.components,
                  net.lower.buffers | net.upper.buffers,
                  net.lower.buffer_arcs | net.upper.buffer_arcs)


@dataclass(frozen=True)
class Phase:
    """The lower markings an upper place stands for: from its anchor up to
    the boundary of whichever upper transition consumes it next."""

    place: str
    markings: frozenset


def _anchor(net: BsaNet, p: str) -> frozenset:
    return frozenset(r for r, q in net.beta if q == p)


@lru_cache(maxsize=None)
def _phases(net: BsaNet) -> dict:
    out: dict = {}
    for i, (lc, uc) in enumerate(zip(net.lower.components,
                                     net.upper.components), start=1):
        segment_cache: dict = {}

        def seg_reach(m: frozenset, lc=lc, cache=segment_cache):
            if m not in cache:
                cache[m] = reach_from(lc, m)
            return cache[m]

        for p in sorted(uc.places):
            anchor = _anchor(net, p)
            markings = {anchor}
            for t in sorted(b for a, b in uc.flow
                            if a == p and b in uc.transitions):
                tgt_place = next(b for a, b in uc.flow if a == t)
                target = _anchor(net, tgt_place)
                for m in seg_reach(anchor):
                    if target in seg_reach(m):
                        markings.add(m)
            out[p] = Phase(p, frozenset(markings))
    return out


def phase(net: BsaNet, p: str) -> Phase:
    table = _phases(net)
    if p not in table:
        raise UnknownNode(p)
    return table[p]


def is_phase_consistent(net: BsaNet, m: AbstractSet, *,
                        speculative: bool = False) -> bool:
    """Does each lower component sit in the phase named by its upper
    token?  Defined on reachable markings of the underlying net; pass
    speculative=True to ask about arbitrary markings anyway."""
    m = frozenset(m)
    if not speculative and m not in csa_reach(underlying_csa(net)):
        raise ValueError(
            f"{sorted(m)} is not reachable in the underlying net; use "
            "speculative=True to evaluate it regardless")
    for i, (lc, uc) in enumerate(zip(net.lower.components,
                                     net.upper.components), start=1):
        tokens = m & uc.places
        if len(tokens) != 1:
            raise UpperMarkingNotSingleton(i, tokens)
        p = next(iter(tokens))
        if m & lc.places not in phase(net, p).markings:
            return False
    return True


def step_verdict(net: BsaNet, m: AbstractSet,
                 u: AbstractSet) -> Tuple[bool, Optional[str]]:
    """(enabled, reason): reason names the first failed check —
    underlying enabling, source phase, or target phase."""
    und = underlying_csa(net)
    m = frozenset(m)
    if not csa_enabled(und, m, u):
        return False, REASON_UNDERLYING
    if not is_phase_consistent(net, m, speculative=True):
        return False, REASON_SOURCE
    if not is_phase_consistent(net, csa_fire(und, m, u), speculative=True):
        return False, REASON_TARGET
    return True, None


def bsa_enabled(net: BsaNet, m: AbstractSet, u: AbstractSet) -> bool:
    ok, _ = step_verdict(net, m, u)
    return ok


def bsa_fire(net: BsaNet, m: AbstractSet, u: AbstractSet) -> frozenset:
    und = underlying_csa(net)
    ok, reason = step_verdict(net, m, u)
    if not ok:
        missing = csa_preset(und, u) - (
            frozenset(m) | (csa_postset(und, u) & und.buffers)) \
            if reason == REASON_UNDERLYING else frozenset()
        raise StepNotEnabled(u, missing, reason=reason)
    return csa_fire(und, m, u)


def bsa_run(net: BsaNet, m0: AbstractSet,
            steps: Sequence[AbstractSet]) -> MixedRun:
    markings = [frozenset(m0)]
    fired = []
    for i, raw in enumerate(steps):
        u = frozenset(raw)
        ok, reason = step_verdict(net, markings[-1], u)
        if not ok:
            raise StepNotEnabled(u, index=i, reason=reason)
        fired.append(u)
        markings.append(csa_fire(underlying_csa(net), markings[-1], u))
    return MixedRun(tuple(markings), tuple(fired))


def bsa_initial_marking(net: BsaNet) -> frozenset:
    return csa_initial_marking(underlying_csa(net))


def bsa_enabled_steps(net: BsaNet, m: AbstractSet, *,
                      limit: Optional[int] = None) -> list:
    out = [u for u in csa_enabled_steps(underlying_csa(net), m)
           if bsa_enabled(net, m, u)]
    if limit is not None and len(out) > limit:
        raise BoundExceeded("more enabled steps than the limit",
                            out[:limit])
    return out


def _bsa_explore(net: BsaNet, *, bound: Optional[int],
                 depth: Optional[int]):
    def nxt(m):
        return [(u, csa_fire(underlying_csa(net), m, u))
                for u in bsa_enabled_steps(net, m)]

    budget = _Budget(bound, depth)
    yield from _explore_runs(bsa_initial_marking(net), nxt, budget)


def bsa_sseq(net: BsaNet, *, bound: Optional[int] = None,
             depth: Optional[int] = None) -> set:
    return {s for s, _, _ in _bsa_explore(net, bound=bound, depth=depth)}


def bsa_mixsseq(net: BsaNet, *, bound: Optional[int] = None,
                depth: Optional[int] = None) -> set:
    return {MixedRun(ms, s) for s, ms, _ in
            _bsa_explore(net, bound=bound, depth=depth)}


def bsa_maxsseq(net: BsaNet, *, bound: Optional[int] = None,
                depth: Optional[int] = None) -> set:
    return {s for s, _, last in
            _bsa_explore(net, bound=bound, depth=depth) if last}


def bsa_maxmixsseq(net: BsaNet, *, bound: Optional[int] = None,
                   depth: Optional[int] = None) -> set:
    return {MixedRun(ms, s) for s, ms, last in
            _bsa_explore(net, bound=bound, depth=depth) if last}


def bsa_reach(net: BsaNet, *, bound: Optional[int] = None,
              depth: Optional[int] = None) -> set:
    limit = DEFAULT_BOUND if bound is None else bound
    start = bsa_initial_marking(net)
    seen = {start}
    queue = [start]
    while queue:
        m = queue.pop()
        for u in bsa_enabled_steps(net, m):
            m2 = csa_fire(underlying_csa(net), m, u)
            if m2 not in seen:
                seen.add(m2)
                if len(seen) > limit:
                    raise BoundExceeded("reachable markings exceed bound",
                                        seen)
                queue.append(m2)
    return seen


def bsa_finreach(net: BsaNet, *, bound: Optional[int] = None,
                 depth: Optional[int] = None) -> set:
    return {m for m in bsa_reach(net, bound=bound)
            if not bsa_enabled_steps(net, m)}


_BSA_DISPATCH = {
    "sseq": bsa_sseq, "mixsseq": bsa_mixsseq, "maxsseq": bsa_maxsseq,
    "maxmixsseq": bsa_maxmixsseq, "reach": bsa_reach,
    "finreach": bsa_finreach,
}


def bsa_behaviours(net: BsaNet, kind: str, *, bound: Optional[int] = None,
                   depth: Optional[int] = None) -> set:
    if kind == "fseq":
        raise NetError("firing sequences are undefined for two-level "
                       "nets: upper and lower moves may have to "
                       "synchronise")
    if kind not in _BSA_DISPATCH:
        raise ValueError(f"unknown behaviour kind {kind!r}")
    return _BSA_DISPATCH[kind](net, bound=bound, depth=depth)


def _covering_sequence_exists(net: BsaNet, *,
                              bound: Optional[int] = None) -> bool:
    """Is there one run in which every transition of both levels fires?"""
    target = net.transitions
    limit = DEFAULT_BOUND if bound is None else bound
    seen: set = set()
    stack = [(bsa_initial_marking(net), frozenset())]
    while stack:
        m, occurred = stack.pop()
        if occurred == target:
            return True
        if (m, occurred) in seen:
            continue
        seen.add((m, occurred))
        if len(seen) > limit:
            raise BoundExceeded("coverage search bound exhausted")
        for u in bsa_enabled_steps(net, m):
            stack.append((csa_fire(underlying_csa(net), m, u),
                          occurred | u))
    return False


BSO = "bso"
GENERAL = "general"


def classify_bsa(net: BsaNet, *, bound: Optional[int] = None) -> str:
    """"bso" when both levels are communication occurrence nets and some
    single run covers every transition."""
    if classify_csa(net.lower) != CSO or classify_csa(net.upper) != CSO:
        return GENERAL
    return BSO if _covering_sequence_exists(net, bound=bound) else GENERAL


@dataclass(frozen=True)
class BsaScenario:
    """One lockstep unfolding: scenarios of both levels plus the part of
    β that survives, forming a two-level occurrence net of its own."""

    net: BsaNet
    parent: BsaNet

    @property
    def transitions(self) -> frozenset:
        return self.net.transitions


def _candidate(net: BsaNet, low_set: frozenset,
               up_set: frozenset) -> BsaNet:
    low = _build_scenario(net.lower, low_set).net
    up = _build_scenario(net.upper, up_set).net
    beta = frozenset((r, p) for r, p in net.beta
                     if r in low.places and p in up.places)
    return validate_bsa(low, up, beta)


@lru_cache(maxsize=None)
def _scenario_table(net: BsaNet, bound: Optional[int]) -> tuple:
    """(lower set, upper set, scenario-or-None, rejection reason) for
    every pair of level scenarios."""
    low_sets = _scenario_transition_sets(net.lower, bound=bound)
    up_sets = _scenario_transition_sets(net.upper, bound=bound)
    rows = []
    for low_set in sorted(low_sets, key=sorted):
        for up_set in sorted(up_sets, key=sorted):
            try:
                cand = _candidate(net, low_set, up_set)
            except ValidationError as exc:
                rows.append((low_set, up_set, None, "; ".join(
                    v.describe() for v in exc.violations)))
                continue
            if not _covering_sequence_exists(cand, bound=bound):
                rows.append((low_set, up_set, None,
                             "no single run covers every kept transition"))
                continue
            rows.append((low_set, up_set, BsaScenario(cand, net), None))
    return tuple(rows)


def bsa_scenarios(net: BsaNet, *, bound: Optional[int] = None) -> set:
    """Pairs of level scenarios that still validate as a two-level net and
    can run to completion in lockstep."""
    return {sc for _, _, sc, _ in _scenario_table(net, bound)
            if sc is not None}


def bsa_scenario_rejections(net: BsaNet, *,
                            bound: Optional[int] = None) -> list:
    """The level-scenario pairs that were rejected, with the reason —
    kept separate so the pruning stays auditable."""
    return [(low, up, why)
            for low, up, sc, why in _scenario_table(net, bound)
            if sc is None]


def bsa_maximal_scenarios(net: BsaNet, *,
                          bound: Optional[int] = None) -> set:
    scen = bsa_scenarios(net, bound=bound)
    sets = {sc.transitions for sc in scen}
    return {sc for sc in scen
            if not any(sc.transitions < other for other in sets)}


def bsa_scenario_of(net: BsaNet, s: Sequence[AbstractSet]) -> BsaScenario:
    """The scenario a well-formed run generates."""
    replay = bsa_run(net, bsa_initial_marking(net), s)
    verdict = csa_is_wf_stepseq(underlying_csa(net), replay.steps)
    if not verdict.ok:
        raise NotWellFormed(
            f"place {verdict.place} filled twice at step "
            f"{verdict.violation_index}")
    occ = occurring(replay.steps)
    try:
        cand = _candidate(net, occ & net.lower.transitions,
                          occ & net.upper.transitions)
        bsa_run(cand, bsa_initial_marking(cand), replay.steps)
    except (ValidationError, StepNotEnabled) as exc:
        raise NetError(
            "run does not induce a scenario: the two levels are not in "
            f"lockstep ({exc})") from exc
    return BsaScenario(cand, net)


def bsa_is_well_formed(net: BsaNet, *,
                       bound: Optional[int] = None) -> WellFormedVerdict:
    """A two-level net is well-formed when its runs are exactly the runs
    of its scenarios and every maximal scenario can actually finish."""
    try:
        scen = bsa_scenarios(net, bound=bound)
        whole = bsa_sseq(net, bound=bound)
        union: set = set()
        for sc in scen:
            union |= bsa_sseq(sc.net, bound=bound)
    except BoundExceeded as exc:
        return WellFormedVerdict("unknown", detail=str(exc))
    extra = whole - union
    if extra:
        w = min(extra, key=lambda s: (len(s), [sorted(u) for u in s]))
        return WellFormedVerdict(
            "not-ok", witness_sequence=w,
            detail="run of the net outside every scenario")
    ghost = union - whole
    if ghost:
        w = min(ghost, key=lambda s: (len(s), [sorted(u) for u in s]))
        return WellFormedVerdict(
            "not-ok", witness_sequence=w,
            detail="scenario run the net cannot take")
    try:
        whole_max = bsa_maxsseq(net, bound=bound)
        for sc in sorted(bsa_maximal_scenarios(net, bound=bound),
                         key=lambda x: sorted(x.transitions)):
            want = bsa_maxsseq(sc.net, bound=bound)
            kept = sc.transitions
            realized = any(
                tuple(u & kept for u in s if u & kept) in want
                for s in whole_max)
            if not realized:
                return WellFormedVerdict(
                    "not-ok",
                    detail=f"maximal scenario {sorted(kept)} is never "
                           "completed by a maximal run")
    except BoundExceeded as exc:
        return WellFormedVerdict("unknown", detail=str(exc))
    return WellFormedVerdict("ok")
