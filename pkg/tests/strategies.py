"""Random net builders shared by the property tests.

Nets are grown layer by layer so validity and acyclicity hold by
construction: a transition only consumes places born on earlier layers
and only produces fresh places (or, for the permissive mode, places
born on its own layer, which keeps every flow arc level-increasing).
"""

from __future__ import annotations

import random

from hypothesis import strategies as st

from sonet import AcyclicNet, CsaNet, is_well_formed, validate, \
    validate_csa

GENERAL = "general"
BACKWARD_DETERMINISTIC = "bd"
OCCURRENCE = "occurrence"


def random_acyclic_net(rng: random.Random, max_transitions: int = 8,
                       mode: str = GENERAL) -> AcyclicNet:
    n = rng.randint(1, max_transitions)
    levels = rng.randint(1, min(4, n))
    assignment = sorted(rng.randint(1, levels) for _ in range(n))
    names = [f"t{i}" for i in range(1, n + 1)]

    counter = [0]

    def new_place(level: int) -> str:
        counter[0] += 1
        return f"s{counter[0]}"

    pools = {0: [new_place(0) for _ in range(rng.randint(1, 3))]}
    consumed = set()
    arcs = set()
    for t, level in zip(names, assignment):
        below = [p for lv in pools if lv < level for p in pools[lv]]
        if mode == OCCURRENCE:
            below = [p for p in below if p not in consumed]
            if not below:
                p = new_place(0)
                pools[0].append(p)
                below = [p]
        pre = rng.sample(below, min(len(below), rng.randint(1, 2)))
        consumed.update(pre)
        for p in pre:
            arcs.add((p, t))
        pool = pools.setdefault(level, [])
        for _ in range(rng.randint(1, 2)):
            if mode == GENERAL and pool and rng.random() < 0.25:
                p = rng.choice(pool)
            else:
                p = new_place(level)
                pool.append(p)
            arcs.add((t, p))
    places = {p for lv in pools for p in pools[lv]}
    return validate(places, set(names), arcs)


def random_step_walk(rng: random.Random, net: AcyclicNet, enabled_steps,
                     fire, marking, max_steps: int = 6):
    """A random valid step sequence from the given marking."""
    steps = []
    m = marking
    for _ in range(rng.randint(0, max_steps)):
        found = sorted(enabled_steps(net, m), key=sorted)
        if not found:
            break
        u = found[rng.randrange(len(found))]
        steps.append(u)
        m = fire(net, m, u)
    return tuple(steps), m


def random_wf_net(rng: random.Random, max_transitions: int = 6,
                  mode: str = BACKWARD_DETERMINISTIC) -> AcyclicNet:
    """Backward determinism rules out double fills but not dead
    transitions, so reject nets where a transition never fires."""
    while True:
        net = random_acyclic_net(rng, max_transitions, mode)
        if is_well_formed(net).ok:
            return net


def random_csa_net(rng: random.Random, max_transitions: int = 6) -> CsaNet:
    """Two backward-deterministic components joined by producer-to-
    consumer buffers; acyclic buffer wiring, so no syn-cycles."""
    left = random_wf_net(rng, max_transitions // 2)
    right = random_wf_net(rng, max_transitions - max_transitions // 2)

    def renamed(net: AcyclicNet, tag: str) -> AcyclicNet:
        table = {x: f"{tag}{x}" for x in net.nodes}
        return AcyclicNet(frozenset(table[p] for p in net.places),
                          frozenset(table[t] for t in net.transitions),
                          frozenset((table[a], table[b])
                                    for a, b in net.flow))

    left = renamed(left, "L")
    right = renamed(right, "R")
    buffers = set()
    buffer_arcs = set()
    for i, t in enumerate(sorted(left.transitions)):
        if rng.random() < 0.6:
            q = f"q{i + 1}"
            buffers.add(q)
            buffer_arcs.add((t, q))
            if rng.random() < 0.7:
                buffer_arcs.add((q, rng.choice(sorted(right.transitions))))
    if not buffers:
        t = sorted(left.transitions)[0]
        buffers.add("q0")
        buffer_arcs.add((t, "q0"))
    return validate_csa([left, right], buffers, buffer_arcs)


def seeds():
    return st.integers(min_value=0, max_value=2 ** 32 - 1)


@st.composite
def acyclic_nets(draw, max_transitions: int = 8,
                 mode: str = GENERAL) -> AcyclicNet:
    rng = random.Random(draw(seeds()))
    return random_acyclic_net(rng, max_transitions, mode)


@st.composite
def csa_nets(draw, max_transitions: int = 6) -> CsaNet:
    rng = random.Random(draw(seeds()))
    return random_csa_net(rng, max_transitions)
