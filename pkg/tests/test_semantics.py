import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sonet import BoundExceeded, MixedRun, NotAStep, StepNotEnabled, \
    behaviours, enabled_step, enabled_steps, enabled_transitions, \
    finreach, fire, fixture, fseq, initial_marking, initial_places, \
    maxmixsseq, maxsseq, mixsseq, reach, run, serialize_step, sseq, steps
from sonet.foundations import as_setseq

from .strategies import acyclic_nets, random_step_walk, seeds


def seqs(xs):
    return {tuple(tuple(sorted(u)) for u in s) for s in xs}


def test_firing_rule_agrees_with_standard_rule_on_singletons():
    # single transitions never overlap pre and post in an acyclic net,
    # so (M ∪ post U) \ pre U and (M \ pre U) ∪ post U coincide.
    net = fixture("AN1")
    m = initial_marking(net)
    assert fire(net, m, {"a"}) == frozenset({"p2", "p3"})
    assert fire(net, m, {"a"}, standard=True) == frozenset({"p2", "p3"})


def test_step_requires_disjoint_presets():
    net = fixture("AN1")
    assert enabled_step(net, frozenset({"p2", "p3"}), {"b", "c"})
    with pytest.raises(NotAStep):
        enabled_step(net, frozenset({"p3"}), {"c", "d"})
    with pytest.raises(NotAStep):
        enabled_step(net, frozenset({"p1"}), set())


def test_enabled_steps_at_a_marking():
    net = fixture("AN1")
    found = enabled_steps(net, frozenset({"p2", "p3"}))
    assert seqs([[u] for u in found]) == \
        {(("b",),), (("c",),), (("d",),), (("b", "c"),), (("b", "d"),)}
    assert enabled_transitions(net, frozenset({"p2", "p3"})) == \
        ["b", "c", "d"]


def test_all_steps_of_the_branching_net():
    net = fixture("AN1")
    found = steps(net)
    assert len(found) == 11
    for u in found:
        assert not ({"c", "d"} <= u)


def test_run_records_markings_and_rejects_bad_steps():
    net = fixture("AN1")
    r = run(net, initial_marking(net), [{"a"}, {"b", "c"}])
    assert r.markings == (frozenset({"p1"}), frozenset({"p2", "p3"}),
                          frozenset({"p4", "p5"}))
    assert r.initial == frozenset({"p1"})
    assert r.final == frozenset({"p4", "p5"})
    with pytest.raises(StepNotEnabled) as err:
        run(net, initial_marking(net), [{"a"}, {"b"}, {"b"}])
    assert err.value.index == 2
    assert err.value.missing == frozenset({"p2"})


def test_mixed_run_shape_is_checked():
    with pytest.raises(ValueError):
        MixedRun((frozenset(),), (frozenset({"t"}),))


def test_behaviour_sets_of_the_deterministic_net():
    net = fixture("BD1")
    assert len(sseq(net)) == 11
    assert len(maxsseq(net)) == 6
    assert len(fseq(net)) == 9
    assert () in fseq(net)
    assert finreach(net) == {frozenset({"p4", "p5"}),
                             frozenset({"p4", "p6"})}
    assert len(mixsseq(net)) == len(sseq(net))
    assert len(maxmixsseq(net)) == len(maxsseq(net))


def test_dispatcher_names_every_behaviour():
    net = fixture("BD1")
    assert behaviours(net, "sseq") == sseq(net)
    assert behaviours(net, "reach") == reach(net)
    with pytest.raises(ValueError):
        behaviours(net, "nope")


def test_bound_is_explicit_not_silent():
    net = fixture("BD1")
    with pytest.raises(BoundExceeded) as err:
        sseq(net, bound=3)
    assert err.value.partial is not None
    assert len(err.value.partial) >= 3


def test_depth_bound_is_explicit():
    net = fixture("BD1")
    with pytest.raises(BoundExceeded):
        sseq(net, depth=1)


@settings(max_examples=60)
@given(acyclic_nets(max_transitions=5), seeds())
def test_serialization_of_any_partition_preserves_the_marking(net, seed):
    rng = random.Random(seed)
    path, m = random_step_walk(rng, net, enabled_steps, fire,
                               initial_marking(net))
    found = sorted(enabled_steps(net, m), key=sorted)
    if not found:
        return
    u = found[rng.randrange(len(found))]
    order = sorted(u)
    rng.shuffle(order)
    cut = rng.randint(1, len(order))
    parts = [frozenset(order[:cut]), frozenset(order[cut:])]
    parts = [p for p in parts if p]
    assert serialize_step(net, m, u, parts).final == fire(net, m, u)


@settings(max_examples=60)
@given(acyclic_nets(max_transitions=6))
def test_reach_is_the_set_of_run_end_markings(net):
    # singleton walks suffice: every step serializes transition by
    # transition in an acyclic net.
    want = set()
    frontier = [initial_marking(net)]
    seen = {initial_marking(net)}
    while frontier:
        m = frontier.pop()
        want.add(m)
        for t in enabled_transitions(net, m):
            after = fire(net, m, {t})
            if after not in seen:
                seen.add(after)
                frontier.append(after)
    assert reach(net) == want


@settings(max_examples=40)
@given(acyclic_nets(max_transitions=5))
def test_sequences_are_prefix_closed(net):
    found = sseq(net)
    for s in found:
        assert s[:-1] in found


@settings(max_examples=40)
@given(acyclic_nets(max_transitions=5))
def test_maximal_sequences_cannot_be_extended(net):
    m0 = initial_marking(net)
    for s in maxsseq(net):
        m = m0
        for u in s:
            m = fire(net, m, u)
        assert not enabled_transitions(net, m)


def test_mixed_run_snapshots_match_both_interleavings():
    net = fixture("AN1")
    one = run(net, initial_marking(net), as_setseq(["a", "b", "c"]))
    assert one.markings == (frozenset({"p1"}), frozenset({"p2", "p3"}),
                            frozenset({"p4", "p3"}),
                            frozenset({"p4", "p5"}))
    two = run(net, initial_marking(net), [{"a"}, {"b", "c"}])
    assert two.markings == (frozenset({"p1"}), frozenset({"p2", "p3"}),
                            frozenset({"p4", "p5"}))


def test_initial_marking_is_the_producerless_places():
    net = fixture("AN1")
    assert initial_marking(net) == initial_places(net)
