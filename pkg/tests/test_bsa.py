import pytest

from sonet import BsaNet, NetError, StepNotEnabled, UnknownNode, \
    UpperMarkingNotSingleton, ValidationError, bsa_enabled, \
    bsa_enabled_steps, bsa_finreach, bsa_fire, bsa_initial_marking, \
    bsa_is_well_formed, bsa_maximal_scenarios, bsa_maxsseq, bsa_reach, \
    bsa_run, bsa_scenario_of, bsa_scenario_rejections, bsa_scenarios, \
    bsa_sseq, classify_bsa, fixture, is_phase_consistent, phase, \
    step_verdict, validate_bsa
from sonet.foundations import as_setseq

MU = as_setseq([{"g", "k"}, {"h", "l"}, {"c", "m"}, {"j"}, {"d"}])


def tiny_bso():
    lower = ([({"r1", "r2"}, {"e"}, {("r1", "e"), ("e", "r2")})],
             set(), set())
    upper = ([({"p1", "p2"}, {"a"}, {("p1", "a"), ("a", "p2")})],
             set(), set())
    return validate_bsa(lower, upper, {("r1", "p1"), ("r2", "p2")})


def test_validation_requires_matching_component_counts():
    lower = ([({"r1", "r2"}, {"e"}, {("r1", "e"), ("e", "r2")}),
              ({"r3", "r4"}, {"f"}, {("r3", "f"), ("f", "r4")})],
             set(), set())
    upper = ([({"p1", "p2"}, {"a"}, {("p1", "a"), ("a", "p2")})],
             set(), set())
    with pytest.raises(ValidationError) as err:
        validate_bsa(lower, upper, {("r1", "p1"), ("r2", "p2")})
    assert "component-count-mismatch" in err.value.codes()


def test_validation_requires_line_like_upper_components():
    lower = ([({"r1", "r2", "r3"}, {"e", "f"},
               {("r1", "e"), ("e", "r2"), ("r1", "f"), ("f", "r3")})],
             set(), set())
    with pytest.raises(ValidationError) as err:
        validate_bsa(lower, lower,
                     {("r1", "r1")})
    assert any(c.startswith("upper-not-line-like") or
               c == "node-clash-across-levels" for c in err.value.codes())


def test_validation_anchors_beta_at_the_initial_marking():
    lower = ([({"r1", "r2"}, {"e"}, {("r1", "e"), ("e", "r2")})],
             set(), set())
    upper = ([({"p1", "p2"}, {"a"}, {("p1", "a"), ("a", "p2")})],
             set(), set())
    with pytest.raises(ValidationError) as err:
        validate_bsa(lower, upper, {("r2", "p1"), ("r2", "p2")})
    assert "beta-initial-mismatch" in err.value.codes()


def test_validation_requires_reachable_boundaries():
    lower = ([({"r1", "r2", "r3"}, {"e"}, {("r1", "e"), ("e", "r2")})],
             set(), set())
    upper = ([({"p1", "p2"}, {"a"}, {("p1", "a"), ("a", "p2")})],
             set(), set())
    with pytest.raises(ValidationError) as err:
        validate_bsa(lower, upper, {("r1", "p1"), ("r3", "p2")})
    assert "beta-unreachable-boundary" in err.value.codes()


def test_phase_tables_of_the_service_net():
    net = fixture("BSA0")
    assert len(phase(net, "p1").markings) == 11
    assert len(phase(net, "p2").markings) == 9
    assert len(phase(net, "p3").markings) == 4
    assert phase(net, "p4").markings == \
        frozenset({frozenset({"r9", "r11"})})
    assert phase(net, "p5").markings == \
        frozenset({frozenset({"r10", "r11"})})
    with pytest.raises(UnknownNode):
        phase(net, "r1")


def test_some_lower_markings_belong_to_no_phase():
    net = fixture("BSA0")
    stray = frozenset({"r1", "r11"})
    for p in sorted(net.upper.places):
        assert stray not in phase(net, p).markings


def test_phase_consistency_of_global_markings():
    net = fixture("BSA0")
    assert is_phase_consistent(net, frozenset({"p4", "r9", "r11"}))
    assert not is_phase_consistent(net, frozenset({"p1", "r9", "r11"}))


def test_phase_consistency_rejects_non_singleton_upper_markings():
    net = fixture("BSA0")
    with pytest.raises(UpperMarkingNotSingleton):
        is_phase_consistent(net, frozenset({"p1", "p3", "r1", "r2"}),
                            speculative=True)


def test_step_verdicts_name_the_failing_side():
    net = fixture("BSA0")
    m0 = bsa_initial_marking(net)
    assert step_verdict(net, m0, frozenset("k")) == (True, None)
    assert step_verdict(net, m0, frozenset("a")) == \
        (False, "target_phase")
    assert step_verdict(net, m0, frozenset("b")) == \
        (False, "underlying")
    hollow = frozenset({"p1", "r9", "r11"})
    assert step_verdict(net, hollow, frozenset("a")) == \
        (False, "source_phase")


def test_enabled_steps_respect_phases():
    net = fixture("BSA0")
    m0 = bsa_initial_marking(net)
    found = {tuple(sorted(u)) for u in bsa_enabled_steps(net, m0)}
    assert found == {("a", "e", "k"), ("e",), ("e", "k"), ("g",),
                     ("g", "k"), ("k",)}
    assert bsa_enabled(net, m0, {"k"})
    assert not bsa_enabled(net, m0, {"a"})


def test_firing_reports_the_reason_when_refused():
    net = fixture("BSA0")
    m0 = bsa_initial_marking(net)
    with pytest.raises(StepNotEnabled) as err:
        bsa_fire(net, m0, {"a"})
    assert err.value.reason == "target_phase"
    with pytest.raises(StepNotEnabled) as err:
        bsa_fire(net, m0, {"b"})
    assert err.value.reason == "underlying"


def test_the_service_walkthrough_replays_end_to_end():
    net = fixture("BSA0")
    r = bsa_run(net, bsa_initial_marking(net), MU)
    assert r.markings == as_setseq([
        {"p1", "r1", "r2"}, {"p1", "r4", "r5"}, {"p1", "r7", "r8"},
        {"p3", "r7", "r11"}, {"p3", "r10", "r11"}, {"p5", "r10", "r11"}])


def test_behaviour_sets_stay_phase_consistent():
    net = fixture("BSA0")
    for m in bsa_reach(net):
        assert is_phase_consistent(net, m)
    finals = bsa_finreach(net)
    assert frozenset({"p5", "r10", "r11"}) in finals
    assert all(len(s) > 0 for s in bsa_maxsseq(net))
    assert () in bsa_sseq(net)


def test_classification_of_two_level_nets():
    assert classify_bsa(fixture("BSA0")) == "general"
    assert classify_bsa(tiny_bso()) == "bso"


def test_scenarios_pair_compatible_level_scenarios():
    net = fixture("BSA0")
    found = {(frozenset(s.net.lower.transitions),
              frozenset(s.net.upper.transitions))
             for s in bsa_scenarios(net)}
    assert found == {
        (frozenset(), frozenset()),
        (frozenset("ek"), frozenset("a")),
        (frozenset("efiklm"), frozenset("ab")),
        (frozenset("ghkl"), frozenset("c")),
        (frozenset("ghjklm"), frozenset("cd")),
    }
    assert len(bsa_scenario_rejections(net)) > 0


def test_maximal_scenarios_are_the_two_full_branches():
    net = fixture("BSA0")
    tops = {s.net for s in bsa_maximal_scenarios(net)}
    assert tops == {fixture("BSA0_SCEN_1"), fixture("BSA0_SCEN_2")}


def test_runs_induce_the_scenario_they_witness():
    net = fixture("BSA0")
    s = bsa_scenario_of(net, MU)
    assert s.net == fixture("BSA0_SCEN_2")
    with pytest.raises(NetError):
        bsa_scenario_of(net, as_setseq([{"k"}]))


def test_lockstep_failures_are_not_well_formed():
    # {k}{l}{a,e} is a run of the whole net: after {k}{l} the lower level
    # sits at {r1,r8}, which stays inside phase(p1) thanks to the c/d
    # branch, yet the a/b branch is then taken.  No single scenario keeps
    # both branches, so the union over scenarios misses the sequence.
    net = fixture("BSA0")
    seq = as_setseq([{"k"}, {"l"}, {"a", "e"}])
    bsa_run(net, bsa_initial_marking(net), seq)
    verdict = bsa_is_well_formed(net)
    assert verdict.status == "not-ok"
    assert verdict.witness_sequence == seq
    assert verdict.ok is False


def test_the_minimal_two_level_net_is_well_formed():
    verdict = bsa_is_well_formed(tiny_bso())
    assert verdict.status == "ok"
    found = {(frozenset(s.net.lower.transitions),
              frozenset(s.net.upper.transitions))
             for s in bsa_scenarios(tiny_bso())}
    assert found == {(frozenset(), frozenset()),
                     (frozenset("e"), frozenset("a"))}


def test_net_shape_accessors():
    net = fixture("BSA0")
    assert isinstance(net, BsaNet)
    assert net.transitions == \
        frozenset("abcd") | frozenset("efghijklm")
    assert bsa_initial_marking(net) == frozenset({"p1", "r1", "r2"})
