"""Structured acyclic nets: acyclic nets, communication-structured
nets, and behavioural-structured (two-level) nets, with their step
semantics, well-formedness checks, scenario enumeration, document
format, command line, and HTTP service."""

from .acyclic import AcyclicNet, BACKWARD_DETERMINISTIC, GENERAL, \
    OCCURRENCE, classify, coinitial_subnet, final_places, initial_places, \
    is_coinitial_subnet, is_subnet, postset, preset, subnet, validate
from .bsa import BSO, BsaNet, BsaScenario, Phase, bsa_behaviours, \
    bsa_enabled, bsa_enabled_steps, bsa_finreach, bsa_fire, \
    bsa_initial_marking, bsa_is_well_formed, bsa_maximal_scenarios, \
    bsa_maxmixsseq, bsa_maxsseq, bsa_mixsseq, bsa_reach, bsa_run, \
    bsa_scenario_of, bsa_scenario_rejections, bsa_scenarios, bsa_sseq, \
    classify_bsa, is_phase_consistent, phase, step_verdict, \
    underlying_csa, validate_bsa
from .csa import CSO, CsaNet, CsaScenario, classify_csa, csa_behaviours, \
    csa_coverage, csa_enabled, csa_enabled_steps, csa_final_places, \
    csa_finreach, csa_fire, csa_fseq, csa_initial_marking, \
    csa_initial_places, csa_is_well_formed, csa_is_wf_stepseq, \
    csa_maximal_scenarios, csa_maxmixsseq, csa_maxsseq, csa_mixsseq, \
    csa_postset, csa_preset, csa_reach, csa_run, csa_scenario_of, \
    csa_scenarios, csa_sseq, decompose_step, project, syn_cycles, \
    syn_cycles_csa, validate_csa
from .errors import BoundExceeded, DocumentError, NetError, \
    NoDecomposition, NotACsoNet, NotAStep, NotAStepSequence, \
    NotWellFormed, StepNotEnabled, TransitionNeverFires, UnknownNode, \
    UpperMarkingNotSingleton, ValidationError, Violation
from .fixtures import fixture, fixture_kind, fixture_names
from .netio import NetDocument, document_for, export_dot, load, parse, \
    save, serialize
from .scenarios import CoverageReport, Scenario, coverage, \
    enumerate_scenarios, maximal_scenarios, same_scenario, scenario_of
from .semantics import DEFAULT_BOUND, DEFAULT_DEPTH, MixedRun, \
    behaviours, check_step, enabled_step, enabled_steps, \
    enabled_transitions, finreach, fire, fseq, initial_marking, \
    maxmixsseq, maxsseq, mixsseq, reach, reach_from, run, \
    serialize_step, sseq, steps
from .wellformed import CausalityReport, StepSeqVerdict, \
    WellFormedVerdict, causes, end_marking_formula, is_well_formed, \
    is_wf_stepseq

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
