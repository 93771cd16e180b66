"""Command-line front end.

Every analysis the library offers is reachable as a subcommand that
takes a net document (a ``.sonet.json`` path or a built-in fixture
name).  Exit codes: 0 success, 1 a checked property fails, 2 usage or
parse problem, 3 a search bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import acyclic, bsa, csa, fixtures, netio, scenarios, semantics, \
    wellformed
from .errors import BoundExceeded, DocumentError, NetError, \
    NoDecomposition, NotACsoNet, NotWellFormed, StepNotEnabled, \
    TransitionNeverFires, ValidationError
from .foundations import fmt_set, fmt_setseq

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BOUND = 3


def _load(arg: str) -> netio.NetDocument:
    if arg.startswith("fixture:"):
        return netio.document_for(fixtures.fixture(arg[len("fixture:"):]))
    if os.path.exists(arg):
        return netio.load(arg)
    if arg in fixtures.fixture_names():
        return netio.document_for(fixtures.fixture(arg))
    raise DocumentError(f"no such file or fixture: {arg}",
                        code="structure")


def _split_names(text: str, what: str) -> tuple:
    names = [x.strip() for x in text.split(",")]
    if not all(names) or not names:
        raise DocumentError(f"empty name in {what}: {text!r}",
                            code="structure")
    return tuple(names)


def _parse_step(text: str) -> frozenset:
    return frozenset(_split_names(text, "step"))


def _parse_steps(text: str) -> tuple:
    parts = [p.strip() for p in text.split(";") if p.strip()]
    if not parts:
        raise DocumentError(f"empty step sequence: {text!r}",
                            code="structure")
    return tuple(_parse_step(p) for p in parts)


def _marking(doc: netio.NetDocument, args) -> frozenset:
    if getattr(args, "marking", None) is None:
        return doc.initial_marking()
    m = frozenset(_split_names(args.marking, "marking"))
    if doc.kind == "bsa":
        known = doc.net.lower.places | doc.net.lower.buffers \
            | doc.net.upper.places | doc.net.upper.buffers
    elif doc.kind == "csa":
        known = doc.net.places | doc.net.buffers
    else:
        known = doc.net.places
    unknown = sorted(m - known)
    if unknown:
        raise DocumentError(f"unknown marking node: {unknown[0]}",
                            code="structure")
    return m


def _emit(args, payload: dict, lines: list) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _step_list(steps) -> list:
    return [sorted(u) for u in sorted(steps, key=sorted)]


def _seq_list(s) -> list:
    return [sorted(u) for u in s]


def _sorted_seqs(seqs) -> list:
    return sorted(seqs, key=lambda s: tuple(tuple(sorted(u)) for u in s))


def _marking_list(ms) -> list:
    return [sorted(m) for m in sorted(ms, key=sorted)]


def _fire_fn(doc: netio.NetDocument):
    return {"acyclic": semantics.fire, "csa": csa.csa_fire,
            "bsa": bsa.bsa_fire}[doc.kind]


def _run_fn(doc: netio.NetDocument):
    return {"acyclic": semantics.run, "csa": csa.csa_run,
            "bsa": bsa.bsa_run}[doc.kind]


def _behaviour_fn(doc: netio.NetDocument):
    return {"acyclic": semantics.behaviours, "csa": csa.csa_behaviours,
            "bsa": bsa.bsa_behaviours}[doc.kind]


def cmd_validate(args) -> int:
    try:
        doc = _load(args.net)
    except ValidationError as exc:
        payload = {"ok": False,
                   "violations": [{"code": v.code, "subject": v.subject,
                                   "detail": v.detail}
                                  for v in exc.violations]}
        _emit(args, payload,
              ["not ok"] + ["  " + v.describe() for v in exc.violations])
        return EXIT_FAIL
    counts = {"acyclic": lambda n: (len(n.places), len(n.transitions)),
              "csa": lambda n: (len(n.places) + len(n.buffers),
                                len(n.transitions)),
              "bsa": lambda n: (len(n.lower.places) + len(n.lower.buffers)
                                + len(n.upper.places)
                                + len(n.upper.buffers),
                                len(n.transitions))}[doc.kind](doc.net)
    payload = {"ok": True, "kind": doc.kind, "places": counts[0],
               "transitions": counts[1]}
    _emit(args, payload, [f"ok: {doc.kind} net, {counts[0]} places, "
                          f"{counts[1]} transitions"])
    return EXIT_OK


def cmd_classify(args) -> int:
    doc = _load(args.net)
    kind = {"acyclic": acyclic.classify, "csa": csa.classify_csa,
            "bsa": bsa.classify_bsa}[doc.kind](doc.net)
    _emit(args, {"kind": doc.kind, "class": kind}, [kind])
    return EXIT_OK


def cmd_enabled(args) -> int:
    doc = _load(args.net)
    m = _marking(doc, args)
    if doc.kind == "acyclic":
        found = semantics.enabled_steps(doc.net, m, singles=False)
        entries = [{"step": sorted(u), "enabled": True} for u in
                   sorted(found, key=sorted)]
    elif doc.kind == "csa":
        found = csa.csa_enabled_steps(doc.net, m)
        entries = [{"step": sorted(u), "enabled": True} for u in
                   sorted(found, key=sorted)]
    else:
        entries = []
        for u in sorted(csa.csa_enabled_steps(bsa.underlying_csa(doc.net),
                                              m), key=sorted):
            ok, reason = bsa.step_verdict(doc.net, m, u)
            entry = {"step": sorted(u), "enabled": ok}
            if not ok:
                entry["reason"] = reason
            entries.append(entry)
    lines = []
    for e in entries:
        tag = "" if e["enabled"] else f"  (disabled: {e['reason']})"
        lines.append(fmt_set(frozenset(e["step"])) + tag)
    _emit(args, {"marking": sorted(m), "steps": entries}, lines)
    return EXIT_OK


def cmd_fire(args) -> int:
    doc = _load(args.net)
    m = _marking(doc, args)
    u = _parse_step(args.step)
    after = _fire_fn(doc)(doc.net, m, u)
    _emit(args, {"marking": sorted(after)}, [fmt_set(after)])
    return EXIT_OK


def cmd_run(args) -> int:
    doc = _load(args.net)
    m = _marking(doc, args)
    r = _run_fn(doc)(doc.net, m, _parse_steps(args.steps))
    payload = {"markings": [sorted(x) for x in r.markings],
               "steps": _seq_list(r.steps)}
    lines = [fmt_set(r.markings[0])]
    for u, x in zip(r.steps, r.markings[1:]):
        lines.append(f"  {fmt_set(u)}")
        lines.append(fmt_set(x))
    _emit(args, payload, lines)
    return EXIT_OK


def _behaviour_cmd(args, kind: str) -> int:
    doc = _load(args.net)
    out = _behaviour_fn(doc)(doc.net, kind, bound=args.bound)
    if kind in ("reach", "finreach"):
        payload = {kind: _marking_list(out)}
        lines = [fmt_set(m) for m in sorted(out, key=sorted)]
    else:
        ordered = _sorted_seqs(out)
        payload = {kind: [_seq_list(s) for s in ordered]}
        lines = [fmt_setseq(s) for s in ordered]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_reach(args) -> int:
    return _behaviour_cmd(args, "reach")


def cmd_finreach(args) -> int:
    return _behaviour_cmd(args, "finreach")


def cmd_maxsseq(args) -> int:
    return _behaviour_cmd(args, "maxsseq")


def cmd_wellformed(args) -> int:
    doc = _load(args.net)
    verdict = {"acyclic": wellformed.is_well_formed,
               "csa": csa.csa_is_well_formed,
               "bsa": bsa.bsa_is_well_formed}[doc.kind](
                   doc.net, bound=args.bound)
    payload = {"status": verdict.status,
               "witness_sequence": None if verdict.witness_sequence is None
               else _seq_list(verdict.witness_sequence),
               "witness_place": verdict.witness_place,
               "witness_transition": verdict.witness_transition,
               "detail": verdict.detail}
    lines = [verdict.status]
    if verdict.witness_sequence is not None:
        lines.append(f"  witness: {fmt_setseq(verdict.witness_sequence)}")
    if verdict.witness_place is not None:
        lines.append(f"  place: {verdict.witness_place}")
    if verdict.witness_transition is not None:
        lines.append(f"  transition never fires: "
                     f"{verdict.witness_transition}")
    if verdict.detail:
        lines.append(f"  {verdict.detail}")
    _emit(args, payload, lines)
    if verdict.status == "unknown":
        return EXIT_BOUND
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_causes(args) -> int:
    doc = _load(args.net)
    if doc.kind != "acyclic":
        raise DocumentError("causes is defined on acyclic nets",
                            code="structure")
    report = wellformed.causes(doc.net, args.transition, bound=args.bound)
    payload = {"transition": report.target,
               "causes": sorted(report.causes),
               "graph_predecessors": sorted(report.graph_predecessors)}
    _emit(args, payload,
          [f"causes: {fmt_set(report.causes)}",
           f"graph predecessors: {fmt_set(report.graph_predecessors)}"])
    return EXIT_OK


def cmd_scenarios(args) -> int:
    doc = _load(args.net)
    if doc.kind == "acyclic":
        found = scenarios.maximal_scenarios(doc.net) if args.maximal \
            else scenarios.enumerate_scenarios(doc.net)
        sets = sorted((sorted(s.transitions) for s in found),
                      key=lambda x: (len(x), x))
        payload = {"count": len(sets), "scenarios": sets}
        lines = [f"{len(sets)} scenarios"] + \
            ["  " + fmt_set(frozenset(s)) for s in sets]
    elif doc.kind == "csa":
        found = csa.csa_maximal_scenarios(doc.net, bound=args.bound) \
            if args.maximal else csa.csa_scenarios(doc.net,
                                                   bound=args.bound)
        sets = sorted((sorted(s.transitions) for s in found),
                      key=lambda x: (len(x), x))
        payload = {"count": len(sets), "scenarios": sets}
        lines = [f"{len(sets)} scenarios"] + \
            ["  " + fmt_set(frozenset(s)) for s in sets]
    else:
        found = bsa.bsa_maximal_scenarios(doc.net, bound=args.bound) \
            if args.maximal else bsa.bsa_scenarios(doc.net,
                                                   bound=args.bound)
        pairs = sorted(((sorted(s.net.lower.transitions),
                         sorted(s.net.upper.transitions))
                        for s in found),
                       key=lambda x: (len(x[0]), x[0], x[1]))
        payload = {"count": len(pairs),
                   "scenarios": [{"lower": lo, "upper": up}
                                 for lo, up in pairs]}
        lines = [f"{len(pairs)} scenarios"] + \
            [f"  lower={fmt_set(frozenset(lo))} "
             f"upper={fmt_set(frozenset(up))}" for lo, up in pairs]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_syncycles(args) -> int:
    doc = _load(args.net)
    if doc.kind != "csa":
        raise DocumentError("syn-cycles are defined on "
                            "communication-structured nets",
                            code="structure")
    if csa.classify_csa(doc.net) == csa.CSO:
        groups = csa.syn_cycles(doc.net)
    else:
        groups = csa.syn_cycles_csa(doc.net, bound=args.bound)
    sets = sorted((sorted(g) for g in groups), key=lambda x: (len(x), x))
    _emit(args, {"syn_cycles": sets},
          [fmt_set(frozenset(g)) for g in sets])
    return EXIT_OK


def cmd_project(args) -> int:
    doc = _load(args.net)
    if doc.kind != "csa":
        raise DocumentError("projection is defined on "
                            "communication-structured nets",
                            code="structure")
    steps = _parse_steps(args.steps)
    if args.mixed:
        r = csa.csa_run(doc.net, _marking(doc, args), steps)
        p = csa.project(doc.net, args.component, r)
        payload = {"alternation": _seq_list(p)}
        lines = [" ".join(fmt_set(x) for x in p)]
    else:
        p = csa.project(doc.net, args.component, steps)
        payload = {"steps": _seq_list(p)}
        lines = [fmt_setseq(p)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_phases(args) -> int:
    doc = _load(args.net)
    if doc.kind != "bsa":
        raise DocumentError("phases are defined on "
                            "behavioural-structured nets",
                            code="structure")
    ph = bsa.phase(doc.net, args.place)
    payload = {"place": args.place,
               "phase": _marking_list(ph.markings)}
    _emit(args, payload,
          [fmt_set(m) for m in sorted(ph.markings, key=sorted)])
    return EXIT_OK


def cmd_bsa_check(args) -> int:
    doc = _load(args.net)
    if doc.kind != "bsa":
        raise DocumentError("bsa-check needs a behavioural-structured "
                            "net", code="structure")
    b = doc.net
    verdict = bsa.bsa_is_well_formed(b, bound=args.bound)
    all_s = bsa.bsa_scenarios(b, bound=args.bound)
    max_s = bsa.bsa_maximal_scenarios(b, bound=args.bound)
    rejected = bsa.bsa_scenario_rejections(b, bound=args.bound)
    payload = {"class": bsa.classify_bsa(b, bound=args.bound),
               "well_formed": verdict.status,
               "scenarios": len(all_s),
               "maximal_scenarios": len(max_s),
               "rejected_candidates": len(rejected)}
    lines = [f"class: {payload['class']}",
             f"well-formed: {verdict.status}",
             f"scenarios: {len(all_s)} ({len(max_s)} maximal, "
             f"{len(rejected)} candidates rejected)"]
    if verdict.witness_sequence is not None:
        lines.append(f"  witness: {fmt_setseq(verdict.witness_sequence)}")
    _emit(args, payload, lines)
    if verdict.status == "unknown":
        return EXIT_BOUND
    return EXIT_OK if verdict.ok else EXIT_FAIL


def cmd_export_dot(args) -> int:
    doc = _load(args.net)
    m = _marking(doc, args)
    text = netio.export_dot(doc, marking=m)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    uvicorn.run(create_app(), host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sonet",
        description="Analyse structured acyclic nets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, doc, net=True):
        p = sub.add_parser(name, help=doc)
        p.set_defaults(fn=fn)
        if net:
            p.add_argument("net",
                           help="path to a .sonet.json file or a "
                                "fixture name")
        p.add_argument("--format", choices=("json", "table"),
                       default="table")
        p.add_argument("--bound", type=int, default=None,
                       help="search budget for behaviour exploration")
        return p

    add("validate", cmd_validate, "check structural rules")
    add("classify", cmd_classify, "report the most specific net class")
    p = add("enabled", cmd_enabled, "list steps enabled at a marking")
    p.add_argument("--marking", default=None,
                   help="comma-separated marking (default: initial)")
    p = add("fire", cmd_fire, "fire one step")
    p.add_argument("--step", required=True, help="comma-separated step")
    p.add_argument("--marking", default=None)
    p = add("run", cmd_run, "replay a step sequence")
    p.add_argument("--steps", required=True,
                   help="semicolon-separated steps, e.g. 'a,e;b'")
    p.add_argument("--marking", default=None)
    add("reach", cmd_reach, "reachable markings")
    add("finreach", cmd_finreach, "final reachable markings")
    add("maxsseq", cmd_maxsseq, "maximal step sequences")
    add("wellformed", cmd_wellformed, "well-formedness with witness")
    p = add("causes", cmd_causes, "behavioural causes of a transition")
    p.add_argument("--transition", required=True)
    p = add("scenarios", cmd_scenarios, "enumerate scenarios")
    p.add_argument("--maximal", action="store_true")
    add("syncycles", cmd_syncycles, "syn-cycle partition")
    p = add("project", cmd_project, "project a run onto a component")
    p.add_argument("--component", type=int, required=True,
                   help="component index, starting at 1")
    p.add_argument("--steps", required=True)
    p.add_argument("--marking", default=None)
    p.add_argument("--mixed", action="store_true",
                   help="project the mixed run instead of the "
                        "step sequence")
    p = add("phases", cmd_phases, "phase markings of an upper place")
    p.add_argument("--place", required=True)
    add("bsa-check", cmd_bsa_check,
        "well-formedness and scenario summary")
    p = add("export-dot", cmd_export_dot, "write Graphviz text")
    p.add_argument("--marking", default=None)
    p.add_argument("--out", default=None)
    p = add("serve", cmd_serve, "start the HTTP service", net=False)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print("not ok", file=sys.stderr)
        for v in exc.violations:
            print("  " + v.describe(), file=sys.stderr)
        return EXIT_FAIL
    except StepNotEnabled as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (NotWellFormed, NotACsoNet, NoDecomposition,
            TransitionNeverFires) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except NetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
