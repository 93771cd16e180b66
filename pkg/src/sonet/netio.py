"""Reading, writing, and exporting net documents.

One JSON document holds one net.  The top-level "kind" selects the shape:
"acyclic" (places/transitions/arcs), "csa" (components/buffers/
buffer_arcs), or "bsa" (lower/upper/beta).  Serialization is canonical —
fixed key order, lexicographic lists — so equal documents are equal
bytes.  Structural checking is delegated to the validating constructors;
this module only deals with syntax, identifier uniqueness, and export.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .acyclic import AcyclicNet, initial_places, validate
from .bsa import BsaNet, bsa_initial_marking, validate_bsa
from .csa import CsaNet, csa_initial_marking, validate_csa
from .errors import DocumentError, UnknownNode

EXTENSION = ".sonet.json"

KINDS = ("acyclic", "csa", "bsa")


@dataclass
class NetDocument:
    """A net plus the non-semantic extras a file may carry."""

    kind: str
    net: object
    marking: Optional[frozenset] = None
    layout: dict = field(default_factory=dict)

    def initial_marking(self) -> frozenset:
        if self.marking is not None:
            return self.marking
        if self.kind == "acyclic":
            return initial_places(self.net)
        if self.kind == "csa":
            return csa_initial_marking(self.net)
        return bsa_initial_marking(self.net)


def document_for(net, marking: Optional[frozenset] = None,
                 layout: Optional[dict] = None) -> NetDocument:
    if isinstance(net, BsaNet):
        kind = "bsa"
    elif isinstance(net, CsaNet):
        kind = "csa"
    elif isinstance(net, AcyclicNet):
        kind = "acyclic"
    else:
        raise DocumentError(f"not a net: {type(net).__name__}",
                            code="structure")
    return NetDocument(kind, net,
                       None if marking is None else frozenset(marking),
                       dict(layout or {}))


def _want(obj: dict, key: str, kind: type, where: str):
    if key not in obj:
        raise DocumentError(f"missing key {key!r} in {where}",
                            code="structure")
    value = obj[key]
    if not isinstance(value, kind):
        raise DocumentError(
            f"{where}.{key} must be {kind.__name__}, got "
            f"{type(value).__name__}", code="structure")
    return value


def _names(obj: dict, key: str, where: str, seen: set) -> set:
    out = []
    for x in _want(obj, key, list, where):
        if not isinstance(x, str):
            raise DocumentError(f"{where}.{key} entries must be strings",
                                code="structure")
        if x in seen:
            raise DocumentError(f"duplicate id {x!r} in {where}.{key}",
                                code="duplicate-id")
        seen.add(x)
        out.append(x)
    return set(out)


def _arcs(obj: dict, key: str, where: str) -> set:
    out = set()
    for pair in _want(obj, key, list, where):
        if not (isinstance(pair, list) and len(pair) == 2
                and all(isinstance(x, str) for x in pair)):
            raise DocumentError(
                f"{where}.{key} entries must be [source, target] pairs",
                code="structure")
        out.add((pair[0], pair[1]))
    return out


def _parse_acyclic_body(obj: dict, where: str, seen: set) -> AcyclicNet:
    places = _names(obj, "places", where, seen)
    transitions = _names(obj, "transitions", where, seen)
    return validate(places, transitions, _arcs(obj, "arcs", where))


def _parse_csa_body(obj: dict, where: str, seen: set) -> CsaNet:
    triples = []
    comps = _want(obj, "components", list, where)
    for i, comp in enumerate(comps, start=1):
        sub = f"{where}.components[{i}]"
        if not isinstance(comp, dict):
            raise DocumentError(f"{sub} must be an object",
                                code="structure")
        triples.append((_names(comp, "places", sub, seen),
                        _names(comp, "transitions", sub, seen),
                        _arcs(comp, "arcs", sub)))
    buffers = _names(obj, "buffers", where, seen)
    return validate_csa(triples, buffers, _arcs(obj, "buffer_arcs", where))


def parse(text: str) -> NetDocument:
    """Parse and validate one net document.

    Syntax problems raise DocumentError with line and column; identifier
    clashes raise DocumentError(code="duplicate-id"); structural rule
    violations propagate from the validating constructors."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, col=exc.colno) \
            from exc
    if not isinstance(obj, dict):
        raise DocumentError("top level must be an object",
                            code="structure")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"unknown kind {kind!r}, expected one of "
                            f"{', '.join(KINDS)}", code="unknown-kind")
    seen: set = set()
    if kind == "acyclic":
        net = _parse_acyclic_body(obj, "net", seen)
    elif kind == "csa":
        net = _parse_csa_body(obj, "net", seen)
    else:
        lower = _parse_csa_body(_want(obj, "lower", dict, "net"),
                                "lower", seen)
        upper = _parse_csa_body(_want(obj, "upper", dict, "net"),
                                "upper", seen)
        net = validate_bsa(lower, upper, _arcs(obj, "beta", "net"))

    marking = None
    if obj.get("marking") is not None:
        marking = frozenset(
            _names({"marking": obj["marking"]}, "marking", "net", set()))
        known = net.nodes if not isinstance(net, BsaNet) else \
            net.lower.nodes | net.upper.nodes
        for x in sorted(marking - known):
            raise UnknownNode(x)
    layout = {}
    if obj.get("layout") is not None:
        raw = _want(obj, "layout", dict, "net")
        for name, xy in raw.items():
            if not (isinstance(xy, list) and len(xy) == 2
                    and all(isinstance(v, (int, float)) for v in xy)):
                raise DocumentError(
                    f"layout entry {name!r} must be [x, y]",
                    code="structure")
            layout[name] = (float(xy[0]), float(xy[1]))
    return NetDocument(kind, net, marking, layout)


def _acyclic_body(net: AcyclicNet) -> dict:
    return {"places": sorted(net.places),
            "transitions": sorted(net.transitions),
            "arcs": [list(a) for a in sorted(net.flow)]}


def _csa_body(net: CsaNet) -> dict:
    return {"components": [_acyclic_body(c) for c in net.components],
            "buffers": sorted(net.buffers),
            "buffer_arcs": [list(a) for a in sorted(net.buffer_arcs)]}


def serialize(doc: NetDocument) -> str:
    """Canonical text: fixed key order per kind, sorted name and arc
    lists, two-space indent, trailing newline."""
    body: dict = {"kind": doc.kind}
    if doc.kind == "acyclic":
        body.update(_acyclic_body(doc.net))
    elif doc.kind == "csa":
        body.update(_csa_body(doc.net))
    else:
        body["lower"] = _csa_body(doc.net.lower)
        body["upper"] = _csa_body(doc.net.upper)
        body["beta"] = [list(a) for a in sorted(doc.net.beta)]
    if doc.marking is not None:
        body["marking"] = sorted(doc.marking)
    if doc.layout:
        body["layout"] = {k: [x, y] for k, (x, y)
                          in sorted(doc.layout.items())}
    return json.dumps(body, indent=2) + "\n"


def load(path: str) -> NetDocument:
    with open(path, encoding="utf-8") as handle:
        return parse(handle.read())


def save(doc: NetDocument, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize(doc))


def _dot_node(name: str, shape: str, marked: bool, extra: str = "") -> str:
    label = f"{name}\\n●" if marked else name
    return (f'  "{name}" [shape={shape}, label="{label}"{extra}];')


def _dot_component(lines: list, index: int, comp: AcyclicNet,
                   marking: frozenset, highlight: frozenset,
                   prefix: str = "") -> None:
    lines.append(f'  subgraph "cluster_{prefix}{index}" {{')
    lines.append('    style=dashed;')
    lines.append(f'    label="{prefix}component {index}";')
    for p in sorted(comp.places):
        extra = ", penwidth=2, color=blue" if p in highlight else ""
        lines.append("  " + _dot_node(p, "circle", p in marking, extra))
    for t in sorted(comp.transitions):
        extra = ", penwidth=2, color=blue" if t in highlight else ""
        lines.append("  " + _dot_node(t, "box", False, extra))
    lines.append("  }")
    for a, b in sorted(comp.flow):
        lines.append(f'  "{a}" -> "{b}";')


def _dot_buffers(lines: list, net: CsaNet, marking: frozenset,
                 highlight: frozenset) -> None:
    for q in sorted(net.buffers):
        extra = ", style=dashed"
        if q in highlight:
            extra += ", penwidth=2, color=blue"
        lines.append(_dot_node(q, "circle", q in marking, extra))
    for a, b in sorted(net.buffer_arcs):
        lines.append(f'  "{a}" -> "{b}";')


def export_dot(doc: NetDocument, marking: Optional[frozenset] = None,
               highlight_scenario: Optional[frozenset] = None) -> str:
    """Graphviz text: circles for places, boxes for transitions, a token
    dot on marked nodes, dashed buffer places and component frames, and
    dotted β edges."""
    m = doc.initial_marking() if marking is None else frozenset(marking)
    hi = frozenset(highlight_scenario or ())
    lines = ["digraph sonet {", "  rankdir=LR;"]
    if doc.kind == "acyclic":
        for p in sorted(doc.net.places):
            extra = ", penwidth=2, color=blue" if p in hi else ""
            lines.append(_dot_node(p, "circle", p in m, extra))
        for t in sorted(doc.net.transitions):
            extra = ", penwidth=2, color=blue" if t in hi else ""
            lines.append(_dot_node(t, "box", False, extra))
        for a, b in sorted(doc.net.flow):
            lines.append(f'  "{a}" -> "{b}";')
    elif doc.kind == "csa":
        for i, comp in enumerate(doc.net.components, start=1):
            _dot_component(lines, i, comp, m, hi)
        _dot_buffers(lines, doc.net, m, hi)
    else:
        for i, comp in enumerate(doc.net.lower.components, start=1):
            _dot_component(lines, i, comp, m, hi, "lower ")
        for i, comp in enumerate(doc.net.upper.components, start=1):
            _dot_component(lines, i, comp, m, hi, "upper ")
        _dot_buffers(lines, doc.net.lower, m, hi)
        _dot_buffers(lines, doc.net.upper, m, hi)
        for r, p in sorted(doc.net.beta):
            lines.append(f'  "{r}" -> "{p}" [style=dotted, dir=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
