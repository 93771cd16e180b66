"""Built-in nets, available to the CLI and the HTTP service by name.

The collection covers every structural class: plain acyclic nets with
forward and backward branching, occurrence nets, communication nets with
and without synchronous cycles, and a two-level net whose upper line
abstracts the lower behaviour.
"""

from __future__ import annotations

from .acyclic import AcyclicNet, validate
from .bsa import BsaNet, validate_bsa
from .csa import CsaNet, validate_csa
from .errors import UnknownNode

# Forward branching at p3: c and d compete, so runs choose one of them.
AN1 = validate(
    {"p1", "p2", "p3", "p4", "p5"},
    {"a", "b", "c", "d"},
    {("p1", "a"), ("a", "p2"), ("a", "p3"), ("p2", "b"), ("b", "p4"),
     ("p3", "c"), ("c", "p5"), ("p3", "d"), ("d", "p5")})

# Same choice, but c and d fill different places: backward deterministic.
BD1 = validate(
    {"p1", "p2", "p3", "p4", "p5", "p6"},
    {"a", "b", "c", "d"},
    {("p1", "a"), ("a", "p2"), ("a", "p3"), ("p2", "b"), ("b", "p4"),
     ("p3", "c"), ("c", "p5"), ("p3", "d"), ("d", "p6")})

# The two conflict-free halves of AN1, as occurrence nets.
ON1 = validate(
    {"p1", "p2", "p3", "p4", "p5"},
    {"a", "b", "c"},
    {("p1", "a"), ("a", "p2"), ("a", "p3"), ("p2", "b"), ("b", "p4"),
     ("p3", "c"), ("c", "p5")})

ON2 = validate(
    {"p1", "p2", "p3", "p4", "p5"},
    {"a", "b", "d"},
    {("p1", "a"), ("a", "p2"), ("a", "p3"), ("p2", "b"), ("b", "p4"),
     ("p3", "d"), ("d", "p5")})

# p3 waits for either a or b: c is OR-caused, with no single cause.
W1 = validate(
    {"p1", "p2", "p3", "p4"},
    {"a", "b", "c"},
    {("p1", "a"), ("a", "p3"), ("p2", "b"), ("b", "p3"),
     ("p3", "c"), ("c", "p4")})

# The two scenarios of W1, each keeping one filler of p3.
W1_SCEN_A = validate(
    {"p1", "p2", "p3", "p4"},
    {"a", "c"},
    {("p1", "a"), ("a", "p3"), ("p3", "c"), ("c", "p4")})

W1_SCEN_B = validate(
    {"p1", "p2", "p3", "p4"},
    {"b", "c"},
    {("p2", "b"), ("b", "p3"), ("p3", "c"), ("c", "p4")})

# Well-formed: every place has a single filler; c waits for a via p3.
WF_A = validate(
    {"p1", "p2", "p3", "p4", "p5"},
    {"a", "b", "c"},
    {("p1", "a"), ("a", "p3"), ("p2", "b"), ("b", "p5"),
     ("p3", "c"), ("c", "p4")})

# Also well-formed: c now waits for b via p5, and p3 becomes a dead end.
WF_B = validate(
    {"p1", "p2", "p3", "p4", "p5"},
    {"a", "b", "c"},
    {("p1", "a"), ("a", "p3"), ("p2", "b"), ("b", "p5"),
     ("p5", "c"), ("c", "p4")})

# Two components coupled by three buffers; q2/q3 close a synchronous
# cycle between d and f, so those two can only fire together.
CS1 = validate_csa(
    [({"p1", "p2", "p3", "p4"}, {"a", "b", "c", "d"},
      {("p1", "a"), ("a", "p2"), ("p2", "b"), ("b", "p4"),
       ("p1", "c"), ("c", "p3"), ("p3", "d"), ("d", "p4")}),
     ({"p5", "p6", "p7"}, {"e", "f"},
      {("p5", "e"), ("e", "p6"), ("p6", "f"), ("f", "p7")})],
    {"q1", "q2", "q3"},
    {("e", "q1"), ("q1", "c"), ("d", "q2"), ("q2", "f"),
     ("f", "q3"), ("q3", "d")})

# The a/e halves of CS1 unfolded: q1 is filled but its reader c is gone.
CSO1 = validate_csa(
    [({"p1", "p2"}, {"a"}, {("p1", "a"), ("a", "p2")}),
     ({"p5", "p6"}, {"e"}, {("p5", "e"), ("e", "p6")})],
    {"q1"},
    {("e", "q1")})

CSO2 = validate_csa(
    [({"p1", "p2", "p4"}, {"a", "b"},
      {("p1", "a"), ("a", "p2"), ("p2", "b"), ("b", "p4")}),
     ({"p5", "p6"}, {"e"}, {("p5", "e"), ("e", "p6")})],
    {"q1"},
    {("e", "q1")})

# The {c, d}-side unfolding of CS1, keeping the d/f synchronous cycle.
CSO3 = validate_csa(
    [({"p1", "p3", "p4"}, {"c", "d"},
      {("p1", "c"), ("c", "p3"), ("p3", "d"), ("d", "p4")}),
     ({"p5", "p6", "p7"}, {"e", "f"},
      {("p5", "e"), ("e", "p6"), ("p6", "f"), ("f", "p7")})],
    {"q1", "q2", "q3"},
    {("e", "q1"), ("q1", "c"), ("d", "q2"), ("q2", "f"),
     ("f", "q3"), ("q3", "d")})

# Two parallel lower chains joined at k/l/m, abstracted by an upper line
# that records which chain ran and how far it got.
_BSA0_LOWER = (
    [({"r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8", "r9", "r10",
       "r11"},
      {"e", "f", "g", "h", "i", "j", "k", "l", "m"},
      {("r1", "e"), ("e", "r3"), ("r3", "f"), ("f", "r6"), ("r6", "i"),
       ("i", "r9"), ("r1", "g"), ("g", "r4"), ("r4", "h"), ("h", "r7"),
       ("r7", "j"), ("j", "r10"), ("r2", "k"), ("k", "r5"), ("r5", "l"),
       ("l", "r8"), ("r8", "m"), ("m", "r11")})],
    set(), set())

_BSA0_UPPER = (
    [({"p1", "p2", "p3", "p4", "p5"}, {"a", "b", "c", "d"},
      {("p1", "a"), ("a", "p2"), ("p2", "b"), ("b", "p4"),
       ("p1", "c"), ("c", "p3"), ("p3", "d"), ("d", "p5")})],
    set(), set())

_BSA0_BETA = {
    ("r1", "p1"), ("r2", "p1"), ("r3", "p2"), ("r5", "p2"),
    ("r7", "p3"), ("r8", "p3"), ("r9", "p4"), ("r11", "p4"),
    ("r10", "p5"), ("r11", "p5")}

BSA0 = validate_bsa(_BSA0_LOWER, _BSA0_UPPER, _BSA0_BETA)

# The two maximal scenarios of BSA0: one per upper branch.
BSA0_SCEN_1 = validate_bsa(
    ([({"r1", "r2", "r3", "r5", "r6", "r8", "r9", "r11"},
       {"e", "f", "i", "k", "l", "m"},
       {("r1", "e"), ("e", "r3"), ("r3", "f"), ("f", "r6"), ("r6", "i"),
        ("i", "r9"), ("r2", "k"), ("k", "r5"), ("r5", "l"), ("l", "r8"),
        ("r8", "m"), ("m", "r11")})], set(), set()),
    ([({"p1", "p2", "p4"}, {"a", "b"},
       {("p1", "a"), ("a", "p2"), ("p2", "b"), ("b", "p4")})],
     set(), set()),
    {("r1", "p1"), ("r2", "p1"), ("r3", "p2"), ("r5", "p2"),
     ("r9", "p4"), ("r11", "p4")})

BSA0_SCEN_2 = validate_bsa(
    ([({"r1", "r2", "r4", "r5", "r7", "r8", "r10", "r11"},
       {"g", "h", "j", "k", "l", "m"},
       {("r1", "g"), ("g", "r4"), ("r4", "h"), ("h", "r7"), ("r7", "j"),
        ("j", "r10"), ("r2", "k"), ("k", "r5"), ("r5", "l"), ("l", "r8"),
        ("r8", "m"), ("m", "r11")})], set(), set()),
    ([({"p1", "p3", "p5"}, {"c", "d"},
       {("p1", "c"), ("c", "p3"), ("p3", "d"), ("d", "p5")})],
     set(), set()),
    {("r1", "p1"), ("r2", "p1"), ("r7", "p3"), ("r8", "p3"),
     ("r10", "p5"), ("r11", "p5")})

FIXTURES = {
    "AN1": AN1, "BD1": BD1, "ON1": ON1, "ON2": ON2, "W1": W1,
    "W1_SCEN_A": W1_SCEN_A, "W1_SCEN_B": W1_SCEN_B,
    "WF_A": WF_A, "WF_B": WF_B,
    "CS1": CS1, "CSO1": CSO1, "CSO2": CSO2, "CSO3": CSO3,
    "BSA0": BSA0, "BSA0_SCEN_1": BSA0_SCEN_1, "BSA0_SCEN_2": BSA0_SCEN_2,
}


def fixture(name: str):
    try:
        return FIXTURES[name]
    except KeyError:
        raise UnknownNode(name) from None


def fixture_kind(name: str) -> str:
    net = fixture(name)
    if isinstance(net, BsaNet):
        return "bsa"
    if isinstance(net, CsaNet):
        return "csa"
    if isinstance(net, AcyclicNet):
        return "acyclic"
    raise UnknownNode(name)


def fixture_names() -> list:
    return sorted(FIXTURES)
