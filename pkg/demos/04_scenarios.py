"""
Scenarios: one causal history at a time
=======================================

A scenario is a co-initial occurrence subnet — it fixes which branch was
taken at every choice, leaving only concurrency.  All interleavings of
the same choices induce the same scenario, and the behaviour of a
well-formed net is the union of the behaviours of its scenarios.
"""

from sonet import (coverage, enumerate_scenarios, fixture,
                   maximal_scenarios, scenario_of, sseq)
from sonet.foundations import as_setseq

net = fixture("AN1")

# Three different orderings of the same three events ...
variants = [as_setseq(["a", "b", "c"]),
            as_setseq(["a", "c", "b"]),
            [{"a"}, {"b", "c"}]]
found = {scenario_of(net, s).net for s in variants}
print("three interleavings, distinct scenarios:", len(found))

# ... and the induced net is itself a fixture of the gallery.
assert found == {fixture("ON1")}

# Enumerating all scenarios shows the choice structure: picking c or
# picking d gives different histories.
print("scenarios of AN1:")
for s in sorted(enumerate_scenarios(net),
                key=lambda s: (len(s.transitions), sorted(s.transitions))):
    print("  ", sorted(s.transitions))

print("maximal:", [sorted(s.transitions)
                   for s in sorted(maximal_scenarios(net),
                                   key=lambda s: sorted(s.transitions))])

# Scenario behaviours add up to the net behaviour.
union = set()
for s in enumerate_scenarios(net):
    union |= sseq(s.net)
print("union of scenario sseq == net sseq:", union == sseq(net))

# The coverage report packages the same comparison.
print("coverage full:", coverage(net).full)
