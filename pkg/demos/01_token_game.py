"""
The token game on an acyclic net
================================

An acyclic net is a bipartite graph of places (conditions, drawn as
circles) and transitions (events, drawn as boxes).  A marking is the set
of places currently holding a token.  Firing a step U of transitions
moves tokens by the rule  M' = (M ∪ post U) \\ pre U.
"""

from sonet import (enabled_steps, enabled_transitions, fire, fixture,
                   initial_marking, run, steps)
from sonet.foundations import fmt_set, fmt_setseq

# The gallery net AN1: a produces two tokens, b and c/d consume them.
# c and d compete for the same place p3, so they can never fire together.
net = fixture("AN1")
print("places:     ", sorted(net.places))
print("transitions:", sorted(net.transitions))

# The initial marking is exactly the places no transition produces.
m0 = initial_marking(net)
print("initial marking:", fmt_set(m0))

# Fire the only enabled transition and look at the result.
m1 = fire(net, m0, {"a"})
print("after {a}:      ", fmt_set(m1))

# Several transitions with disjoint presets may fire as one step.
print("enabled now:", enabled_transitions(net, m1))
for u in enabled_steps(net, m1):
    print("  step", fmt_set(u))

# A run records the whole marking history.
r = run(net, m0, [{"a"}, {"b", "c"}])
print("run:", " -> ".join(fmt_set(m) for m in r.markings))

# steps() lists every potential step of the net; c and d never share one.
print("all steps:", fmt_setseq(tuple(sorted(steps(net), key=sorted))))
