"""
Communicating components and syn-cycles
=======================================

A communication-structured net couples disjoint acyclic components
through buffer places.  A buffer token can be produced and consumed
within the same step — that is how synchronous interaction arises — and
the transitions entangled this way form "syn-cycles" that can never be
split across steps.
"""

from sonet import (csa_enabled, csa_finreach, csa_initial_marking,
                   csa_maxsseq, csa_run, csa_scenario_of, decompose_step,
                   fixture, project, syn_cycles_csa)
from sonet.foundations import fmt_set, fmt_setseq

net = fixture("CS1")
m0 = csa_initial_marking(net)
print("components:", len(net.components), " buffers:", sorted(net.buffers))

# {c,e} is enabled only as a joint step: e fills buffer q1 and c drains
# it within the very same step.
print("{c,e} enabled:", csa_enabled(net, m0, {"c", "e"}))
print("{c} alone:    ", csa_enabled(net, m0, {"c"}))

# Steps decompose into syn-cycles — the atomic interactions.
print("syn-cycles:", [sorted(g) for g in sorted(syn_cycles_csa(net),
                                                key=sorted)])
print("decompose {c,e}:", [sorted(g)
                           for g in decompose_step(net, m0,
                                                   {"c", "e"})])

# The behaviour sets work exactly as for plain acyclic nets.
print("maximal step sequences:")
for s in sorted(csa_maxsseq(net), key=str):
    print("  ", fmt_setseq(s))
print("final markings:", ", ".join(sorted(fmt_set(m)
                                          for m in csa_finreach(net))))

# A joint run projects onto each component's own little run.
s = [{"a", "e"}, {"b"}]
print("projection on 1:", fmt_setseq(project(net, 1, s)))
print("projection on 2:", fmt_setseq(project(net, 2, s)))
r = csa_run(net, m0, s)
print("mixed projection on 2:",
      " ".join(fmt_set(x) for x in project(net, 2, r)))

# Scenario induction works across components, buffers included.
print("scenario of {a,e}{b}:",
      sorted(csa_scenario_of(net, s).transitions))
