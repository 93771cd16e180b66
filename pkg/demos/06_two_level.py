"""
Two-level nets: behaviour abstracted by phases
==============================================

A behavioural-structured net watches a lower-level net through an upper
one: each upper place stands for a phase — a set of lower markings — and
the β relation marks where phases begin and end.  A step may fire only
if both levels stay aligned, so the upper net is a faithful abstraction
of the lower one's progress.
"""

from sonet import (bsa_enabled_steps, bsa_fire, bsa_initial_marking,
                   bsa_is_well_formed, bsa_maximal_scenarios, bsa_run,
                   fixture, is_phase_consistent, phase, step_verdict)
from sonet.foundations import fmt_set, fmt_setseq

net = fixture("BSA0")
m0 = bsa_initial_marking(net)
print("initial marking:", fmt_set(m0))

# Each upper place stands for a set of lower markings.
for p in sorted(net.upper.places):
    ms = sorted(fmt_set(m) for m in phase(net, p).markings)
    print(f"phase({p}): {len(ms):2d} markings,", "eg", ms[0])

# A marking is phase-consistent when the lower part lies in the phase of
# every marked upper place.
print("{p4,r9,r11} consistent:",
      is_phase_consistent(net, {"p4", "r9", "r11"}))
print("{p1,r9,r11} consistent:",
      is_phase_consistent(net, {"p1", "r9", "r11"}))

# The upper transition a is blocked at the start: its target phase does
# not contain the current lower marking.
ok, reason = step_verdict(net, m0, {"a"})
print("step {a}:", "enabled" if ok else f"blocked ({reason})")

print("enabled steps:", " ".join(fmt_set(u)
                                 for u in sorted(bsa_enabled_steps(net, m0),
                                                 key=sorted)))

# Both levels advance together; the run below drives the lower net
# through all three phases of the p1-p4 line while the upper net follows.
s = [{"g", "k"}, {"h", "l"}, {"c", "m"}, {"j"}, {"d"}]
r = bsa_run(net, m0, s)
print("replay", fmt_setseq(tuple(map(frozenset, s))),
      "->", fmt_set(r.final))

# Scenario pairs and the well-formedness verdict complete the picture.
print("maximal scenarios:",
      [sorted(sc.net.lower.transitions)
       for sc in sorted(bsa_maximal_scenarios(net),
                        key=lambda sc: sorted(sc.net.lower.transitions))])
v = bsa_is_well_formed(net)
print("well-formed:", v.status)
if v.witness_sequence:
    print("  witness:", fmt_setseq(v.witness_sequence))
