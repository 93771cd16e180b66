"""
Behaviour sets: everything a net can do
=======================================

Five canonical sets summarise a net's behaviour: step sequences, their
maximal (unextendable) members, firing sequences (singleton steps only),
reachable markings, and final reachable markings.  All are finite for
acyclic nets and are enumerated exactly.
"""

from sonet import finreach, fixture, fseq, maxsseq, reach, sseq
from sonet.foundations import fmt_set, fmt_setseq

net = fixture("BD1")

print("step sequences:")
for s in sorted(sseq(net), key=lambda s: (len(s), str(s))):
    print("  ", fmt_setseq(s))

print("maximal step sequences:")
for s in sorted(maxsseq(net), key=str):
    print("  ", fmt_setseq(s))

# Firing sequences are the fully serialized runs, λ included.
print("firing sequences:", len(fseq(net)))

print("reachable markings:")
for m in sorted(reach(net), key=sorted):
    print("  ", fmt_set(m))

# Final markings are the deadlocked ones: no step is enabled any more.
print("final markings:", ", ".join(sorted(fmt_set(m)
                                          for m in finreach(net))))
