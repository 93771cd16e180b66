"""
Documents, DOT export, command line, HTTP
=========================================

Nets travel as ``.sonet.json`` documents — canonical JSON with a fixed
key order, so equal nets serialize to identical bytes.  The same
functionality is reachable from the ``sonet`` command line and, for
interactive clients, from the JSON API under ``/api/v1``.
"""

import json

from sonet import document_for, export_dot, fixture, parse, serialize

# Serialize a gallery net and read it straight back: byte-stable.
doc = document_for(fixture("CS1"))
text = serialize(doc)
assert serialize(parse(text)) == text
print(text[:text.index("]") + 1], "...")

# A marking travels with the document when asked for.
snapshot = document_for(fixture("AN1"), marking={"p2", "p3"})
print("stored marking:", json.loads(serialize(snapshot))["marking"])

# DOT export for rendering with graphviz; the current marking is dotted
# onto the places.
dot = export_dot(snapshot)
print("\n".join(dot.splitlines()[:4]))
print("...")

# The command line wraps the library; a few invocations worth trying:
#
#   sonet classify BD1
#   sonet run BSA0 --steps 'g,k;h,l;c,m;j;d'
#   sonet wellformed W1            # exit code 1, witness on stdout
#   sonet scenarios AN1 --maximal
#   sonet export-dot CS1 --out cs1.dot
#   sonet serve --port 8000        # the JSON API under /api/v1
#
# Every command accepts either a fixture name or a .sonet.json path.
