"""Inflate small diagrams into larger ones with stretch morphisms.

Run: python3 demos/03_stretch_morphisms.py
"""

from diagramsort import (
    SetComposition,
    delta_k,
    format_diagram,
    identity_diagram,
    is_stretch_of_identity,
    parse_diagram,
    stretch_map,
)

# A set composition is an ordered list of disjoint blocks of indices.
alpha = SetComposition.parse("1,2|3|5,6,7|4")
print("alpha =", alpha)

# Stretching replaces index i everywhere by the whole part alpha_i, then
# pads the missing indices with identity pairs.  The identity of order 4
# inflates to an order-7 diagram whose blocks mirror alpha's parts.
image = stretch_map(alpha, 7, identity_diagram(4))
print("stretch of id_4 =", format_diagram(image))
assert is_stretch_of_identity(image)

# Non-identity diagrams stretch the same way: each top index becomes a
# run of top nodes, each bottom index a run of bottom nodes.
crossing = parse_diagram("{1,2'|2,1'}", 2)
beta = SetComposition.parse("1,2|3")
print("stretch of", format_diagram(crossing), "=", format_diagram(stretch_map(beta, 3, crossing)))

# delta_k alone pads a partial pairing up to order k.
print("padded =", format_diagram(delta_k([{1, 3, -1, -3}], 5)))

# Stretches of identities are exactly the diagrams where every block's
# top labels equal its bottom labels.
assert is_stretch_of_identity(parse_diagram("{1,2,1',2'|3,3'}", 3))
assert not is_stretch_of_identity(crossing)
