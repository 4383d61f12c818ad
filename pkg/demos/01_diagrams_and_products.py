"""Build partition diagrams and multiply them, in the monoid and in the algebra.

Run: python3 demos/01_diagrams_and_products.py
"""

from diagramsort import (
    AlgebraElement,
    XiPoly,
    canonicalize,
    compose,
    enumerate_diagrams,
    format_diagram,
    identity_diagram,
    parse_diagram,
)

# A diagram of order 5, written in the same text form the CLI accepts.
# Top nodes are plain integers, bottom nodes carry a prime.  Singleton
# blocks may be left out; the parser restores them.
d1 = parse_diagram("{1,4|2,3,4',5'|5|1',3'|2'}", 5)
d2 = parse_diagram("{1,3|2,4,3'|5,4',5'}", 5)
print("d1 =", format_diagram(d1))
print("d2 =", format_diagram(d2))

# Stacking d1 on top of d2 and removing the middle row gives the monoid
# product.  `middle` counts the components that vanished with that row.
product, middle = compose(d1, d2)
print("d1 * d2 =", format_diagram(product))
print("middle components removed:", middle)

# The identity diagram is neutral on both sides.
assert compose(identity_diagram(5), d1) == (d1, 0)
assert compose(d1, identity_diagram(5)) == (d1, 0)

# In the algebra, each removed middle component contributes a factor xi,
# so the same product carries an exact polynomial coefficient.
a = AlgebraElement.from_diagram(d1) * AlgebraElement.from_diagram(d2)
for diagram, coeff in a.terms.items():
    print("algebra product term:", coeff, "*", format_diagram(diagram))

# Coefficients add when different stackings collapse to the same diagram.
bubble = canonicalize([{1, 2}, {-1, -2}], 2)
square = AlgebraElement.from_diagram(bubble) * AlgebraElement.from_diagram(bubble)
print("bubble^2 =", square.terms[bubble], "*", format_diagram(bubble))
assert square.terms[bubble] == XiPoly.xi_power(1)

# Diagrams of order n are the set-partitions of 2n points: 2, 15, 203, ...
for n in range(1, 4):
    print(f"order {n}: {sum(1 for _ in enumerate_diagrams(n))} diagrams")
