"""
Classifying plane curve germs
=============================

Milnor numbers and ADE labels from exact linear algebra on the local
algebra, and how a bidouble cover changes a branch picture.
"""

from maxpicard.singularities import (
    Germ,
    bidouble_branch_germ,
    classify_double_point_surface,
    classify_germ,
    milnor_number,
)

# a few normal forms and one germ that is not simple
for text in ["x^2 + y^5", "y*(x^2 + y^4)", "x^3 + y^4", "x^3 + x*y^3", "x^3 + y^5", "x^4 + y^4", "x^2*y^2"]:
    g = Germ.parse(text)
    print(f"{text:16s} mu = {str(milnor_number(g)):12s} {classify_germ(g)}")

# the label survives a linear change of coordinates
g = Germ.parse("x^3 + y^4").linear_change(2, 1, 1, 1)
print("after a change of coordinates:", g, "->", classify_germ(g))

# two smooth branches with contact 3 sit under an A2 of the bidouble cover
b1, b2 = Germ.parse("x - y^3"), Germ.parse("x + y^3")
surface = bidouble_branch_germ(b1, b2)
print("z^2 =", surface, "->", classify_double_point_surface(surface))
