"""Normal forms in G_n.

Every element is written uniquely as a reduced word in the generators times a
vector of exponents of the squares x_i^2.  The defining relators collapse to
the identity, squares of shifted generators land in A, and the group has no
torsion in a small ball.
"""

from chw import GroupElement, enumerate_ball, multiply, parse_element, power
from chw.group import format_element, relator

n = 3
print("relators x_i^-1 x_j^2 x_i x_j^2 in G_3:")
for i, j in [(1, 2), (2, 3), (3, 1)]:
    print(f"  i={i} j={j}: {format_element(relator(n, i, j))}")

for text in ["x1^3", "(x1 x2)^2", "x1^-1 x2 x1", "x2 x1 x2^-1 ; [1,0,0]"]:
    print(f"{text:>24}  ->  {format_element(parse_element(text, n))}")

x1 = GroupElement.gen(n, 1)
g = multiply(x1, parse_element("; [2,0,-1]", n))
# a shifted generator squares to an odd power of x_1^2
print("(x1 ; [2,0,-1])^2 =", format_element(power(g, 2)))

ball = list(enumerate_ball(n, 2, 1))
torsion = [h for h in ball if not h.is_identity() and power(h, 2).is_identity()]
print(f"ball of word length <= 2, shifts in [-1,1]: {len(ball)} elements, {len(torsion)} of order 2")
