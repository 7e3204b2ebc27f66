"""Named automorphisms and their relations.

Automorphism words are read like function composition: the rightmost token
acts first.  The squared conjugation automorphism is a translation, and the
product of all conjugations by x_j is the inner automorphism of x_j.
"""

from chw import (
    GroupElement,
    alpha_fr,
    compose,
    eps,
    evaluate,
    induced_matrix,
    inner,
    inner_witness,
    parse_autoword,
    parse_element,
)
from chw.automorphisms import apply, compose_all, equal
from chw.group import format_element

n = 3
phi = evaluate(parse_autoword("a[1,2] d[3]", n))
for w in ["x1", "x3", "x1 x3"]:
    print(f"a[1,2] d[3] ({w}) = {format_element(apply(phi, parse_element(w, n)))}")

a12 = alpha_fr(n, 1, 2)
print("(alpha_1^2)^2 == t_(-2 eps_12):", equal(compose(a12, a12), eps(n, 1, 2, -2)))
print("induced on A:")
print(induced_matrix(a12))

for j in range(1, n + 1):
    prod = compose_all([alpha_fr(n, k, j) for k in range(1, n + 1) if k != j], n)
    w = inner_witness(prod, 1, 2)
    print(f"product of alpha_k^{j} is inner by {format_element(w)}; matches inner(x{j}):",
          equal(prod, inner(GroupElement.gen(n, j))))
