"""Translation endomorphisms and the star product.

t_a sends x_i to x_i times the lattice vector in row i of a.  Composition of
these maps is the twisted product c_ij = a_ij + (1 + 2 a_jj) b_ij, and the
invertible ones are those with every diagonal entry 0 or -1.
"""

from chw import TranslationMatrix, compose, decompose, is_unit, star, to_endomorphism, unit_inverse
from chw.automorphisms import equal

a = TranslationMatrix.of([[1, 0], [0, 0]])
b = TranslationMatrix.of([[0, 1], [0, 0]])
print("a * b =", star(a, b).tolist())
print("t_(a*b) == t_a o t_b:", equal(to_endomorphism(star(a, b)), compose(to_endomorphism(a), to_endomorphism(b))))

u = TranslationMatrix.of([[0, 3], [5, -1]])
v = unit_inverse(u)
print(f"unit {u.tolist()} has inverse {v.tolist()};  u*v = {star(u, v).tolist()}")
print("is [[1,0],[0,0]] a unit?", is_unit(a))

a0, ad = decompose(TranslationMatrix.of([[-1, 4], [2, 0]]))
print("split into off-diagonal and diagonal parts:", a0.tolist(), ad.tolist())
