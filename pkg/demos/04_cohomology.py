"""Cohomology of W_n with coefficients in the lattice A.

H^2 splits over the n factors of order two; exactly one class restricts
nontrivially to all of them, and it is the class of the extension G_n.
H^1 is the cokernel of the map A -> off-diagonal matrices coming from inner
automorphisms by lattice elements.
"""

from chw import extension_class, h1_w, h2_w, torsion_free_classes
from chw.cohomology import format_abelian, iota_image_matrix
from chw.lattice import smith_normal_form

for n in range(2, 6):
    parts = h2_w(n)
    print(f"n={n}: H^2 = {format_abelian(0, [d for p in parts for d in p])}, "
          f"torsion-free classes {[str(c) for c in torsion_free_classes(n)]}, extension {extension_class(n)}")

for n in range(3, 7):
    m = iota_image_matrix(n)
    snf = smith_normal_form(m)
    print(f"n={n}: iota image {m.shape}, invariant factors {snf.factors}, H^1 = {format_abelian(*h1_w(n))}")
