"""H^1(W, A) and H^2(W, A) for the diagonal W-module A = Z^n.

H^2 is modelled coordinatewise: W is a free product of the n subgroups
<x_i> of order 2, so H^2(W, A) splits as the sum of the H^2(<x_i>, A), and for a
cyclic group of order 2 acting by sigma that group is

    ker(sigma - 1) / im(sigma + 1)      (fixed points modulo norms).

Each summand is Z/2 here, so a class is a bit vector in (Z/2)^n.  H^1 is read
off as the cokernel of iota : A -> M_0 = Z^{n(n-1)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .lattice import IntMatrix, cokernel_invariants, kernel_basis, rho, smith_normal_form
from .monoid import iota


@dataclass(frozen=True)
class CohClass:
    n: int
    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"coordinates must lie in Z/2, got {self.bits}")

    def __str__(self) -> str:
        return "(" + ",".join(str(b) for b in self.bits) + ")"


def _fixed_mod_norms(sigma: IntMatrix) -> tuple[list[tuple[int, ...]], IntMatrix]:
    """Basis K of ker(sigma - 1) and the norm image expressed in K-coordinates."""
    n = sigma.nrows
    if sigma.shape != (n, n):
        raise ValueError("sigma must be square")
    ident = IntMatrix.identity(n)
    if sigma @ sigma != ident:
        raise ValueError("sigma is not an involution")
    basis = kernel_basis(sigma - ident)
    norm = sigma + ident
    k = len(basis)
    if k == 0:
        return basis, IntMatrix.zeros(0, n)
    K = IntMatrix.of(basis, n).transpose()  # columns are basis vectors
    coords = [solve_in_basis(K, norm.column(j)) for j in range(n)]
    return basis, IntMatrix.of(coords, k).transpose()


def solve_in_basis(K: IntMatrix, y: Sequence[int]) -> tuple[int, ...]:
    """Integer c with K c = y, for K with independent columns spanning a saturated lattice."""
    snf = smith_normal_form(K)
    uy = snf.U.apply(y)
    r = snf.rank
    w = []
    for i in range(K.ncols):
        d = snf.factors[i] if i < len(snf.factors) else 0
        if d == 0 or uy[i] % d:
            raise ValueError(f"{tuple(y)} is not in the lattice spanned by the columns")
        w.append(uy[i] // d)
    if any(uy[i] for i in range(r, K.nrows)):
        raise ValueError(f"{tuple(y)} is not in the column span")
    return snf.V.apply(w)


def h2_cyclic(sigma: IntMatrix) -> list[int]:
    """Torsion invariants of ker(sigma - 1)/im(sigma + 1) for an involution sigma."""
    basis, norm_coords = _fixed_mod_norms(sigma)
    if not basis:
        return []
    free, torsion = cokernel_invariants(norm_coords)
    if free:
        raise ArithmeticError("norm image has lower rank than the fixed lattice")
    return torsion


def h2_w(n: int) -> list[list[int]]:
    if n < 2:
        raise ValueError("need n >= 2")
    return [h2_cyclic(rho(i, n)) for i in range(1, n + 1)]


def class_coordinate(sigma: IntMatrix, a: Sequence[int]) -> int:
    """Image of the fixed vector a in ker(sigma - 1)/im(sigma + 1) = Z/2."""
    basis, norm_coords = _fixed_mod_norms(sigma)
    torsion = h2_cyclic(sigma)
    if torsion != [2]:
        raise ValueError(f"expected a Z/2 quotient, got {torsion}")
    K = IntMatrix.of(basis, sigma.nrows).transpose()
    c = solve_in_basis(K, a)
    # the quotient Z^k / norm_coords is Z/2: project with the SNF row transform
    snf = smith_normal_form(norm_coords)
    uc = snf.U.apply(c)
    idx = next(i for i, d in enumerate(snf.factors) if d == 2)
    return uc[idx] % 2


def extension_class(n: int) -> CohClass:
    """Coordinates of the extension 1 -> A -> G -> W -> 1.

    Coordinate i is the class of x_i^2 (the square of the lift of the generator
    of <x_i>) in the fixed points of rho(x_i) modulo norms.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    bits = []
    for i in range(1, n + 1):
        e_i = tuple(1 if k == i else 0 for k in range(1, n + 1))
        bits.append(class_coordinate(rho(i, n), e_i))
    return CohClass(n, tuple(bits))


def is_torsion_free_class(c: CohClass) -> bool:
    """The extension is torsion free iff no restriction to an <x_i> vanishes."""
    return all(c.bits)


def all_classes(n: int) -> list[CohClass]:
    return [CohClass(n, bits) for bits in product((0, 1), repeat=n)]


def torsion_free_classes(n: int) -> list[CohClass]:
    return [c for c in all_classes(n) if is_torsion_free_class(c)]


def relabel(c: CohClass, sigma: Sequence[int]) -> CohClass:
    """Push the class forward along the relabelling x_i -> x_{sigma(i)}."""
    bits = [0] * c.n
    for i, s in enumerate(sigma):
        bits[s - 1] = c.bits[i]
    return CohClass(c.n, tuple(bits))


def iota_image_matrix(n: int) -> IntMatrix:
    """Columns iota(e_k), flattened over the off-diagonal positions (row-major)."""
    positions = [(i, j) for i in range(n) for j in range(n) if i != j]
    cols = []
    for k in range(1, n + 1):
        e_k = tuple(1 if m == k else 0 for m in range(1, n + 1))
        m = iota(e_k)
        cols.append([m[i, j] for i, j in positions])
    return IntMatrix.of(cols, len(positions)).transpose()


def h1_w(n: int) -> tuple[int, list[int]]:
    """(free rank, torsion) of H^1(W, A) = M_0 / iota(A)."""
    if n < 3:
        raise ValueError("H^1 computation requires n >= 3")
    return cokernel_invariants(iota_image_matrix(n))


def format_abelian(free: int, torsion: Sequence[int]) -> str:
    parts = []
    if free:
        parts.append(f"Z^{free}")
    groups: dict[int, int] = {}
    for d in torsion:
        groups[d] = groups.get(d, 0) + 1
    for d, mult in groups.items():
        parts.append(f"(Z/{d})^{mult}")
    return " x ".join(parts) if parts else "0"
