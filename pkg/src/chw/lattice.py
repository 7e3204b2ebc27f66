"""The W-module A = Z^n and exact integer linear algebra.

W acts on A through the diagonal representation rho, where rho(x_i) has +1 in
position i and -1 elsewhere.  Matrices here are plain tuples of Python ints so
every computation is exact; there is no floating point anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Sequence

from .words import ReducedWord, RankMismatch, sign_vector

LatticeVector = tuple[int, ...]


def unit_vector(n: int, i: int, scale: int = 1) -> LatticeVector:
    """scale * e_i, with i 1-based."""
    return tuple(scale if k == i else 0 for k in range(1, n + 1))


def zero_vector(n: int) -> LatticeVector:
    return (0,) * n


def vadd(u: Sequence[int], v: Sequence[int]) -> LatticeVector:
    if len(u) != len(v):
        raise RankMismatch(f"rank mismatch: {len(u)} != {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vneg(u: Sequence[int]) -> LatticeVector:
    return tuple(-a for a in u)


def vscale(k: int, u: Sequence[int]) -> LatticeVector:
    return tuple(k * a for a in u)


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    def __post_init__(self) -> None:
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("matrix rows must all have the same length")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]], ncols: int | None = None) -> IntMatrix:
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(rows, ncols)

    @classmethod
    def zeros(cls, m: int, n: int) -> IntMatrix:
        return cls(tuple((0,) * n for _ in range(m)), n)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(unit_vector(n, i) for i in range(1, n + 1)), n)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(tuple(unit_vector(n, i + 1, d) for i, d in enumerate(entries)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), self.ncols)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(self.column(j) for j in range(self.ncols)), self.nrows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = [other.column(j) for j in range(other.ncols)]
        return IntMatrix(
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows),
            other.ncols,
        )

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return IntMatrix(tuple(vadd(r, s) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        return self + other.scale(-1)

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(tuple(vscale(k, r) for r in self.rows), self.ncols)

    def apply(self, v: Sequence[int]) -> LatticeVector:
        """Matrix times column vector."""
        if len(v) != self.ncols:
            raise RankMismatch(f"vector length {len(v)} != {self.ncols}")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.rows) for j, x in enumerate(r) if i != j)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        if not self.rows:
            return "[]"
        width = max(len(str(x)) for r in self.rows for x in r) if self.ncols else 0
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in r) + "]" for r in self.rows)


def determinant(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination."""
    n, k = m.shape
    if n != k:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m.rows]
    sign, prev = 1, 1
    for t in range(n - 1):
        if a[t][t] == 0:
            swap = next((i for i in range(t + 1, n) if a[i][t] != 0), None)
            if swap is None:
                return 0
            a[t], a[swap] = a[swap], a[t]
            sign = -sign
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


def is_unimodular(m: IntMatrix) -> bool:
    return m.nrows == m.ncols and abs(determinant(m)) == 1


# -- the representation rho and the action of W ------------------------------


def rho(i: int, n: int) -> IntMatrix:
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return IntMatrix.diag([1 if k == i else -1 for k in range(1, n + 1)])


def rho_word(w: ReducedWord) -> IntMatrix:
    return IntMatrix.diag(sign_vector(w))


def act(w: ReducedWord, z: Sequence[int]) -> LatticeVector:
    """w . z = w z w^{-1} written additively."""
    if len(z) != w.rank:
        raise RankMismatch(f"rank mismatch: word rank {w.rank}, vector length {len(z)}")
    return tuple(s * c for s, c in zip(sign_vector(w), z))


def act_letter(i: int, z: Sequence[int]) -> LatticeVector:
    """Action of a single generator x_i: negate every coordinate except i."""
    return tuple(c if k == i else -c for k, c in enumerate(z, start=1))


# -- Smith normal form -------------------------------------------------------


@dataclass(frozen=True)
class SNFResult:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    factors: tuple[int, ...]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d != 0)


def smith_normal_form(m: IntMatrix) -> SNFResult:
    """Return U, D, V with U*m*V = D, U and V unimodular, D diagonal with d1 | d2 | ...

    Pivot: the nonzero entry of smallest absolute value in the remaining block,
    ties broken by row-major order.
    """
    rows, cols = m.shape
    a = [list(r) for r in m.rows]
    U = [list(r) for r in IntMatrix.identity(rows).rows]
    V = [list(r) for r in IntMatrix.identity(cols).rows]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j: int, k: int) -> None:
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]

    def add_row(dst: int, src: int, q: int) -> None:
        # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    for t in range(min(rows, cols)):
        while True:
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]

    D = IntMatrix.of(a, cols)
    return SNFResult(
        IntMatrix.of(U, rows),
        D,
        IntMatrix.of(V, cols),
        tuple(D.diagonal()),
    )


def invariant_factors(m: IntMatrix) -> list[int]:
    """Nonzero invariant factors, divisibility sorted."""
    return [d for d in smith_normal_form(m).factors if d]


def cokernel_invariants(m: IntMatrix) -> tuple[int, list[int]]:
    """(free rank, torsion factors) of Z^rows / m Z^cols."""
    snf = smith_normal_form(m)
    nonzero = [d for d in snf.factors if d]
    return m.nrows - len(nonzero), [d for d in nonzero if d > 1]


def kernel_basis(m: IntMatrix) -> list[LatticeVector]:
    """Z-basis of {v : m v = 0}, in Hermite normal form."""
    snf = smith_normal_form(m)
    vecs = [snf.V.column(j) for j in range(snf.rank, m.ncols)]
    return hermite_basis(vecs, m.ncols)


def hermite_basis(vectors: Sequence[Sequence[int]], n: int) -> list[LatticeVector]:
    """Row-style Hermite normal form of the lattice spanned by `vectors` in Z^n."""
    rows = [list(v) for v in vectors if any(v)]
    out: list[list[int]] = []
    col = 0
    while rows and col < n:
        live = [r for r in rows if r[col]]
        if not live:
            col += 1
            continue
        while len(live) > 1:
            live.sort(key=lambda r: abs(r[col]))
            p = live[0]
            for r in live[1:]:
                q = r[col] // p[col]
                for k in range(n):
                    r[k] -= q * p[k]
            live = [r for r in live if r[col]]
        pivot = live[0]
        if pivot[col] < 0:
            pivot[:] = [-x for x in pivot]
        rows = [r for r in rows if r is not pivot and any(r)]
        for r in out:
            q = r[col] // pivot[col]
            for k in range(n):
                r[k] -= q * pivot[k]
        out.append(pivot)
        col += 1
    return [tuple(r) for r in out]


def fixed_sublattice(generators: Sequence[ReducedWord]) -> list[LatticeVector]:
    """Basis of the vectors fixed by every rho(w), w in generators."""
    if not generators:
        raise ValueError("need at least one generator")
    n = generators[0].rank
    constraint: list[tuple[int, ...]] = []
    for w in generators:
        if w.rank != n:
            raise RankMismatch("generators of differing rank")
        constraint.extend((rho_word(w) - IntMatrix.identity(n)).rows)
    return kernel_basis(IntMatrix.of(constraint, n))


def commutant_basis(mats: Sequence[IntMatrix]) -> list[IntMatrix]:
    """Z-basis of the integer matrices X with X M = M X for every M in mats."""
    n = mats[0].nrows
    # unknown X flattened row-major: x[p*n + q] = X[p][q]
    constraint = []
    for M in mats:
        for r in range(n):
            for c in range(n):
                row = [0] * (n * n)
                for k in range(n):
                    row[r * n + k] += M[k, c]  # (X M)[r][c]
                    row[k * n + c] -= M[r, k]  # (M X)[r][c]
                constraint.append(row)
    basis = kernel_basis(IntMatrix.of(constraint, n * n))
    return [IntMatrix.of([v[p * n:(p + 1) * n] for p in range(n)], n) for v in basis]


def commutant_is_diagonal(n: int) -> bool:
    if n < 2:
        raise ValueError("need n >= 2")
    basis = commutant_basis([rho(i, n) for i in range(1, n + 1)])
    return len(basis) == n and all(b.is_diagonal() for b in basis)


def sign_diagonals(n: int) -> list[IntMatrix]:
    return [IntMatrix.diag(s) for s in product((1, -1), repeat=n)]


# -- matrix file format --------------------------------------------------------


def parse_matrix_text(text: str) -> IntMatrix:
    """Whitespace-separated integer rows, or a JSON array of arrays."""
    stripped = text.strip()
    if stripped.startswith("["):
        data = json.loads(stripped)
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise ValueError("JSON matrix must be an array of arrays")
        rows = data
    else:
        rows = [line.split() for line in stripped.splitlines() if line.strip()]
    if not rows:
        return IntMatrix.zeros(0, 0)
    try:
        return IntMatrix.of([[int(x) for x in r] for r in rows])
    except (TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix: {exc}") from None


def read_matrix(path: str | Path) -> IntMatrix:
    return parse_matrix_text(Path(path).read_text())
