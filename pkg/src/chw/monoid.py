"""The monoid (M, *) of translation endomorphisms.

A square integer matrix a encodes the endomorphism t_a with t_a(x_i) = x_i a_i,
where a_i is the element of A whose exponent vector is row i of a.  Composition
of translations corresponds to

    (a * b)_ij = a_ij + (1 + 2 a_jj) b_ij,

with the zero matrix as identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import IntMatrix


class NonUnitError(ValueError):
    pass


@dataclass(frozen=True)
class TranslationMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        if any(len(r) != n for r in self.entries):
            raise ValueError("translation matrix must be square")

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> TranslationMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def zero(cls, n: int) -> TranslationMatrix:
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def elementary(cls, n: int, i: int, j: int, value: int = 1) -> TranslationMatrix:
        """value * eps_ij (1-based indices)."""
        rows = [[0] * n for _ in range(n)]
        rows[i - 1][j - 1] = value
        return cls.of(rows)

    @classmethod
    def delta(cls, n: int, i: int) -> TranslationMatrix:
        return cls.elementary(n, i, i, -1)

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        """Row i, 1-based."""
        return self.entries[i - 1]

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def __add__(self, other: TranslationMatrix) -> TranslationMatrix:
        _check(self, other)
        return TranslationMatrix(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.entries, other.entries))
        )

    def scale(self, k: int) -> TranslationMatrix:
        return TranslationMatrix(tuple(tuple(k * x for x in r) for r in self.entries))

    def __neg__(self) -> TranslationMatrix:
        return self.scale(-1)

    def __mul__(self, other: TranslationMatrix) -> TranslationMatrix:
        return star(self, other)

    def is_zero(self) -> bool:
        return not any(x for r in self.entries for x in r)

    def as_int_matrix(self) -> IntMatrix:
        return IntMatrix(self.entries, self.n)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __str__(self) -> str:
        return str(self.as_int_matrix())


def _check(a: TranslationMatrix, b: TranslationMatrix) -> None:
    if a.n != b.n:
        raise ValueError(f"size mismatch: {a.n} != {b.n}")


def star(a: TranslationMatrix, b: TranslationMatrix) -> TranslationMatrix:
    _check(a, b)
    n = a.n
    col_factor = [1 + 2 * a.entries[j][j] for j in range(n)]
    return TranslationMatrix(
        tuple(
            tuple(a.entries[i][j] + col_factor[j] * b.entries[i][j] for j in range(n))
            for i in range(n)
        )
    )


def star_all(mats: Sequence[TranslationMatrix], n: int) -> TranslationMatrix:
    out = TranslationMatrix.zero(n)
    for m in mats:
        out = star(out, m)
    return out


def is_unit(a: TranslationMatrix) -> bool:
    return all(d in (0, -1) for d in a.diagonal())


def unit_inverse(a: TranslationMatrix) -> TranslationMatrix:
    for j, d in enumerate(a.diagonal(), start=1):
        if d not in (0, -1):
            raise NonUnitError(f"not a unit: diagonal entry a_{j}{j} = {d} is not 0 or -1")
    n = a.n
    sign = [-1 if a.entries[j][j] == 0 else 1 for j in range(n)]
    return TranslationMatrix(
        tuple(
            tuple(a.entries[i][j] if i == j else sign[j] * a.entries[i][j] for j in range(n))
            for i in range(n)
        )
    )


def decompose(a: TranslationMatrix) -> tuple[TranslationMatrix, TranslationMatrix]:
    """Split a = a0 * ad into its zero-diagonal and diagonal parts."""
    n = a.n
    a0 = TranslationMatrix(
        tuple(tuple(0 if i == j else a.entries[i][j] for j in range(n)) for i in range(n))
    )
    ad = TranslationMatrix(
        tuple(tuple(a.entries[i][j] if i == j else 0 for j in range(n)) for i in range(n))
    )
    return a0, ad


def delta_conjugate(k: int, a0: TranslationMatrix) -> TranslationMatrix:
    """delta_k * a0 * delta_k^{-1} for zero-diagonal a0: negate column k."""
    if any(a0.diagonal()):
        raise ValueError("delta_conjugate needs a zero-diagonal matrix")
    n = a0.n
    if not 1 <= k <= n:
        raise ValueError(f"index {k} out of range 1..{n}")
    return TranslationMatrix(
        tuple(tuple(-x if j == k - 1 else x for j, x in enumerate(r)) for r in a0.entries)
    )


def iota(z: Sequence[int]) -> TranslationMatrix:
    """Translation matrix of conjugation by the element z of A.

    Conjugating x_i by a gives x_i (rho(x_i) a - a), so row i carries -2 z_j in
    every column j != i.
    """
    n = len(z)
    return TranslationMatrix(
        tuple(tuple(0 if i == j else -2 * z[j] for j in range(n)) for i in range(n))
    )


def iota_row_convention(z: Sequence[int]) -> TranslationMatrix:
    """The transposed reading of iota: row i constant -2 z_i off the diagonal.

    Kept only to report that it does not give conjugation by z.
    """
    n = len(z)
    return TranslationMatrix(
        tuple(tuple(0 if i == j else -2 * z[i] for j in range(n)) for i in range(n))
    )
