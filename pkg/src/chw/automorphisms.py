"""Endomorphisms and automorphisms of G_n as tuples of generator images.

Named generators:

    alpha_sigma : x_i -> x_{sigma(i)}
    alpha_i^j   : x_i -> x_j x_i x_j^{-1}
    eps_ij      : x_i -> x_i x_j^2
    delta_i     : x_i -> x_i^{-1}

(all other generators fixed).  Composition follows (phi o psi)(x) = phi(psi(x)).
Automorphism status is certified by construction: anything built by
`evaluate` from an AutoWord comes with an explicit inverse word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .group import (
    DEFAULT_BALL_CAP,
    GroupElement,
    ResourceLimitExceeded,
    ball_size,
    conjugate,
    invert,
    multiply,
    power,
    reduced_words,
    shift_box,
)
from .lattice import IntMatrix, is_unimodular, rho, rho_word
from .monoid import NonUnitError, TranslationMatrix, is_unit, unit_inverse
from .words import (
    RankMismatch,
    ReducedWord,
    WAutomorphism,
    check_permutation,
    perm_inverse,
    w_compose,
    w_inner,
    w_perm_auto,
)


class NotCharacteristicError(ValueError):
    """An endomorphism sent some x_i^2 outside A."""


@dataclass(frozen=True)
class GEndomorphism:
    n: int
    images: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.n:
            raise ValueError(f"expected {self.n} images, got {len(self.images)}")
        for g in self.images:
            if g.rank != self.n:
                raise RankMismatch(f"image of rank {g.rank} in an endomorphism of G_{self.n}")

    def __call__(self, g: GroupElement) -> GroupElement:
        return apply(self, g)

    def __matmul__(self, other: GEndomorphism) -> GEndomorphism:
        return compose(self, other)

    def __str__(self) -> str:
        return "\n".join(f"x{i} -> {g}" for i, g in enumerate(self.images, start=1))


def identity(n: int) -> GEndomorphism:
    return GEndomorphism(n, tuple(GroupElement.gen(n, i) for i in range(1, n + 1)))


def apply(phi: GEndomorphism, g: GroupElement) -> GroupElement:
    if phi.n != g.rank:
        raise RankMismatch(f"rank mismatch: {phi.n} != {g.rank}")
    out = GroupElement.identity(phi.n)
    for i in g.word.letters:
        out = multiply(out, phi.images[i - 1])
    for j, z in enumerate(g.shift):
        if z:
            y = phi.images[j]
            out = multiply(out, power(multiply(y, y), z))
    return out


def compose(phi: GEndomorphism, psi: GEndomorphism) -> GEndomorphism:
    if phi.n != psi.n:
        raise RankMismatch(f"rank mismatch: {phi.n} != {psi.n}")
    return GEndomorphism(phi.n, tuple(apply(phi, g) for g in psi.images))


def compose_all(maps: Sequence[GEndomorphism], n: int) -> GEndomorphism:
    """maps[0] o maps[1] o ... (the last map acts first)."""
    out = identity(n)
    for m in maps:
        out = compose(out, m)
    return out


def equal(phi: GEndomorphism, psi: GEndomorphism) -> bool:
    if phi.n != psi.n:
        raise RankMismatch(f"rank mismatch: {phi.n} != {psi.n}")
    return phi.images == psi.images


def first_mismatch(phi: GEndomorphism, psi: GEndomorphism) -> Optional[str]:
    for i, (a, b) in enumerate(zip(phi.images, psi.images), start=1):
        if a != b:
            return f"x{i}: {a} vs {b}"
    return None


def check_von_dyck(images: Sequence[GroupElement]) -> bool:
    """True iff y_i^{-1} y_j^2 y_i y_j^2 = 1 for all i != j."""
    squares = [multiply(y, y) for y in images]
    inverses = [invert(y) for y in images]
    for i, y in enumerate(images):
        for j in range(len(images)):
            if i == j:
                continue
            r = multiply(multiply(multiply(inverses[i], squares[j]), y), squares[j])
            if not r.is_identity():
                return False
    return True


# -- named generators and translations ---------------------------------------


def to_endomorphism(a: TranslationMatrix) -> GEndomorphism:
    """t_a : x_i -> x_i a_i."""
    n = a.n
    return GEndomorphism(
        n, tuple(GroupElement(ReducedWord.gen(n, i), a.row(i)) for i in range(1, n + 1))
    )


def alpha_perm(sigma: Sequence[int]) -> GEndomorphism:
    sigma = check_permutation(sigma)
    n = len(sigma)
    return GEndomorphism(n, tuple(GroupElement.gen(n, s) for s in sigma))


def _check_pair(n: int, i: int, j: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
    if i == j:
        raise ValueError(f"indices must differ, got i = j = {i}")


def alpha_fr(n: int, i: int, j: int, eta: int = 1) -> GEndomorphism:
    """x_i -> x_j^eta x_i x_j^{-eta}; eta = -1 gives the inverse map."""
    _check_pair(n, i, j)
    xj = GroupElement.gen(n, j)
    if eta == -1:
        xj = invert(xj)
    images = list(identity(n).images)
    images[i - 1] = conjugate(GroupElement.gen(n, i), xj)
    return GEndomorphism(n, tuple(images))


def eps(n: int, i: int, j: int, exponent: int = 1) -> GEndomorphism:
    _check_pair(n, i, j)
    return to_endomorphism(TranslationMatrix.elementary(n, i, j, exponent))


def delta(n: int, i: int) -> GEndomorphism:
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    return to_endomorphism(TranslationMatrix.delta(n, i))


def inner(g: GroupElement) -> GEndomorphism:
    """x -> g x g^{-1}."""
    n = g.rank
    return GEndomorphism(n, tuple(conjugate(GroupElement.gen(n, i), g) for i in range(1, n + 1)))


# -- formal words in the generators --------------------------------------------


@dataclass(frozen=True)
class Perm:
    sigma: tuple[int, ...]
    inverse: bool = False


@dataclass(frozen=True)
class FR:
    i: int
    j: int
    inverse: bool = False


@dataclass(frozen=True)
class Eps:
    i: int
    j: int
    exponent: int = 1
    inverse: bool = False


@dataclass(frozen=True)
class Delta:
    i: int
    inverse: bool = False


@dataclass(frozen=True)
class Trans:
    matrix: TranslationMatrix
    inverse: bool = False


Token = Union[Perm, FR, Eps, Delta, Trans]


@dataclass(frozen=True)
class AutoWord:
    """Formal product of generator tokens; the rightmost token acts first."""

    n: int
    tokens: tuple[Token, ...] = field(default=())

    def __post_init__(self) -> None:
        for t in self.tokens:
            validate_token(t, self.n)

    def __matmul__(self, other: AutoWord) -> AutoWord:
        if self.n != other.n:
            raise RankMismatch(f"rank mismatch: {self.n} != {other.n}")
        return AutoWord(self.n, self.tokens + other.tokens)


def validate_token(t: Token, n: int) -> None:
    if isinstance(t, Perm):
        check_permutation(t.sigma)
        if len(t.sigma) != n:
            raise ValueError(f"permutation {t.sigma} has length {len(t.sigma)}, expected {n}")
    elif isinstance(t, (FR, Eps)):
        _check_pair(n, t.i, t.j)
    elif isinstance(t, Delta):
        if not 1 <= t.i <= n:
            raise ValueError(f"index {t.i} out of range 1..{n}")
    elif isinstance(t, Trans):
        if t.matrix.n != n:
            raise ValueError(f"translation matrix of size {t.matrix.n}, expected {n}")
    else:
        raise TypeError(f"unknown token {t!r}")


def invert_token(t: Token) -> Token:
    """Inverse token, normalised whenever the inverse is again a single generator."""
    if isinstance(t, Perm):
        return Perm(perm_inverse(t.sigma) if not t.inverse else t.sigma)
    if isinstance(t, Delta):
        return Delta(t.i)
    if isinstance(t, Eps):
        k = -t.exponent if not t.inverse else t.exponent
        return Eps(t.i, t.j, k)
    if isinstance(t, Trans):
        m = t.matrix if t.inverse else unit_inverse(t.matrix)
        return Trans(m)
    return FR(t.i, t.j, not t.inverse)


def invert_word(word: AutoWord) -> AutoWord:
    return AutoWord(word.n, tuple(invert_token(t) for t in reversed(word.tokens)))


def named(t: Token, n: int) -> GEndomorphism:
    validate_token(t, n)
    if isinstance(t, Perm):
        return alpha_perm(perm_inverse(t.sigma) if t.inverse else t.sigma)
    if isinstance(t, FR):
        if not t.inverse:
            return alpha_fr(n, t.i, t.j)
        # (alpha_i^j)^2 = t_{-2 eps_ij}, so the inverse is alpha_i^j o t_{2 eps_ij}
        return compose(alpha_fr(n, t.i, t.j), eps(n, t.i, t.j, 2))
    if isinstance(t, Eps):
        return eps(n, t.i, t.j, -t.exponent if t.inverse else t.exponent)
    if isinstance(t, Delta):
        return delta(n, t.i)
    if not is_unit(t.matrix):
        raise NonUnitError(f"translation token is not a unit: diagonal {t.matrix.diagonal()}")
    return to_endomorphism(unit_inverse(t.matrix) if t.inverse else t.matrix)


def evaluate(word: AutoWord) -> GEndomorphism:
    out = identity(word.n)
    for t in word.tokens:
        out = compose(out, named(t, word.n))
    return out


# -- induced maps ---------------------------------------------------------------


def induced_w(phi: GEndomorphism) -> WAutomorphism:
    return WAutomorphism(phi.n, tuple(g.word for g in phi.images))


def induced_matrix(phi: GEndomorphism) -> IntMatrix:
    """Row i is the exponent vector of phi(x_i^2)."""
    rows = []
    for i, y in enumerate(phi.images, start=1):
        sq = multiply(y, y)
        if not sq.in_a():
            raise NotCharacteristicError(f"image of x{i}^2 is {sq}, not in A")
        rows.append(sq.shift)
    return IntMatrix.of(rows, phi.n)


def translation_part(phi: GEndomorphism) -> Optional[TranslationMatrix]:
    """The matrix a with phi = t_a, or None when phi does not induce the identity on W."""
    if any(g.word.letters != (i,) for i, g in enumerate(phi.images, start=1)):
        return None
    return TranslationMatrix(tuple(g.shift for g in phi.images))


def inner_witness(
    phi: GEndomorphism, max_len: int, box: int, cap: int = DEFAULT_BALL_CAP
) -> Optional[GroupElement]:
    """First g in canonical ball order with inner(g) = phi, or None."""
    n = phi.n
    size = ball_size(n, max_len, box)
    if size > cap:
        raise ResourceLimitExceeded(f"ball has {size} elements, cap is {cap}")
    target_w = tuple(g.word for g in phi.images)
    for w in reduced_words(n, max_len):
        # filter on W first: inner(g) projects to conjugation by w
        if w_inner(w).images != target_w:
            continue
        for z in shift_box(n, box):
            g = GroupElement(w, tuple(z))
            if _is_inner_by(phi, g):
                return g
    return None


def _is_inner_by(phi: GEndomorphism, g: GroupElement) -> bool:
    gi = invert(g)
    for i, y in enumerate(phi.images, start=1):
        if multiply(multiply(g, GroupElement.gen(phi.n, i)), gi) != y:
            return False
    return True


# -- semi-linear pairs ------------------------------------------------------------


@dataclass(frozen=True)
class SemiLinearPair:
    """A pair (f, F) with f(w.a) = F(w).f(a).

    f is stored the same way as `induced_matrix`: row i is the image of the
    basis vector e_i, so f acts on row vectors, z -> z f.
    """

    f: IntMatrix
    F: WAutomorphism


def is_semilinear(f: IntMatrix, F: WAutomorphism) -> bool:
    if f.shape != (F.rank, F.rank):
        raise ValueError(f"matrix of shape {f.shape} for rank {F.rank}")
    if not is_unimodular(f):
        raise ValueError("f is not invertible over the integers")
    n = F.rank
    # z rho(x_k) f = z f rho(F(x_k)) for all row vectors z
    return all(rho(k, n) @ f == f @ rho_word(F.images[k - 1]) for k in range(1, n + 1))


def induced_pair(phi: GEndomorphism) -> SemiLinearPair:
    return SemiLinearPair(induced_matrix(phi), induced_w(phi))


def permutation_matrix(sigma: Sequence[int]) -> IntMatrix:
    """Row i is e_{sigma(i)}, matching induced_matrix(alpha_sigma)."""
    n = len(sigma)
    return IntMatrix.of([[1 if c == s else 0 for c in range(1, n + 1)] for s in sigma], n)


def sn_section(sigma: Sequence[int]) -> SemiLinearPair:
    sigma = check_permutation(sigma)
    return SemiLinearPair(permutation_matrix(sigma), w_perm_auto(sigma))


def compose_pairs(p: SemiLinearPair, q: SemiLinearPair) -> SemiLinearPair:
    """Componentwise product (f_p o f_q, F_p o F_q) in the row-vector convention."""
    return SemiLinearPair(q.f @ p.f, w_compose(p.F, q.F))

