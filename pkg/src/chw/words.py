"""Reduced words in the free product W_n = C2 * ... * C2 and its automorphisms.

Every generator of W_n is an involution, so a word is just a sequence of
generator indices (1-based) with no two equal neighbours.  Automorphisms are
stored as the tuple of images of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

Permutation = tuple[int, ...]


class RankMismatch(ValueError):
    pass


def reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for i in letters:
        if stack and stack[-1] == i:
            stack.pop()
        else:
            stack.append(i)
    return tuple(stack)


@dataclass(frozen=True)
class ReducedWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")
        for pos, i in enumerate(self.letters):
            if not 1 <= i <= self.rank:
                raise ValueError(f"letter {i} out of range 1..{self.rank}")
            if pos and self.letters[pos - 1] == i:
                raise ValueError(f"word {self.letters} is not reduced")

    @classmethod
    def from_letters(cls, rank: int, letters: Iterable[int]) -> ReducedWord:
        return cls(rank, reduce_letters(letters))

    @classmethod
    def identity(cls, rank: int) -> ReducedWord:
        return cls(rank, ())

    @classmethod
    def gen(cls, rank: int, i: int) -> ReducedWord:
        return cls(rank, (i,))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: ReducedWord) -> ReducedWord:
        return w_multiply(self, other)

    def inverse(self) -> ReducedWord:
        return ReducedWord(self.rank, self.letters[::-1])

    def is_identity(self) -> bool:
        return not self.letters

    def __str__(self) -> str:
        return " ".join(f"x{i}" for i in self.letters) or "1"


def _check_rank(a: int, b: int) -> None:
    if a != b:
        raise RankMismatch(f"rank mismatch: {a} != {b}")


def w_multiply(w1: ReducedWord, w2: ReducedWord) -> ReducedWord:
    _check_rank(w1.rank, w2.rank)
    left = list(w1.letters)
    k = 0
    right = w2.letters
    while left and k < len(right) and left[-1] == right[k]:
        left.pop()
        k += 1
    return ReducedWord(w1.rank, tuple(left) + right[k:])


def sign_vector(w: ReducedWord) -> tuple[int, ...]:
    """Diagonal of rho(w): entry j is (-1)**(number of letters of w other than j)."""
    counts = [0] * w.rank
    for i in w.letters:
        counts[i - 1] += 1
    total = len(w.letters)
    return tuple(-1 if (total - c) % 2 else 1 for c in counts)


# -- permutations (image arrays, 1-based) -----------------------------------


def check_permutation(sigma: Sequence[int]) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def perm_compose(sigma: Permutation, tau: Permutation) -> Permutation:
    """(sigma tau)(i) = sigma(tau(i))."""
    _check_rank(len(sigma), len(tau))
    return tuple(sigma[t - 1] for t in tau)


def perm_inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def perm_identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def transposition(n: int, i: int, j: int) -> Permutation:
    p = list(range(1, n + 1))
    p[i - 1], p[j - 1] = j, i
    return tuple(p)


def n_cycle(n: int) -> Permutation:
    """The cycle (1 2 ... n)."""
    return tuple(list(range(2, n + 1)) + [1])


# -- automorphisms of W ------------------------------------------------------


@dataclass(frozen=True)
class WAutomorphism:
    rank: int
    images: tuple[ReducedWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        for w in self.images:
            _check_rank(w.rank, self.rank)
            if not w_multiply(w, w).is_identity():
                raise ValueError(f"image {w} is not an involution")

    def __call__(self, w: ReducedWord) -> ReducedWord:
        return w_apply(self, w)

    def __matmul__(self, other: WAutomorphism) -> WAutomorphism:
        return w_compose(self, other)

    def is_identity(self) -> bool:
        return all(w.letters == (i,) for i, w in enumerate(self.images, start=1))


def w_identity(n: int) -> WAutomorphism:
    return WAutomorphism(n, tuple(ReducedWord.gen(n, i) for i in range(1, n + 1)))


def w_perm_auto(sigma: Sequence[int]) -> WAutomorphism:
    sigma = check_permutation(sigma)
    n = len(sigma)
    return WAutomorphism(n, tuple(ReducedWord.gen(n, s) for s in sigma))


def w_fr_auto(n: int, i: int, j: int) -> WAutomorphism:
    """Fouxe-Rabinovitch generator: x_i -> x_j x_i x_j, other generators fixed."""
    if i == j:
        raise ValueError(f"Fouxe-Rabinovitch generator needs i != j, got i = j = {i}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
    images = [ReducedWord.gen(n, k) for k in range(1, n + 1)]
    images[i - 1] = ReducedWord(n, (j, i, j))
    return WAutomorphism(n, tuple(images))


def w_apply(F: WAutomorphism, w: ReducedWord) -> ReducedWord:
    _check_rank(F.rank, w.rank)
    out = ReducedWord.identity(F.rank)
    for i in w.letters:
        out = w_multiply(out, F.images[i - 1])
    return out


def w_compose(F: WAutomorphism, G: WAutomorphism) -> WAutomorphism:
    """(F o G)(x) = F(G(x))."""
    _check_rank(F.rank, G.rank)
    return WAutomorphism(F.rank, tuple(w_apply(F, g) for g in G.images))


def w_equal(F: WAutomorphism, G: WAutomorphism) -> bool:
    _check_rank(F.rank, G.rank)
    return F.images == G.images


def w_inner(w: ReducedWord) -> WAutomorphism:
    """Conjugation x -> w x w^{-1}."""
    n = w.rank
    inv = w.inverse()
    return WAutomorphism(
        n, tuple(w_multiply(w_multiply(w, ReducedWord.gen(n, i)), inv) for i in range(1, n + 1))
    )
