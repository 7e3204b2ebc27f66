"""Normal forms in the combinatorial Hantzsche-Wendt group G_n.

G_n = < x_1..x_n | x_i^{-1} x_j^2 x_i = x_j^{-2}, i != j > is an extension
1 -> A -> G -> W -> 1 with A = <x_1^2, ..., x_n^2> free abelian.  Every element
is written uniquely as

    x_{i_1} x_{i_2} ... x_{i_k} * (x_1^2)^{z_1} ... (x_n^2)^{z_n}

with i_1..i_k a reduced word of W (positive letters only) and z in Z^n.  The
A-part always sits on the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .lattice import LatticeVector, act, vadd, zero_vector
from .words import RankMismatch, ReducedWord

DEFAULT_BALL_CAP = 2_000_000


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class GroupElement:
    word: ReducedWord
    shift: LatticeVector

    def __post_init__(self) -> None:
        if len(self.shift) != self.word.rank:
            raise RankMismatch(f"shift has length {len(self.shift)}, word rank {self.word.rank}")

    @property
    def rank(self) -> int:
        return self.word.rank

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(ReducedWord.identity(n), zero_vector(n))

    @classmethod
    def gen(cls, n: int, i: int) -> GroupElement:
        return cls(ReducedWord.gen(n, i), zero_vector(n))

    @classmethod
    def of(cls, n: int, letters: Sequence[int] = (), shift: Sequence[int] | None = None) -> GroupElement:
        return cls(ReducedWord(n, tuple(letters)), tuple(shift) if shift is not None else zero_vector(n))

    def is_identity(self) -> bool:
        return self.word.is_identity() and not any(self.shift)

    def in_a(self) -> bool:
        return self.word.is_identity()

    def __mul__(self, other: GroupElement) -> GroupElement:
        return multiply(self, other)

    def __invert__(self) -> GroupElement:
        return invert(self)

    def __pow__(self, k: int) -> GroupElement:
        return power(self, k)

    def __str__(self) -> str:
        return format_element(self)


def format_element(g: GroupElement) -> str:
    letters = " ".join(f"x{i}" for i in g.word.letters)
    shift = "[" + ",".join(str(z) for z in g.shift) + "]"
    return f"{letters} ; {shift}" if letters else f"; {shift}"


def _append(letters: list[int], shift: list[int], i: int, sign: int) -> None:
    # in-place version of append_letter on (letters, shift)
    if letters and letters[-1] == i:
        letters.pop()
        for k in range(len(shift)):
            if k != i - 1:
                shift[k] = -shift[k]
        shift[i - 1] += 1
    else:
        letters.append(i)
        for k in range(len(shift)):
            if k != i - 1:
                shift[k] = -shift[k]
    if sign < 0:
        shift[i - 1] -= 1


def append_letter(g: GroupElement, i: int, sign: int = 1) -> GroupElement:
    """Normal form of g * x_i^{sign}."""
    n = g.rank
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    letters = list(g.word.letters)
    shift = list(g.shift)
    _append(letters, shift, i, sign)
    return GroupElement(ReducedWord(n, tuple(letters)), tuple(shift))


def from_letters(n: int, letters: Sequence[tuple[int, int]]) -> GroupElement:
    """Evaluate a product of (index, +-1) letters."""
    word: list[int] = []
    shift = [0] * n
    for i, s in letters:
        if not 1 <= i <= n:
            raise ValueError(f"generator index {i} out of range 1..{n}")
        _append(word, shift, i, s)
    return GroupElement(ReducedWord(n, tuple(word)), tuple(shift))


def _check(g: GroupElement, h: GroupElement) -> None:
    if g.rank != h.rank:
        raise RankMismatch(f"rank mismatch: {g.rank} != {h.rank}")


def multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    _check(g, h)
    letters = list(g.word.letters)
    shift = list(g.shift)
    for i in h.word.letters:
        _append(letters, shift, i, 1)
    return GroupElement(
        ReducedWord(g.rank, tuple(letters)), tuple(a + b for a, b in zip(shift, h.shift))
    )


def invert(g: GroupElement) -> GroupElement:
    # (w a)^{-1} = a^{-1} x_{i_k}^{-1} ... x_{i_1}^{-1}
    letters: list[int] = []
    shift = [-z for z in g.shift]
    for i in reversed(g.word.letters):
        _append(letters, shift, i, -1)
    return GroupElement(ReducedWord(g.rank, tuple(letters)), tuple(shift))


def conjugate(g: GroupElement, by: GroupElement) -> GroupElement:
    """by * g * by^{-1}."""
    return multiply(multiply(by, g), invert(by))


def commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    """g h g^{-1} h^{-1}."""
    return multiply(multiply(g, h), invert(multiply(h, g)))


def power(g: GroupElement, k: int) -> GroupElement:
    if k < 0:
        return power(invert(g), -k)
    result = GroupElement.identity(g.rank)
    base = g
    while k:
        if k & 1:
            result = multiply(result, base)
        k >>= 1
        if k:
            base = multiply(base, base)
    return result


def embed_a(z: Sequence[int]) -> GroupElement:
    n = len(z)
    return GroupElement(ReducedWord.identity(n), tuple(z))


def project_w(g: GroupElement) -> ReducedWord:
    return g.word


def square_shifted(i: int, a: Sequence[int]) -> LatticeVector:
    """(x_i a)^2 = (x_i^2)^{2 a_i + 1}, returned as an element of A."""
    n = len(a)
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} out of range 1..{n}")
    return tuple(2 * a[i - 1] + 1 if k == i else 0 for k in range(1, n + 1))


def block_multiply(g: GroupElement, h: GroupElement) -> GroupElement:
    """Multiply by pushing g's shift through h's word in one step.

    Only valid when the concatenation of the words is already reduced; used as
    an independent cross-check of `multiply`.
    """
    _check(g, h)
    if g.word.letters and h.word.letters and g.word.letters[-1] == h.word.letters[0]:
        raise ValueError("words cancel; block formula does not apply")
    word = ReducedWord(g.rank, g.word.letters + h.word.letters)
    # a w = w (w^{-1} a w) and w^{-1} acts by the same signs as w
    return GroupElement(word, vadd(act(h.word, g.shift), h.shift))


# -- ball enumeration --------------------------------------------------------


def reduced_words(n: int, max_len: int) -> Iterator[ReducedWord]:
    """All reduced words of length <= max_len: by length, then lexicographically."""
    layer: list[tuple[int, ...]] = [()]
    yield ReducedWord(n, ())
    for _ in range(max_len):
        nxt = []
        for w in layer:
            for i in range(1, n + 1):
                if not w or w[-1] != i:
                    nxt.append(w + (i,))
        for w in nxt:
            yield ReducedWord(n, w)
        layer = nxt


def ball_size(n: int, max_len: int, box: int) -> int:
    words = 1 + sum(n * (n - 1) ** (k - 1) for k in range(1, max_len + 1))
    return words * (2 * box + 1) ** n


def shift_box(n: int, box: int) -> Iterator[LatticeVector]:
    return product(range(-box, box + 1), repeat=n)


def enumerate_ball(n: int, max_len: int, box: int, cap: int = DEFAULT_BALL_CAP) -> Iterator[GroupElement]:
    """Normal forms with |word| <= max_len and all |shift coordinates| <= box."""
    if max_len < 0 or box < 0:
        raise ValueError("word length and box must be nonnegative")
    size = ball_size(n, max_len, box)
    if size > cap:
        raise ResourceLimitExceeded(f"ball has {size} elements, cap is {cap}")
    for w in reduced_words(n, max_len):
        for z in shift_box(n, box):
            yield GroupElement(w, tuple(z))


def relator(n: int, i: int, j: int) -> GroupElement:
    """x_i^{-1} x_j^2 x_i x_j^2, trivial in G_n."""
    return from_letters(n, [(i, -1), (j, 1), (j, 1), (i, 1), (j, 1), (j, 1)])

