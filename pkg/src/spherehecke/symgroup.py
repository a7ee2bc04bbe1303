"""The symmetric group on kappa letters in one-line notation.

Conventions, fixed once and tested by the reduced-word recovery
property:

* ``oneline[i - 1]`` is the image w(i); entries are 1-based.
* ``s(i)`` swaps the values i and i+1.
* ``compose(u, v)`` is u after v: ``(u . v)(i) = u(v(i))``.
* The canonical reduced word is the lexicographically smallest one,
  obtained by repeatedly stripping the smallest left descent.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator


class Perm:
    """A permutation of {1..kappa} in one-line notation."""

    __slots__ = ("oneline",)

    def __init__(self, oneline: Iterable[int]):
        ol = tuple(int(v) for v in oneline)
        if sorted(ol) != list(range(1, len(ol) + 1)):
            raise ValueError(f"not a permutation of 1..{len(ol)}: {ol}")
        self.oneline = ol

    @property
    def kappa(self) -> int:
        return len(self.oneline)

    def __call__(self, i: int) -> int:
        return self.oneline[i - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.oneline == other.oneline

    def __hash__(self) -> int:
        return hash(self.oneline)

    def __lt__(self, other: "Perm") -> bool:
        return self.oneline < other.oneline

    def __repr__(self) -> str:
        return f"Perm({list(self.oneline)!r})"

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.oneline))

    def inverse(self) -> "Perm":
        out = [0] * self.kappa
        for i, v in enumerate(self.oneline):
            out[v - 1] = i + 1
        return Perm(out)

    def to_json(self) -> list[int]:
        return list(self.oneline)

    @staticmethod
    def from_json(data: Iterable[int]) -> "Perm":
        return Perm(data)


def identity(kappa: int) -> Perm:
    return Perm(range(1, kappa + 1))


def transposition(i: int, kappa: int) -> Perm:
    """The adjacent transposition s_i swapping values i and i+1."""
    if not 1 <= i <= kappa - 1:
        raise IndexError(f"generator index {i} out of range for kappa={kappa}")
    ol = list(range(1, kappa + 1))
    ol[i - 1], ol[i] = ol[i], ol[i - 1]
    return Perm(ol)


def compose(u: Perm, v: Perm) -> Perm:
    """(u . v)(i) = u(v(i))."""
    if u.kappa != v.kappa:
        raise ValueError(f"mismatched kappa: {u.kappa} vs {v.kappa}")
    ol = u.oneline
    return Perm(ol[j - 1] for j in v.oneline)


def length(w: Perm) -> int:
    """Coxeter length = inversion count of the one-line notation."""
    ol = w.oneline
    n = len(ol)
    return sum(1 for i in range(n) for j in range(i + 1, n) if ol[i] > ol[j])


def mul_gen_left(i: int, w: Perm) -> tuple[Perm, bool]:
    """(s_i . w, lengthened) where lengthened means l(s_i w) = l(w) + 1.

    Left multiplication swaps the values i, i+1 in the one-line
    notation; it lengthens exactly when value i appears before i+1.
    """
    ol = list(w.oneline)
    pi = ol.index(i)
    pj = ol.index(i + 1)
    ol[pi], ol[pj] = i + 1, i
    return Perm(ol), pi < pj


def mul_gen_right(w: Perm, i: int) -> tuple[Perm, bool]:
    """(w . s_i, lengthened); lengthens exactly when w(i) < w(i+1)."""
    ol = list(w.oneline)
    lengthened = ol[i - 1] < ol[i]
    ol[i - 1], ol[i] = ol[i], ol[i - 1]
    return Perm(ol), lengthened


def left_descents(w: Perm) -> list[int]:
    inv = w.inverse().oneline
    return [i for i in range(1, w.kappa) if inv[i - 1] > inv[i]]


def reduced_word(w: Perm) -> tuple[int, ...]:
    """The lexicographically smallest reduced word for w.

    Greedy: the possible first letters of reduced words are exactly the
    left descents, so taking the smallest descent and recursing on
    s_i . w minimizes the word letter by letter.
    """
    word = []
    cur = w
    inv = list(cur.inverse().oneline)
    while True:
        for i in range(1, w.kappa):
            if inv[i - 1] > inv[i]:
                break
        else:
            return tuple(word)
        word.append(i)
        cur, _ = mul_gen_left(i, cur)
        inv[i - 1], inv[i] = inv[i], inv[i - 1]


def from_word(word: Iterable[int], kappa: int) -> Perm:
    """Multiply out a generator word s_{i1} ... s_{il}."""
    w = identity(kappa)
    for i in word:
        w = compose(w, transposition(i, kappa))
    return w


def all_perms(kappa: int) -> Iterator[Perm]:
    """All of S_kappa in lexicographic one-line order."""
    for ol in permutations(range(1, kappa + 1)):
        yield Perm(ol)


def longest_element(kappa: int) -> Perm:
    return Perm(range(kappa, 0, -1))
