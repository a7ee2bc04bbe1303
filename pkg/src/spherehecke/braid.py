"""Braid words, their Hecke evaluation, and the skein identities.

Braids are abstract words in signed generators; no diagram machinery.
A positive letter i maps to T_i and a negative letter -i to
T_i^{-1} = T_i - h, following the positive-half-twist convention.  The
difference of the two crossings is then exactly h, the local skein
relation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .coeff import HBAR
from .dga import DgaConfig, DgaElt, d_generator
from .hecke import (
    HeckeElt,
    hecke_mul_gen,
    hecke_mul_inverse_gen,
    theta_word,
)


class BraidParseError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in signed generators: +i for a positive half twist, -i
    for its inverse; 1 <= |i| <= kappa-1."""

    kappa: int
    letters: tuple[int, ...]

    def __post_init__(self):
        for ell in self.letters:
            if ell == 0 or not 1 <= abs(ell) <= self.kappa - 1:
                raise BraidParseError(
                    f"generator {ell} out of range for kappa={self.kappa}"
                )

    def inverse(self) -> "BraidWord":
        return BraidWord(self.kappa, tuple(-ell for ell in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.kappa != other.kappa:
            raise ValueError("mismatched kappa")
        return BraidWord(self.kappa, self.letters + other.letters)


_S_TOKEN = re.compile(r"^s(\d+)('?)$")
_INT_TOKEN = re.compile(r"^-?\d+$")


def parse_braid(text: str, kappa: int) -> BraidWord:
    """Parse whitespace-separated tokens: s<i>, s<i>' (prime = inverse),
    or signed integers (compact form)."""
    letters = []
    for tok in text.split():
        m = _S_TOKEN.match(tok)
        if m:
            idx = int(m.group(1))
            letters.append(-idx if m.group(2) else idx)
            continue
        if _INT_TOKEN.match(tok):
            letters.append(int(tok))
            continue
        raise BraidParseError(f"malformed braid token {tok!r}")
    return BraidWord(kappa, tuple(letters))


def eval_braid(b: BraidWord) -> HeckeElt:
    """The monoid homomorphism into the Hecke algebra."""
    acc = HeckeElt.one(b.kappa)
    for ell in b.letters:
        if ell > 0:
            acc = hecke_mul_gen(acc, ell, side="right")
        else:
            acc = hecke_mul_inverse_gen(acc, -ell, side="right")
    return acc


def skein_residue(i: int, kappa: int) -> HeckeElt:
    """eval(sigma_i) - eval(sigma_i^{-1}) - h; zero exactly when the
    crossing-change relation holds."""
    pos = eval_braid(BraidWord(kappa, (i,)))
    neg = eval_braid(BraidWord(kappa, (-i,)))
    return pos - neg - HeckeElt.one(kappa, HBAR)


def sphere_word(kappa: int) -> BraidWord:
    """The braid word whose class is trivial in the sphere braid group."""
    return BraidWord(kappa, tuple(theta_word(kappa)))


def sphere_relation_class(cfg: DgaConfig) -> DgaElt:
    """eval(sphere word) - c, verified to be the differential of x_1.

    The sphere relation holds in degree-0 cohomology because its defect
    is exact.
    """
    defect = eval_braid(sphere_word(cfg.kappa)) - HeckeElt.one(cfg.kappa, cfg.c)
    elt = DgaElt.from_hecke(defect)
    if elt != d_generator(1, cfg):
        raise RuntimeError("sphere relation defect does not match d(x_1)")
    return elt
