"""Shared test helpers: brute-force oracles and random element factories."""

from __future__ import annotations

import random

import pytest

from spherehecke.coeff import IntPoly
from spherehecke.dga import DgaConfig, DgaElt, GenWord, normal_form
from spherehecke.symgroup import Perm, identity, left_descents, mul_gen_left


def all_reduced_words(w: Perm) -> list[tuple[int, ...]]:
    """Every reduced word of w, by descent recursion (independent oracle)."""
    if w.is_identity():
        return [()]
    out = []
    for i in left_descents(w):
        rest, _ = mul_gen_left(i, w)
        out.extend((i,) + tail for tail in all_reduced_words(rest))
    return out


def random_poly(rng: random.Random, max_deg: int = 2, max_coeff: int = 3) -> IntPoly:
    return IntPoly([rng.randint(-max_coeff, max_coeff) for _ in range(max_deg + 1)])


def random_gen_word(rng: random.Random, kappa: int, max_len: int = 6) -> GenWord:
    letters = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choices(["T", "Tinv", "X"], weights=[4, 2, 2])[0]
        if kind == "X":
            letters.append(("X", rng.randint(1, kappa)))
        elif kappa >= 2:
            letters.append((kind, rng.randint(1, kappa - 1)))
    return GenWord.of(*letters, prefactor=rng.randint(-2, 2) or 1)


def random_element(rng: random.Random, cfg: DgaConfig, max_len: int = 6) -> DgaElt:
    return normal_form(random_gen_word(rng, cfg.kappa, max_len), cfg)


def random_homogeneous(
    rng: random.Random, cfg: DgaConfig, degree: int, n_terms: int = 2
) -> DgaElt:
    """Random Z[h]-combination of PBW monomials of the given degree."""
    from spherehecke.homology import graded_basis

    basis = graded_basis(cfg, -degree).monomials
    acc = DgaElt.zero(cfg.kappa)
    for _ in range(n_terms):
        mono = basis[rng.randrange(len(basis))]
        acc = acc + DgaElt(cfg.kappa, {mono: random_poly(rng)})
    return acc


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
