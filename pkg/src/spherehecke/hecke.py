"""The finite Hecke algebra of type A on the standard basis.

Elements are finite Z[h]-linear combinations of basis symbols T_w
indexed by permutations, with the quadratic relation
T_i^2 = 1 + h T_i.  Products are computed generator by generator from
canonical reduced words; no structure-constant table is stored.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .coeff import HBAR, ONE, IntPoly, Scalar
from .symgroup import (
    Perm,
    compose,
    identity,
    mul_gen_left,
    mul_gen_right,
    reduced_word,
    transposition,
)


class HeckeElt:
    """A Z[h]-linear combination of basis elements T_w, fixed kappa.

    Treated as an immutable value: the term map is never mutated after
    construction, so sharing between caches and threads is safe.
    """

    __slots__ = ("kappa", "terms")

    def __init__(self, kappa: int, terms: Mapping[Perm, IntPoly] | None = None):
        self.kappa = kappa
        clean: dict[Perm, IntPoly] = {}
        if terms:
            for w, c in terms.items():
                if not c.is_zero():
                    clean[w] = c
        self.terms = clean

    # -- construction ---------------------------------------------------

    @staticmethod
    def _from_clean(kappa: int, terms: dict[Perm, IntPoly]) -> "HeckeElt":
        """Wrap a term map already free of zero coefficients."""
        elt = HeckeElt.__new__(HeckeElt)
        elt.kappa = kappa
        elt.terms = terms
        return elt

    @staticmethod
    def one(kappa: int, coeff: Scalar = 1) -> "HeckeElt":
        return HeckeElt(kappa, {identity(kappa): IntPoly.coerce(coeff)})

    @staticmethod
    def basis(w: Perm, coeff: Scalar = 1) -> "HeckeElt":
        return HeckeElt(w.kappa, {w: IntPoly.coerce(coeff)})

    @staticmethod
    def generator(i: int, kappa: int) -> "HeckeElt":
        return HeckeElt.basis(transposition(i, kappa))

    @staticmethod
    def zero(kappa: int) -> "HeckeElt":
        return HeckeElt(kappa)

    # -- value semantics --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.kappa == other.kappa and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.kappa, frozenset((w, c) for w, c in self.terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(
            f"{list(w.oneline)}: {c}" for w, c in sorted(self.terms.items(), key=lambda t: t[0].oneline)
        )
        return f"HeckeElt(kappa={self.kappa}, {{{body}}})"

    def sorted_terms(self) -> list[tuple[Perm, IntPoly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].oneline)

    # -- module operations -------------------------------------------------

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        if self.kappa != other.kappa:
            raise ValueError("mismatched kappa")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            out[w] = c if s is None else s + c
        return HeckeElt(self.kappa, out)

    def __neg__(self) -> "HeckeElt":
        return HeckeElt(self.kappa, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + (-other)

    def scale(self, coeff: Scalar) -> "HeckeElt":
        c = IntPoly.coerce(coeff)
        if c.is_zero():
            return HeckeElt.zero(self.kappa)
        return HeckeElt(self.kappa, {w: c * v for w, v in self.terms.items()})

    # -- io ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "terms": [
                {"w": w.to_json(), "coeff": c.to_json()} for w, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(data: Mapping) -> "HeckeElt":
        kappa = int(data["kappa"])
        terms = {
            Perm.from_json(t["w"]): IntPoly.from_json(t["coeff"]) for t in data["terms"]
        }
        return HeckeElt(kappa, terms)


def _accumulate(acc: dict[Perm, IntPoly], w: Perm, c: IntPoly) -> None:
    s = acc.get(w)
    s = c if s is None else s + c
    if s.is_zero():
        acc.pop(w, None)
    else:
        acc[w] = s


def hecke_mul_gen(h: HeckeElt, i: int, side: str = "left") -> HeckeElt:
    """Multiply by the generator T_i on the given side, basis by basis.

    T_i T_w is T_{s_i w} when s_i lengthens w, otherwise
    T_{s_i w} + h T_w; symmetrically on the right.
    """
    if not 1 <= i <= h.kappa - 1:
        raise IndexError(f"generator index {i} out of range for kappa={h.kappa}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    out: dict[Perm, IntPoly] = {}
    for w, c in h.terms.items():
        if side == "left":
            sw, lengthened = mul_gen_left(i, w)
        else:
            sw, lengthened = mul_gen_right(w, i)
        _accumulate(out, sw, c)
        if not lengthened:
            _accumulate(out, w, HBAR * c)
    return HeckeElt._from_clean(h.kappa, out)


def hecke_mul_word(h: HeckeElt, word: Iterable[int], side: str = "right") -> HeckeElt:
    """Fold generator multiplications T_{i1} ... T_{il} onto h.

    side='right' computes h * T_{i1} * ... * T_{il}; side='left'
    computes T_{i1} * ... * T_{il} * h.
    """
    letters = list(word)
    if side == "left":
        letters.reverse()
    for i in letters:
        h = hecke_mul_gen(h, i, side)
    return h


def hecke_mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Bilinear product, expanding the left factor along reduced words."""
    if a.kappa != b.kappa:
        raise ValueError(f"mismatched kappa: {a.kappa} vs {b.kappa}")
    out: dict[Perm, IntPoly] = {}
    for w, c in a.terms.items():
        prod = hecke_mul_word(b, reduced_word(w), side="left")
        for v, d in prod.terms.items():
            _accumulate(out, v, c * d)
    return HeckeElt._from_clean(a.kappa, out)


def t_inverse(i: int, kappa: int) -> HeckeElt:
    """T_i^{-1} = T_i - h, the inverse forced by the quadratic relation."""
    if not 1 <= i <= kappa - 1:
        raise IndexError(f"generator index {i} out of range for kappa={kappa}")
    return HeckeElt(
        kappa, {transposition(i, kappa): ONE, identity(kappa): -HBAR}
    )


def hecke_mul_inverse_gen(h: HeckeElt, i: int, side: str = "right") -> HeckeElt:
    """Multiply by T_i^{-1} = T_i - h on the given side."""
    return hecke_mul_gen(h, i, side) - h.scale(HBAR)


_THETA_CACHE: dict[int, HeckeElt] = {}


def theta_word(kappa: int) -> list[int]:
    """The sphere twist word 1, 2, ..., k-2, k-1, k-1, k-2, ..., 2, 1."""
    rising = list(range(1, kappa))
    return rising + rising[::-1]


def theta(kappa: int) -> HeckeElt:
    """Normal form of T_1 ... T_{kappa-2} T_{kappa-1}^2 T_{kappa-2} ... T_1.

    The empty product for kappa = 1.  Central in the finite Hecke
    algebra (image of the full twist).
    """
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    cached = _THETA_CACHE.get(kappa)
    if cached is None:
        cached = hecke_mul_word(HeckeElt.one(kappa), theta_word(kappa), side="right")
        _THETA_CACHE[kappa] = cached
    return cached


def specialize(h: HeckeElt, point: int) -> dict[Perm, int]:
    """Evaluate all coefficients at h = point; drop zeros."""
    out = {}
    for w, c in h.terms.items():
        v = c(point)
        if v:
            out[w] = v
    return out


def iter_basis(kappa: int) -> Iterator[Perm]:
    from .symgroup import all_perms

    return all_perms(kappa)


def theta_generator_word_product_check(kappa: int) -> HeckeElt:
    """theta recomputed left-to-right from scratch (test support)."""
    acc = HeckeElt.one(kappa)
    for i in theta_word(kappa):
        acc = hecke_mul(acc, HeckeElt.generator(i, kappa))
    return acc
