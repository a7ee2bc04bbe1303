"""The differential graded algebra of sphere braids, with PBW normal forms.

Generators T_1..T_{kappa-1} (degree 0) and x_1..x_kappa (degree -1,
with x_{k+1} = T_k^{-1} x_k T_k^{-1} derived from x_1).  Every element
is stored in Poincare-Birkhoff-Witt normal form: a Z[h]-linear
combination of monomials x^alpha T_w with alpha a vector of exponents
and w a permutation.  The rewriting primitives are:

* ``pull``   -- move a T_w from the left of an x generator to the right,
* ``insert`` -- append an x generator to an ordered x-monomial,
* generator right-multiplications that keep the accumulator normal.

The differential sends each T_i to 0 and x_1 to the sphere twist
element minus the central parameter c, propagates to the higher x_k by
conjugation, and extends to products by the graded Leibniz rule
d(ab) = (da)b + (-1)^{deg a} a(db).  All caches hold immutable values
only, so concurrent use is safe (redundant computation is benign).

Sign convention: the cohomological degree of x^alpha T_w is -|alpha|,
h has degree 0, and d raises degree by one.  The convention is
validated by the d^2 = 0 and Leibniz property tests.
"""

from __future__ import annotations

import sys
import threading
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Sequence

from .coeff import HBAR, ONE, ZERO, IntPoly, Scalar
from .hecke import (
    HeckeElt,
    hecke_mul,
    hecke_mul_gen,
    hecke_mul_inverse_gen,
    hecke_mul_word,
    t_inverse,
    theta,
)
from .symgroup import Perm, identity, mul_gen_right, reduced_word

# Same-degree insert chains can nest deeply for long words.
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class PbwMono(NamedTuple):
    """A basis monomial x^alpha T_w; degree is -(alpha_1 + ... + alpha_kappa)."""

    alpha: tuple[int, ...]
    w: Perm

    @property
    def degree(self) -> int:
        return -sum(self.alpha)

    def x_letters(self) -> tuple[int, ...]:
        """Exponent vector as a nondecreasing list of x indices."""
        out = []
        for j, e in enumerate(self.alpha, start=1):
            out.extend([j] * e)
        return tuple(out)

    def sort_key(self):
        return (sum(self.alpha), self.x_letters(), self.w.oneline)


def _alpha_of_letters(letters: Sequence[int], kappa: int) -> tuple[int, ...]:
    alpha = [0] * kappa
    for j in letters:
        alpha[j - 1] += 1
    return tuple(alpha)


@dataclass(frozen=True)
class DgaConfig:
    """Strand count and the central parameter c (default 1)."""

    kappa: int
    c: IntPoly = ONE

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be >= 1")
        if self.c.is_zero():
            raise ValueError("central parameter c must be nonzero")

    def cache_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.kappa, self.c.coeffs)


@dataclass(frozen=True)
class GenWord:
    """A scalar prefactor times a word in the generators.

    Letters are pairs (kind, index) with kind in {"T", "Tinv", "X"};
    indices satisfy 1 <= i <= kappa-1 for T letters and 1 <= j <= kappa
    for X letters (validated against the configuration on use).
    """

    prefactor: IntPoly = ONE
    letters: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def of(*letters: tuple[str, int], prefactor: Scalar = 1) -> "GenWord":
        return GenWord(IntPoly.coerce(prefactor), tuple(letters))


class DgaElt:
    """A Z[h]-linear combination of PBW monomials, fixed kappa."""

    __slots__ = ("kappa", "terms")

    def __init__(self, kappa: int, terms: Mapping[PbwMono, IntPoly] | None = None):
        self.kappa = kappa
        clean: dict[PbwMono, IntPoly] = {}
        if terms:
            for m, c in terms.items():
                if not c.is_zero():
                    clean[m] = c
        self.terms = clean

    # -- constructors ---------------------------------------------------

    @staticmethod
    def _from_clean(kappa: int, terms: dict[PbwMono, IntPoly]) -> "DgaElt":
        """Wrap a term map already free of zero coefficients."""
        elt = DgaElt.__new__(DgaElt)
        elt.kappa = kappa
        elt.terms = terms
        return elt

    @staticmethod
    def zero(kappa: int) -> "DgaElt":
        return DgaElt(kappa)

    @staticmethod
    def monomial(alpha: Sequence[int], w: Perm, coeff: Scalar = 1) -> "DgaElt":
        mono = PbwMono(tuple(alpha), w)
        return DgaElt(w.kappa, {mono: IntPoly.coerce(coeff)})

    @staticmethod
    def one(kappa: int, coeff: Scalar = 1) -> "DgaElt":
        return DgaElt.monomial((0,) * kappa, identity(kappa), coeff)

    @staticmethod
    def x_gen(j: int, kappa: int) -> "DgaElt":
        if not 1 <= j <= kappa:
            raise IndexError(f"x index {j} out of range for kappa={kappa}")
        alpha = [0] * kappa
        alpha[j - 1] = 1
        return DgaElt.monomial(alpha, identity(kappa))

    @staticmethod
    def t_gen(i: int, kappa: int) -> "DgaElt":
        from .symgroup import transposition

        return DgaElt.monomial((0,) * kappa, transposition(i, kappa))

    @staticmethod
    def from_hecke(h: HeckeElt) -> "DgaElt":
        zeros = (0,) * h.kappa
        return DgaElt(h.kappa, {PbwMono(zeros, w): c for w, c in h.terms.items()})

    # -- value semantics --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DgaElt):
            return NotImplemented
        return self.kappa == other.kappa and self.terms == other.terms

    def __repr__(self) -> str:
        body = ", ".join(
            f"x^{list(m.alpha)}T{list(m.w.oneline)}: {c}" for m, c in self.sorted_terms()
        )
        return f"DgaElt(kappa={self.kappa}, {{{body}}})"

    def sorted_terms(self) -> list[tuple[PbwMono, IntPoly]]:
        return sorted(self.terms.items(), key=lambda t: t[0].sort_key())

    # -- module structure ---------------------------------------------------

    def __add__(self, other: "DgaElt") -> "DgaElt":
        if self.kappa != other.kappa:
            raise ValueError("mismatched kappa")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return DgaElt(self.kappa, out)

    def __neg__(self) -> "DgaElt":
        return DgaElt(self.kappa, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "DgaElt") -> "DgaElt":
        return self + (-other)

    def scale(self, coeff: Scalar) -> "DgaElt":
        c = IntPoly.coerce(coeff)
        if c.is_zero():
            return DgaElt.zero(self.kappa)
        return DgaElt(self.kappa, {m: c * v for m, v in self.terms.items()})

    # -- grading -------------------------------------------------------------

    def degree(self) -> int | None:
        """Common cohomological degree, None for the zero element.

        Raises ValueError when the element is inhomogeneous.
        """
        degs = {m.degree for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element, degrees {sorted(degs)}")
        return degs.pop()

    def hecke_part(self) -> HeckeElt:
        """The element as a HeckeElt; requires x-degree 0 throughout."""
        out = {}
        for m, c in self.terms.items():
            if any(m.alpha):
                raise ValueError("element has positive x-degree")
            out[m.w] = c
        return HeckeElt(self.kappa, out)

    # -- io ---------------------------------------------------------------

    def to_json(self, cfg: DgaConfig | None = None) -> dict:
        doc: dict = {"kappa": self.kappa}
        if cfg is not None:
            doc["c"] = cfg.c.to_json()
        doc["terms"] = [
            {"alpha": list(m.alpha), "w": m.w.to_json(), "coeff": c.to_json()}
            for m, c in self.sorted_terms()
        ]
        return doc

    @staticmethod
    def from_json(data: Mapping) -> "DgaElt":
        kappa = int(data["kappa"])
        terms = {
            PbwMono(tuple(t["alpha"]), Perm.from_json(t["w"])): IntPoly.from_json(
                t["coeff"]
            )
            for t in data["terms"]
        }
        return DgaElt(kappa, terms)


# ---------------------------------------------------------------------------
# per-kappa rewriting caches
# ---------------------------------------------------------------------------

_IN_PROGRESS = object()


class _AlgCache:
    def __init__(self, kappa: int):
        self.kappa = kappa
        self.pull: dict[tuple[Perm, int], tuple[tuple[int, HeckeElt], ...]] = {}
        self.insert: dict[tuple[tuple[int, ...], int], object] = {}
        self.bracket: dict[tuple[int, int], HeckeElt] = {}
        self.rmul_x: dict[tuple[PbwMono, int], DgaElt] = {}


_ALG_LOCK = threading.Lock()
_ALG_CACHES: dict[int, _AlgCache] = {}


def _alg_cache(kappa: int) -> _AlgCache:
    cache = _ALG_CACHES.get(kappa)
    if cache is None:
        with _ALG_LOCK:
            cache = _ALG_CACHES.setdefault(kappa, _AlgCache(kappa))
    return cache


def clear_caches() -> None:
    """Drop all memoized rewriting data (results never depend on it)."""
    with _ALG_LOCK:
        _ALG_CACHES.clear()
        _D_CACHES.clear()


# ---------------------------------------------------------------------------
# pull: T_w x_j  ->  sum_m x_m h_m
# ---------------------------------------------------------------------------


def pull_word(word: Sequence[int], j: int, kappa: int) -> list[tuple[int, HeckeElt]]:
    """Move the generator word T_{i1}..T_{il} past x_j, one letter at a time.

    Letter rules: T_k x_k = x_{k+1} T_k + h x_k,
    T_k x_{k+1} = x_k T_k - h x_k, and T_k x_j = x_j T_k otherwise.
    Every output term has exactly one x.
    """
    if not 1 <= j <= kappa:
        raise IndexError(f"x index {j} out of range for kappa={kappa}")
    terms: dict[int, HeckeElt] = {j: HeckeElt.one(kappa)}
    for k in reversed(list(word)):
        new: dict[int, HeckeElt] = {}

        def _add(m: int, h: HeckeElt) -> None:
            cur = new.get(m)
            h = h if cur is None else cur + h
            if h.is_zero():
                new.pop(m, None)
            else:
                new[m] = h

        for m, h in terms.items():
            if m == k:
                _add(k + 1, hecke_mul_gen(h, k, "left"))
                _add(k, h.scale(HBAR))
            elif m == k + 1:
                _add(k, hecke_mul_gen(h, k, "left") - h.scale(HBAR))
            else:
                _add(m, hecke_mul_gen(h, k, "left"))
        terms = new
    return sorted(terms.items())


def pull(w: Perm, j: int) -> list[tuple[int, HeckeElt]]:
    """T_w x_j as sum_m x_m h_m, computed along the canonical reduced word."""
    cache = _alg_cache(w.kappa)
    key = (w, j)
    cached = cache.pull.get(key)
    if cached is None:
        cached = tuple(pull_word(reduced_word(w), j, w.kappa))
        cache.pull[key] = cached
    return list(cached)


# ---------------------------------------------------------------------------
# insert: x^alpha x_m  ->  normal form
# ---------------------------------------------------------------------------


def xx_bracket(j: int, k: int, kappa: int) -> HeckeElt:
    """The Hecke element B with x_k x_j = -x_j x_k B for j < k.

    B = (T_{j-1}..T_1)(T_{k-1}..T_2) T_1^2 (T_2^{-1}..T_{k-1}^{-1})
    (T_1^{-1}..T_{j-1}^{-1}); it specializes to 1 at h = 0.
    """
    if not 1 <= j < k <= kappa:
        raise IndexError(f"need 1 <= j < k <= kappa, got j={j}, k={k}")
    cache = _alg_cache(kappa)
    cached = cache.bracket.get((j, k))
    if cached is not None:
        return cached
    acc = HeckeElt.one(kappa)
    acc = hecke_mul_word(acc, range(j - 1, 0, -1), side="right")
    acc = hecke_mul_word(acc, range(k - 1, 1, -1), side="right")
    acc = hecke_mul_word(acc, (1, 1), side="right")
    for i in range(2, k):
        acc = hecke_mul_inverse_gen(acc, i, side="right")
    for i in range(1, j):
        acc = hecke_mul_inverse_gen(acc, i, side="right")
    cache.bracket[(j, k)] = acc
    return acc


def insert(alpha: Sequence[int], m: int, kappa: int) -> DgaElt:
    """Normal form of x^alpha x_m.

    In-order appends are free; otherwise the top x generator is swapped
    past x_m with the anticommutation bracket and the emitted Hecke
    factors are pushed back to the right.  Terminates because the
    appended letter's inversion count strictly drops (guarded by cycle
    detection on the memo table).
    """
    alpha = tuple(alpha)
    if not 1 <= m <= kappa:
        raise IndexError(f"x index {m} out of range for kappa={kappa}")
    k = 0
    for idx in range(kappa, 0, -1):
        if alpha[idx - 1] > 0:
            k = idx
            break
    if k == 0 or m >= k:
        out = list(alpha)
        out[m - 1] += 1
        return DgaElt.monomial(out, identity(kappa))
    cache = _alg_cache(kappa)
    key = (alpha, m)
    cached = cache.insert.get(key)
    if cached is _IN_PROGRESS:
        raise RuntimeError(f"insert cycle detected at alpha={alpha}, m={m}")
    if cached is not None:
        return cached  # type: ignore[return-value]
    cache.insert[key] = _IN_PROGRESS
    try:
        stripped = list(alpha)
        stripped[k - 1] -= 1
        res = insert(stripped, m, kappa)
        res = rmul_x(res, k)
        res = rmul_hecke(res, xx_bracket(m, k, kappa))
        res = -res
    except BaseException:
        del cache.insert[key]
        raise
    cache.insert[key] = res
    return res


# ---------------------------------------------------------------------------
# right multiplication by generators, keeping the accumulator normal
# ---------------------------------------------------------------------------


def _acc_add(acc: dict[PbwMono, IntPoly], mono: PbwMono, c: IntPoly) -> None:
    s = acc.get(mono)
    s = c if s is None else s + c
    if s.is_zero():
        acc.pop(mono, None)
    else:
        acc[mono] = s


def _acc_add_elt(
    acc: dict[PbwMono, IntPoly], elt: DgaElt, scale: IntPoly | None = None
) -> None:
    if scale is None:
        for mono, c in elt.terms.items():
            _acc_add(acc, mono, c)
    else:
        for mono, c in elt.terms.items():
            _acc_add(acc, mono, scale * c)


def rmul_gen(elt: DgaElt, i: int) -> DgaElt:
    """elt * T_i."""
    if not 1 <= i <= elt.kappa - 1:
        raise IndexError(f"generator index {i} out of range for kappa={elt.kappa}")
    out: dict[PbwMono, IntPoly] = {}
    for mono, c in elt.terms.items():
        wsi, lengthened = mul_gen_right(mono.w, i)
        _acc_add(out, PbwMono(mono.alpha, wsi), c)
        if not lengthened:
            _acc_add(out, mono, HBAR * c)
    return DgaElt._from_clean(elt.kappa, out)


def rmul_inverse_gen(elt: DgaElt, i: int) -> DgaElt:
    """elt * T_i^{-1} = elt * T_i - h elt."""
    out = dict(rmul_gen(elt, i).terms)
    for mono, c in elt.terms.items():
        _acc_add(out, mono, -(HBAR * c))
    return DgaElt._from_clean(elt.kappa, out)


def rmul_word(elt: DgaElt, word: Iterable[int]) -> DgaElt:
    for i in word:
        elt = rmul_gen(elt, i)
    return elt


def rmul_hecke(elt: DgaElt, h: HeckeElt) -> DgaElt:
    """elt * h for a Hecke element h, expanding h over its basis."""
    if elt.kappa != h.kappa:
        raise ValueError("mismatched kappa")
    out: dict[PbwMono, IntPoly] = {}
    for u, c in h.terms.items():
        _acc_add_elt(out, rmul_word(elt, reduced_word(u)), c)
    return DgaElt._from_clean(elt.kappa, out)


def _rmul_x_mono(mono: PbwMono, j: int, kappa: int) -> DgaElt:
    cache = _alg_cache(kappa)
    key = (mono, j)
    got = cache.rmul_x.get(key)
    if got is None:
        out: dict[PbwMono, IntPoly] = {}
        for m, h in pull(mono.w, j):
            part = insert(mono.alpha, m, kappa)
            _acc_add_elt(out, rmul_hecke(part, h))
        got = DgaElt._from_clean(kappa, out)
        cache.rmul_x[key] = got
    return got


def rmul_x(elt: DgaElt, j: int) -> DgaElt:
    """elt * x_j: pull each T_w past x_j, then insert into the x-monomial."""
    if not 1 <= j <= elt.kappa:
        raise IndexError(f"x index {j} out of range for kappa={elt.kappa}")
    out: dict[PbwMono, IntPoly] = {}
    for mono, c in elt.terms.items():
        _acc_add_elt(out, _rmul_x_mono(mono, j, elt.kappa), c)
    return DgaElt._from_clean(elt.kappa, out)


# ---------------------------------------------------------------------------
# normal form and product
# ---------------------------------------------------------------------------


def normal_form(word: GenWord, cfg: DgaConfig) -> DgaElt:
    """PBW expansion of a generator word, folded left to right."""
    kappa = cfg.kappa
    acc = DgaElt.one(kappa, word.prefactor)
    for kind, idx in word.letters:
        if acc.is_zero():
            break
        if kind == "T":
            acc = rmul_gen(acc, idx)
        elif kind == "Tinv":
            acc = rmul_inverse_gen(acc, idx)
        elif kind == "X":
            acc = rmul_x(acc, idx)
        else:
            raise ValueError(f"unknown generator kind {kind!r}")
    return acc


def dga_mul(a: DgaElt, b: DgaElt, cfg: DgaConfig | None = None) -> DgaElt:
    """Bilinear product of normal forms; associative with unit T_identity."""
    if a.kappa != b.kappa:
        raise ValueError(f"mismatched kappa: {a.kappa} vs {b.kappa}")
    out: dict[PbwMono, IntPoly] = {}
    for mono, c in b.terms.items():
        t = a
        for j in mono.x_letters():
            t = rmul_x(t, j)
        t = rmul_word(t, reduced_word(mono.w))
        _acc_add_elt(out, t, c)
    return DgaElt._from_clean(a.kappa, out)


# ---------------------------------------------------------------------------
# the differential
# ---------------------------------------------------------------------------


class _DCache:
    def __init__(self) -> None:
        self.dgen: dict[int, HeckeElt] = {}
        self.dmono: dict[PbwMono, DgaElt] = {}


_D_CACHES: dict[tuple[int, tuple[int, ...]], _DCache] = {}


def _d_cache(cfg: DgaConfig) -> _DCache:
    key = cfg.cache_key()
    cache = _D_CACHES.get(key)
    if cache is None:
        with _ALG_LOCK:
            cache = _D_CACHES.setdefault(key, _DCache())
    return cache


def d_generator_hecke(k: int, cfg: DgaConfig) -> HeckeElt:
    """d x_k as a Hecke element (the differential of x_k is x-free).

    d x_1 is the sphere twist minus c; d x_{k+1} = T_k^{-1} (d x_k) T_k^{-1}.
    """
    if not 1 <= k <= cfg.kappa:
        raise IndexError(f"x index {k} out of range for kappa={cfg.kappa}")
    cache = _d_cache(cfg)
    got = cache.dgen.get(k)
    if got is not None:
        return got
    if k == 1:
        val = theta(cfg.kappa) - HeckeElt.one(cfg.kappa, cfg.c)
    else:
        prev = d_generator_hecke(k - 1, cfg)
        tinv = t_inverse(k - 1, cfg.kappa)
        val = hecke_mul(tinv, hecke_mul(prev, tinv))
    cache.dgen[k] = val
    return val


def d_generator(k: int, cfg: DgaConfig) -> DgaElt:
    return DgaElt.from_hecke(d_generator_hecke(k, cfg))


def _d_monomial(mono: PbwMono, cfg: DgaConfig) -> DgaElt:
    cache = _d_cache(cfg)
    got = cache.dmono.get(mono)
    if got is not None:
        return got
    kappa = cfg.kappa
    letters = mono.x_letters()
    out: dict[PbwMono, IntPoly] = {}
    minus_one = IntPoly.const(-1)
    for p, jp in enumerate(letters):
        prefix = _alpha_of_letters(letters[:p], kappa)
        dg = d_generator_hecke(jp, cfg)
        t = DgaElt(kappa, {PbwMono(prefix, u): c for u, c in dg.terms.items()})
        for q in letters[p + 1 :]:
            t = rmul_x(t, q)
        t = rmul_word(t, reduced_word(mono.w))
        _acc_add_elt(out, t, None if p % 2 == 0 else minus_one)
    got = DgaElt._from_clean(kappa, out)
    cache.dmono[mono] = got
    return got


def differential(a: DgaElt, cfg: DgaConfig) -> DgaElt:
    """The degree +1 differential, extended Z[h]-linearly.

    On x_{j1}..x_{js} T_w it is the alternating sum over positions of
    replacing x_{jp} by its differential and renormalizing.
    """
    out: dict[PbwMono, IntPoly] = {}
    for mono, c in a.terms.items():
        _acc_add_elt(out, _d_monomial(mono, cfg), c)
    return DgaElt._from_clean(a.kappa, out)


def differential_of_word(word: GenWord, cfg: DgaConfig) -> DgaElt:
    """Leibniz applied letterwise to a generator word.

    Used to check that the differential respects the defining
    relations: relation-equivalent words must give equal results.
    """
    letters = word.letters
    acc = DgaElt.zero(cfg.kappa)
    x_seen = 0
    for p, (kind, idx) in enumerate(letters):
        if kind != "X":
            continue
        t = normal_form(GenWord(word.prefactor, letters[:p]), cfg)
        t = dga_mul(t, d_generator(idx, cfg), cfg)
        t = dga_mul(t, normal_form(GenWord(ONE, letters[p + 1 :]), cfg), cfg)
        acc = acc + (t if x_seen % 2 == 0 else -t)
        x_seen += 1
    return acc


def specialize_hbar(a: DgaElt, point: int) -> dict[PbwMono, int]:
    """Coefficient-wise evaluation at h = point; zero entries dropped."""
    out = {}
    for mono, c in a.terms.items():
        v = c(point)
        if v:
            out[mono] = v
    return out


# ---------------------------------------------------------------------------
# relation verification
# ---------------------------------------------------------------------------


def relation_suite(cfg: DgaConfig) -> list[tuple[str, DgaElt]]:
    """Normal-form residues of every defining and derived relation.

    Each entry is (name, residue); the algebra is consistent exactly
    when every residue is zero.
    """
    kappa = cfg.kappa
    nf = lambda *letters: normal_form(GenWord.of(*letters), cfg)
    T = lambda i: ("T", i)
    Tinv = lambda i: ("Tinv", i)
    X = lambda j: ("X", j)
    out: list[tuple[str, DgaElt]] = []

    for i in range(1, kappa):
        res = nf(T(i), T(i)) - DgaElt.one(kappa) - nf(T(i)).scale(HBAR)
        out.append((f"quadratic[i={i}]", res))
    for i in range(1, kappa - 1):
        res = nf(T(i), T(i + 1), T(i)) - nf(T(i + 1), T(i), T(i + 1))
        out.append((f"braid[i={i}]", res))
    for i in range(1, kappa):
        for j in range(i + 2, kappa):
            res = nf(T(i), T(j)) - nf(T(j), T(i))
            out.append((f"far_commute[i={i},j={j}]", res))
    for j in range(2, kappa):
        res = nf(X(1), T(j)) - nf(T(j), X(1))
        out.append((f"x1_commutes[j={j}]", res))
    if kappa >= 2:
        res = nf(Tinv(1), X(1), Tinv(1), X(1)) + nf(X(1), Tinv(1), X(1), T(1))
        out.append(("anticommutator", res))
    for k in range(1, kappa):
        res = nf(Tinv(k), X(k), Tinv(k)) - nf(X(k + 1))
        out.append((f"x_next[k={k}]", res))
        res = nf(T(k), X(k)) - nf(X(k + 1), T(k)) - nf(X(k)).scale(HBAR)
        out.append((f"Tx_up[k={k}]", res))
        res = nf(T(k), X(k + 1)) - nf(X(k), T(k)) + nf(X(k)).scale(HBAR)
        out.append((f"Tx_down[k={k}]", res))
        for j in range(1, kappa + 1):
            if j in (k, k + 1):
                continue
            res = nf(T(k), X(j)) - nf(X(j), T(k))
            out.append((f"Tx_commute[k={k},j={j}]", res))
    for j in range(1, kappa + 1):
        for k in range(j + 1, kappa + 1):
            ordered = rmul_hecke(
                dga_mul(DgaElt.x_gen(j, kappa), DgaElt.x_gen(k, kappa), cfg),
                xx_bracket(j, k, kappa),
            )
            res = nf(X(k), X(j)) + ordered
            out.append((f"xx_swap[j={j},k={k}]", res))

    for j in range(2, kappa):
        res = differential_of_word(
            GenWord.of(X(1), T(j)), cfg
        ) - differential_of_word(GenWord.of(T(j), X(1)), cfg)
        out.append((f"d_respects_x1_commutes[j={j}]", res))
    if kappa >= 2:
        res = differential_of_word(
            GenWord.of(Tinv(1), X(1), Tinv(1), X(1)), cfg
        ) + differential_of_word(GenWord.of(X(1), Tinv(1), X(1), T(1)), cfg)
        out.append(("d_respects_anticommutator", res))
    return out
