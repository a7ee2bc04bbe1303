"""Graded slices, differential matrices, Betti numbers and torsion.

Z[h] is not a principal ideal domain, so no single normal form
classifies the cohomology as a Z[h]-module.  Three complementary exact
reports are produced instead: generic ranks over the fraction field
Q(h) by fraction-free (Bareiss) elimination, Smith normal forms of the
integer matrices obtained by specializing h, and explicit cofactor
certificates realizing the degree-0 image inside the two-sided ideal
generated by the sphere twist minus c.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence

from .coeff import ONE, IntPoly
from .dga import DgaConfig, DgaElt, PbwMono, _alpha_of_letters, differential
from .hecke import HeckeElt, hecke_mul, t_inverse, theta
from .symgroup import Perm, all_perms, reduced_word

MAX_DENSE_COLUMNS = 10_000


class MatrixTooLarge(ValueError):
    """Refusal to assemble a dense matrix beyond the supported size."""


@dataclass(frozen=True)
class GradedBasis:
    """The PBW monomials of one cohomological degree, in canonical order."""

    kappa: int
    degree: int
    monomials: tuple[PbwMono, ...]

    def index(self) -> dict[PbwMono, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    def __len__(self) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class ChainMatrix:
    """Matrix of the differential from degree -s to degree -s+1."""

    rows: GradedBasis
    cols: GradedBasis
    entries: tuple[tuple[IntPoly, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def to_json(self) -> dict:
        return {
            "rows": [
                {"alpha": list(m.alpha), "w": m.w.to_json()} for m in self.rows.monomials
            ],
            "cols": [
                {"alpha": list(m.alpha), "w": m.w.to_json()} for m in self.cols.monomials
            ],
            "entries": [[c.to_json() for c in row] for row in self.entries],
        }

    def to_text(self) -> str:
        cells = [[str(c) for c in row] for row in self.entries]
        if not cells:
            return "(empty matrix)"
        widths = [
            max(len(cells[r][c]) for r in range(len(cells)))
            for c in range(len(cells[0]))
        ]
        lines = [
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        ]
        return "\n".join(lines)


def slice_dimension(kappa: int, s: int) -> int:
    """kappa! * C(s + kappa - 1, kappa - 1), the PBW count in degree -s."""
    return math.factorial(kappa) * math.comb(s + kappa - 1, kappa - 1)


def graded_basis(cfg: DgaConfig, s: int) -> GradedBasis:
    """All PBW monomials of degree -s: x-words ascending, then permutations."""
    if s < 0:
        raise ValueError("s must be >= 0")
    kappa = cfg.kappa
    perms = list(all_perms(kappa))
    monos = []
    for letters in combinations_with_replacement(range(1, kappa + 1), s):
        alpha = _alpha_of_letters(letters, kappa)
        for w in perms:
            monos.append(PbwMono(alpha, w))
    assert len(monos) == slice_dimension(kappa, s)
    return GradedBasis(kappa, -s, tuple(monos))


def d_matrix(cfg: DgaConfig, s: int, threads: int = 1) -> ChainMatrix:
    """Coordinate matrix of the differential on the degree -s slice."""
    if s < 1:
        raise ValueError("s must be >= 1")
    cols = graded_basis(cfg, s)
    rows = graded_basis(cfg, s - 1)
    if len(cols) > MAX_DENSE_COLUMNS or len(rows) > MAX_DENSE_COLUMNS:
        raise MatrixTooLarge(
            f"dense slice would have {max(len(cols), len(rows))} columns "
            f"(limit {MAX_DENSE_COLUMNS})"
        )
    row_index = rows.index()
    zero = IntPoly()

    def column(mono: PbwMono) -> list[IntPoly]:
        image = differential(DgaElt(cfg.kappa, {mono: ONE}), cfg)
        col = [zero] * len(rows)
        for out_mono, coeff in image.terms.items():
            col[row_index[out_mono]] = coeff
        return col

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            columns = list(pool.map(column, cols.monomials))
    else:
        columns = [column(m) for m in cols.monomials]
    entries = tuple(
        tuple(columns[j][i] for j in range(len(cols))) for i in range(len(rows))
    )
    return ChainMatrix(rows, cols, entries)


# ---------------------------------------------------------------------------
# exact rank over Q(h): Bareiss fraction-free elimination
# ---------------------------------------------------------------------------


def bareiss_rank(entries: Sequence[Sequence[IntPoly]]) -> int:
    """Rank over the fraction field Q(h), by one-step fraction-free
    elimination with full pivoting.

    Pivot choice: lowest-degree nonzero entry, ties broken by smallest
    coefficient height, then by position.  Divisions by the previous
    pivot are exact (Sylvester identity); a non-exact division would
    signal a pivoting bug and raises.
    """
    m = [list(row) for row in entries]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = ONE
    while rank < nrows and rank < ncols:
        best = None
        best_key = None
        for r in range(rank, nrows):
            row = m[r]
            for c in range(rank, ncols):
                e = row[c]
                if e.is_zero():
                    continue
                key = (e.degree, e.height(), r, c)
                if best_key is None or key < best_key:
                    best, best_key = (r, c), key
        if best is None:
            break
        pr, pc = best
        if pr != rank:
            m[pr], m[rank] = m[rank], m[pr]
        if pc != rank:
            for row in m:
                row[pc], row[rank] = row[rank], row[pc]
        piv = m[rank][rank]
        for r in range(rank + 1, nrows):
            lead = m[r][rank]
            row = m[r]
            prow = m[rank]
            for c in range(rank + 1, ncols):
                row[c] = (piv * row[c] - lead * prow[c]).divexact(prev)
            row[rank] = IntPoly()
        prev = piv
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# integer specialization: Smith normal form
# ---------------------------------------------------------------------------


def specialize_matrix(mat: ChainMatrix, point: int) -> list[list[int]]:
    return [[c(point) for c in row] for row in mat.entries]


def smith_divisors(entries: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form, ascending."""
    nrows = len(entries)
    ncols = len(entries[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return []
    if all(e == 0 for row in entries for e in row):
        return []
    from sympy import ZZ, Matrix
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(Matrix(entries), domain=ZZ)
    divisors = []
    for i in range(min(snf.rows, snf.cols)):
        d = int(snf[i, i])
        if d != 0:
            divisors.append(abs(d))
    return sorted(divisors)


def _windowed_ranks(
    cfg: DgaConfig,
    degrees: Sequence[int],
    rank_of: "callable",
    threads: int = 1,
) -> tuple[dict[int, int], dict[int, int], dict[int, list[int]]]:
    """Per-degree slice dimensions and outgoing/incoming data.

    rank_of maps a ChainMatrix to (rank, divisors); the incoming matrix
    for the lowest degree is fetched automatically.
    """
    dims = {d: slice_dimension(cfg.kappa, -d) for d in degrees}
    needed_s = sorted({-d for d in degrees if -d >= 1} | {-min(degrees) + 1})
    ranks: dict[int, int] = {0: 0}
    divisors: dict[int, list[int]] = {}
    for s in needed_s:
        mat = d_matrix(cfg, s, threads=threads)
        r, div = rank_of(mat)
        ranks[s] = r
        divisors[s] = div
    return dims, ranks, divisors


def _validate_window(degrees: Iterable[int]) -> list[int]:
    ds = sorted(set(int(d) for d in degrees))
    if not ds:
        raise ValueError("window empty")
    if any(d > 0 for d in ds):
        raise ValueError("degrees must be nonpositive")
    if ds != list(range(ds[0], ds[-1] + 1)):
        raise ValueError("window must be a consecutive range of degrees")
    return ds


def generic_betti(
    cfg: DgaConfig, degrees: Iterable[int], threads: int = 1
) -> dict[int, int]:
    """Betti numbers of the complex over the fraction field Q(h)."""
    ds = _validate_window(degrees)

    def rank_of(mat: ChainMatrix):
        return bareiss_rank(mat.entries), []

    dims, ranks, _ = _windowed_ranks(cfg, ds, rank_of, threads=threads)
    out = {}
    for d in ds:
        s = -d
        out[d] = dims[d] - ranks.get(s, 0) - ranks.get(s + 1, 0)
    return out


def specialized_homology(
    cfg: DgaConfig, degrees: Iterable[int], point: int, threads: int = 1
) -> dict[int, tuple[int, list[int]]]:
    """Free rank and torsion of each cohomology group at h = point.

    Returns degree -> (betti, elementary divisors != 1 of the incoming
    map, which carry the torsion of the subquotient).
    """
    ds = _validate_window(degrees)

    def rank_of(mat: ChainMatrix):
        ints = specialize_matrix(mat, point)
        div = smith_divisors(ints)
        return len(div), div

    dims, ranks, divisors = _windowed_ranks(cfg, ds, rank_of, threads=threads)
    out = {}
    for d in ds:
        s = -d
        betti = dims[d] - ranks.get(s, 0) - ranks.get(s + 1, 0)
        torsion = [t for t in divisors.get(s + 1, []) if t != 1]
        out[d] = (betti, torsion)
    return out


# ---------------------------------------------------------------------------
# the degree-0 cohomology presentation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ImageGenerator:
    """d(m) for a degree -1 basis monomial, with its ideal certificate.

    value = left * (theta - c) * right exhibits membership in the
    two-sided ideal generated by theta - c.
    """

    monomial: PbwMono
    value: HeckeElt
    left: HeckeElt
    right: HeckeElt


@dataclass(frozen=True)
class H0Report:
    kappa: int
    c: IntPoly
    generators: tuple[ImageGenerator, ...]
    reduced_span: tuple[HeckeElt, ...]
    presentation: str

    def to_json(self) -> dict:
        return {
            "kappa": self.kappa,
            "c": self.c.to_json(),
            "image_generators": [
                {
                    "monomial": {
                        "alpha": list(g.monomial.alpha),
                        "w": g.monomial.w.to_json(),
                    },
                    "value": g.value.to_json(),
                    "left_cofactor": g.left.to_json(),
                    "right_cofactor": g.right.to_json(),
                }
                for g in self.generators
            ],
            "reduced_span": [h.to_json() for h in self.reduced_span],
            "presentation": self.presentation,
        }


def _vector_of(h: HeckeElt, order: Sequence[Perm]) -> list[IntPoly]:
    zero = IntPoly()
    return [h.terms.get(w, zero) for w in order]


def _pivot(vec: Sequence[IntPoly]) -> int | None:
    for i, c in enumerate(vec):
        if not c.is_zero():
            return i
    return None


def _vec_key(vec: Sequence[IntPoly]):
    p = _pivot(vec)
    lead = vec[p]
    return (p, lead.degree, lead.height(), tuple(c.coeffs for c in vec))


def span_reduce(
    vectors: Iterable[Sequence[IntPoly]], max_passes: int = 8
) -> list[list[IntPoly]]:
    """Span-preserving cleanup of a list of Z[h]-vectors.

    Repeatedly cancels coordinates by exact division and reduces
    leading degrees by monomial division.  Z[h] is not a PID, so the
    result is a reduced generating set, not a canonical form.
    """
    work = []
    for v in vectors:
        v = list(v)
        p = _pivot(v)
        if p is None:
            continue
        if v[p].coeffs[-1] < 0:
            v = [-c for c in v]
        work.append(v)
    for _ in range(max_passes):
        work = [v for v in work if _pivot(v) is not None]
        dedup = {tuple(c.coeffs for c in v): v for v in sorted(work, key=_vec_key)}
        work = list(dedup.values())
        changed = False
        for i, vi in enumerate(work):
            pi = _pivot(vi)
            if pi is None:
                continue
            lead_i = vi[pi]
            for j, vj in enumerate(work):
                if i == j or _pivot(vj) is None:
                    continue
                target = vj[pi]
                if target.is_zero():
                    continue
                pj = _pivot(vj)
                if pj > pi:
                    continue
                try:
                    q = target.divexact(lead_i)
                except ArithmeticError:
                    if (
                        target.degree >= lead_i.degree
                        and target.coeffs[-1] % lead_i.coeffs[-1] == 0
                    ):
                        q = IntPoly.monomial(
                            target.coeffs[-1] // lead_i.coeffs[-1],
                            target.degree - lead_i.degree,
                        )
                    else:
                        continue
                if q.is_zero():
                    continue
                for c in range(len(vj)):
                    vj[c] = vj[c] - q * vi[c]
                changed = True
        if not changed:
            break
    work = [v for v in work if _pivot(v) is not None]
    for v in work:
        p = _pivot(v)
        if v[p].coeffs[-1] < 0:
            for c in range(len(v)):
                v[c] = -v[c]
    return sorted(work, key=_vec_key)


def h0_presentation(cfg: DgaConfig) -> H0Report:
    """Image generators of the differential into degree 0, certified to
    lie in the two-sided ideal generated by the sphere twist minus c,
    plus a reduced Z[h]-generating set of their span.
    """
    kappa = cfg.kappa
    core = theta(kappa) - HeckeElt.one(kappa, cfg.c)
    basis1 = graded_basis(cfg, 1)
    order = list(all_perms(kappa))
    gens = []
    for mono in basis1.monomials:
        j = mono.x_letters()[0]
        value = differential(DgaElt(kappa, {mono: ONE}), cfg).hecke_part()
        left = HeckeElt.one(kappa)
        right = HeckeElt.one(kappa)
        for i in range(j - 1, 0, -1):
            left = hecke_mul(left, t_inverse(i, kappa))
        for i in range(1, j):
            right = hecke_mul(right, t_inverse(i, kappa))
        right = hecke_mul(right, HeckeElt.basis(mono.w))
        check = hecke_mul(left, hecke_mul(core, right))
        if check != value:
            raise RuntimeError(
                f"ideal certificate failed for monomial {mono}; rewriting bug"
            )
        gens.append(ImageGenerator(mono, value, left, right))
    reduced_vectors = span_reduce(_vector_of(g.value, order) for g in gens)
    reduced = tuple(
        HeckeElt(kappa, {w: c for w, c in zip(order, vec) if not c.is_zero()})
        for vec in reduced_vectors
    )
    presentation = f"H^0 = HeckeFin({kappa}) / <twist - c>, c = {cfg.c}"
    return H0Report(kappa, cfg.c, tuple(gens), reduced, presentation)
