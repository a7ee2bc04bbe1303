"""Command-line surface: expression parsing, computations, reports.

Subcommands: nf, mul, diff, d2check, relations, betti, homology, h0,
basis, braid, skein, katok.  Exit status 0 on success and on PASS, 1 on
FAIL, 2 on usage or parse errors.  With --format json exactly one JSON
document goes to stdout; diagnostics go to stderr.

Expression grammar (h spells the deformation parameter; the Unicode
aliases are accepted on input only)::

    expr   := '-'? term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' signed-int)?
    atom   := 'T'int | 'x'int | 'h' | int | '(' expr ')'

Negative exponents are permitted only on T atoms.  Output term order is
degree, then the x-word, then the permutation, then powers of h, which
makes golden files stable.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .braid import BraidParseError, eval_braid, parse_braid, skein_residue
from .coeff import HBAR, ONE, IntPoly
from .dga import (
    DgaConfig,
    DgaElt,
    PbwMono,
    differential,
    dga_mul,
    relation_suite,
    rmul_gen,
    rmul_inverse_gen,
    rmul_x,
    specialize_hbar,
)
from .homology import (
    MatrixTooLarge,
    d_matrix,
    generic_betti,
    graded_basis,
    h0_presentation,
    specialized_homology,
)
from .katok import BoundaryHit, KatokParams, monotonicity_report
from .symgroup import reduced_word


# ---------------------------------------------------------------------------
# element formatting
# ---------------------------------------------------------------------------


def _monomial_factors(mono: PbwMono) -> list[str]:
    factors = []
    for j, e in enumerate(mono.alpha, start=1):
        if e == 1:
            factors.append(f"x{j}")
        elif e > 1:
            factors.append(f"x{j}^{e}")
    factors.extend(f"T{i}" for i in reduced_word(mono.w))
    return factors


def format_dga(elt: DgaElt) -> str:
    """Deterministic text form; round-trips through the parser."""
    if elt.is_zero():
        return "0"
    pieces: list[tuple[bool, str]] = []
    for mono, poly in elt.sorted_terms():
        mono_factors = _monomial_factors(mono)
        for k, c in enumerate(poly.coeffs):
            if c == 0:
                continue
            factors = []
            if abs(c) != 1:
                factors.append(str(abs(c)))
            if k == 1:
                factors.append("h")
            elif k > 1:
                factors.append(f"h^{k}")
            factors.extend(mono_factors)
            if not factors:
                factors.append("1")
            pieces.append((c < 0, "*".join(factors)))
    neg0, body0 = pieces[0]
    text = ("-" if neg0 else "") + body0
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


def format_specialized(terms: dict[PbwMono, int]) -> str:
    if not terms:
        return "0"
    pieces = []
    for mono, value in sorted(terms.items(), key=lambda t: t[0].sort_key()):
        factors = [] if abs(value) == 1 else [str(abs(value))]
        factors.extend(_monomial_factors(mono))
        if not factors:
            factors.append("1")
        pieces.append((value < 0, "*".join(factors)))
    neg0, body0 = pieces[0]
    text = ("-" if neg0 else "") + body0
    for neg, body in pieces[1:]:
        text += (" - " if neg else " + ") + body
    return text


# ---------------------------------------------------------------------------
# expression parsing
# ---------------------------------------------------------------------------


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"at byte {pos}: {message}")
        self.pos = pos


_OPS = set("+-*^()")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens: list[tuple[str, object, int]] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        pos = len(text[:i].encode("utf-8"))
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), pos))
            i = j
            continue
        if ch in ("T", "x"):
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ExprError(f"generator {ch!r} needs an index", pos)
            tokens.append(("gen", (ch, int(text[i + 1 : j])), pos))
            i = j
            continue
        if ch in ("h", "ħ"):  # 'h' or Unicode hbar letter
            tokens.append(("hbar", None, pos))
            i += 1
            continue
        if ch == "ℏ":  # Unicode planck symbol
            tokens.append(("hbar", None, pos))
            i += 1
            continue
        if ch in _OPS:
            tokens.append(("op", ch, pos))
            i += 1
            continue
        raise ExprError(f"unexpected character {ch!r}", pos)
    tokens.append(("end", None, len(text.encode("utf-8"))))
    return tokens


def _poly_pow(base: IntPoly, e: int) -> IntPoly:
    out = ONE
    for _ in range(e):
        out = out * base
    return out


class _Parser:
    def __init__(self, text: str, cfg: DgaConfig):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.cfg = cfg

    def _peek(self):
        return self.tokens[self.pos]

    def _next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse(self) -> DgaElt:
        elt = self._expr()
        kind, value, pos = self._peek()
        if kind != "end":
            raise ExprError(f"unexpected trailing input {value!r}", pos)
        return elt

    def _expr(self) -> DgaElt:
        negate = False
        kind, value, _ = self._peek()
        if kind == "op" and value == "-":
            self._next()
            negate = True
        acc = self._term()
        if negate:
            acc = -acc
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value in ("+", "-"):
                self._next()
                t = self._term()
                acc = acc + t if value == "+" else acc - t
            else:
                return acc

    def _term(self) -> DgaElt:
        acc = self._factor()
        while True:
            kind, value, _ = self._peek()
            if kind == "op" and value == "*":
                self._next()
                acc = dga_mul(acc, self._factor(), self.cfg)
            else:
                return acc

    def _signed_int(self) -> int:
        kind, value, pos = self._next()
        sign = 1
        if kind == "op" and value == "-":
            sign = -1
            kind, value, pos = self._next()
        if kind != "int":
            raise ExprError("expected an integer exponent", pos)
        return sign * value

    def _factor(self) -> DgaElt:
        base_kind, base_value, base_pos = self._next()
        power = None
        kind, value, _ = self._peek()
        if kind == "op" and value == "^":
            self._next()
            power = self._signed_int()
        return self._realize(base_kind, base_value, base_pos, power)

    def _realize(self, kind, value, pos, power) -> DgaElt:
        kappa = self.cfg.kappa
        if kind == "int":
            e = 1 if power is None else power
            if e < 0:
                raise ExprError("integer literals are not invertible", pos)
            return DgaElt.one(kappa, value**e)
        if kind == "hbar":
            e = 1 if power is None else power
            if e < 0:
                raise ExprError("h is not invertible", pos)
            return DgaElt.one(kappa, _poly_pow(HBAR, e))
        if kind == "gen":
            sym, idx = value
            e = 1 if power is None else power
            if sym == "T":
                if not 1 <= idx <= kappa - 1:
                    raise ExprError(
                        f"T{idx} out of range for kappa={kappa}", pos
                    )
                acc = DgaElt.one(kappa)
                step = rmul_gen if e >= 0 else rmul_inverse_gen
                for _ in range(abs(e)):
                    acc = step(acc, idx)
                return acc
            if not 1 <= idx <= kappa:
                raise ExprError(f"x{idx} out of range for kappa={kappa}", pos)
            if e < 0:
                raise ExprError("x generators are not invertible", pos)
            acc = DgaElt.one(kappa)
            for _ in range(e):
                acc = rmul_x(acc, idx)
            return acc
        if kind == "op" and value == "(":
            inner = self._expr()
            k2, v2, p2 = self._next()
            if not (k2 == "op" and v2 == ")"):
                raise ExprError("expected ')'", p2)
            kind2, v3, _ = self._peek()
            power = None
            if kind2 == "op" and v3 == "^":
                self._next()
                power = self._signed_int()
            if power is None:
                return inner
            if power < 0:
                raise ExprError("only T atoms may carry negative exponents", pos)
            acc = DgaElt.one(self.cfg.kappa)
            for _ in range(power):
                acc = dga_mul(acc, inner, self.cfg)
            return acc
        raise ExprError(f"unexpected token {value!r}", pos)


def parse_expr(text: str, cfg: DgaConfig) -> DgaElt:
    """Parse and evaluate an expression to PBW normal form."""
    return _Parser(text, cfg).parse()


def parse_scalar(text: str) -> IntPoly:
    """Parse a polynomial in h (used for the central parameter c)."""
    elt = _Parser(text, DgaConfig(1)).parse()
    poly = IntPoly()
    for mono, c in elt.terms.items():
        if any(mono.alpha) or not mono.w.is_identity():
            raise ExprError("expected a scalar polynomial in h", 0)
        poly = c
    return poly


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------


def _add_algebra_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--kappa", type=int, required=True, help="strand count")
    sp.add_argument("--c", default="1", help="central parameter (polynomial in h)")
    _add_output_opts(sp)


def _add_output_opts(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--threads", type=int, default=1)


def _parse_window(args) -> list[int]:
    if getattr(args, "window", None):
        text = args.window
        try:
            lo_s, hi_s = text.split("..")
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ExprError(f"bad window {text!r}, expected A..B", 0)
        return list(range(min(lo, hi), max(lo, hi) + 1))
    if getattr(args, "degree", None) is not None:
        return [args.degree]
    return [0]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spherehecke",
        description="Exact computations in the dga of sphere braids.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("nf", help="PBW normal form of an expression")
    _add_algebra_opts(sp)
    sp.add_argument("--hbar", type=int, default=None, help="evaluate at h = Q")
    sp.add_argument("expr")

    sp = sub.add_parser("mul", help="product of two expressions")
    _add_algebra_opts(sp)
    sp.add_argument("--hbar", type=int, default=None)
    sp.add_argument("expr1")
    sp.add_argument("expr2")

    sp = sub.add_parser("diff", help="apply the differential")
    _add_algebra_opts(sp)
    sp.add_argument("--hbar", type=int, default=None)
    sp.add_argument("expr")

    sp = sub.add_parser("d2check", help="verify d^2 = 0 on a basis range")
    _add_algebra_opts(sp)
    sp.add_argument("--maxdeg", type=int, default=2, help="max x-degree to check")

    sp = sub.add_parser("relations", help="residues of all defining relations")
    _add_algebra_opts(sp)

    sp = sub.add_parser("betti", help="generic Betti numbers over Q(h)")
    _add_algebra_opts(sp)
    sp.add_argument("--window", help="degree window A..B (e.g. -2..0)")
    sp.add_argument("--degree", type=int)

    sp = sub.add_parser("homology", help="Betti numbers and torsion at h = Q")
    _add_algebra_opts(sp)
    sp.add_argument("--window", help="degree window A..B")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--hbar", type=int, default=0)

    sp = sub.add_parser("h0", help="degree-0 cohomology presentation")
    _add_algebra_opts(sp)

    sp = sub.add_parser("basis", help="list a graded slice of the PBW basis")
    _add_algebra_opts(sp)
    sp.add_argument("-s", "--slice", type=int, dest="slice_s", help="x-degree s >= 0")
    sp.add_argument("--degree", type=int, help="cohomological degree <= 0")

    sp = sub.add_parser("braid", help="evaluate a braid word in the Hecke algebra")
    _add_algebra_opts(sp)
    sp.add_argument("word")

    sp = sub.add_parser("skein", help="check the crossing-change residues")
    _add_algebra_opts(sp)

    sp = sub.add_parser("katok", help="geodesic length/index report")
    _add_output_opts(sp)
    sp.add_argument("--lambda", dest="lam", default="13/21", help="rational in [0,1)")
    sp.add_argument("--epsilon", default="1/1000", help="rational in (0,1/2)")
    sp.add_argument("-N", "--max-index", type=int, default=10, dest="max_index")
    sp.add_argument("--tolerance", default=None, help="optional defect bound")

    return p


def _emit(args, text_lines: list[str], json_obj) -> str:
    if args.format == "json":
        return json.dumps(json_obj, indent=2) + "\n"
    return "\n".join(text_lines) + "\n"


def _config(args) -> DgaConfig:
    return DgaConfig(args.kappa, parse_scalar(args.c))


def _element_output(args, cfg: DgaConfig, elt: DgaElt, label: str) -> tuple[int, str]:
    if getattr(args, "hbar", None) is not None:
        spec = specialize_hbar(elt, args.hbar)
        obj = {
            "kappa": cfg.kappa,
            "hbar": args.hbar,
            "terms": [
                {"alpha": list(m.alpha), "w": m.w.to_json(), "value": str(v)}
                for m, v in sorted(spec.items(), key=lambda t: t[0].sort_key())
            ],
        }
        return 0, _emit(args, [format_specialized(spec)], obj)
    return 0, _emit(args, [format_dga(elt)], elt.to_json(cfg))


# ---------------------------------------------------------------------------
# subcommand implementations
# ---------------------------------------------------------------------------


def _cmd_nf(args) -> tuple[int, str]:
    cfg = _config(args)
    elt = parse_expr(args.expr, cfg)
    return _element_output(args, cfg, elt, "nf")


def _cmd_mul(args) -> tuple[int, str]:
    cfg = _config(args)
    a = parse_expr(args.expr1, cfg)
    b = parse_expr(args.expr2, cfg)
    return _element_output(args, cfg, dga_mul(a, b, cfg), "mul")


def _cmd_diff(args) -> tuple[int, str]:
    cfg = _config(args)
    elt = parse_expr(args.expr, cfg)
    return _element_output(args, cfg, differential(elt, cfg), "diff")


def _cmd_d2check(args) -> tuple[int, str]:
    cfg = _config(args)
    checked = 0
    failures = []
    for s in range(args.maxdeg + 1):
        for mono in graded_basis(cfg, s).monomials:
            elt = DgaElt(cfg.kappa, {mono: ONE})
            dd = differential(differential(elt, cfg), cfg)
            checked += 1
            if not dd.is_zero():
                failures.append(mono)
    ok = not failures
    lines = []
    if ok:
        lines.append(f"PASS ({checked} monomials checked)")
    else:
        lines.append(f"FAIL ({len(failures)} of {checked} monomials have d^2 != 0)")
        lines.extend(
            f"  alpha={list(m.alpha)} w={list(m.w.oneline)}" for m in failures[:10]
        )
    obj = {"checked": checked, "failures": len(failures), "pass": ok}
    return (0 if ok else 1), _emit(args, lines, obj)


def _cmd_relations(args) -> tuple[int, str]:
    cfg = _config(args)
    results = relation_suite(cfg)
    bad = [name for name, residue in results if not residue.is_zero()]
    lines = []
    for name, residue in results:
        status = "ok" if residue.is_zero() else "FAIL"
        lines.append(f"{status:4s} {name}")
    if bad:
        lines.append(f"FAIL ({len(bad)} of {len(results)} relations violated)")
    else:
        lines.append(f"PASS ({len(results)} relations)")
    obj = {
        "relations": [
            {"name": name, "zero": residue.is_zero()} for name, residue in results
        ],
        "pass": not bad,
    }
    return (0 if not bad else 1), _emit(args, lines, obj)


def _cmd_betti(args) -> tuple[int, str]:
    cfg = _config(args)
    window = _parse_window(args)
    table = generic_betti(cfg, window, threads=args.threads)
    degrees = sorted(table, reverse=True)
    lines = [f"degree {d}: betti {table[d]}" for d in degrees]
    obj = [{"degree": d, "betti": table[d]} for d in degrees]
    return 0, _emit(args, lines, obj)


def _cmd_homology(args) -> tuple[int, str]:
    cfg = _config(args)
    window = _parse_window(args)
    table = specialized_homology(cfg, window, args.hbar, threads=args.threads)
    degrees = sorted(table, reverse=True)
    lines = [
        f"degree {d}: betti {table[d][0]}, torsion {table[d][1]}" for d in degrees
    ]
    obj = [
        {"degree": d, "hbar": args.hbar, "betti": table[d][0], "torsion": table[d][1]}
        for d in degrees
    ]
    return 0, _emit(args, lines, obj)


def _cmd_h0(args) -> tuple[int, str]:
    cfg = _config(args)
    report = h0_presentation(cfg)
    lines = [report.presentation]
    lines.append(f"image generators: {len(report.generators)}")
    lines.append("reduced span:")
    for h in report.reduced_span:
        lines.append(f"  {format_dga(DgaElt.from_hecke(h))}")
    return 0, _emit(args, lines, report.to_json())


def _cmd_basis(args) -> tuple[int, str]:
    cfg = _config(args)
    if args.slice_s is not None:
        s = args.slice_s
    elif args.degree is not None:
        if args.degree > 0:
            raise ExprError("degree must be nonpositive", 0)
        s = -args.degree
    else:
        s = 0
    gb = graded_basis(cfg, s)
    lines = [
        "*".join(_monomial_factors(m)) or "1" for m in gb.monomials
    ]
    obj = {
        "kappa": cfg.kappa,
        "degree": gb.degree,
        "count": len(gb),
        "monomials": [
            {"alpha": list(m.alpha), "w": m.w.to_json()} for m in gb.monomials
        ],
    }
    return 0, _emit(args, lines, obj)


def _cmd_braid(args) -> tuple[int, str]:
    cfg = _config(args)
    word = parse_braid(args.word, cfg.kappa)
    val = eval_braid(word)
    elt = DgaElt.from_hecke(val)
    return 0, _emit(args, [format_dga(elt)], val.to_json())


def _cmd_skein(args) -> tuple[int, str]:
    cfg = _config(args)
    bad = []
    for i in range(1, cfg.kappa):
        if not skein_residue(i, cfg.kappa).is_zero():
            bad.append(i)
    ok = not bad
    lines = [
        f"PASS (skein residue 0 for i = 1..{cfg.kappa - 1})"
        if ok
        else f"FAIL (nonzero residues at {bad})"
    ]
    obj = {"kappa": cfg.kappa, "nonzero_residues": bad, "pass": ok}
    return (0 if ok else 1), _emit(args, lines, obj)


def _cmd_katok(args) -> tuple[int, str]:
    params = KatokParams(Fraction(args.lam), Fraction(args.epsilon))
    tol = None if args.tolerance is None else Fraction(args.tolerance)
    report = monotonicity_report(args.max_index, params, tol)
    lines = [
        f"lambda = {params.lam}, epsilon = {params.eps}, N = {args.max_index}"
    ]
    for e in report.entries:
        lines.append(
            f"{e.branch:5s} m={e.m:<3d} length={str(e.length):>12s}  index={e.index}"
        )
    lines.append(f"merged indices: {list(report.merged_indices)}")
    lines.append(f"consecutive without repeats: {report.indices_consecutive}")
    lines.append(f"max defect |ind/2 - length|: {report.max_defect}")
    lines.append(
        f"excluded geodesics longer than cutoff {report.length_cutoff}: "
        f"{report.excluded_lengths_exceed_cutoff}"
    )
    if tol is not None:
        lines.append(f"within tolerance {tol}: {report.within_tolerance}")
    ok = report.indices_consecutive and report.excluded_lengths_exceed_cutoff
    if tol is not None:
        ok = ok and bool(report.within_tolerance)
    return (0 if ok else 1), _emit(args, lines, report.to_json())


_COMMANDS = {
    "nf": _cmd_nf,
    "mul": _cmd_mul,
    "diff": _cmd_diff,
    "d2check": _cmd_d2check,
    "relations": _cmd_relations,
    "betti": _cmd_betti,
    "homology": _cmd_homology,
    "h0": _cmd_h0,
    "basis": _cmd_basis,
    "braid": _cmd_braid,
    "skein": _cmd_skein,
    "katok": _cmd_katok,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, execute, print; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        status, output = _COMMANDS[args.command](args)
    except (ExprError, BraidParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (BoundaryHit, MatrixTooLarge) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(output)
    return status


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
