"""Command-line interface: ``repst <subcommand> ... [--json]``.

Exit status is 0 on success, 2 on a usage or input error and 1 when a
computation is refused (natural-number parameter, size bound exceeded);
refusals print ``{"error": ...}`` on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

from . import serialization as ser
from .characters import (
    StabilizationError,
    character_value,
    generator_power_multiplicities,
    induction_multiplicity,
    lr_coefficient,
    stable_tensor_multiplicity,
)
from .combinatorics import Partition, as_partition, bell_number, hook_dimension, size
from .diagrams import (
    BudgetExceeded,
    compose,
    end_dimension,
    gram_det,
    to_orbit_basis,
    trace,
)
from .exact_arith import (
    AlgebraicNumber,
    Poly,
    binomial_basis_coefficients,
    content_polynomial,
    det,
    factor_rational_roots,
    format_linear_factors,
    format_poly,
    is_integer_valued,
    q_polynomial,
    q_polynomial_lead,
    q_polynomial_roots,
)
from .interp import (
    Counterexample,
    InterpolationPoint,
    NaturalParameterError,
    VirtualObject,
    chi_schur_both_ways,
    euler_char_simple,
    integrality_failures,
    reproduce_section7,
    schur_idempotent,
    search_counterexample,
    tensor_decompose,
)
from .superlinear import InvalidPresentation, SuperDim, is_etale, schur_vanishes_super, super_schur_dim, supertrace_form


class UsageError(Exception):
    """Bad input discovered after argument parsing (unreadable file, bad schema)."""


class Refusal(Exception):
    """The computation is well-formed but deliberately not carried out."""


# ---------------------------------------------------------------- argument types


def parse_partition(s: str) -> Partition:
    """'2,1' -> (2, 1); 'empty' or '0' -> ()."""
    s = s.strip()
    if s in ("empty", "0", ""):
        return ()
    try:
        return as_partition(int(x) for x in s.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid partition {s!r}: {exc}") from None


def parse_rational(s: str) -> Fraction:
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid rational {s!r}") from None


def _parse_coeffs(s: str) -> Poly:
    return Poly([parse_rational(x) for x in s.split(",")])


def parse_t_spec(s: str, warn: Callable[[str], None] | None = None) -> InterpolationPoint:
    """'int:k', 'rat:a/b' or 'alg:<modulus coeffs>:<rep coeffs>' (ascending, comma separated)."""
    kind, _, rest = s.partition(":")
    if kind == "int":
        try:
            return InterpolationPoint.of(int(rest))
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer in t spec {s!r}") from None
    if kind == "rat":
        return InterpolationPoint.of(parse_rational(rest))
    if kind == "alg":
        mod_s, sep, rep_s = rest.partition(":")
        if not sep:
            raise argparse.ArgumentTypeError(f"alg spec needs modulus and representative: {s!r}")
        modulus, rep = _parse_coeffs(mod_s), _parse_coeffs(rep_s)
        if modulus.degree < 1:
            raise argparse.ArgumentTypeError(f"modulus must have degree at least 1: {s!r}")
        if modulus.degree > 1:
            fac = factor_rational_roots(modulus)
            if fac.roots and warn is not None:
                roots = ", ".join(str(r) for r, _ in fac.roots)
                warn(f"warning: modulus {format_poly(modulus)} is reducible (rational roots {roots})")
        return InterpolationPoint(AlgebraicNumber(modulus, rep))
    raise argparse.ArgumentTypeError(f"t spec must start with int:, rat: or alg:, got {s!r}")


def _t_spec_type(s: str) -> InterpolationPoint:
    return parse_t_spec(s, warn=lambda msg: print(msg, file=sys.stderr))


def _chi_value(s: str):
    if ":" in s:
        return _t_spec_type(s).value
    return parse_rational(s)


def _nonneg_int(s: str) -> int:
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {s!r}")
    return n


def _load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from None


def _decode(decoder, path: str):
    try:
        return decoder(_load_json(path))
    except (ser.SchemaError, InvalidPresentation) as exc:
        raise UsageError(f"{path}: {exc}") from None


# ---------------------------------------------------------------- output helpers


def _poly_block(p: Poly, factored: str | None = None) -> dict:
    out = {"poly": ser.poly_to_json(p), "expanded": format_poly(p)}
    if factored is not None:
        out["factored"] = factored
    return out


def _factored(p: Poly) -> str:
    """Factored form over Q: linear factors with roots in descending order, then the cofactor."""
    if p.is_zero() or p.degree < 1:
        return format_poly(p)
    fac = factor_rational_roots(p)
    roots = [r for r, k in sorted(fac.roots, reverse=True) for _ in range(k)]
    cof = fac.cofactor
    if cof.is_constant():
        return format_linear_factors(cof.lead, roots)
    return format_linear_factors(cof.lead, roots, cof.monic())


def _algnum(a: AlgebraicNumber) -> dict:
    out = ser.algnum_to_json(a)
    out["value"] = str(a.as_fraction()) if a.is_rational() else format_poly(a.rep)
    return out


# ---------------------------------------------------------------- commands
# Each returns (json payload, human text).


def cmd_dim(a):
    d = hook_dimension(a.partition)
    return {"partition": list(a.partition), "dim": d}, str(d)


def cmd_char(a):
    if size(a.partition) != size(a.cls):
        raise UsageError(f"|lam| = {size(a.partition)} but the cycle type has size {size(a.cls)}")
    v = character_value(a.partition, a.cls)
    return {"partition": list(a.partition), "class": list(a.cls), "value": v}, str(v)


def cmd_cp(a):
    p = content_polynomial(a.partition)
    f = _factored(p)
    return {"partition": list(a.partition), **_poly_block(p, f)}, f"{format_poly(p)}\n= {f}"


def cmd_qpoly(a):
    lam = a.partition
    p = q_polynomial(lam)
    f = format_linear_factors(q_polynomial_lead(lam), q_polynomial_roots(lam))
    return {"partition": list(lam), **_poly_block(p, f)}, f"{format_poly(p)}\n= {f}"


def cmd_ivp(a):
    p = a.poly
    ok = is_integer_valued(p)
    coeffs = binomial_basis_coefficients(p)
    payload = {"poly": ser.poly_to_json(p), "expanded": format_poly(p), "integer_valued": ok,
               "binomial_coeffs": [str(c) for c in coeffs]}
    return payload, f"{format_poly(p)}\ninteger-valued: {'yes' if ok else 'no'}"


def cmd_chi_schur(a):
    lam = a.partition
    if a.chi is None:
        cyc, con = chi_schur_both_ways(lam)
        payload = {"partition": list(lam), "cycle_sum": _poly_block(cyc), "content": _poly_block(con),
                   "agree": cyc == con}
        text = f"cycle sum: {format_poly(cyc)}\ncontent:   {format_poly(con)}\nagree: {cyc == con}"
        return payload, text
    cyc, con = chi_schur_both_ways(lam, a.chi)

    def enc(x):
        return _algnum(x) if isinstance(x, AlgebraicNumber) else str(x)

    payload = {"partition": list(lam), "chi": enc(a.chi), "cycle_sum": enc(cyc), "content": enc(con),
               "agree": cyc == con}
    text = f"cycle sum: {cyc}\ncontent:   {con}\nagree: {cyc == con}"
    return payload, text


def _triple(a):
    return {"lambda": list(a.lam), "mu": list(a.mu), "nu": list(a.nu)}


def cmd_lr(a):
    c = lr_coefficient(a.lam, a.mu, a.nu)
    return {**_triple(a), "coefficient": c}, str(c)


def cmd_induct(a):
    if size(a.nu) != size(a.lam) + size(a.mu):
        raise UsageError("need |nu| = |lambda| + |mu|")
    c = induction_multiplicity(a.lam, a.mu, a.nu)
    return {**_triple(a), "multiplicity": c}, str(c)


def cmd_stable_kron(a):
    c = stable_tensor_multiplicity(a.lam, a.mu, a.nu)
    return {**_triple(a), "multiplicity": c}, str(c)


def cmd_gen_power(a):
    if a.n > 6:
        raise Refusal(f"gen-power is limited to n <= 6, got {a.n}")
    mults = generator_power_multiplicities(a.n)
    length = sum(mults.values())
    squares = sum(v * v for v in mults.values())
    payload = {"n": a.n, "multiplicities": ser.multiplicities_to_json(mults), "length": length,
               "sum_squares": squares, "bell_2n": bell_number(2 * a.n)}
    lines = [f"{_fmt_partition(lam)}: {k}" for lam, k in mults.items()]
    lines += [f"length: {length}", f"sum of squares: {squares} (Bell({2 * a.n}) = {bell_number(2 * a.n)})"]
    return payload, "\n".join(lines)


def _fmt_partition(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")" if lam else "()"


def _morphism_text(f) -> str:
    if f.is_zero():
        return f"0 ({f.top} -> {f.bottom}, {f.basis} basis)"
    lines = [f"{f.top} -> {f.bottom}, {f.basis} basis"]
    for d, c in sorted(f.terms.items()):
        lines.append(f"  [{format_poly(c)}] {d}")
    return "\n".join(lines)


def cmd_palg_compose(a):
    g = _decode(ser.morphism_from_json, a.g)
    f = _decode(ser.morphism_from_json, a.f)
    if f.bottom != g.top:
        raise UsageError(f"cannot compose: f ends at {f.bottom} strands, g starts at {g.top}")
    h = compose(g, f)
    return ser.morphism_to_json(h), _morphism_text(h)


def cmd_palg_trace(a):
    f = _decode(ser.morphism_from_json, a.file)
    if f.top != f.bottom:
        raise UsageError("trace needs an endomorphism (top == bottom)")
    p = trace(f)
    return _poly_block(p, _factored(p)), format_poly(p)


def cmd_palg_gram(a):
    if a.n > 3:
        raise Refusal(f"Gram determinants are supported up to n = 3, got {a.n}")
    try:
        p = gram_det(a.n)
    except BudgetExceeded as exc:
        raise Refusal(str(exc)) from None
    fac = factor_rational_roots(p)
    payload = {"n": a.n, "degree": p.degree, **_poly_block(p, _factored(p)),
               "roots": [{"root": str(r), "multiplicity": k} for r, k in fac.roots],
               "roots_natural": all(r.denominator == 1 and r >= 0 for r, _ in fac.roots)}
    return payload, _factored(p)


def cmd_palg_end_dim(a):
    if a.n > 5:
        raise Refusal(f"end-dim enumerates diagrams and is limited to n <= 5, got {a.n}")
    d = end_dimension(a.n)
    return {"n": a.n, "dim": d}, str(d)


def cmd_palg_to_orbit(a):
    f = _decode(ser.morphism_from_json, a.file)
    if f.basis != "diagram":
        raise UsageError("input is already in the orbit basis")
    h = to_orbit_basis(f)
    return ser.morphism_to_json(h), _morphism_text(h)


def cmd_schur_idem(a):
    if size(a.partition) > 5:
        raise Refusal("schur-idem is limited to |lambda| <= 5")
    e = schur_idempotent(a.partition)
    tr = trace(e)
    payload = {"partition": list(a.partition), "idempotent": ser.morphism_to_json(e), "trace": _poly_block(tr)}
    return payload, f"{len(e.terms)} permutation diagrams\ntrace: {format_poly(tr)}"


def cmd_euler(a):
    chi = euler_char_simple(a.partition, a.t)
    return {"partition": list(a.partition), "t": _algnum(a.t.value), "chi": _algnum(chi)}, str(chi)


def cmd_tensor_decomp(a):
    a.t.require_generic()
    prod = tensor_decompose(VirtualObject.simple(a.lam), VirtualObject.simple(a.mu))
    rows = []
    lines = []
    for nu, k in prod:
        chi = euler_char_simple(nu, a.t)
        rows.append({"partition": list(nu), "mult": k, "chi": _algnum(chi)})
        lines.append(f"{_fmt_partition(nu)}: {k}  chi = {chi}")
    return {"lambda": list(a.lam), "mu": list(a.mu), "t": _algnum(a.t.value), "summands": rows}, "\n".join(lines)


def _object_from_json(obj) -> VirtualObject:
    if isinstance(obj, dict) and "terms" in obj:
        obj = obj["terms"]
    return VirtualObject(ser.multiplicities_from_json(obj))


def cmd_integrality(a):
    x = _decode(_object_from_json, a.object)
    fails = integrality_failures(x, a.t)
    witness = fails[0] if fails else None

    def enc(f):
        return {"partition": list(f.partition), "mult": f.multiplicity, "chi": _algnum(f.chi)}

    payload = {"object": ser.multiplicities_to_json(x.terms), "t": _algnum(a.t.value), "integral": not fails,
               "witness": enc(witness) if witness else None, "failures": [enc(f) for f in fails]}
    text = "integral type" if not fails else \
        f"not integral: witness {_fmt_partition(witness.partition)} with chi = {witness.chi}"
    return payload, text


def cmd_super_schur(a):
    d = SuperDim(a.p, a.q)
    try:
        n = super_schur_dim(a.partition, d)
    except ValueError as exc:
        raise Refusal(str(exc)) from None
    v = schur_vanishes_super(a.partition, d)
    return {"partition": list(a.partition), "p": a.p, "q": a.q, "dim": n, "vanishes": v}, str(n)


def cmd_etale_check(a):
    alg = _decode(ser.superalgebra_from_json, a.file)
    form = supertrace_form(alg)
    dt = det(form) if form else Fraction(1)
    et = is_etale(alg)
    payload = {"p": alg.p, "q": alg.q, "form": [[str(x) for x in row] for row in form], "det": str(dt),
               "etale": et, "euler_char": alg.p - alg.q}
    return payload, f"det = {dt}\netale: {'yes' if et else 'no'}"


def cmd_section7(a):
    rep = reproduce_section7()
    payload = ser.report_to_json(rep)
    lines = [f"{s['name']}: {_step_text(s['value'])}" for s in rep.steps] + [f"verdict: {rep.verdict}"]
    return payload, "\n".join(lines)


def _step_text(v) -> str:
    if isinstance(v, dict):
        return "; ".join(f"{k} = {_step_text(x)}" for k, x in v.items())
    if isinstance(v, list):
        return _fmt_partition(v)
    return str(v)


def cmd_search_cx(a):
    try:
        res = search_counterexample(a.partition, a.target)
    except ValueError as exc:
        raise Refusal(str(exc)) from None
    base = {"partition": list(a.partition), "target": a.target}
    if res is None:
        return {**base, "result": "none"}, "no counterexample"
    if isinstance(res, str):
        return {**base, "result": res}, res
    assert isinstance(res, Counterexample)
    payload = {**base, "result": "found", "modulus": ser.poly_to_json(res.modulus),
               "modulus_text": format_poly(res.modulus), "witness": list(res.witness), "chi": _algnum(res.chi)}
    text = (f"t = root of {format_poly(res.modulus)}\n"
            f"witness {_fmt_partition(res.witness)} with chi = {res.chi}")
    return payload, text


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="repst", description="Exact computations in Deligne's category Rep(S_t).",
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, parent=sub):
        p = parent.add_parser(name, help=help_text, parents=[common], description=help_text)
        p.set_defaults(func=func)
        return p

    p = add("dim", cmd_dim, "dimension of the Specht module V_lambda")
    p.add_argument("partition", type=parse_partition)
    p = add("char", cmd_char, "character value chi_lambda at cycle type rho")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("cls", metavar="rho", type=parse_partition)
    p = add("cp", cmd_cp, "content polynomial")
    p.add_argument("partition", type=parse_partition)
    p = add("qpoly", cmd_qpoly, "Euler characteristic polynomial Q_lambda")
    p.add_argument("partition", type=parse_partition)
    p = add("ivp", cmd_ivp, "integer-valuedness of a polynomial given by ascending coefficients, e.g. 0,8/3,-2,1/3")
    p.add_argument("poly", type=_poly_arg)
    p = add("chi-schur", cmd_chi_schur, "Euler characteristic of the isotypic Schur functor, two ways")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("--chi", type=_chi_value, default=None, help="value of chi(X): a rational or a t spec")
    for name, func, text in (("lr", cmd_lr, "Littlewood-Richardson coefficient"),
                             ("induct", cmd_induct, "multiplicity of V_nu in Ind(V_lambda x V_mu)"),
                             ("stable-kron", cmd_stable_kron, "stable Kronecker coefficient")):
        p = add(name, func, text)
        p.add_argument("lam", metavar="lambda", type=parse_partition)
        p.add_argument("mu", type=parse_partition)
        p.add_argument("nu", type=parse_partition)
    p = add("gen-power", cmd_gen_power, "decomposition of the n-th tensor power of the generator")
    p.add_argument("n", type=_nonneg_int)

    palg = sub.add_parser("palg", help="partition category computations", parents=[common])
    psub = palg.add_subparsers(dest="palg_command", required=True, metavar="SUBCOMMAND")
    p = add("compose", cmd_palg_compose, "composite g o f of two morphism files", psub)
    p.add_argument("g", metavar="G_FILE")
    p.add_argument("f", metavar="F_FILE")
    p = add("trace", cmd_palg_trace, "categorical trace of an endomorphism", psub)
    p.add_argument("file")
    p = add("gram", cmd_palg_gram, "determinant of the trace form on End([1]^n)", psub)
    p.add_argument("n", type=_nonneg_int)
    p = add("end-dim", cmd_palg_end_dim, "dimension of End([1]^n)", psub)
    p.add_argument("n", type=_nonneg_int)
    p = add("to-orbit", cmd_palg_to_orbit, "rewrite a morphism in the orbit basis", psub)
    p.add_argument("file")

    p = add("schur-idem", cmd_schur_idem, "isotypic Schur idempotent in End([1]^n)")
    p.add_argument("partition", type=parse_partition)
    p = add("euler", cmd_euler, "Euler characteristic of [lambda]_t")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("--t", required=True, type=_t_spec_type)
    p = add("tensor-decomp", cmd_tensor_decomp, "decompose [lambda]_t (x) [mu]_t")
    p.add_argument("lam", metavar="lambda", type=parse_partition)
    p.add_argument("mu", type=parse_partition)
    p.add_argument("--t", required=True, type=_t_spec_type)
    p = add("integrality", cmd_integrality, "integral-type test for a semisimple object")
    p.add_argument("--object", required=True, metavar="FILE")
    p.add_argument("--t", required=True, type=_t_spec_type)
    p = add("super-schur", cmd_super_schur, "dimension of S_lambda on a (p|q) super vector space")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("p", type=_nonneg_int)
    p.add_argument("q", type=_nonneg_int)
    p = add("etale-check", cmd_etale_check, "supertrace form and etaleness of a superalgebra")
    p.add_argument("file")
    add("section7", cmd_section7, "tensor square of an integral-type object that is not of integral type")
    p = add("search-cx", cmd_search_cx, "search for t making [lambda]_t (x) [lambda]_t non-integral")
    p.add_argument("partition", type=parse_partition)
    p.add_argument("--target", required=True, type=int)
    return parser


def _poly_arg(s: str) -> Poly:
    s = s.strip()
    if s.startswith("{"):
        try:
            return ser.poly_from_json(json.loads(s))
        except (json.JSONDecodeError, ser.SchemaError) as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    return _parse_coeffs(s)


def _emit(stream, payload, text: str, as_json: bool) -> None:
    if as_json:
        stream.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        stream.write(text + "\n")


def main(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    as_json = getattr(args, "json", False)
    try:
        payload, text = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (Refusal, NaturalParameterError, BudgetExceeded, StabilizationError) as exc:
        stdout.write(json.dumps({"error": str(exc)}) + "\n")
        return 1
    _emit(stdout, payload, text, as_json)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
