"""Command-line front end.

Algebras come from JSON spec files::

    {"p": 3, "vars": ["x", "y"], "bracket": {"x,y": "1"},
     "quotient": ["x^3", "y^3"], "pmap": {"x": "0", "y": "0"}}

or from the catalog (``{"catalog": "sl2-sym"}``, or ``--catalog sl2-sym`` on
the command line).  Two optional fields modify the p-map: ``pmap_derivation``
adds the Frobenius derivation f -> psi(f)^p for the derivation with the
given generator images, and ``pmap_shift`` adds the semilinear map
f -> sum (x_i-coefficient of f) z_i.

Exit status: 0 when every check passes, 1 on a verification failure, 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from .algebra import MonomialIdeal, PolyRing, check_char
from .lie import (CATALOG_NAMES, catalog, closed_form_p3, closed_form_p5, hopf_check,
                  tensor_product, verify_tensor)
from .lierinehart import LieRinehartStructure, verify_lie_rinehart
from .poisson import PoissonAlgebra, verify_poisson
from .quantize import StarAlgebra, check_vanishing
from .report import Report
from .restricted import (CentralityError, JacobsonError, RestrictedPoissonAlgebra,
                         build_pmap, modify_pmap, quotient_restricted, semilinear_shift, verify_frobenius_condition,
                         verify_restricted_lie)
from .tograph import class_census, combinatorial_M, vanishing_certificate

SPEC_KEYS = {"p", "vars", "bracket", "quotient", "pmap", "catalog", "params",
             "pmap_derivation", "pmap_shift", "name"}


class SpecError(ValueError):
    """Malformed algebra description; the message names the offending field."""


class VerificationFailure(Exception):
    """A construction step failed a mathematical check."""


@dataclass
class LoadedSpec:
    poisson: PoissonAlgebra
    restricted: Optional[RestrictedPoissonAlgebra]
    label: str

    def require_restricted(self) -> RestrictedPoissonAlgebra:
        if self.restricted is None:
            raise SpecError(f"{self.label}: no p-map given (field 'pmap')")
        return self.restricted


def _field(name: str, fn, *args):
    try:
        return fn(*args)
    except (ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        raise SpecError(f"field '{name}': {msg}") from None


def load_spec(data: Dict[str, Any], label: str = "spec") -> LoadedSpec:
    """Build the algebra described by a parsed spec document."""
    if not isinstance(data, dict):
        raise SpecError(f"{label}: top level must be a JSON object")
    unknown = sorted(set(data) - SPEC_KEYS)
    if unknown:
        raise SpecError(f"{label}: unknown field(s) {unknown}")
    if "catalog" in data:
        p = data.get("p")
        if p is not None:
            _field("p", check_char, p)
        params = data.get("params", {})
        R = _field("catalog", lambda: catalog(data["catalog"], p, **params))
        A = R.poisson
        label = data["catalog"]
    else:
        for key in ("p", "vars"):
            if key not in data:
                raise SpecError(f"{label}: missing field '{key}'")
        p = data["p"]
        if not isinstance(p, int):
            raise SpecError("field 'p': must be an integer")
        _field("p", check_char, p)
        names = data["vars"]
        if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
            raise SpecError("field 'vars': must be a list of names")
        ring = _field("vars", PolyRing, p, names)
        table = {}
        for key, value in data.get("bracket", {}).items():
            where = f"bracket.{key}"
            parts = [s.strip() for s in key.split(",")]
            if len(parts) != 2:
                raise SpecError(f"field '{where}': key must look like 'x,y'")
            i, j = (_field(where, ring.index, s) for s in parts)
            table[(i, j)] = _field(where, ring.parse, str(value))
        ideal = None
        if data.get("quotient"):
            polys = [_field(f"quotient[{k}]", ring.parse, q) for k, q in enumerate(data["quotient"])]
            ideal = _field("quotient", MonomialIdeal.from_polys, ring, polys)
        ambient = _field("bracket", PoissonAlgebra, ring, table)
        A = ambient if ideal is None else _field("quotient", PoissonAlgebra, ring, table, ideal)
        R = None
        if "pmap" in data:
            gamma = {k: _field(f"pmap.{k}", ring.parse, str(v)) for k, v in data["pmap"].items()}
            for k in gamma:
                if k not in ring.names:
                    raise SpecError(f"field 'pmap.{k}': unknown variable {k!r}")
            try:
                P = build_pmap(ambient, gamma)
            except JacobsonError as exc:
                raise VerificationFailure(str(exc)) from None
            except ValueError as exc:
                raise SpecError(f"field 'pmap': {exc}") from None
            R = RestrictedPoissonAlgebra(ambient, P, data.get("name", "spec"))
            if ideal is not None:
                try:
                    R = quotient_restricted(R, ideal)
                except ValueError as exc:
                    raise VerificationFailure(str(exc)) from None
                A = R.poisson
    for key, fn in (("pmap_derivation", modify_pmap), ("pmap_shift", semilinear_shift)):
        if key in data:
            if R is None:
                raise SpecError(f"field '{key}': needs a p-map to modify")
            images = {k: _field(f"{key}.{k}", R.ring.parse, str(v)) for k, v in data[key].items()}
            try:
                R = fn(R, images)
            except CentralityError as exc:
                raise VerificationFailure(str(exc)) from None
            except ValueError as exc:
                raise SpecError(f"field '{key}': {exc}") from None
    return LoadedSpec(A, R, label)


def read_spec(path: str) -> LoadedSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: "
                        f"{exc.msg}") from None
    return load_spec(data, path)


def _source(args) -> LoadedSpec:
    specs = args.spec or []
    if args.catalog:
        if specs:
            raise SpecError("give either --spec or --catalog, not both")
        data = {"catalog": args.catalog}
        if args.p is not None:
            data["p"] = args.p
        return load_spec(data)
    if len(specs) != 1:
        raise SpecError("exactly one --spec (or --catalog) is required")
    return read_spec(specs[0])


def _emit(report: Report, args) -> int:
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


def _exhaustive(A: PoissonAlgebra, bound: Optional[int], default: int):
    basis = A.finite_basis()
    if basis is not None and bound is None:
        return basis, None
    return None, default if bound is None else bound


# -- subcommands ----------------------------------------------------------------

def cmd_verify(args) -> int:
    spec = _source(args)
    report = Report(f"verify:{args.suite}", args.seed)
    report.info["algebra"] = spec.label
    suites = ["poisson", "lie", "frobenius"] if args.suite == "all" else [args.suite]
    if set(suites) & {"lie", "frobenius"}:
        spec.require_restricted()
    basis, bound = _exhaustive(spec.poisson, args.degree_bound, 2)
    if basis is not None:
        report.info["exhaustive_basis_size"] = len(basis)
    for s in suites:
        if s == "poisson":
            report.merge(verify_poisson(spec.poisson, args.samples, args.seed))
        elif s == "lie":
            report.merge(verify_restricted_lie(spec.restricted, args.samples, args.seed,
                                               bound, basis))
        else:
            for mode in ("square", "product"):
                report.merge(verify_frobenius_condition(spec.restricted, mode, args.samples,
                                                        args.seed, bound, basis))
    return _emit(report, args)


def cmd_build_pmap(args) -> int:
    spec = _source(args)
    R = spec.require_restricted()
    A = R.poisson
    basis, bound = _exhaustive(A, args.degree_bound, 3)
    if basis is None:
        basis = A.basis(bound)
    values = [{"monomial": str(m), "value": str(R.pp(m))} for m in basis]
    doc = {"algebra": spec.label, "p": R.p, "vars": list(A.ring.names),
           "degree_bound": bound, "pmap": R.pmap.name, "values": values}
    text = json.dumps(doc, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(f"wrote {len(values)} p-map values to {args.out}")
    elif args.json:
        print(text)
    else:
        for v in values:
            print(f"pp({v['monomial']}) = {v['value']}")
    return 0


def cmd_quantize(args) -> int:
    spec = _source(args)
    A = spec.poisson
    if A.quotient is not None:
        raise SpecError("quantization needs a polynomial algebra without quotient")
    if not A.is_constant_bracket():
        raise SpecError("quantization needs a constant bracket table")
    if args.f is None:
        raise SpecError("--f is required")
    f = _field("--f", A.ring.parse, args.f)
    S = StarAlgebra.from_poisson(A, args.mode)
    p = S.p
    series = S.star_power(f, p)
    report = Report("quantize", args.seed)
    report.info["algebra"] = spec.label
    report.info["mode"] = args.mode
    report.info["f"] = str(f)
    report.info["M"] = {str(n): str(series[n]) for n in range(p)}
    report.info["pmap"] = str(series[p - 1])
    report.merge(check_vanishing(f, S, samples=min(args.samples, 8), seed=args.seed))
    classical = (A.ring.nvars == 2 and args.mode == "onesided"
                 and A.table == {(0, 1): A.ring.one} and p in (3, 5))
    if classical:
        closed = (closed_form_p3 if p == 3 else closed_form_p5)(f)
        report.info["closed_form"] = str(closed)
        report.check("closed_form").record(closed == series[p - 1], f=f,
                                           lhs=series[p - 1], rhs=closed)
    return _emit(report, args)


def cmd_tograph(args) -> int:
    if args.p is None or args.n is None:
        raise SpecError("--p and --n are required")
    p, n = args.p, args.n
    _field("--p", check_char, p)
    if not 1 <= n <= p - 1:
        raise SpecError(f"--n must lie in 1..{p - 1}, got {n}")
    if n <= p - 2:
        report = vanishing_certificate(n, p)
    else:
        report = Report("tograph-census", None)
        report.info["n"], report.info["p"] = n, p
        report.info["classes"] = [
            {"profile": c.profile.describe(), "N": c.N, "members": c.members, "tuples": c.tuples}
            for c in class_census(n, p)]
    if args.f is not None:
        ring = PolyRing(p, ["x", "y"])
        f = _field("--f", ring.parse, args.f)
        comb = combinatorial_M(f, n, p)
        quant = StarAlgebra(ring, [[0, 1], [0, 0]]).star_power(f, p)[n]
        report.info["f"] = str(f)
        report.info["combinatorial_M"] = str(comb)
        report.check("oracle").record(comb == quant, f=f, n=n, lhs=comb, rhs=quant)
    return _emit(report, args)


def cmd_tensor(args) -> int:
    if args.catalog or not args.spec or len(args.spec) != 2:
        raise SpecError("tensor needs exactly two --spec arguments")
    left = read_spec(args.spec[0]).require_restricted()
    right = read_spec(args.spec[1]).require_restricted()
    if left.p != right.p:
        raise SpecError(f"characteristic mismatch: {left.p} vs {right.p}")
    T = tensor_product(left, right)
    bound = 2 if args.degree_bound is None else args.degree_bound
    report = Report("tensor", args.seed)
    report.info["vars"] = list(T.ring.names)
    report.info["degree_bound"] = bound
    report.merge(verify_tensor(T, min(args.samples, 16), args.seed))
    report.merge(verify_restricted_lie(T, args.samples, args.seed))
    report.merge(verify_frobenius_condition(T, "product", args.samples, args.seed,
                                            basis=T.poisson.basis(bound)))
    return _emit(report, args)


def cmd_lie_rinehart(args) -> int:
    spec = _source(args)
    R = spec.require_restricted()
    if R.poisson.quotient is not None:
        raise SpecError("lie-rinehart needs a polynomial algebra without quotient")
    S = LieRinehartStructure(R, mutated=args.mutated)
    report = verify_lie_rinehart(S, args.samples, args.seed)
    report.info["algebra"] = spec.label
    report.info["mutated"] = args.mutated
    return _emit(report, args)


def cmd_hopf(args) -> int:
    spec = _source(args)
    R = spec.require_restricted()
    A = R.poisson
    if not A.is_linear_bracket():
        raise SpecError("hopf needs a linear bracket table, as in S(L) or s(L)")
    for g in A.gens:
        v = R.pp(g)
        if not all(sum(m) == 1 for m in v.terms):
            raise SpecError(f"hopf needs linear p-map images; pp({g}) = {v}")
    bound = 2 if args.degree_bound is None else args.degree_bound
    report = hopf_check(R, bound)
    report.seed = args.seed
    report.info["algebra"] = spec.label
    return _emit(report, args)


COMMANDS = {
    "verify": cmd_verify,
    "build-pmap": cmd_build_pmap,
    "quantize": cmd_quantize,
    "tograph": cmd_tograph,
    "tensor": cmd_tensor,
    "lie-rinehart": cmd_lie_rinehart,
    "hopf": cmd_hopf,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", action="append", metavar="PATH",
                        help="JSON algebra description (give twice for tensor)")
    common.add_argument("--catalog", choices=CATALOG_NAMES, help="use a catalog algebra")
    common.add_argument("--p", type=int, help="characteristic (catalog, tograph)")
    common.add_argument("--samples", type=int, default=64)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--degree-bound", type=int, default=None)

    parser = argparse.ArgumentParser(
        prog="restricted-poisson",
        description="Build and verify restricted Poisson structures over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run identity suites")
    v.add_argument("--suite", choices=["poisson", "lie", "frobenius", "all"], default="all")
    b = sub.add_parser("build-pmap", parents=[common], help="tabulate p-map values")
    b.add_argument("--out", metavar="PATH")
    q = sub.add_parser("quantize", parents=[common], help="star-power coefficients of f")
    q.add_argument("--mode", choices=["onesided", "symmetric"], required=True)
    q.add_argument("--f", metavar="POLY")
    t = sub.add_parser("tograph", parents=[common], help="ordered-graph census and oracle")
    t.add_argument("--n", type=int)
    t.add_argument("--f", metavar="POLY")
    sub.add_parser("tensor", parents=[common], help="tensor product of two specs")
    lr = sub.add_parser("lie-rinehart", parents=[common], help="Kähler-form suite")
    lr.add_argument("--mutated", action="store_true",
                    help="drop the D^{p-1} term of the p-map (negative control)")
    sub.add_parser("hopf", parents=[common], help="coproduct, counit and antipode checks")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.samples < 1:
        print("error: --samples must be >= 1", file=sys.stderr)
        return 2
    try:
        return COMMANDS[args.command](args)
    except VerificationFailure as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (SpecError, ValueError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
