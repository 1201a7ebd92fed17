"""Command-line surface: one subcommand per module capability.

Exit codes: 0 on success, 1 on domain errors (the error name goes to
stderr), 2 on usage errors.  All output is deterministic for a fixed
``--seed``; ``--format json`` swaps the human rendering for JSON.
"""

from __future__ import annotations

import argparse
import json
import string
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import FFKitError, ScaleLimitError
from .factorization import (
    expand_linear_factors,
    factor_xq_minus_x_base,
    factor_xq_minus_x_extension,
    lift_to_field,
    remultiply,
    roots_in_field,
    x_pow_q_minus_x,
)
from .field_extension import (
    FieldSpec,
    check_field_axioms,
    construct_field,
    enumerate_elements,
    operation_tables,
)
from .irreducibles import enumerate_irreducibles
from .isomorphism import (
    FieldIsomorphism,
    build_isomorphism,
    enumerate_isomorphisms,
    verify_isomorphism,
)
from .polynomial import Polynomial, detect_variable
from .prime_field import check_prime
from .structure import generator_report, verify_ftff_c
from .table_oracle import complete_tables

DEFAULT_SEED = 0
ELEMENT_LISTING_LIMIT = 256
# Pairwise isomorphism checking is quadratic in the number of
# representations; verify-ftff caps how many it cross-links.
MAX_LINKED_REPRESENTATIONS = 4

MAX_VERIFY_ORDER = 1 << 12


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _field_from_args(args) -> FieldSpec:
    p = check_prime(args.p)
    modulus = getattr(args, "modulus", None)
    if modulus is None:
        return construct_field(p, args.r)
    return construct_field(
        p, args.r, Polynomial.parse(modulus, p), detect_variable(modulus)
    )


def _render_grid(op: str, labels: list[str], entries: list[list[str]]) -> str:
    width = max(len(s) for s in labels + [op])
    head = op.ljust(width) + " | " + "  ".join(s.ljust(width) for s in labels)
    lines = [head, "-" * len(head)]
    for label, row in zip(labels, entries):
        lines.append(
            label.ljust(width) + " | " + "  ".join(s.ljust(width) for s in row)
        )
    return "\n".join(lines)


def _table_json(op: str, labels: list[str], entries: list[list[str]]) -> dict:
    return {"op": op, "order": len(labels), "elements": labels, "table": entries}


def _linear_factor_strings(roots) -> list[str]:
    out = []
    for a in roots:
        if a.is_zero:
            out.append("x")
        else:
            out.append(f"(x+{-a})")
    return out


def _factor_text(product_str: str, factor_strs: list[str]) -> str:
    rendered = [s if "+" not in s else f"({s})" for s in factor_strs]
    return f"{product_str} = " + " * ".join(rendered)


# -- subcommand handlers ---------------------------------------------------


def _cmd_construct(args) -> int:
    F = _field_from_args(args)
    if args.format == "json":
        obj = {
            "p": F.p.p,
            "r": F.r,
            "q": F.q,
            "modulus": F.modulus.format(F.variable),
            "variable": F.variable,
        }
        if F.q <= ELEMENT_LISTING_LIMIT:
            obj["elements"] = [str(e) for e in enumerate_elements(F)]
        _emit_json(obj)
    else:
        _emit(str(F))
        _emit(f"order: {F.q} = {F.p.p}^{F.r}")
        if F.q <= ELEMENT_LISTING_LIMIT:
            _emit("elements: " + ", ".join(str(e) for e in enumerate_elements(F)))
        else:
            _emit(f"elements: {F.q} (listing suppressed)")
    return 0


def _cmd_tables(args) -> int:
    F = _field_from_args(args)
    add, mul = operation_tables(F)
    labels = [str(e) for e in enumerate_elements(F)]
    add_s = [[str(e) for e in row] for row in add]
    mul_s = [[str(e) for e in row] for row in mul]
    if args.format == "json":
        _emit_json([_table_json("+", labels, add_s), _table_json("*", labels, mul_s)])
    else:
        _emit(str(F))
        _emit("")
        _emit(_render_grid("+", labels, add_s))
        _emit("")
        _emit(_render_grid("*", labels, mul_s))
    return 0


def _cmd_irreducibles(args) -> int:
    p = check_prime(args.p)
    irr = enumerate_irreducibles(p, args.d)
    if args.format == "json":
        _emit_json(
            {
                "p": p.p,
                "degree": args.d,
                "count": len(irr),
                "irreducibles": [str(f) for f in irr],
            }
        )
    else:
        for f in irr:
            _emit(str(f))
    return 0


def _cmd_factor_base(args) -> int:
    p = check_prime(args.p)
    bf = factor_xq_minus_x_base(p, args.r)
    factor_strs = [str(f) for f in bf.factors]
    if args.format == "json":
        _emit_json(
            {
                "p": p.p,
                "r": args.r,
                "q": bf.q,
                "polynomial": str(bf.polynomial()),
                "factors": factor_strs,
                "degree_histogram": {
                    str(d): n for d, n in sorted(bf.degree_histogram().items())
                },
            }
        )
    else:
        _emit(_factor_text(str(bf.polynomial()), factor_strs))
    return 0


def _cmd_factor_ext(args) -> int:
    F = _field_from_args(args)
    lf = factor_xq_minus_x_extension(F)
    factor_strs = _linear_factor_strings(lf.roots)
    if args.format == "json":
        _emit_json(
            {
                "field": str(F),
                "q": F.q,
                "polynomial": str(lf.source),
                "roots": [str(a) for a in lf.roots],
                "factors": factor_strs,
            }
        )
    else:
        _emit(f"over {F}:")
        _emit(f"{lf.source} = " + " * ".join(factor_strs))
    return 0


def _cmd_roots(args) -> int:
    F = _field_from_args(args)
    f = Polynomial.parse(args.poly, F.p)
    roots = roots_in_field(f, F)
    if args.format == "json":
        _emit_json(
            {
                "poly": str(f),
                "field": str(F),
                "roots": [str(a) for a in roots],
            }
        )
    else:
        shown = ", ".join(str(a) for a in roots) if roots else "(none)"
        _emit(f"roots of {f} in {F}: {shown}")
    return 0


def _cmd_generator(args) -> int:
    F = _field_from_args(args)
    rep = generator_report(F)
    if args.format == "json":
        _emit_json(
            {
                "field": str(F),
                "generator": str(rep.generator),
                "order": F.q - 1,
                "generator_count": rep.generator_count,
            }
        )
    else:
        _emit(f"generator of {F}: {rep.generator} (order {F.q - 1})")
        _emit(f"generator count: {rep.generator_count}")
    return 0


def _cmd_orders(args) -> int:
    F = _field_from_args(args)
    rep = generator_report(F)
    pairs = [(str(a), n) for a, n in rep.order_table.items()]
    if args.format == "json":
        _emit_json(
            {
                "field": str(F),
                "orders": [[a, n] for a, n in pairs],
                "generator_count": rep.generator_count,
            }
        )
    else:
        _emit(f"multiplicative orders in {F}:")
        width = max(len(a) for a, _ in pairs)
        for a, n in pairs:
            _emit(f"  {a.ljust(width)} -> {n}")
    return 0


def _iso_fields(args) -> tuple[FieldSpec, FieldSpec]:
    p = check_prime(args.p)
    source = construct_field(
        p, args.r, Polynomial.parse(args.source, p), detect_variable(args.source)
    )
    target = construct_field(
        p, args.r, Polynomial.parse(args.target, p), detect_variable(args.target)
    )
    return source, target


def _iso_json(iso: FieldIsomorphism) -> dict:
    return {
        "source_modulus": iso.source.modulus.format(iso.source.variable),
        "target_modulus": iso.target.modulus.format(iso.target.variable),
        "root_image": str(iso.root_image),
        "map": [[str(a), str(b)] for a, b in iso.pairs()],
    }


def _iso_text_lines(iso: FieldIsomorphism) -> list[str]:
    pairs = [(str(a), str(b)) for a, b in iso.pairs()]
    width = max(len(a) for a, _ in pairs)
    return [f"{a.ljust(width)} -> {b}" for a, b in pairs]


def _cmd_iso(args) -> int:
    source, target = _iso_fields(args)
    iso = build_isomorphism(source, target)
    report = verify_isomorphism(iso, seed=args.seed)
    if args.format == "json":
        obj = _iso_json(iso)
        obj["verified"] = report.passed
        _emit_json(obj)
    else:
        _emit(f"{source} -> {target}")
        _emit(f"root image of {source.variable}: {iso.root_image}")
        for line in _iso_text_lines(iso):
            _emit("  " + line)
        _emit(f"verified: {'pass' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_iso_all(args) -> int:
    source, target = _iso_fields(args)
    isos = enumerate_isomorphisms(source, target)
    reports = [verify_isomorphism(i, seed=args.seed) for i in isos]
    if args.format == "json":
        out = []
        for iso, rep in zip(isos, reports):
            obj = _iso_json(iso)
            obj["verified"] = rep.passed
            out.append(obj)
        _emit_json({"count": len(isos), "isomorphisms": out})
    else:
        _emit(f"{len(isos)} isomorphism(s) {source} -> {target}")
        for k, (iso, rep) in enumerate(zip(isos, reports), 1):
            _emit(f"[{k}] root image {iso.root_image}"
                  f" ({'pass' if rep.passed else 'FAIL'})")
            for line in _iso_text_lines(iso):
                _emit("  " + line)
    return 0 if all(r.passed for r in reports) else 1


def _oracle_labels(q: int) -> list[str]:
    return ["0", "1"] + list(string.ascii_lowercase[: q - 2])


def _cmd_oracle(args) -> int:
    sols = complete_tables(args.q)
    labels = _oracle_labels(args.q)
    if args.format == "json":
        _emit_json(
            {
                "order": args.q,
                "classes": len(sols),
                "solutions": [
                    {"add": [list(r) for r in s.add], "mul": [list(r) for r in s.mul]}
                    for s in sols
                ],
            }
        )
    else:
        _emit(f"{len(sols)} field table class(es) of order {args.q}")
        for k, s in enumerate(sols, 1):
            add_s = [[labels[e] for e in row] for row in s.add]
            mul_s = [[labels[e] for e in row] for row in s.mul]
            _emit("")
            _emit(f"[{k}]")
            _emit(_render_grid("+", labels, add_s))
            _emit("")
            _emit(_render_grid("*", labels, mul_s))
    return 0


def _cmd_verify_ftff(args) -> int:
    report = verify_ftff(args.p, args.r, seed=args.seed)
    if args.format == "json":
        _emit_json(report.to_dict())
    else:
        _emit(f"FTFF verification for p={report.p}, r={report.r} (q = {report.q})")
        _emit(
            f"representations: {len(report.representations)}"
            f" ({', '.join(report.representations)}); linked {report.linked}"
        )
        for name, ok in (
            ("(a) construction, axioms, x^q-x splits", report.clause_a),
            ("(b) pairwise isomorphisms", report.clause_b),
            ("(c)(i) additive group is (Z_p)^r", report.clause_c_i),
            ("(c)(ii) multiplicative group is cyclic", report.clause_c_ii),
        ):
            _emit(f"{name}: {'PASS' if ok else 'FAIL'}")
        for line in report.details:
            _emit("  " + line)
        _emit(f"overall: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def _cmd_report(args) -> int:
    from .report import write_field_report

    F = _field_from_args(args)
    paths = write_field_report(F, Path(args.outdir), seed=args.seed)
    for path in paths:
        _emit(str(path))
    return 0


# -- FTFF verification bundle -----------------------------------------------


@dataclass
class FtffReport:
    """Aggregated pass/fail per FTFF clause for one (p, r)."""

    p: int
    r: int
    q: int
    representations: list[str]
    linked: int
    clause_a: bool
    clause_b: bool
    clause_c_i: bool
    clause_c_ii: bool
    details: list[str]

    @property
    def passed(self) -> bool:
        return (
            self.clause_a and self.clause_b and self.clause_c_i and self.clause_c_ii
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "representations": self.representations,
            "linked_representations": self.linked,
            "clause_a": self.clause_a,
            "clause_b": self.clause_b,
            "clause_c_i": self.clause_c_i,
            "clause_c_ii": self.clause_c_ii,
            "details": self.details,
            "passed": self.passed,
        }


def _extension_split_ok(F: FieldSpec) -> bool:
    lf = factor_xq_minus_x_extension(F)
    coeffs = expand_linear_factors(F, lf.roots)
    expected = lift_to_field(lf.source, F)
    expected += [F.zero] * (len(coeffs) - len(expected))
    return coeffs == expected


def verify_ftff(p: int, r: int, seed: int = DEFAULT_SEED) -> FtffReport:
    """Run the whole verification bundle for GF(p^r).

    Constructs every degree-r representation (cross-linking at most
    MAX_LINKED_REPRESENTATIONS of them pairwise), checks the field axioms,
    both halves of part (c), and the two Key Lemma factorizations with
    re-multiplication.
    """
    prime = check_prime(p)
    q = prime.p**r
    if q > MAX_VERIFY_ORDER:
        raise ScaleLimitError(f"{p}^{r} exceeds {MAX_VERIFY_ORDER}")
    details: list[str] = []
    moduli = enumerate_irreducibles(prime, r)
    fields = [
        construct_field(prime, r, m.poly) for m in moduli[:MAX_LINKED_REPRESENTATIONS]
    ]

    clause_a = len(moduli) >= 1
    if not clause_a:
        details.append(f"no irreducible of degree {r} over Z_{p}")
    for F in fields:
        ax = check_field_axioms(F, seed=seed)
        if not ax.passed:
            clause_a = False
            details.append(f"axiom failures in {F}: {ax.failures[:3]}")
        if not _extension_split_ok(F):
            clause_a = False
            details.append(f"x^{q}-x does not split into the elements of {F}")
    base = factor_xq_minus_x_base(prime, r)
    if remultiply(base.factors, prime) != x_pow_q_minus_x(prime, q):
        clause_a = False
        details.append("base factorization does not re-multiply to x^q-x")
    else:
        details.append(
            f"x^{q}-x = product of {len(base.factors)} irreducibles "
            f"of degrees {sorted(base.degree_histogram())}"
        )

    clause_b = True
    if len(fields) == 1:
        details.append("single representation; clause (b) is degenerate")
    pair_count = 0
    for i, src in enumerate(fields):
        for j, dst in enumerate(fields):
            if i == j:
                continue
            pair_count += 1
            rep = verify_isomorphism(build_isomorphism(src, dst), seed=seed)
            if not rep.passed:
                clause_b = False
                details.append(
                    f"isomorphism {src.modulus} -> {dst.modulus} failed: "
                    f"{rep.failures[:2]}"
                )
    if pair_count:
        details.append(f"verified {pair_count} pairwise isomorphisms")

    clause_c_i = True
    clause_c_ii = True
    for F in fields:
        c = verify_ftff_c(F)
        if not (c.additive_orders_ok and c.basis_independent):
            clause_c_i = False
            details.append(f"(c)(i) failures in {F}: {c.failures[:3]}")
        if not c.powers_exhaust:
            clause_c_ii = False
            details.append(f"(c)(ii) failure in {F}: {c.failures[:3]}")
        else:
            details.append(f"generator of {F}: {c.generator}")

    return FtffReport(
        p=prime.p,
        r=r,
        q=q,
        representations=[str(m) for m in moduli],
        linked=len(fields),
        clause_a=clause_a,
        clause_b=clause_b,
        clause_c_i=clause_c_i,
        clause_c_ii=clause_c_ii,
        details=details,
    )


# -- argument parsing --------------------------------------------------------


def _add_output_args(sp):
    sp.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    sp.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help="seed for randomized property checks",
    )


def _add_common(sp, *, r=True, modulus=True):
    sp.add_argument("-p", type=int, required=True, help="prime modulus")
    if r:
        sp.add_argument("-r", type=int, required=True, help="extension degree")
    if modulus:
        sp.add_argument(
            "--modulus",
            help="modulus polynomial (default: first irreducible of degree r)",
        )
    _add_output_args(sp)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ffkit",
        description=(
            "Construct finite fields GF(p^r) as polynomial quotient rings, "
            "factor x^q-x, find generators, build isomorphisms, and verify "
            "the structure theorems behind them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("construct", help="build a field representation")
    _add_common(sp)
    sp.set_defaults(func=_cmd_construct)

    sp = sub.add_parser("tables", help="emit the +/* operation tables")
    _add_common(sp)
    sp.set_defaults(func=_cmd_tables)

    sp = sub.add_parser("irreducibles", help="list monic irreducibles of a degree")
    sp.add_argument("-p", type=int, required=True, help="prime modulus")
    sp.add_argument("-d", type=int, required=True, help="degree")
    _add_output_args(sp)
    sp.set_defaults(func=_cmd_irreducibles)

    sp = sub.add_parser("factor-base", help="factor x^q-x over Z_p")
    _add_common(sp, modulus=False)
    sp.set_defaults(func=_cmd_factor_base)

    sp = sub.add_parser("factor-ext", help="split x^q-x over GF(p^r)")
    _add_common(sp)
    sp.set_defaults(func=_cmd_factor_ext)

    sp = sub.add_parser("roots", help="roots of a polynomial in GF(p^r)")
    _add_common(sp)
    sp.add_argument("--poly", required=True, help="polynomial over Z_p to factor")
    sp.set_defaults(func=_cmd_roots)

    sp = sub.add_parser("generator", help="find a multiplicative generator")
    _add_common(sp)
    sp.set_defaults(func=_cmd_generator)

    sp = sub.add_parser("orders", help="multiplicative order of every element")
    _add_common(sp)
    sp.set_defaults(func=_cmd_orders)

    for name, handler, help_text in (
        ("iso", _cmd_iso, "build one isomorphism between two moduli"),
        ("iso-all", _cmd_iso_all, "enumerate all isomorphisms"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("-p", type=int, required=True, help="prime modulus")
        sp.add_argument("-r", type=int, required=True, help="extension degree")
        sp.add_argument("--source", required=True, help="source modulus polynomial")
        sp.add_argument("--target", required=True, help="target modulus polynomial")
        _add_output_args(sp)
        sp.set_defaults(func=handler)

    sp = sub.add_parser("oracle", help="complete abstract +/* tables of order q")
    sp.add_argument("q", type=int, help="table order (2..7)")
    _add_output_args(sp)
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("verify-ftff", help="run the full verification bundle")
    _add_common(sp, modulus=False)
    sp.set_defaults(func=_cmd_verify_ftff)

    sp = sub.add_parser(
        "report", help="write CSV tables and rendered figures to a directory"
    )
    _add_common(sp)
    sp.add_argument("-o", "--outdir", required=True, help="output directory")
    sp.set_defaults(func=_cmd_report)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (FFKitError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
