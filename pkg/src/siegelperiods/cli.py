"""Command line interface.

One subcommand per pipeline stage; all numeric output is exact (integers or
num/den strings) and byte-for-byte deterministic for fixed inputs.  Exit
codes: 0 success, 1 usage error, 2 domain error, 3 insufficient bound or
truncation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
from fractions import Fraction

from . import bqf, jacobi, periods, qexp, siegel
from .errors import BoundError, DomainError, FormatError, SiegelError

LIFT_RECIPE = "sk-lift/1:jacobi-eisenstein-H-ratio,rref-cusp-basis,divisor-sum"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _form_arg(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}") from None


def _fraction_str(v) -> str:
    return str(Fraction(v))


def _cyclotomic_payload(value) -> dict:
    return {
        "order": value.m,
        "coords": [_fraction_str(c) for c in value.coeffs],
    }


def _print(out, text):
    out.write(text + "\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="siegelperiods", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *flags):
        p = sub.add_parser(name, help=help_text)
        for flag in flags:
            if flag == "--form":
                p.add_argument("--form", type=_form_arg, required=True, metavar="a,b,c")
            elif flag == "--form-opt":
                p.add_argument("--form", type=_form_arg, metavar="a,b,c")
            elif flag == "--disc":
                p.add_argument("--disc", type=int, required=True)
            elif flag == "--disc-opt":
                p.add_argument("--disc", type=int)
            elif flag == "--weight":
                p.add_argument("--weight", type=int, required=True)
            elif flag == "--disc-bound":
                p.add_argument("--disc-bound", type=int, required=True)
            elif flag == "--nmax":
                p.add_argument("--nmax", type=int, required=True)
            elif flag == "--dmax":
                p.add_argument("--dmax", type=int, required=True)
            elif flag == "--p":
                p.add_argument("--p", type=int, required=True)
            elif flag == "--character":
                p.add_argument("--character", type=int, default=None)
            elif flag == "--table":
                p.add_argument("--table", required=True)
            elif flag == "--table2":
                p.add_argument("--table", action="append", required=True,
                               help="repeat for the two input tables")
            elif flag == "--out":
                p.add_argument("--out")
            else:
                raise AssertionError(flag)
        p.add_argument("--json", action="store_true")
        return p

    add("reduce", "reduce a form to its canonical representative", "--form")
    add("classgroup", "class group of a fundamental discriminant", "--disc")
    add("theta", "theta series coefficients of a class character",
        "--disc", "--character", "--nmax")
    add("mf-basis", "echelon basis of level-1 modular forms", "--weight", "--nmax")
    add("jacobi-basis", "basis of index-1 jacobi cusp forms", "--weight", "--dmax")
    add("sk-lift", "build a lift coefficient table", "--weight", "--disc-bound", "--out")
    add("coeff", "coefficient of a table at a form", "--table", "--form")
    add("hecke", "apply the T(p) operator to a table", "--table", "--p", "--out")
    add("eigen", "T(p) eigenvalue of a table", "--table", "--p")
    add("period", "period sum at a fundamental discriminant",
        "--table", "--disc", "--character")
    add("scan-fundamental", "first fundamental discriminant with nonzero data", "--table")
    add("ratio", "normalized period ratios", "--table", "--dmax")
    add("multone-demo", "run the separation pipeline on two tables",
        "--table2", "--disc-opt", "--character", "--out")
    add("ingest-check", "validate a table file", "--table")
    return parser


# -- subcommand bodies -------------------------------------------------------


def _cmd_reduce(args, out):
    form = bqf.QuadForm(*args.form)
    reduced, mat = bqf.reduce(form)
    if args.json:
        _print(out, json.dumps({
            "reduced": list(reduced.triple()),
            "transform": list(mat.entries()),
        }))
    else:
        _print(out, str(reduced))
        _print(out, " ".join(str(x) for x in mat.entries()))
    return 0


def _cmd_classgroup(args, out):
    group = bqf.class_group(args.disc)
    structure = "x".join(f"C{m}" for m in group.structure) or "C1"
    if args.json:
        _print(out, json.dumps({
            "disc": group.disc,
            "h": group.h,
            "w": group.w,
            "structure": structure,
            "reps": [list(f.triple()) for f in group.reps],
        }))
    else:
        for f in group.reps:
            _print(out, str(f))
        _print(out, f"h: {group.h}")
        _print(out, f"w: {group.w}")
        _print(out, f"structure: {structure}")
    return 0


def _pick_character(group, index):
    chars = bqf.characters(group)
    if index is None:
        index = 0
    if not 0 <= index < len(chars):
        raise DomainError(f"character index {index} outside 0..{len(chars) - 1}")
    return chars[index]


def _cmd_theta(args, out):
    group = bqf.class_group(args.disc)
    character = _pick_character(group, args.character)
    series = bqf.theta_coefficients(character, args.nmax)
    if args.json:
        _print(out, json.dumps({
            "disc": group.disc,
            "character-order": character.m,
            "coefficients": {
                str(n): [_fraction_str(c) for c in series.r(n).coeffs]
                for n in range(1, args.nmax + 1)
            },
        }))
    else:
        _print(out, f"character-order: {character.m}")
        for n in range(1, args.nmax + 1):
            coords = " ".join(_fraction_str(c) for c in series.r(n).coeffs)
            _print(out, f"{n} {coords}")
    return 0


def _cmd_mf_basis(args, out):
    basis = qexp.modular_basis(args.weight, args.nmax)
    if args.json:
        _print(out, json.dumps({
            "weight": args.weight,
            "dimension": len(basis),
            "basis": [[_fraction_str(c) for c in f.coeffs] for f in basis],
        }))
    else:
        _print(out, f"dimension: {len(basis)}")
        for f in basis:
            _print(out, " ".join(_fraction_str(c) for c in f.coeffs))
    return 0


def _cmd_jacobi_basis(args, out):
    basis = jacobi.cusp_basis(args.weight, args.dmax)
    if args.json:
        _print(out, json.dumps({
            "weight": args.weight,
            "dimension": len(basis),
            "basis": [
                {str(d): _fraction_str(f.c[d]) for d in jacobi.grid(f.dmax)}
                for f in basis
            ],
        }))
    else:
        _print(out, f"dimension: {len(basis)}")
        for i, f in enumerate(basis):
            _print(out, f"form: {i}")
            for d in jacobi.grid(f.dmax):
                _print(out, f"{d} {_fraction_str(f.c[d])}")
    return 0


def _lift_table(weight: int, bound: int) -> siegel.SiegelTable:
    cache_dir = os.environ.get("SIEGEL_CACHE_DIR")
    cache_path = None
    if cache_dir:
        digest = hashlib.sha256(
            f"{LIFT_RECIPE}|weight={weight}|bound={bound}".encode()
        ).hexdigest()[:16]
        cache_path = os.path.join(cache_dir, f"sk-{weight}-{bound}-{digest}.tbl")
        if os.path.exists(cache_path):
            try:
                table = siegel.read_table(cache_path)
                if table.k == weight and table.disc_bound == bound:
                    return table
            except SiegelError:
                pass  # stale or corrupt cache entry; rebuild below
    basis = jacobi.cusp_basis(weight, max(bound, 4 * 7))
    if len(basis) != 1:
        raise DomainError(
            f"weight {weight} has {len(basis)} jacobi cusp forms; need exactly one"
        )
    table = siegel.sk_lift(basis[0].truncated(max(bound, 3)), bound)
    if cache_path:
        os.makedirs(cache_dir, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(siegel.emit(table))
        os.replace(tmp, cache_path)
    return table


def _emit_table(args, table, out):
    text = siegel.emit(table)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        if args.json:
            _print(out, json.dumps({
                "weight": table.k,
                "disc-bound": table.disc_bound,
                "classes": len(table.entries),
                "out": args.out,
            }))
        else:
            _print(out, f"wrote {args.out}: weight {table.k}, "
                        f"disc-bound {table.disc_bound}, {len(table.entries)} classes")
    else:
        if args.json:
            _print(out, json.dumps({
                "weight": table.k,
                "disc-bound": table.disc_bound,
                "classes": len(table.entries),
                "table": text,
            }))
        else:
            out.write(text)
    return 0


def _cmd_sk_lift(args, out):
    if args.disc_bound < 3:
        raise DomainError("disc-bound must be at least 3")
    table = _lift_table(args.weight, args.disc_bound)
    return _emit_table(args, table, out)


def _cmd_coeff(args, out):
    table = siegel.read_table(args.table)
    value = siegel.coeff(table, bqf.QuadForm(*args.form))
    if args.json:
        _print(out, json.dumps({"form": list(args.form), "value": _fraction_str(value)}))
    else:
        _print(out, _fraction_str(value))
    return 0


def _cmd_hecke(args, out):
    table = siegel.read_table(args.table)
    result = siegel.hecke_tp(table, args.p)
    return _emit_table(args, result, out)


def _cmd_eigen(args, out):
    table = siegel.read_table(args.table)
    record = siegel.eigenvalue_p(table, args.p)
    if args.json:
        _print(out, json.dumps({
            "p": record.p,
            "lambda": _fraction_str(record.lam),
            "verified-keys": record.verified_keys,
        }))
    else:
        _print(out, f"lambda: {_fraction_str(record.lam)}")
        _print(out, f"verified-keys: {record.verified_keys}")
    return 0


def _cmd_period(args, out):
    table = siegel.read_table(args.table)
    d = -args.disc
    if d <= 0:
        raise DomainError(f"--disc must be negative, got {args.disc}")
    if args.character is None:
        value = periods.bessel_period(table, d)
        if args.json:
            _print(out, json.dumps({"d": d, "value": _fraction_str(value)}))
        else:
            _print(out, _fraction_str(value))
        return 0
    group = bqf.class_group(-d)
    character = _pick_character(group, args.character)
    value = periods.bessel_period_chi(table, d, character)
    if args.json:
        _print(out, json.dumps({
            "d": d,
            "character": args.character,
            "value": _cyclotomic_payload(value),
        }))
    else:
        _print(out, " ".join(_fraction_str(c) for c in value.coeffs))
    return 0


def _cmd_scan(args, out):
    table = siegel.read_table(args.table)
    result = periods.fundamental_scan(table)
    if args.json:
        if result is None:
            _print(out, json.dumps({"found": False, "bound": table.disc_bound}))
        else:
            _print(out, json.dumps({
                "found": True,
                "d": result.d,
                "form": list(result.form.triple()),
                "value": _fraction_str(result.value),
            }))
    elif result is None:
        _print(out, f"no fundamental witness within bound {table.disc_bound}")
    else:
        _print(out, f"d: {result.d}")
        _print(out, f"form: {result.form}")
        _print(out, f"value: {_fraction_str(result.value)}")
    return 0


def _cmd_ratio(args, out):
    table = siegel.read_table(args.table)
    reports = periods.ratio_table(table, args.dmax)
    if args.json:
        _print(out, json.dumps([
            {
                "d": r.d,
                "h": r.h,
                "w": r.w,
                "period": _fraction_str(r.period),
                "ratio": _fraction_str(r.ratio),
            }
            for r in reports
        ]))
    else:
        for r in reports:
            _print(out, f"{r.d} {r.h} {r.w} {_fraction_str(r.period)} {_fraction_str(r.ratio)}")
    return 0


def _cmd_multone(args, out):
    if len(args.table) != 2:
        raise UsageError("multone-demo needs --table twice (first and second table)")
    table1 = siegel.read_table(args.table[0])
    table2 = siegel.read_table(args.table[1])
    if args.disc is None:
        scan = periods.fundamental_scan(table2)
        if scan is None:
            raise DomainError("second table has no fundamental witness within bound")
        d = scan.d
    else:
        d = -args.disc
        if d <= 0:
            raise DomainError(f"--disc must be negative, got {args.disc}")
    if args.character is None:
        character = periods.choose_character(table2, d)
        char_index = bqf.characters(character.group).index(character)
    else:
        character = _pick_character(bqf.class_group(-d), args.character)
        char_index = args.character
    result = periods.separation_demo(table1, table2, d, character)
    residual = periods.bessel_period_chi(result.g1, d, character)
    if args.out:
        siegel.write_table(result.g1, args.out)
    if args.json:
        payload = {
            "d": d,
            "character": char_index,
            "scalar": _fraction_str(result.scalar),
            "g1-zero": result.is_zero,
            "g1-period": _cyclotomic_payload(residual),
        }
        if args.out:
            payload["out"] = args.out
        _print(out, json.dumps(payload))
    else:
        _print(out, f"d: {d}")
        _print(out, f"character: {char_index}")
        _print(out, f"scalar: {_fraction_str(result.scalar)}")
        _print(out, f"g1-zero: {'true' if result.is_zero else 'false'}")
        _print(out, f"g1-period-zero: {'true' if residual.is_zero() else 'false'}")
        if args.out:
            _print(out, f"wrote {args.out}")
    return 0


def _cmd_ingest_check(args, out):
    table = siegel.read_table(args.table)
    if args.json:
        _print(out, json.dumps({
            "weight": table.k,
            "disc-bound": table.disc_bound,
            "classes": len(table.entries),
            "provenance": table.provenance,
        }))
    else:
        _print(out, f"weight: {table.k}")
        _print(out, f"disc-bound: {table.disc_bound}")
        _print(out, f"classes: {len(table.entries)}")
        _print(out, f"provenance: {table.provenance}")
    return 0


_COMMANDS = {
    "reduce": _cmd_reduce,
    "classgroup": _cmd_classgroup,
    "theta": _cmd_theta,
    "mf-basis": _cmd_mf_basis,
    "jacobi-basis": _cmd_jacobi_basis,
    "sk-lift": _cmd_sk_lift,
    "coeff": _cmd_coeff,
    "hecke": _cmd_hecke,
    "eigen": _cmd_eigen,
    "period": _cmd_period,
    "scan-fundamental": _cmd_scan,
    "ratio": _cmd_ratio,
    "multone-demo": _cmd_multone,
    "ingest-check": _cmd_ingest_check,
}


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 1
    except FormatError as exc:
        err.write(f"format error: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"domain error: {exc}\n")
        return 2
    except BoundError as exc:
        err.write(f"bound error: {exc}\n")
        return 3
    except OSError as exc:
        err.write(f"io error: {exc}\n")
        return 2


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
