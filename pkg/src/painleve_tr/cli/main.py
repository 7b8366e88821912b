"""Command-line entry point: compute, verify, table."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from ..curves import CurveValidationError, build_curve, build_htw, build_jm, load_curve
from ..exactcore import ScalarField, parse_rational, render
from ..laxdet import (
    appendix_d_residue,
    omega_body,
    loop_check,
    parity_check,
    projector_recursion,
    tt_suite,
)
from ..painleve import (
    check_tau_derivative,
    expand_qp,
    fg_bessel_reference,
    fg_htw_reference,
    fg_jm_reference,
    sigma_form_residual,
    sigma_series,
    sigma_table,
)
from ..toprec import bernoulli_check, compare, fg_difference, fg_in_q0, free_energy, report_form

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

ANCHORS = {
    "fg": "F^(g) = 1/(2g-2) sum Res Phi omega_1^(g)",
    "omega": "omega_n^(g) by residue recursion",
    "sigma": "sigma = p^2/2 + (q^2 + t/2) p + theta q",
    "mk": "hbar d_x M = [D, M], M^2 = M",
    "bernoulli": "F_bessel^(g) = -F_weber^(g) = B_2g/(2g(2g-2) theta^(2g-2))",
    "difference": "F_jm^(g) - F_htw^(g) = B_2g/(2g(2g-2) theta^(2g-2))",
    "sigma-form": "(hbar s'')^2 + 4 s'^3 + 2 t s'^2 - 2 s s' - theta^2/4 = 0",
    "tt": "W_n^(g) dx_1...dx_n = omega_n^(g)",
    "loop": "P_1 = W_2(x,x) + W_1^2 and the n = 1 loop equation",
    "appendix-d": "D_t F^(g) = sum over punctures Res d_t s_inf W_1^(g) dx",
    "sigm": "sigma_2k closed forms",
    "taunum-deriv": "D_t tau_2k = -sigma_2k",
    "res1": "F_jm^(g) closed forms",
    "fghtw": "F_htw^(g) closed forms",
    "fgbessel": "F_bessel^(g) closed forms",
}


class ConfigError(ValueError):
    pass


@dataclass
class Report:
    check: str
    status: str
    anchor: str
    lhs: Optional[str]
    rhs: Optional[str]
    first_diff: Optional[str]
    millis: int

    def as_dict(self) -> dict:
        return {
            "check": self.check, "status": self.status, "anchor": self.anchor,
            "lhs": self.lhs, "rhs": self.rhs, "first_diff": self.first_diff, "millis": self.millis,
        }

    def text(self) -> str:
        line = f"{self.status.upper():4} {self.check}"
        if self.status != "pass" and self.first_diff:
            line += f"  first difference: {self.first_diff}"
        return line


def _text(v) -> Optional[str]:
    if v is None:
        return None
    return render(v) if hasattr(v, "num") else str(v)


class _Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.millis = int(round(1000 * (time.perf_counter() - self.t0)))


def _from_identity(r, anchor: str, millis: int) -> Report:
    return Report(r.check, r.status, anchor, r.lhs, r.rhs, r.first_diff, millis)


# -- argument parsing ---------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--curve", choices=["jm", "htw", "weber", "bessel"])
    p.add_argument("--curve-file")
    p.add_argument("--theta")
    p.add_argument("--q0")
    p.add_argument("--s")
    p.add_argument("--symbolic", action="store_true", help="keep q0 (or s, w, theta) free")
    p.add_argument("--g", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--K", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="painleve-tr", description="Exact TR and Painleve 2 checks.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("fg", parents=[common], help="free energy F^(g)")
    sub.add_parser("omega", parents=[common], help="omega_n^(g) as a rational function of z1..zn")
    p = sub.add_parser("sigma", parents=[common], help="sigma_2k")
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("mk", parents=[common], help="projector coefficient M^(k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--driver", choices=["x_system", "t_system"], default="x_system")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=["tt", "loop", "bernoulli", "difference", "sigma-form", "appendix-d"])
    p.add_argument("--lax", choices=["jm", "htw"])
    p.add_argument("--gmax", type=int)
    p = sub.add_parser("table", parents=[common], help="reproduce a reference table")
    p.add_argument("name", choices=["sigm", "taunum-deriv", "res1", "fghtw", "fgbessel"])
    return parser


def _theta(args, default=None):
    if args.theta is None:
        if default is None:
            raise ConfigError("--theta is required")
        return default
    th = parse_rational(args.theta)
    if th == 0:
        raise ConfigError("theta must be nonzero")
    return th


def _curve(args, name: Optional[str] = None):
    if args.curve_file:
        if args.curve or name:
            raise ConfigError("give --curve or --curve-file, not both")
        return load_curve(args.curve_file)
    name = name or args.curve
    if name is None:
        raise ConfigError("--curve or --curve-file is required")
    if args.symbolic and (args.q0 or args.s):
        raise ConfigError("--symbolic excludes --q0 and --s")
    if name in ("jm", "htw"):
        theta = _theta(args)
        q0 = None if args.symbolic else args.q0
        s = None if args.symbolic else args.s
        return build_curve(name, theta, q0=q0, s=s)
    if args.q0 or args.s:
        raise ConfigError(f"--q0/--s do not apply to the {name} curve")
    theta = None if args.symbolic or args.theta is None else _theta(args)
    return build_curve(name, theta)


# -- commands ------------------------------------------------------------------

def cmd_compute(args) -> list[Report]:
    with _Timer() as t:
        if args.command == "fg":
            if args.g is None:
                raise ConfigError("--g is required")
            c = _curve(args)
            value = report_form(c, free_energy(c, args.g))
            check = f"fg-{c.name}-g{args.g}"
        elif args.command == "omega":
            if args.g is None or args.n is None:
                raise ConfigError("--g and --n are required")
            c = _curve(args)
            if args.n < 1 or args.g < 0:
                raise ConfigError("need g >= 0 and n >= 1")
            value = omega_body(c, args.g, args.n)
            check = f"omega-{c.name}-g{args.g}-n{args.n}"
        elif args.command == "sigma":
            if args.k < 0:
                raise ConfigError("--k must be nonnegative")
            theta = _theta(args)
            F = ScalarField.symbolic_q0(theta)
            value = sigma_series(expand_qp(F, 2 * args.k)).coefficient(args.k)
            if args.q0 is not None:
                value = F.evaluate(value, parse_rational(args.q0))
            check = f"sigma-{2 * args.k}"
        else:
            c = _curve(args)
            if c.name not in ("jm", "htw"):
                raise ConfigError("mk needs --curve jm or htw")
            if args.k < 0:
                raise ConfigError("--k must be nonnegative")
            P = projector_recursion(c, args.k, args.driver)
            value = P[args.k]
            check = f"mk-{c.name}-k{args.k}"
    text = f"[[{_text(value.a)}, {_text(value.b)}], [{_text(value.c)}, {_text(value.d)}]]" if hasattr(value, "a") else _text(value)
    return [Report(check, "pass", ANCHORS[args.command], text, None, None, t.millis)]


def _verify(args) -> list[Report]:
    suite = args.suite
    anchor = ANCHORS[suite]
    out: list[Report] = []
    if suite == "bernoulli":
        theta = _theta(args, 1)
        gmax = args.gmax or args.g or 4
        for name in ("bessel", "weber"):
            for g in range(2, gmax + 1):
                with _Timer() as t:
                    c = build_curve(name, theta) if name == "bessel" else _weber(theta)
                    r = bernoulli_check(c, g)
                out.append(_from_identity(r, anchor, t.millis))
        return out
    if suite == "difference":
        theta = _theta(args, 1)
        for g in ([args.g] if args.g else [2, 3]):
            with _Timer() as t:
                r = fg_difference(theta, g)
            out.append(_from_identity(r, anchor, t.millis))
        return out
    if suite == "sigma-form":
        theta = _theta(args, 1)
        K = args.K or 10
        with _Timer() as t:
            sig = sigma_series(expand_qp(ScalarField.symbolic_q0(theta), K))
            res = sigma_form_residual(sig, K)
        k = res.leading_power()
        diff = None if k is None else f"hbar^{k}: {res[k]}"
        lhs = f"O(hbar^{K + 1})" if k is None else diff
        out.append(Report(f"sigma-form-K{K}", "pass" if k is None else "fail", anchor, lhs, "0", diff, t.millis))
        return out
    flavor = args.lax or args.curve
    if flavor not in ("jm", "htw"):
        raise ConfigError(f"verify {suite} needs --lax jm or --lax htw")
    if suite == "appendix-d":
        theta = _theta(args)
        c = build_jm(theta) if flavor == "jm" else build_htw(theta)
        for g in ([args.g] if args.g else [2, 3]):
            with _Timer() as t:
                r = appendix_d_residue(c, g)
            ratio = None if r.ratio is None else render(c.field.to_q0(r.ratio))
            out.append(Report(r.check, r.status, anchor, render(c.field.to_q0(r.value)),
                              render(c.field.to_q0(r.dF)), None if r.passed else f"ratio {ratio}", t.millis))
        return out
    c = _curve(args, flavor)
    K = args.K or 6
    with _Timer() as t:
        reports = tt_suite(c, K) + [parity_check(flavor, _theta(args), K)] if suite == "tt" else loop_check(c, K)
    share = t.millis // max(1, len(reports))
    return [_from_identity(r, anchor, share) for r in reports]


def _weber(theta):
    try:
        return build_curve("weber", theta)
    except ValueError:
        return build_curve("weber")  # theta is not a square: keep w symbolic


def _table(args) -> list[Report]:
    name = args.name
    anchor = ANCHORS[name]
    theta = _theta(args, 1)
    out = []
    if name == "sigm":
        with _Timer() as t:
            rows = sigma_table(theta, 3)
        for row in rows:
            out.append(Report(f"sigm-{row.name}", "pass" if row.ok else "fail", anchor,
                              render(row.lhs), render(row.rhs), row.first_diff, t.millis // len(rows)))
        return out
    if name == "taunum-deriv":
        for k in (2, 3):
            with _Timer() as t:
                row = check_tau_derivative(k, theta)
            out.append(Report(f"taunum-deriv-tau{2 * k}", "pass" if row.ok else "fail", anchor,
                              render(row.lhs), render(row.rhs), row.first_diff, t.millis))
        return out
    for g in (2, 3):
        with _Timer() as t:
            if name == "res1":
                r = compare(f"res1-g{g}", fg_in_q0("jm", theta, g), fg_jm_reference(g).subs({"theta": theta}))
            elif name == "fghtw":
                r = compare(f"fghtw-g{g}", fg_in_q0("htw", theta, g), fg_htw_reference(g).subs({"theta": theta}))
            else:
                c = build_curve("bessel")
                r = compare(f"fgbessel-g{g}", free_energy(c, g), fg_bessel_reference(g))
        out.append(_from_identity(r, anchor, t.millis))
    return out


def _emit(reports: list[Report], args, compute: bool) -> str:
    if args.format == "json":
        payload = reports[0].as_dict() if compute else [r.as_dict() for r in reports]
        return json.dumps(payload, indent=2) + "\n"
    if compute:
        return reports[0].lhs + "\n"
    lines = [r.text() for r in reports]
    passed = sum(r.status == "pass" for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines) + "\n"


_VALUED = {"--theta", "--q0", "--s"}


def _glue_negatives(argv: list[str]) -> list[str]:
    # argparse takes "-1/4" for an option; bind it to its flag instead
    out, i = [], 0
    while i < len(argv):
        a = argv[i]
        if a in _VALUED and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negatives(argv))
    compute = args.command in ("fg", "omega", "sigma", "mk")
    try:
        if compute:
            reports = cmd_compute(args)
        elif args.command == "verify":
            reports = _verify(args)
        else:
            reports = _table(args)
    except (ConfigError, CurveValidationError, ValueError) as exc:
        print(f"painleve-tr: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    text = _emit(reports, args, compute)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if all(r.status == "pass" for r in reports) else EXIT_FAIL
