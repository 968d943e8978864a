"""Command-line front end: verification suites and one-off evaluations.

``twistedmoments verify <suite>`` runs a family of identity checks over a
default (or overridden) parameter grid and exits 0 iff every check
passes, 1 if any fails, 2 on usage errors.  ``twistedmoments eval <fn>``
prints a single value in canonical rendering.

Flags override an optional ``key = value`` config file; environment
variables are deliberately not consulted, so runs are reproducible from
the command line alone.
"""

from __future__ import annotations

import argparse
import multiprocessing
import os
import sys

from . import arith, identities, numeric
from .hecke import EisensteinProvider, SymbolicProvider, fourier_coefficient
from .report import CheckReport, render_complex, reports_to_json


def _call_job(job):
    fn, kwargs = job
    return fn(**kwargs)


def run_jobs(jobs, workers: int | None = None) -> list[CheckReport]:
    """Run independent check jobs, forking a small pool when it pays off.

    Checks are pure functions of their arguments, so parallel execution
    is safe; reports are re-sorted deterministically by the caller
    regardless of completion order.
    """
    if workers is None:
        workers = min(2, os.cpu_count() or 1)
    if workers <= 1 or len(jobs) < 4:
        return [fn(**kw) for fn, kw in jobs]
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:   # platform without fork: stay sequential
        return [fn(**kw) for fn, kw in jobs]
    with ctx.Pool(workers) as pool:
        return pool.map(_call_job, jobs, chunksize=1)


DEFAULT_ALPHAS = [(0j, 0j, 0j), (0.3j, -0.1j, -0.2j)]
DEFAULT_POINTS = [(2.2, 2.1), (2.5, 2.0)]
DEFAULT_PRIMES = [3, 5, 7, 11, 13]
GAUSS_PRIMES = [p for p in range(3, 51) if arith.is_prime(p)]
SUITES = (
    "all",
    "diagonal",
    "offdiag",
    "ramanujan",
    "decomposition",
    "residue",
    "prime-dual",
    "gauss",
    "funceq",
    "conjecture-factor",
)
EVAL_FNS = ("hurwitz", "dirichlet-l", "gauss-sum", "ramanujan", "hecke-coeff", "tau-alpha", "gamma-r")


def parse_complex_token(text: str) -> complex:
    """One complex literal: '2', '0.3i', '-i', '1+2i'."""
    t = text.strip().replace("I", "i")
    if t in ("i", "+i"):
        return 1j
    if t == "-i":
        return -1j
    t = t.replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse complex value {text!r}") from None


def parse_point(text: str) -> complex:
    """A point 're' or 're,im'."""
    parts = text.split(",")
    if len(parts) == 1:
        return parse_complex_token(parts[0])
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"cannot parse point {text!r} (want re or re,im)")


def parse_alpha(text: str) -> tuple[complex, complex, complex]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("alpha must be three comma-separated values")
    return tuple(parse_complex_token(t) for t in parts)


def parse_sign(text: str) -> int:
    if text in ("+", "+1", "plus"):
        return 1
    if text in ("-", "-1", "minus"):
        return -1
    raise argparse.ArgumentTypeError("sign must be + or -")


def load_config(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {raw.rstrip()}")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


_CONFIG_PARSERS = {
    "a": int,
    "a_max": int,
    "p": int,
    "n": int,
    "d": int,
    "m1": int,
    "m2": int,
    "chi": int,
    "height": int,
    "cutoff": int,
    "tol": float,
    "s": parse_point,
    "s0": parse_point,
    "alpha": parse_alpha,
    "sign": parse_sign,
    "out": str,
}


def apply_config(args: argparse.Namespace, config: dict[str, str]):
    for key, raw in config.items():
        if key == "json":
            if not args.json:
                args.json = raw.lower() in ("1", "true", "yes")
            continue
        if key not in _CONFIG_PARSERS:
            raise ValueError(f"unknown config key {key!r}")
        if getattr(args, key, None) is None:
            setattr(args, key, _CONFIG_PARSERS[key](raw))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def _a_range(args, default_max: int) -> list[int]:
    if args.a is not None:
        return [args.a]
    return list(range(1, (args.a_max or default_max) + 1))


def _signs(args) -> list[int]:
    return [args.sign] if args.sign is not None else [1, -1]


def _points(args) -> list[tuple[complex, complex]]:
    if args.s is not None or args.s0 is not None:
        if args.s is None or args.s0 is None:
            raise ValueError("--s and --s0 must be given together")
        return [(args.s, args.s0)]
    return [(complex(s), complex(s0)) for s, s0 in DEFAULT_POINTS]


def _alphas(args) -> list[tuple[complex, complex, complex]]:
    return [args.alpha] if args.alpha is not None else DEFAULT_ALPHAS


def suite_diagonal(args) -> list[CheckReport]:
    height = args.height or 10
    jobs = [(identities.check_diagonal, {"a": a, "height": height}) for a in _a_range(args, 60)]
    return run_jobs(jobs, args.workers)


def suite_offdiag(args) -> list[CheckReport]:
    height = args.height or 10
    # heaviest twists first for better load balance across workers
    avals = sorted(_a_range(args, 60), key=lambda a: -sum(d * d for d in arith.divisors(a)))
    jobs = [(identities.check_offdiag_residue, {"a": a, "height": height}) for a in avals]
    return run_jobs(jobs, args.workers)


def suite_ramanujan(args) -> list[CheckReport]:
    cutoff = args.cutoff or 200_000
    tol = args.tol or 1e-6
    zs = [args.s] if args.s is not None else [2 + 0j, 2.5 + 0j, 3 + 1j, 3 - 1j]
    a1s = [args.a] if args.a is not None else list(range(1, 21))
    return [
        identities.check_ramanujan_generating(a1, z, cutoff=cutoff, tol=tol)
        for a1 in a1s
        for z in zs
    ]


def suite_decomposition(args) -> list[CheckReport]:
    cutoff = args.cutoff or 200_000
    tol = args.tol or 1e-5
    avals = [args.a] if args.a is not None else [1, 2, 3, 4, 6, 12]
    jobs = []
    for alpha in _alphas(args):
        numeric.tau_alpha_sieve(alpha, cutoff)   # warm before forking workers
        for a in avals:
            for s, s0 in _points(args):
                for sign in _signs(args):
                    jobs.append(
                        (
                            identities.check_twisted_decomposition,
                            {
                                "a": a,
                                "s0": s0,
                                "s": s,
                                "sign": sign,
                                "alpha": alpha,
                                "a0_cutoff": cutoff,
                                "a1_cutoff": cutoff,
                                "tol": tol,
                            },
                        )
                    )
    return run_jobs(jobs, args.workers)


def suite_residue(args) -> list[CheckReport]:
    tol = args.tol or 1e-3
    avals = [args.a] if args.a is not None else [1, 2, 6]
    s = args.s if args.s is not None else 2 + 0j
    return [
        identities.check_residue_numeric(a, s, alpha, tol=tol)
        for alpha in _alphas(args)
        for a in avals
    ]


def suite_prime_dual(args) -> list[CheckReport]:
    tol = args.tol or 1e-5
    ps = [args.p] if args.p is not None else DEFAULT_PRIMES
    out = []
    for alpha in _alphas(args):
        for p in ps:
            for s, s0 in _points(args):
                for sign in _signs(args):
                    out.append(identities.check_prime_dual(p, s0, s, sign, alpha, tol=tol))
    return out


def suite_gauss(args) -> list[CheckReport]:
    tol = args.tol or 1e-11
    ps = [args.p] if args.p is not None else GAUSS_PRIMES
    out = [identities.check_gauss_moduli(p, tol=tol) for p in ps]
    twist_ps = [args.p] if args.p is not None else [3, 5, 7]
    for p in twist_ps:
        for n in (1, 2, p):
            for j in range(p - 1):
                out.append(identities.check_gauss_twist(p, n, j))
    return out


def suite_funceq(args) -> list[CheckReport]:
    tol = args.tol or 1e-7
    ps = [args.p] if args.p is not None else [5, 7]
    s0s = [args.s0] if args.s0 is not None else [0.5 + 1j, 0.5 + 2j]
    return [identities.check_dirichlet_functional_eq(p, s0, tol=tol) for p in ps for s0 in s0s]


def suite_conjecture(args) -> list[CheckReport]:
    tol = args.tol or 1e-10
    avals = [args.a] if args.a is not None else list(range(1, (args.a_max or 30) + 1))
    eps_choices = [(1, 1, 1), (1, -1, 1)]
    return [
        identities.check_conjecture_factor(a, alpha, eps, tol=tol)
        for alpha in _alphas(args)
        for eps in eps_choices
        for a in avals
    ]


_SUITE_RUNNERS = {
    "diagonal": suite_diagonal,
    "offdiag": suite_offdiag,
    "ramanujan": suite_ramanujan,
    "decomposition": suite_decomposition,
    "residue": suite_residue,
    "prime-dual": suite_prime_dual,
    "gauss": suite_gauss,
    "funceq": suite_funceq,
    "conjecture-factor": suite_conjecture,
}


def run_suite(name: str, args) -> list[CheckReport]:
    if name == "all":
        reports = []
        for key in (
            "diagonal",
            "offdiag",
            "ramanujan",
            "decomposition",
            "residue",
            "prime-dual",
            "gauss",
            "funceq",
            "conjecture-factor",
        ):
            reports.extend(_SUITE_RUNNERS[key](args))
        return reports
    return _SUITE_RUNNERS[name](args)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    try:
        if args.config:
            apply_config(args, load_config(args.config))
        reports = run_suite(args.suite, args)
    except (ValueError, numeric.OutOfRegionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.inject_failure:
        reports.append(
            CheckReport(
                identity="injected-failure",
                params={"note": "testing aid"},
                mode="numeric",
                items=[],
                max_error=1.0,
                passed=False,
            )
        )
    reports.sort(key=CheckReport.sort_key)
    n_pass = sum(1 for r in reports if r.passed)
    total = len(reports)
    summary = f"PASS {n_pass}/{total}" if n_pass == total else f"FAIL {total - n_pass}/{total}"
    if args.json:
        payload = reports_to_json(reports)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
            print(summary)
        else:
            print(payload)
    else:
        lines = [r.summary_line() for r in reports] + [summary]
        text = "\n".join(lines)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
            print(summary)
        else:
            print(text)
    return 0 if n_pass == total else 1


def cmd_eval(args) -> int:
    try:
        if args.config:
            apply_config(args, load_config(args.config))
        value = _evaluate(args)
    except (numeric.PoleError, numeric.OutOfRegionError, ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(value)
    return 0


def _require(args, *names):
    for name in names:
        if getattr(args, name, None) is None:
            raise ValueError(f"eval {args.fn}: missing --{name.replace('_', '-')}")


def _evaluate(args) -> str:
    fn = args.fn
    if fn == "hurwitz":
        _require(args, "s", "a")
        return render_complex(numeric.hurwitz_zeta(args.s, float(args.a)))
    if fn == "gamma-r":
        _require(args, "s")
        return render_complex(numeric.gamma_R(args.s))
    if fn == "ramanujan":
        _require(args, "n", "d")
        return str(arith.ramanujan_sum(args.n, args.d))
    if fn == "gauss-sum":
        _require(args, "p", "chi")
        chi = numeric.characters_mod(args.p)[args.chi]
        return render_complex(numeric.gauss_sum(chi))
    if fn == "dirichlet-l":
        _require(args, "p", "chi", "s")
        chi = numeric.characters_mod(args.p)[args.chi]
        return render_complex(numeric.dirichlet_L(args.s, chi))
    if fn == "tau-alpha":
        _require(args, "n", "alpha")
        return render_complex(EisensteinProvider(args.alpha).lam(args.n))
    if fn == "hecke-coeff":
        _require(args, "m1", "m2")
        if args.symbolic or args.alpha is None:
            return str(fourier_coefficient(SymbolicProvider(), args.m1, args.m2))
        return render_complex(fourier_coefficient(EisensteinProvider(args.alpha), args.m1, args.m2))
    raise ValueError(f"unknown eval function {fn!r}")  # pragma: no cover


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistedmoments",
        description="Verify twisted-moment series identities, exactly and numerically.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", choices=SUITES)
    ver.add_argument("--a", type=int, default=None, help="single eigenvalue-twist index a")
    ver.add_argument("--a-max", dest="a_max", type=int, default=None, help="sweep a from 1 to this bound")
    ver.add_argument("--p", type=int, default=None, help="prime modulus/conductor")
    ver.add_argument("--alpha", type=parse_alpha, default=None, help="zero-sum parameter triple x,y,z")
    ver.add_argument("--s", type=parse_point, default=None, help="evaluation point s (re or re,im)")
    ver.add_argument("--s0", type=parse_point, default=None, help="evaluation point s0 (re or re,im)")
    ver.add_argument("--sign", type=parse_sign, default=None, help="twist sign + or -")
    ver.add_argument("--height", type=int, default=None, help="base height for exact comparisons")
    ver.add_argument("--cutoff", type=int, default=None, help="series truncation cutoff")
    ver.add_argument("--tol", type=float, default=None, help="relative tolerance override")
    ver.add_argument("--json", action="store_true", help="emit the JSON report array")
    ver.add_argument("--out", type=str, default=None, help="write the report to this path")
    ver.add_argument("--config", type=str, default=None, help="key = value config file")
    ver.add_argument("--workers", type=int, default=None, help="process pool size (default: up to 2)")
    ver.add_argument("--inject-failure", action="store_true", help=argparse.SUPPRESS)
    ver.set_defaults(func=cmd_verify)

    ev = sub.add_parser("eval", help="evaluate a single function")
    ev.add_argument("fn", choices=EVAL_FNS)
    ev.add_argument("--s", type=parse_point, default=None)
    ev.add_argument("--a", type=float, default=None, help="Hurwitz shift in (0, 1]")
    ev.add_argument("--p", type=int, default=None)
    ev.add_argument("--chi", type=int, default=None, help="character index in [0, p-2]")
    ev.add_argument("--n", type=int, default=None)
    ev.add_argument("--d", type=int, default=None)
    ev.add_argument("--m1", type=int, default=None)
    ev.add_argument("--m2", type=int, default=None)
    ev.add_argument("--alpha", type=parse_alpha, default=None)
    ev.add_argument("--symbolic", action="store_true", help="symbolic Hecke coefficients")
    ev.add_argument("--config", type=str, default=None)
    ev.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
