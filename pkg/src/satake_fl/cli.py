"""Command-line front end.

Exit codes: 0 success, 1 identity mismatch or failed self-test, 2 usage error or
invalid input (including non-regular elements), 3 window instability.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .coweights import Coweight, enumerate_below, sup_norm
from .errors import HypothesisViolated, SatakeError, WindowUnstable
from .hecke import HeckeElement, base_change, phi, psi, satake
from .laurent import render_vcoeff, vcoeff_json
from .localfield.fields import GF
from .localfield.literals import LiteralError, parse_series
from .orbital import (
    OrbitalProblem,
    fl_check,
    orbital_integral,
    twisted_orbital_integral,
)
from .symfunc import kostka_foulkes, lusztig_kato_poly, render_sympoly
from . import selftest

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNSTABLE = 0, 1, 2, 3

LIMITS = {"d": 6, "q": 49, "r": 4, "norm": 4}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    d: int | None = None
    p: int = 2
    a: int = 1
    r: int = 1
    lam: Coweight | None = None
    entries: list[str] = field(default_factory=list)
    window: int | None = None
    prec: int | None = None
    fmt: str = "table"
    seed: int = 0

    @property
    def q(self) -> int:
        return self.p ** self.a

    def validate(self) -> None:
        if self.lam is not None:
            if self.d is None:
                self.d = self.lam.d
            elif self.d != self.lam.d:
                raise UsageError(f"--d {self.d} but --lambda has {self.lam.d} parts")
            if sup_norm(self.lam) > LIMITS["norm"]:
                raise UsageError(f"||lambda|| <= {LIMITS['norm']} supported")
        if self.d is not None and not 1 <= self.d <= LIMITS["d"]:
            raise UsageError(f"d must be in 1..{LIMITS['d']}")
        if self.q > LIMITS["q"]:
            raise UsageError(f"q = p^a must be <= {LIMITS['q']}")
        if not 1 <= self.r <= LIMITS["r"]:
            raise UsageError(f"r must be in 1..{LIMITS['r']}")


def _coweight(text: str) -> Coweight:
    try:
        return Coweight.parse(text)
    except (ValueError, SatakeError) as e:
        raise argparse.ArgumentTypeError(f"bad coweight {text!r}: {e}")


def _common(sp: argparse.ArgumentParser, need_lambda: bool = True) -> None:
    sp.add_argument("--d", type=int)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--a", type=int, default=1, help="q = p^a")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--lambda", dest="lam", type=_coweight, required=need_lambda, metavar="L")
    sp.add_argument("--window", type=int)
    sp.add_argument("--prec", type=int)
    sp.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
    sp.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="satake-fl", description="Spherical Hecke algebras, base change and orbital integrals")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    sp = sub.add_parser("satake", help="Satake transform of phi_lambda or psi_lambda")
    _common(sp)
    sp.add_argument("--basis", choices=("phi", "psi"), default="phi")

    sp = sub.add_parser("basechange", help="b(phi_lambda) for an unramified extension of degree r")
    _common(sp)

    sp = sub.add_parser("kostka", help="table of K_{lambda,alpha}(t) and P_{lambda,alpha}(q)")
    _common(sp)

    for name in ("orbital", "twisted-orbital"):
        sp = sub.add_parser(name, help=f"{name.replace('-', ' ')} integral of phi_lambda")
        _common(sp)
        sp.add_argument("--entry", action="append", default=[], required=True,
                        help="diagonal entry as a series literal, e.g. '1 + g*pi'")
        sp.add_argument("--function", help="test function as Hecke JSON (overrides --lambda)")
        sp.add_argument("--no-stability", action="store_true", help="skip the N+1 window re-run")

    sp = sub.add_parser("verify-fl", help="check TO_delta(phi_lambda) = O_{N delta}(b(phi_lambda))")
    _common(sp, need_lambda=False)
    sp.add_argument("--entry", action="append", default=[])
    sp.add_argument("--instances", help="file with one JSON instance per line")
    sp.set_defaults(fmt="json")

    sp = sub.add_parser("selftest", help="run the property suites")
    sp.add_argument("--only", action="append", choices=sorted(selftest.SUITES))
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--dmax", type=int, default=3)
    sp.add_argument("--seed", type=int, default=0)
    return ap


def _config(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        subcommand=ns.subcommand,
        d=getattr(ns, "d", None),
        p=getattr(ns, "p", 2),
        a=getattr(ns, "a", 1),
        r=getattr(ns, "r", 1),
        lam=getattr(ns, "lam", None),
        entries=list(getattr(ns, "entry", None) or []),
        window=getattr(ns, "window", None),
        prec=getattr(ns, "prec", None),
        fmt=getattr(ns, "fmt", "table"),
        seed=getattr(ns, "seed", 0),
    )
    cfg.validate()
    return cfg


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


def cmd_satake(cfg: RunConfig, ns, out) -> int:
    h = psi(cfg.lam) if ns.basis == "psi" else phi(cfg.lam)
    poly = satake(h)
    if cfg.fmt == "json":
        terms = [
            {"monomial": list(k.parts), "coeff": vcoeff_json(poly.coeffs[k])}
            for k in sorted(poly.coeffs, reverse=True)
        ]
        _emit({"d": poly.d, "basis": ns.basis, "lambda": list(cfg.lam.parts), "terms": terms}, out)
    else:
        out.write(render_sympoly(poly) + "\n")
    return EXIT_OK


def cmd_basechange(cfg: RunConfig, ns, out) -> int:
    h = base_change(phi(cfg.lam), cfg.r)
    if cfg.fmt == "json":
        _emit(h.to_json(), out)
    else:
        out.write(str(h) + "\n")
    return EXIT_OK


def cmd_kostka(cfg: RunConfig, ns, out) -> int:
    lam = cfg.lam
    rows = []
    for alf in sorted(enumerate_below(lam), reverse=True):
        k = kostka_foulkes(lam, alf)
        pq = lusztig_kato_poly(lam, alf)
        rows.append((alf, k, pq))
    if cfg.fmt == "json":
        _emit({
            "lambda": list(lam.parts),
            "rows": [{"alpha": list(a.parts), "K": vcoeff_json(k), "P": vcoeff_json(p)} for a, k, p in rows],
        }, out)
        return EXIT_OK
    table = [("alpha", "K(t=1/q)", "P(q)")] + [(str(a), render_vcoeff(k), render_vcoeff(p)) for a, k, p in rows]
    widths = [max(len(row[i]) for row in table) for i in range(3)]
    for row in table:
        out.write("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")
    return EXIT_OK


def _field(cfg: RunConfig):
    return GF(cfg.p, cfg.a * cfg.r)


def _entries(cfg: RunConfig, texts: Sequence[str]):
    f = _field(cfg)
    try:
        elem = tuple(parse_series(t, None if "(mod" in t else f) for t in texts)
    except LiteralError as e:
        raise UsageError(str(e))
    for x in elem:
        if x.field != f:
            # A literal may name the base field; lift it into the working field.
            if x.field.p != f.p or f.a % x.field.a:
                raise UsageError(f"entry over {x.field!r} does not embed in {f!r}")
            if x.field.a != 1:
                raise UsageError("entries over a proper intermediate field are not supported; use F_p or F_{q^r}")
    elem = tuple(x if x.field == f else _lift(x, f) for x in elem)
    if cfg.d is not None and len(elem) != cfg.d:
        raise UsageError(f"--d {cfg.d} but {len(elem)} entries")
    return elem


def _lift(x, f):
    from .localfield.series import LSeries

    return LSeries(f, [f.from_int(c) for c in x.coeffs], x.val, x.prec)


def cmd_orbital(cfg: RunConfig, ns, out, twisted: bool) -> int:
    elem = _entries(cfg, cfg.entries)
    d = len(elem)
    if ns.function:
        h = HeckeElement.from_json(ns.function)
    else:
        h = phi(cfg.lam)
    if h.d != d:
        raise UsageError("test function and element have different rank")
    if not twisted and cfg.r != 1:
        raise UsageError("orbital takes --r 1; use twisted-orbital for r > 1")
    prob = OrbitalProblem(d, cfg.p, cfg.a, cfg.r, elem, h, cfg.window, cfg.prec)
    fn = twisted_orbital_integral if twisted else orbital_integral
    val = fn(prob, check_stability=not ns.no_stability)
    if cfg.fmt == "json":
        _emit(val.to_json(), out)
    else:
        out.write(f"value {val.value}\n")
        for k, c in sorted(val.counts.items(), reverse=True):
            out.write(f"  N[{k}] = {c}\n")
        out.write(f"window {val.window}, conductor {val.conductor}, stable {str(val.stable).lower()}\n")
    return EXIT_OK


def _instance_from_json(obj: dict, base: RunConfig) -> tuple[RunConfig, list[str]]:
    cfg = RunConfig(
        subcommand="verify-fl",
        p=int(obj.get("p", base.p)),
        a=int(obj.get("a", base.a)),
        r=int(obj.get("r", base.r)),
        lam=Coweight(obj["lambda"]),
        window=obj.get("window", base.window),
        prec=obj.get("prec", base.prec),
        fmt=base.fmt,
    )
    ents = obj["delta"]
    if not isinstance(ents, list) or not all(isinstance(t, str) for t in ents):
        raise UsageError("'delta' must be a list of series literals")
    cfg.validate()
    return cfg, ents


def cmd_verify_fl(cfg: RunConfig, ns, out, err) -> int:
    jobs: list[tuple[RunConfig, list[str]]] = []
    if ns.instances:
        try:
            fh = open(ns.instances)
        except OSError as e:
            raise UsageError(f"cannot read {ns.instances}: {e}")
        with fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    jobs.append(_instance_from_json(json.loads(line), cfg))
                except (ValueError, KeyError, TypeError, UsageError, SatakeError) as e:
                    raise UsageError(f"{ns.instances}:{lineno}: malformed instance: {e}")
    else:
        if cfg.lam is None or not cfg.entries:
            raise UsageError("verify-fl needs --lambda and --entry flags, or --instances FILE")
        jobs.append((cfg, cfg.entries))
    mismatch = unstable = False
    for icfg, ents in jobs:
        delta = _entries(icfg, ents)
        try:
            rep = fl_check(delta, icfg.lam, icfg.p, icfg.a, icfg.r, icfg.window, icfg.prec)
        except WindowUnstable as e:
            unstable = True
            _emit({"instance": {"lambda": list(icfg.lam.parts), "delta": ents, "p": icfg.p, "a": icfg.a, "r": icfg.r},
                   "error": "WindowUnstable", "message": str(e), "window": e.window, "stable": False}, out)
            continue
        obj = rep.to_json()
        if icfg.fmt == "json":
            _emit(obj, out)
        else:
            verdict = "EQUAL" if rep.equal else "MISMATCH"
            out.write(f"{verdict} lambda={icfg.lam} delta=[{', '.join(ents)}] lhs={rep.lhs.value} rhs={rep.rhs.value} window={rep.window}\n")
        if not rep.equal:
            mismatch = True
    if mismatch:
        return EXIT_MISMATCH
    if unstable:
        return EXIT_UNSTABLE
    return EXIT_OK


def cmd_selftest(ns, out) -> int:
    cfg = selftest.SelftestConfig(seed=ns.seed, trials=ns.trials, dmax=ns.dmax)
    return selftest.run(cfg, ns.only, out=lambda s: out.write(s + "\n"))


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if ns.subcommand == "selftest":
            return cmd_selftest(ns, out)
        cfg = _config(ns)
        if ns.subcommand == "satake":
            return cmd_satake(cfg, ns, out)
        if ns.subcommand == "basechange":
            return cmd_basechange(cfg, ns, out)
        if ns.subcommand == "kostka":
            return cmd_kostka(cfg, ns, out)
        if ns.subcommand == "orbital":
            return cmd_orbital(cfg, ns, out, twisted=False)
        if ns.subcommand == "twisted-orbital":
            return cmd_orbital(cfg, ns, out, twisted=True)
        if ns.subcommand == "verify-fl":
            return cmd_verify_fl(cfg, ns, out, err)
    except UsageError as e:
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    except WindowUnstable as e:
        err.write(f"error: WindowUnstable: {e}\n")
        return EXIT_UNSTABLE
    except (HypothesisViolated, SatakeError, ValueError) as e:
        err.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    parser.error(f"unknown subcommand {ns.subcommand}")
    return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
