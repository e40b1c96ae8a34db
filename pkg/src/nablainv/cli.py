"""Command-line interface: invert, forward, verify, table, roundtrip.

Exit codes: 0 on success, 1 on mathematical/domain failures (pole at s = 1,
unsupported expression classes, parameter domain violations, divergence),
2 on usage or syntax errors.
"""

import argparse
import json
import os
import sys

import numpy as np

from .errors import ExpressionSyntaxError, NablaError
from .expansion import expand
from .inversion import (
    FractionalAtom,
    FractionalSumForm,
    invert_fractional,
    invert_partial_fractions,
)
from .pairs import lookup, reference_pairs, sample_points
from .parsing import Kind, classify, parse_expression, pretty
from .rational import DiskAroundOne, FractionalDominance, OriginExclusion, Roc
from .verify import (
    CausalSequence,
    forward_transform,
    initial_value,
    numeric_inverse,
    orientation_check,
)

_DEFAULTS = {"a": 0.0, "k": "1..10", "format": "text", "strategy": "auto",
             "tol": None, "rho": None, "nodes": None}
_CONFIG_KEYS = {"a": float, "k": str, "format": str, "strategy": str,
                "tol": float, "rho": float, "nodes": int}


def build_parser():
    top = argparse.ArgumentParser(
        prog="nablainv",
        description="Analytic inversion of nabla Laplace transforms "
        "F(s) = sum_{k>=1} (1-s)^(k-1) f(k+a), with numerical verification.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, expr_flag="--expr"):
        p.add_argument(expr_flag, required=True, help="expression for F(s)")
        p.add_argument("--a", type=float, default=None, help="base point a (default 0)")
        p.add_argument("--k", default=None, help="step range, e.g. 1..20")
        p.add_argument("--roc", default=None,
                       help="region of convergence, e.g. 'disk1:1.0,origin:0.179'")
        p.add_argument("--format", choices=("text", "csv", "json"), default=None)
        p.add_argument("--tol", type=float, default=None, help="tolerance override")
        p.add_argument("--config", default=None, help="key=value configuration file")

    p_inv = sub.add_parser("invert", help="compute f(k) from F(s)")
    common(p_inv)
    p_inv.add_argument("--strategy", default=None,
                       choices=("pfe", "inside", "outside", "fractional", "auto"))

    p_fwd = sub.add_parser("forward", help="sum the forward series of the inverted "
                           "sequence and compare against F(s)")
    common(p_fwd)
    p_fwd.add_argument("--s", default=None,
                       help="comma-separated evaluation points (complex literals)")

    p_ver = sub.add_parser("verify", help="run all oracles against the inversion")
    common(p_ver)
    p_ver.add_argument("--rho", type=float, default=None, help="contour radius")
    p_ver.add_argument("--nodes", type=int, default=None, help="quadrature nodes")

    p_tab = sub.add_parser("table", help="match an expression against the pair table")
    p_tab.add_argument("--match", required=True, help="expression to match")
    p_tab.add_argument("--format", choices=("text", "csv", "json"), default=None)
    p_tab.add_argument("--config", default=None)

    p_rt = sub.add_parser("roundtrip", help="forward-transform every tabulated "
                          "sequence and compare with its F(s)")
    p_rt.add_argument("--tol", type=float, default=None)
    p_rt.add_argument("--config", default=None)
    return top


def _load_config(path):
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"bad config line (need key=value): {line!r}")
            key, value = (part.strip() for part in line.split("=", 1))
            if key not in _CONFIG_KEYS:
                raise ValueError(f"unknown config key {key!r}")
            out[key] = _CONFIG_KEYS[key](value)
    return out


def _resolve(args):
    """Fill unset options from NABLA_TOL, then the config file, then defaults."""
    cfg = _load_config(args.config) if getattr(args, "config", None) else {}
    for key, default in _DEFAULTS.items():
        if getattr(args, key, None) is None and hasattr(args, key):
            value = cfg.get(key, default)
            if key == "tol" and os.environ.get("NABLA_TOL"):
                value = float(os.environ["NABLA_TOL"])
            setattr(args, key, value)
    return args


def _parse_krange(text, a):
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = float(lo_text), float(hi_text)
    else:
        lo = hi = float(text)
    if hi < lo:
        raise ValueError(f"empty step range {text!r}")
    ks = [lo + i for i in range(int(round(hi - lo)) + 1)]
    for k in ks:
        m = k - a
        if abs(m - round(m)) > 1e-9 or round(m) < 1:
            raise ValueError(
                f"k = {k:g} is not in {{a+1, a+2, ...}} for a = {a:g}; "
                "adjust --k or --a"
            )
    return ks


def _parse_roc(text):
    constraints = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        pieces = part.split(":")
        kind = pieces[0]
        if kind == "disk1" and len(pieces) == 2:
            constraints.append(DiskAroundOne(float(pieces[1])))
        elif kind == "origin" and len(pieces) == 2:
            constraints.append(OriginExclusion(float(pieces[1])))
        elif kind == "frac" and len(pieces) == 3:
            constraints.append(FractionalDominance(float(pieces[1]), complex(pieces[2])))
        else:
            raise ValueError(
                f"bad ROC component {part!r}; use disk1:R, origin:R or frac:ALPHA:LAM"
            )
    roc = Roc(tuple(constraints))
    if roc.disk_radius() is None:
        raise ValueError(
            "the region of convergence must include a disk1:R component; "
            "inversion around s = 1 needs a disk of convergence at 1"
        )
    return roc


def _f17(x):
    return f"{x:.17g}"


def _cpair(z):
    z = complex(z)
    return [z.real, z.imag]


class _Problem:
    """Parsed expression plus the pieces every subcommand needs."""

    def __init__(self, text, a, roc_text=None):
        self.text = text
        self.a = a
        self.ast = parse_expression(text)
        self.classified = classify(self.ast)
        if self.classified.kind is Kind.UNSUPPORTED:
            raise NablaError(f"unsupported expression: {self.classified.reason}")
        self.table_hit = None
        if self.classified.kind is Kind.TABLE_CANDIDATE:
            self.table_hit = lookup(self.ast)
            if self.table_hit is None:
                raise NablaError(
                    "no inversion strategy applies: the expression is neither "
                    "rational, nor a sum of fractional-power atoms, nor a "
                    "tabulated pair shape"
                )
        self.roc = _parse_roc(roc_text) if roc_text else self._inferred_roc()

    def _inferred_roc(self):
        kind = self.classified.kind
        if kind is Kind.RATIONAL:
            return self.classified.rational.inferred_roc()
        if kind is Kind.FRACTIONAL_SUM:
            return self.classified.fractional.roc()
        return self.table_hit.roc

    def transform_callable(self):
        kind = self.classified.kind
        if kind is Kind.RATIONAL:
            return self.classified.rational
        if kind is Kind.FRACTIONAL_SUM:
            return self.classified.fractional
        return self.table_hit.transform

    def invert(self, strategy):
        """Returns (strategy used, closed form or None, values callable k -> float)."""
        kind = self.classified.kind
        if strategy == "auto":
            strategy = {
                Kind.RATIONAL: "pfe",
                Kind.FRACTIONAL_SUM: "fractional",
                Kind.TABLE_CANDIDATE: "table",
            }[kind]
        if strategy == "table":
            hit = self.table_hit or lookup(self.ast)
            if hit is None:
                raise NablaError("the expression does not match any tabulated pair")
            seq = hit.sequence
            return "table", None, lambda k: seq(round(k - self.a))
        if strategy == "inside":
            rf = self._require_rational("inside")
            return "inside", None, _InsideValues(rf, self.a)
        if strategy in ("pfe", "outside"):
            rf = self._require_rational(strategy)
            cf = invert_partial_fractions(rf, self.a)
            return strategy, cf, cf.evaluate
        if strategy == "fractional":
            form = self._as_fractional()
            cf = invert_fractional(form, self.a)
            return "fractional", cf, cf.evaluate
        raise ValueError(f"unknown strategy {strategy!r}")

    def _require_rational(self, strategy):
        if self.classified.kind is not Kind.RATIONAL:
            raise NablaError(
                f"strategy {strategy!r} applies to rational F(s) only; "
                f"this input classified as {self.classified.kind.value}"
            )
        return self.classified.rational

    def _as_fractional(self):
        if self.classified.kind is Kind.FRACTIONAL_SUM:
            return self.classified.fractional
        if self.classified.kind is Kind.RATIONAL:
            pfe = expand(self.classified.rational)
            if pfe.impulse_part or pfe.multiple_terms:
                raise NablaError(
                    "only strictly proper rationals with simple poles convert "
                    "to fractional atoms (each pole p becomes 1/(s-p))"
                )
            return FractionalSumForm(tuple(
                FractionalAtom(r, 1.0, 1.0, pole) for pole, r in pfe.simple_terms
            ))
        raise NablaError("strategy 'fractional' needs a fractional sum of atoms")


class _InsideValues:
    """Series-coefficient evaluation with a growing cache."""

    def __init__(self, rf, a):
        self.rf = rf
        self.a = a
        self.values = None

    def grow(self, k_max):
        m = round(k_max - self.a)
        if self.values is None or len(self.values) < m:
            self.values = self.rf.series_at_one(m - 1)

    def __call__(self, k):
        m = round(k - self.a)
        self.grow(k)
        v = self.values[m - 1]
        return v.real if abs(v.imag) <= 1e-9 * max(1.0, abs(v.real)) else v


def _emit_values(args, problem, used, cf, rows):
    if args.format == "csv":
        print("k,f(k)")
        for k, v in rows:
            print(f"{k:g},{_f17(v)}")
        return
    if args.format == "json":
        doc = {
            "expression": problem.text,
            "canonical": pretty(problem.ast),
            "classification": problem.classified.kind.value,
            "strategy": used,
            "a": problem.a,
            "roc": problem.roc.describe(),
            "closed_form": [_term_json(t) for t in cf.terms] if cf else None,
            "values": [{"k": k, "f": v} for k, v in rows],
        }
        print(json.dumps(doc, indent=2))
        return
    print(f"expression     : {pretty(problem.ast)}")
    print(f"classification : {problem.classified.kind.value}")
    print(f"strategy       : {used}")
    print(f"ROC            : {problem.roc.describe()}")
    if problem.table_hit is not None:
        print(f"table          : {problem.table_hit.describe()}")
    if cf is not None:
        print(f"closed form    : f(k) = {cf.describe()}")
    print(f"{'k':>8}  {'f(k)':>24}")
    for k, v in rows:
        print(f"{k:8g}  {v:24.17g}")


def _term_json(term):
    from .inversion import (
        GeometricTerm,
        ImpulseTerm,
        MittagLefflerTerm,
        PolyGeometricTerm,
    )

    if isinstance(term, ImpulseTerm):
        return {"type": "impulse", "coefficient": _cpair(term.coefficient),
                "shift": term.shift}
    if isinstance(term, GeometricTerm):
        return {"type": "geometric", "coefficient": _cpair(term.coefficient),
                "pole": _cpair(term.pole)}
    if isinstance(term, PolyGeometricTerm):
        return {"type": "poly-geometric", "coefficient": _cpair(term.coefficient),
                "pole": _cpair(term.pole), "order": term.order}
    if isinstance(term, MittagLefflerTerm):
        return {"type": "mittag-leffler", "coefficient": _cpair(term.coefficient),
                "alpha": term.params.alpha, "beta": term.params.beta,
                "lambda": _cpair(term.params.lam)}
    return {"type": "unknown"}


def _cmd_invert(args):
    problem = _Problem(args.expr, args.a, args.roc)
    ks = _parse_krange(args.k, args.a)
    used, cf, values = problem.invert(args.strategy)
    if isinstance(values, _InsideValues):
        values.grow(max(ks))
    rows = [(k, float(np.real(values(k)))) for k in ks]
    _emit_values(args, problem, used, cf, rows)
    return 0


def _cmd_forward(args):
    problem = _Problem(args.expr, args.a, args.roc)
    used, cf, values = problem.invert("auto")
    seq = CausalSequence(args.a, lambda k: complex(values(k)))
    if args.s:
        points = [complex(part.strip()) for part in args.s.split(",") if part.strip()]
    else:
        points = sample_points(problem.roc, count=5)
    F = problem.transform_callable()
    tol = args.tol or 1e-12
    print(f"forward series of the inverted sequence vs direct F(s)  [{used}]")
    print(f"{'s':>28}  {'series':>28}  {'direct':>28}  {'|diff|':>12}")
    worst = 0.0
    for s in points:
        total = forward_transform(seq, s, tol=tol)
        direct = complex(F(s))
        diff = abs(total - direct)
        worst = max(worst, diff)
        print(f"{s:>28.12g}  {total:>28.12g}  {direct:>28.12g}  {diff:12.3e}")
    print(f"max |diff| = {worst:.3e}")
    return 0


def _cmd_verify(args):
    problem = _Problem(args.expr, args.a, args.roc)
    ks = _parse_krange(args.k, args.a)
    tol = args.tol or 1e-9
    F = problem.transform_callable()
    checks = []

    orientation_check()
    checks.append(("contour orientation self-test (impulse pair)", True, 0.0))

    used, cf, values = problem.invert("auto")
    if isinstance(values, _InsideValues):
        values.grow(max(ks))
    sequence_values = np.array([float(np.real(values(k))) for k in ks])
    scale = max(1.0, float(np.max(np.abs(sequence_values))))

    if problem.classified.kind is Kind.RATIONAL:
        inside = problem.classified.rational.series_at_one(round(max(ks) - args.a) - 1)
        inside_vals = np.array(
            [inside[round(k - args.a) - 1].real for k in ks]
        )
        diff = float(np.max(np.abs(inside_vals - sequence_values))) / scale
        checks.append((f"strategy agreement series-at-1 vs {used} "
                       f"(max scaled diff {diff:.2e})", diff <= tol, diff))

    worst = 0.0
    for k in ks:
        q = numeric_inverse(F, k, a=args.a, rho=args.rho, nodes=args.nodes)
        worst = max(worst, abs(q.real - float(np.real(values(k)))) / scale)
    checks.append((f"contour quadrature vs {used} over k grid "
                   f"(max scaled diff {worst:.2e})", worst <= tol, worst))

    iv = initial_value(F)
    first = complex(values(args.a + 1))
    ivd = abs(iv - first)
    checks.append((f"initial value f(a+1) = lim F(s) (|diff| {ivd:.2e})",
                   ivd <= tol * max(1.0, abs(iv)), ivd))

    seq = CausalSequence(args.a, lambda k: complex(values(k)))
    worst_rt = 0.0
    for s in sample_points(problem.roc, count=5):
        total = forward_transform(seq, s)
        direct = complex(F(s))
        worst_rt = max(worst_rt, abs(total - direct) / max(1.0, abs(direct)))
    checks.append((f"forward series round trip inside ROC "
                   f"(max rel diff {worst_rt:.2e})", worst_rt <= 1e-6, worst_rt))

    failed = 0
    for label, ok, _measure in checks:
        print(("PASS  " if ok else "FAIL  ") + label)
        failed += 0 if ok else 1
    return 0 if failed == 0 else 1


def _cmd_table(args):
    hit = lookup(args.match)
    if hit is None:
        print("no match")
        return 0
    if args.format == "json":
        doc = {
            "row": hit.row,
            "name": hit.name,
            "params": {k: _cpair(v) for k, v in hit.params},
            "sequence": hit.sequence_text,
            "transform": hit.transform_text,
            "roc": hit.roc.describe(),
        }
        print(json.dumps(doc, indent=2))
    else:
        print(hit.describe())
    return 0


def _cmd_roundtrip(args):
    tol = args.tol or 1e-6
    failed = 0
    for tp in reference_pairs():
        seq = CausalSequence(0.0, lambda k, _tp=tp: _tp.sequence(round(k)))
        worst = 0.0
        for s in sample_points(tp.roc, count=8):
            total = forward_transform(seq, s)
            direct = complex(tp.transform(s))
            worst = max(worst, abs(total - direct) / max(1.0, abs(direct)))
        ok = worst <= tol
        failed += 0 if ok else 1
        ps = ", ".join(f"{k}={v}" for k, v in tp.params)
        print(f"{'PASS' if ok else 'FAIL'}  row {tp.row:2d} ({tp.name}"
              + (f"; {ps}" if ps else "") + f")  max rel err {worst:.2e}")
    print("all rows pass" if failed == 0 else f"{failed} rows fail")
    return 0 if failed == 0 else 1


_COMMANDS = {
    "invert": _cmd_invert,
    "forward": _cmd_forward,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "roundtrip": _cmd_roundtrip,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        args = _resolve(args)
        return _COMMANDS[args.command](args)
    except ExpressionSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NablaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry():
    sys.exit(main())
