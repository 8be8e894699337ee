"""Command-line driver exposing every computation with JSON or table output.

Every report embeds the tool version, the seed, and the caps so that a
run is reproducible from its own output; JSON output is emitted with
sorted keys and fixed separators, so identical inputs give byte-identical
reports.  Exit codes: 0 success, 1 invalid input, 2 honest
non-certification (a window cap was too small to certify an answer).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .errors import CertificationError, InvalidInput, UnknownTag
from .filtrations import (
    alpha_seq,
    duality_report,
    from_descriptor,
    is_differentially_closed,
    is_ideal,
    l_transform,
)
from .monomial import (
    MonomialIdeal,
    beta_nu_report,
    newton_closure_member,
    polyhedron_invariants,
    resurgence_windows,
    symbolic_polyhedron,
)
from .numseq import (
    IntSeqWindow,
    additivity_class,
    growth_window,
    left_transform,
    right_transform,
    shift,
)
from .points import (
    PointConfig,
    alpha_seq_points,
    asymptotic_report,
    fat_scheme_report,
    jet_sep_index,
    nagata_check,
    reg_seq,
)
from .verify import run_tag


class _Parser(argparse.ArgumentParser):
    """Parser that reports bad usage through the package's own error type."""

    def error(self, message):
        raise InvalidInput(message)


@dataclass(frozen=True)
class RunConfig:
    """Caps and plumbing shared by every subcommand."""

    n_max: int = 10
    m_max: int = 4
    d_cap: int = 8
    s_max: int = 3
    k_cap: int = 16
    characteristic: int = 0
    seed: int = 0
    format: str = "table"

    def __post_init__(self):
        for name in ("n_max", "m_max", "d_cap", "s_max", "k_cap"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"--{name.replace('_', '-')} must be >= 1")
        c = self.characteristic
        if c < 0 or c == 1 or (c > 1 and any(c % p == 0
                                             for p in range(2, int(c ** .5) + 1))):
            raise InvalidInput("characteristic must be 0 or a prime")

    def caps(self) -> dict:
        return {"n_max": self.n_max, "m_max": self.m_max, "d_cap": self.d_cap,
                "s_max": self.s_max, "k_cap": self.k_cap}


def _config(args) -> RunConfig:
    return RunConfig(
        n_max=args.n_max, m_max=args.m_max, d_cap=args.d_cap,
        s_max=args.s_max, k_cap=args.k_cap,
        characteristic=args.char, seed=args.seed, format=args.format,
    )


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad JSON for {what}: {exc}") from exc


def _load_source(inline, path, what):
    """Exactly one of an inline JSON string or a file path."""
    if (inline is None) == (path is None):
        raise InvalidInput(f"give exactly one of --{what} or --file")
    if inline is not None:
        return _json_arg(inline, what)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"bad JSON in {path}: {exc}") from exc


def _window_arg(args, attr="alpha") -> IntSeqWindow:
    obj = _load_source(getattr(args, attr), args.file, attr)
    win = IntSeqWindow.from_json(obj, certified_monotone=args.monotone)
    if isinstance(obj, list) and args.start != 1:
        win = IntSeqWindow(args.start, win.values, args.monotone)
    return win


def _beta_arg(args) -> IntSeqWindow | None:
    if args.beta is None:
        return None
    return IntSeqWindow.from_json(
        _json_arg(args.beta, "beta"), certified_monotone=args.beta_monotone)


def _table_lines(obj, prefix=""):
    if isinstance(obj, dict):
        for key in sorted(obj):
            yield from _table_lines(obj[key], f"{prefix}{key}.")
    elif isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        for i, v in enumerate(obj):
            yield from _table_lines(v, f"{prefix}{i}.")
    else:
        if isinstance(obj, list):
            shown = " ".join(str(v) for v in obj)
        else:
            shown = str(obj)
        yield f"{prefix[:-1]} = {shown}"


def _emit(command: str, cfg: RunConfig, result, stream=None) -> None:
    stream = stream or sys.stdout
    doc = {
        "tool": "symdual",
        "version": __version__,
        "command": command,
        "seed": cfg.seed,
        "characteristic": cfg.characteristic,
        "caps": cfg.caps(),
        "result": result,
    }
    if cfg.format == "json":
        print(json.dumps(doc, sort_keys=True, separators=(",", ":")),
              file=stream)
    else:
        for line in _table_lines(doc):
            print(line, file=stream)


# ----------------------------------------------------------------- seq

def _cmd_seq(args) -> int:
    cfg = _config(args)
    alpha = _window_arg(args)
    if args.action in ("right", "left"):
        fn = right_transform if args.action == "right" else left_transform
        win = fn(alpha, _beta_arg(args), n_max=cfg.n_max, strict=args.strict)
        result = {"window": win.to_json(),
                  "certified_monotone": win.certified_monotone}
    elif args.action == "class":
        result = additivity_class(alpha).to_json()
    elif args.action == "growth":
        result = growth_window(alpha, args.kind).to_json()
    else:
        result = {"window": shift(alpha, args.by).to_json()}
    _emit(f"seq {args.action}", cfg, result)
    return 0


# ----------------------------------------------------------------- filt

def _filtration(args):
    return from_descriptor(_load_source(args.json, args.file, "json"))


def _cmd_filt(args) -> int:
    cfg = _config(args)
    filt = _filtration(args)
    if args.action == "build":
        dims = [[filt.piece(n, d).dim for d in range(cfg.d_cap + 1)]
                for n in range(1, cfg.n_max + 1)]
        result = {"descriptor": filt.descriptor(), "piece_dims": dims}
    elif args.action == "check-dc":
        result = is_differentially_closed(
            filt, n_max=cfg.n_max, d_max=cfg.d_cap).to_json()
    elif args.action == "ltransform":
        lp = l_transform(filt, args.s, cfg.d_cap)
        result = {"s": args.s, "dims": lp.dims(),
                  "ideal_check": is_ideal(lp).to_json()}
    else:
        result = duality_report(filt, n_max=cfg.n_max, d_cap=cfg.d_cap).to_json()
    _emit(f"filt {args.action}", cfg, result)
    return 0


# ---------------------------------------------------------------- points

def _point_config(args, cfg: RunConfig) -> PointConfig:
    sources = [args.points is not None, args.file is not None,
               args.random is not None]
    if sum(sources) != 1:
        raise InvalidInput("give exactly one of --points, --file, --random")
    if args.random is not None:
        if args.nvars is None:
            raise InvalidInput("--random needs --N for the ambient dimension")
        return PointConfig.random(args.random, args.nvars, seed=cfg.seed,
                                  char=cfg.characteristic)
    obj = _load_source(args.points, args.file, "points")
    if isinstance(obj, list):
        if not obj or not isinstance(obj[0], list):
            raise InvalidInput("a bare point list must be a list of coordinate lists")
        obj = {"N": len(obj[0]) - 1, "char": cfg.characteristic, "points": obj}
    return PointConfig.from_json(obj)


def _cmd_points(args) -> int:
    cfg = _config(args)
    if args.action == "nagata":
        result = nagata_check(args.r, args.nvars, trials=args.trials,
                              m_cap=cfg.m_max, d_cap=cfg.d_cap, seed=cfg.seed)
        _emit("points nagata", cfg, result)
        return 0
    X = _point_config(args, cfg)
    if args.action == "report":
        per_m = [fat_scheme_report(X, m, d_cap=cfg.d_cap).to_json()
                 for m in range(1, cfg.m_max + 1)]
        result = {
            "config": X.to_json(),
            "per_multiplicity": per_m,
            "reg": reg_seq(X, cfg.m_max, d_cap=cfg.d_cap).to_json(),
            "alpha": alpha_seq_points(X, cfg.m_max, d_cap=cfg.d_cap).to_json(),
        }
    elif args.action == "jets":
        vals = [jet_sep_index(X, d, k_cap=cfg.k_cap)
                for d in range(cfg.d_cap + 1)]
        result = {
            "config": X.to_json(),
            "first_d": 0,
            "indices": ["-inf" if v == float("-inf") else v for v in vals],
        }
    else:
        result = {
            "config": X.to_json(),
            "report": asymptotic_report(X, d_cap=cfg.d_cap,
                                        m_cap=cfg.m_max).to_json(),
        }
    _emit(f"points {args.action}", cfg, result)
    return 0


# -------------------------------------------------------------- monomial

def _cmd_monomial(args) -> int:
    cfg = _config(args)
    ideal = MonomialIdeal.from_json(_load_source(args.json, args.file, "json"))
    if args.action == "sp":
        inv = polyhedron_invariants(ideal)
        result = {
            "polyhedron": symbolic_polyhedron(ideal).to_json(),
            "waldschmidt": str(inv["waldschmidt"]),
            "areg": str(inv["areg"]),
            "equal_sums": inv["equal_sums"],
            "generator_vertex": inv["generator_vertex"],
        }
    elif args.action == "symbolic":
        from .monomial import symbolic_power
        result = symbolic_power(ideal, args.n).to_json()
    elif args.action == "resurgence":
        rw = resurgence_windows(ideal, cfg.n_max, d_cap=cfg.d_cap)
        result = {"lambda": rw["lambda"].to_json(),
                  "beta_ic": rw["beta_ic"].to_json(),
                  "ratios": rw["ratios"]}
    elif args.action == "betanu":
        w = _json_arg(args.weights, "w")
        result = beta_nu_report(ideal, w, cfg.n_max, d_cap=cfg.d_cap)
    else:
        exponent = _json_arg(args.exponent, "exponent")
        result = {
            "exponent": exponent,
            "n": args.n,
            "member": newton_closure_member(exponent, ideal, args.n),
        }
    _emit(f"monomial {args.action}", cfg, result)
    return 0


# ---------------------------------------------------------------- verify

def _cmd_verify(args) -> int:
    cfg = _config(args)
    results = run_tag(args.tag)
    if cfg.format == "json":
        _emit(f"verify {args.tag}", cfg, {
            "results": [r.to_json() for r in results],
            "all_passed": all(r.passed for r in results),
        })
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


# ----------------------------------------------------------------- wiring

def _add_common(sub):
    sub.add_argument("--format", choices=("json", "table"), default="table")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--char", type=int, default=0,
                     help="coefficient field characteristic (0 or a prime)")
    sub.add_argument("--n-max", "--nmax", dest="n_max", type=int, default=10)
    sub.add_argument("--m-max", "--mmax", dest="m_max", type=int, default=4)
    sub.add_argument("--d-cap", "--dcap", dest="d_cap", type=int, default=8)
    sub.add_argument("--s-max", "--smax", dest="s_max", type=int, default=3)
    sub.add_argument("--k-cap", "--kcap", dest="k_cap", type=int, default=16)


def _add_window_input(sub, with_beta):
    sub.add_argument("--alpha", help="inline JSON list or window object")
    sub.add_argument("--file", help="path to a window JSON file")
    sub.add_argument("--start", type=int, default=1,
                     help="start index for an inline list")
    sub.add_argument("--monotone", action="store_true",
                     help="assert the window is certified nondecreasing")
    if with_beta:
        sub.add_argument("--beta", help="inline JSON threshold window")
        sub.add_argument("--beta-monotone", action="store_true")
        sub.add_argument("--strict", action="store_true",
                         help="fail instead of truncating at the first "
                              "uncertified entry")


def build_parser() -> _Parser:
    parser = _Parser(
        prog="symdual",
        description="Exact sequence duality, inverse systems, fat points, "
                    "and monomial symbolic powers.",
        epilog="Set SYMDUAL_THREADS to cap worker parallelism.",
    )
    parser.add_argument("--version", action="version",
                        version=f"symdual {__version__}")
    top = parser.add_subparsers(dest="group", required=True)

    seq = top.add_parser("seq", help="integer sequence windows").add_subparsers(
        dest="action", required=True)
    for action, aliases in (("right", ["right-transform"]),
                            ("left", ["left-transform"])):
        sub = seq.add_parser(action, aliases=aliases)
        _add_common(sub)
        _add_window_input(sub, with_beta=True)
        sub.set_defaults(handler=_cmd_seq, action=action)
    for action in ("class", "growth", "shift"):
        sub = seq.add_parser(action)
        _add_common(sub)
        _add_window_input(sub, with_beta=False)
        if action == "growth":
            sub.add_argument("--kind", choices=("sub", "super"), required=True)
        if action == "shift":
            sub.add_argument("--by", type=int, required=True)
        sub.set_defaults(handler=_cmd_seq, action=action)

    filt = top.add_parser("filt", help="ideal filtrations").add_subparsers(
        dest="action", required=True)
    for action in ("build", "check-dc", "ltransform", "duality"):
        sub = filt.add_parser(action)
        _add_common(sub)
        sub.add_argument("--json", help="inline filtration descriptor")
        sub.add_argument("--file", help="path to a descriptor JSON file")
        if action == "ltransform":
            sub.add_argument("--s", type=int, default=1)
        sub.set_defaults(handler=_cmd_filt, action=action)

    points = top.add_parser("points", help="point configurations").add_subparsers(
        dest="action", required=True)
    for action in ("report", "jets", "asymptotic", "nagata"):
        sub = points.add_parser(action)
        _add_common(sub)
        if action == "nagata":
            sub.add_argument("--r", type=int, required=True)
            sub.add_argument("--N", dest="nvars", type=int, required=True)
            sub.add_argument("--trials", type=int, default=3)
        else:
            sub.add_argument("--points", help="inline config JSON")
            sub.add_argument("--file", help="path to a config JSON file")
            sub.add_argument("--random", type=int, metavar="R",
                             help="generate R seeded random points")
            sub.add_argument("--N", dest="nvars", type=int,
                             help="ambient projective dimension for --random")
        sub.set_defaults(handler=_cmd_points, action=action)

    monomial = top.add_parser("monomial", help="monomial ideals").add_subparsers(
        dest="action", required=True)
    for action in ("sp", "symbolic", "resurgence", "betanu", "closure"):
        sub = monomial.add_parser(action)
        _add_common(sub)
        sub.add_argument("--json", help="inline ideal JSON")
        sub.add_argument("--file", help="path to an ideal JSON file")
        if action == "symbolic":
            sub.add_argument("--n", type=int, required=True)
        if action == "betanu":
            sub.add_argument("--w", dest="weights", required=True,
                             help="inline JSON weight vector")
        if action == "closure":
            sub.add_argument("--exponent", required=True,
                             help="inline JSON exponent vector")
            sub.add_argument("--n", type=int, default=1)
        sub.set_defaults(handler=_cmd_monomial, action=action)

    ver = top.add_parser("verify", help="run grouped acceptance checks")
    _add_common(ver)
    ver.add_argument("tag", help="sec2 sec3 sec4 appA appB sec5 sec6")
    ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UnknownTag as exc:
        print(f"symdual: unknown tag: {exc}", file=sys.stderr)
        return 1
    except InvalidInput as exc:
        print(f"symdual: invalid input: {exc}", file=sys.stderr)
        return 1
    except CertificationError as exc:
        print(f"symdual: not certified within caps: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
