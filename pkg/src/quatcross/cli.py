"""Command line front end: JSON in, JSON out.

Exit codes: 0 success, 1 usage or parse error, 2 infeasible (no map with
the requested values exists), 3 degenerate input.  Errors are reported as a
one-line JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import correspondence, crossratio, geometry, jsonio
from .errors import DegenerateError, InfeasibleError, InvariantMismatch, QuatCrossError
from .moebius import Moebius, difference_identity_residual
from .oracle import RandomConfig, random_moebius, random_points_for, random_quaternion
from .quaternion import INF, ONE, ZERO
from .tolerance import tolerance


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parser() -> argparse.ArgumentParser:
    # SUPPRESS so a subcommand does not reset a flag given before it
    common = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--tol", type=float, help="tolerance for predicates (default 1e-9)")
    common.add_argument("--seed", type=int, help="seed for randomized commands (default 0)")
    common.add_argument("--input", help="input JSON file (default: stdin)")
    p = _Parser(prog="quatcross", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    helps = {
        "crossratio": "cross-ratio of 4 points",
        "invariant": "(norm, re) invariant of 4 points",
        "chain": "chain invariant of an even number of points, or of 5 points",
        "solve": 'map with prescribed values: {"src": [...], "dst": [...]}',
        "cocircular": "do 4 points lie on a circle or line",
        "cospherical": "do 5 points lie on a 2-sphere or 2-plane",
        "locus4": 'possible images of a 4th point: {"src": [4], "dst": [3]}',
        "locus5": 'possible images of a 5th point: {"src": [5], "dst": [4]}',
        "map-locus": 'image of a locus: {"matrix": {...}, "locus": {...}}',
        "apply": 'apply a map: {"matrix": {...}, "points": [...]}',
        "selftest": "run built-in identity probes",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, help=text, parents=[common])
        if name == "solve":
            sp.add_argument("--points", type=int, choices=(3, 4, 5), required=True)
    return p


def _read(args, stdin) -> object:
    if args.input is not None:
        with open(args.input, "rb") as fh:
            raw = fh.read()
    else:
        raw = stdin.read()
    if isinstance(raw, bytes):
        text = raw.decode("utf-8")
    else:
        text = raw
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise UsageError(f"invalid JSON at byte {offset}: {exc.msg}") from None


def _obj(doc, *keys) -> list:
    if not isinstance(doc, dict) or any(k not in doc for k in keys):
        raise ValueError(f"expected an object with keys {', '.join(keys)}")
    return [doc[k] for k in keys]


def _solve(doc, n):
    src, dst = _obj(doc, "src", "dst")
    src, dst = jsonio.points_from_json(src, n), jsonio.points_from_json(dst, n)
    if n == 3:
        return {"matrix": jsonio.matrix_to_json(correspondence.solve_three(src, dst))}
    if n == 4:
        sol = correspondence.solve_four(src, dst)
        return {
            "matrix": jsonio.matrix_to_json(sol.base),
            "residual_axis": jsonio.quaternion_to_json(sol.axis),
            "degenerate": sol.degenerate,
        }
    sol = correspondence.solve_five(src, dst)
    return {"matrix": jsonio.matrix_to_json(sol.map), "unique": sol.unique}


def selftest(seed: int = 0, samples: int = 200) -> dict:
    """Run the built-in identity probes on seeded samples."""
    cfg = RandomConfig(seed=seed)
    rng = cfg.rng()
    norm_fail = 0
    diff, conj = 0.0, 0.0
    for _ in range(samples):
        q = random_quaternion(cfg, rng)
        if crossratio.cross_ratio(ZERO, ONE, INF, q) != q:
            norm_fail += 1
        T = random_moebius(cfg, rng)
        pts = random_points_for(T, 4, cfg, rng)
        diff = max(diff, difference_identity_residual(T, pts[0], pts[1]))
        conj = max(conj, crossratio.conjugator_identity_residual(T, *pts))
    ok = norm_fail == 0 and diff <= 1e-9 and conj <= 1e-9
    return {
        "selftest": "pass" if ok else "fail",
        "seed": seed,
        "samples": samples,
        "normalization_failures": norm_fail,
        "difference_identity_max_residual": diff,
        "conjugator_identity_max_residual": conj,
    }


def _dispatch(args, doc):
    cmd = args.command
    if cmd == "crossratio":
        return jsonio.ext_to_json(crossratio.cross_ratio(*jsonio.points_from_json(doc, 4)))
    if cmd == "invariant":
        inv = crossratio.r_invariant(*jsonio.points_from_json(doc, 4))
        return {"norm": inv.norm, "re": inv.re}
    if cmd == "chain":
        pts = jsonio.points_from_json(doc)
        if len(pts) == 5:
            return jsonio.quaternion_to_json(crossratio.five_point_chain(*pts))
        return jsonio.quaternion_to_json(crossratio.chain_invariant(pts))
    if cmd == "solve":
        return _solve(doc, args.points)
    if cmd == "cocircular":
        return {"cocircular": geometry.is_cocircular(*jsonio.points_from_json(doc, 4))}
    if cmd == "cospherical":
        return {"cospherical": geometry.is_cospherical5(*jsonio.points_from_json(doc, 5))}
    if cmd == "locus4":
        src, dst = _obj(doc, "src", "dst")
        L = geometry.locus_fourth(jsonio.points_from_json(src, 4), jsonio.points_from_json(dst, 3))
        return jsonio.locus_to_json(L)
    if cmd == "locus5":
        src, dst = _obj(doc, "src", "dst")
        L = geometry.locus_fifth(jsonio.points_from_json(src, 5), jsonio.points_from_json(dst, 4))
        return jsonio.locus_to_json(L)
    if cmd == "map-locus":
        m, locus = _obj(doc, "matrix", "locus")
        T = Moebius(jsonio.matrix_from_json(m))
        return jsonio.locus_to_json(geometry.map_locus(T, jsonio.locus_from_json(locus)))
    if cmd == "apply":
        T = Moebius(jsonio.matrix_from_json(_obj(doc, "matrix")[0]))
        if "point" in doc:
            return jsonio.ext_to_json(T.apply(jsonio.ext_from_json(doc["point"])))
        return [jsonio.ext_to_json(T.apply(p)) for p in jsonio.points_from_json(doc["points"])]
    raise UsageError(f"unknown command {cmd}")


def _fail(stderr, code: str, detail: str, **extra) -> None:
    stderr.write(json.dumps({"error": code, "detail": detail, **extra}) + "\n")


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin.buffer if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = _parser().parse_args(argv, argparse.Namespace(tol=None, seed=0, input=None))
    except UsageError as exc:
        _fail(stderr, "usage", str(exc))
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        with tolerance(args.tol, args.tol):
            if args.command == "selftest":
                result = selftest(args.seed)
                stdout.write(json.dumps(result) + "\n")
                return 0 if result["selftest"] == "pass" else 1
            out = _dispatch(args, _read(args, stdin))
    except UsageError as exc:
        _fail(stderr, "parse", str(exc))
        return 1
    except InvariantMismatch as exc:
        _fail(stderr, exc.code, str(exc), reason=exc.reason)
        return 2
    except InfeasibleError as exc:
        _fail(stderr, exc.code, str(exc))
        return 2
    except (DegenerateError, QuatCrossError) as exc:
        _fail(stderr, exc.code, str(exc))
        return 3
    except (ValueError, KeyError, TypeError) as exc:
        _fail(stderr, "parse", str(exc))
        return 1
    stdout.write(json.dumps(out) + "\n")
    return 0


def main() -> None:
    sys.exit(run())
