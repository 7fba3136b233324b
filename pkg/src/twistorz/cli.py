"""Command-line surface: verify, sample, classify, optimize.

Exit codes: 0 success, 1 check failure / not a member of Z, 2 internal or
parse error, 3 no convergence.  Floats are printed with 17 significant
digits so byte-level determinism is checkable end to end.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import search, verify, zgeom
from .acs import (
    ACS,
    acs_from_form,
    blocks,
    constraint_residuals,
    fundamental_form,
    haar_rotation,
    random_acs,
)
from .cp3 import CP3Point, acs_to_cp3, cp3_to_acs, tetra_coords
from .exceptions import NotInZError, ParseError, TwistorError
from .exterior import TwoForm
from .nearly_kaehler import is_ank
from .nijenhuis import integrable_acs, is_integrable, max_norm, nijenhuis_norm

CSV_HEADER = "b0,b1,b2,b3,nijenhuis_norm,integrable,ank"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_opt(x: float | None) -> str:
    return "-" if x is None else _fmt(x)


# ---------------------------------------------------------------------------
# verify


def _cmd_verify(args) -> int:
    results = verify.run_all_checks(seed=args.seed)
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=2))
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            line = f"{r.name:<{width}}  {r.status:<4}  residual={_fmt(r.residual)}"
            if r.paper_value is not None or r.measured_value is not None:
                line += f"  paper={_fmt_opt(r.paper_value)}  measured={_fmt_opt(r.measured_value)}"
            print(line)
        n_fail = sum(0 if r.passed else 1 for r in results)
        print(f"{len(results) - n_fail}/{len(results)} checks passed")
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# sample


def _sample_structures(set_name: str, count: int, seed: int):
    rng = np.random.default_rng([seed, sum(map(ord, set_name))])
    for k in range(count):
        if set_name == "ank":
            v = rng.standard_normal(3)
            v /= np.linalg.norm(v)
            theta = float(rng.uniform(0.0, 2.0 * np.pi))
            yield zgeom.ank_circle_acs(float(v[0]), float(v[1]), float(v[2]), theta)
        elif set_name == "integrable":
            yield integrable_acs(haar_rotation(3, rng), haar_rotation(3, rng))
        elif set_name == "random":
            yield random_acs([seed, k])
        elif set_name == "polar":
            vp = rng.standard_normal(3)
            vp /= np.linalg.norm(vp)
            vm = rng.standard_normal(3)
            vm /= np.linalg.norm(vm)
            params = zgeom.PolarPairParams(
                float(vp[0]), float(vp[1]), float(vp[2]),
                float(vm[0]), float(vm[1]), float(vm[2]),
            )
            theta = float(rng.uniform(0.0, 2.0 * np.pi))
            yield cp3_to_acs(zgeom.circle_point(params, theta))
        elif set_name == "edge01":
            v = rng.standard_normal(3)
            v /= np.linalg.norm(v)
            yield acs_from_form(zgeom.edge01_form(float(v[0]), float(v[1]), float(v[2])))
        else:
            raise ParseError(f"unknown sample set {set_name!r}")


def _cloud_row(acs: ACS) -> str:
    b = tetra_coords(acs_to_cp3(acs))
    norm = nijenhuis_norm(acs)
    integrable = is_integrable(acs)
    ank = is_ank(acs)
    cols = [_fmt(v) for v in b] + [_fmt(norm), str(integrable).lower(), str(ank).lower()]
    return ",".join(cols)


def _cmd_sample(args) -> int:
    if args.count < 1:
        raise ParseError("--count must be at least 1")
    rows = [_cloud_row(acs) for acs in _sample_structures(args.set, args.count, args.seed)]
    payload = "\n".join([CSV_HEADER] + rows) + "\n"
    if args.out == "-":
        sys.stdout.write(payload)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    return 0


# ---------------------------------------------------------------------------
# classify


def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "")
    if not cleaned:
        raise ParseError("empty complex literal")
    try:
        return complex(cleaned.replace("i", "j"))
    except ValueError as exc:
        raise ParseError(f"cannot parse complex number {text!r}") from exc


def _load_structure(args) -> ACS:
    if args.cp3 is not None:
        parts = args.cp3.split(",")
        if len(parts) != 4:
            raise ParseError("--cp3 needs four comma-separated complex coordinates")
        coords = np.array([_parse_complex(p) for p in parts])
        return cp3_to_acs(CP3Point(coords))
    try:
        with open(args.infile, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read structure document: {exc}") from exc
    matrix = doc.get("matrix") if isinstance(doc, dict) else doc
    if not isinstance(matrix, list) or len(matrix) != 36:
        raise ParseError("structure document needs a row-major list of 36 floats under 'matrix'")
    return ACS.validate(np.array(matrix, dtype=float).reshape(6, 6))


def _cmd_classify(args) -> int:
    try:
        acs = _load_structure(args)
    except NotInZError as exc:
        report = {"in_z": False, "reason": str(exc)}
        if args.json:
            print(json.dumps(report, indent=2))
        else:
            print(f"in_z: false\nreason: {exc}")
        return 1

    b = blocks(acs)
    point = acs_to_cp3(acs)
    coords = point.normalized().coords
    sigma = TwoForm.basis(4, 5)
    w = fundamental_form(acs)
    report = {
        "in_z": True,
        "blocks": {
            "A": [_fmt(v) for v in b.A.flatten()],
            "B": [_fmt(v) for v in b.B.flatten()],
            "C": [_fmt(v) for v in b.C.flatten()],
        },
        "nijenhuis_norm": _fmt(nijenhuis_norm(acs)),
        "integrable": is_integrable(acs),
        "ank": is_ank(acs),
        "cp3": [f"{_fmt(z.real)}{z.imag:+.17g}i" for z in coords],
        "tetra": [_fmt(v) for v in tetra_coords(point)],
        "polar_e5e6": bool(abs(sigma.inner(w)) <= 1e-9),
        "max_constraint_residual": _fmt(float(np.max(constraint_residuals(b)))),
    }
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print("in_z: true")
        print(f"nijenhuis_norm: {report['nijenhuis_norm']}")
        print(f"integrable: {str(report['integrable']).lower()}")
        print(f"ank: {str(report['ank']).lower()}")
        print(f"cp3: [{', '.join(report['cp3'])}]")
        print(f"tetra: ({', '.join(report['tetra'])})")
        print(f"polar_e5e6: {str(report['polar_e5e6']).lower()}")
        print(f"max_constraint_residual: {report['max_constraint_residual']}")
    return 0


# ---------------------------------------------------------------------------
# optimize


def _cmd_optimize(args) -> int:
    runner = search.maximize if args.direction == "max" else search.minimize
    report = runner(seed=args.seed, restarts=args.restarts, max_iters=args.max_iters)
    ratio = report.best_value / max_norm()
    payload = {
        "direction": args.direction,
        "best_value": _fmt(report.best_value),
        "ratio_to_max": _fmt(ratio),
        "iterations": report.iterations,
        "restarts": report.restarts,
        "converged": report.converged,
        "best_matrix": [_fmt(v) for v in report.best_acs.matrix.flatten()],
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for key in ("direction", "best_value", "ratio_to_max", "iterations", "restarts", "converged"):
            value = payload[key]
            if isinstance(value, bool):
                value = str(value).lower()
            print(f"{key}: {value}")
    return 0 if report.converged else 3


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistorz",
        description="Almost complex structures on su(2)+su(2): verification, "
        "sampling, classification and Nijenhuis-norm extremization.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the full verification report")
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.set_defaults(func=_cmd_verify)

    p_sample = sub.add_parser("sample", help="export a tetrahedron point cloud as CSV")
    p_sample.add_argument(
        "--set",
        required=True,
        choices=("ank", "integrable", "random", "polar", "edge01"),
        dest="set",
    )
    p_sample.add_argument("--count", type=int, required=True)
    p_sample.add_argument("--seed", type=int, default=0)
    p_sample.add_argument("--out", default="-")
    p_sample.set_defaults(func=_cmd_sample)

    p_classify = sub.add_parser("classify", help="classify one structure")
    group = p_classify.add_mutually_exclusive_group(required=True)
    group.add_argument("--in", dest="infile", help="JSON structure document")
    group.add_argument("--cp3", help="four comma-separated complex coordinates, e.g. '1,0,0,-1'")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=_cmd_classify)

    p_opt = sub.add_parser("optimize", help="extremize the Nijenhuis norm")
    p_opt.add_argument("--direction", choices=("max", "min"), default="max")
    p_opt.add_argument("--restarts", type=int, default=20)
    p_opt.add_argument("--seed", type=int, default=0)
    p_opt.add_argument("--max-iters", type=int, default=500)
    p_opt.add_argument("--json", action="store_true")
    p_opt.set_defaults(func=_cmd_optimize)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TwistorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
