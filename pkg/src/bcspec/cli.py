"""Command-line front end: JSON in, JSON or plain-text reports out.

Subcommands
-----------
decompose    idempotent/cartesian/real forms, singularity class, inverse
spectrum     component spectra, their union, and the modified-spectrum shape
modified     modified-eigenvalue verdict, case, and constructive basis
eigenspace   eigenspace of a complex eigenvalue (or of a bicomplex kappa)
verify       randomized suites pitting every structural statement against oracles
explore-sum  sum/intersection dimensions of two modified eigenspaces

Inputs are JSON files or inline JSON; every report embeds the tolerances and
seed it used, and identical invocations produce byte-identical output.  Exit
codes: 0 success/verdict, 1 suite failure, 2 parse/validation error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import jsonio
from .core import DEFAULT_TOL, Bicomplex
from .errors import BcspecError, ConvergenceError, ParseError
from .linalg import DEFAULT_CLUSTER_TOL
from .operators import classify_vector, is_singular_operator
from .spectra import (
    component_spectra,
    eigenspace_sum,
    modified_eigenspace,
    upsilon_description,
)
from .verify import DEFAULT_SEED, DEFAULT_TRIALS, run_sum_search, run_verify

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_PARSE = 2
EXIT_NO_CONVERGENCE = 3


def _default_tol() -> float:
    raw = os.environ.get("BCSPEC_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError as exc:
        raise ParseError(f"BCSPEC_TOL is not a number: {raw!r}") from exc
    if value <= 0:
        raise ParseError(f"BCSPEC_TOL must be positive, got {raw!r}")
    return value


def _load_input(raw: str):
    """Inline JSON (starts with '{' or '[') or a path to a JSON file."""
    text = raw.strip()
    if text.startswith("{") or text.startswith("["):
        return jsonio.loads(text)
    path = Path(raw)
    if not path.exists():
        raise ParseError(f"input file not found: {raw}")
    return jsonio.loads(path.read_text())


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines: list[str] = []
    _render_text(report, lines, 0)
    return "\n".join(lines) + "\n"


def _render_text(node, lines: list[str], depth: int, label: str | None = None):
    pad = "  " * depth
    if isinstance(node, dict):
        if label is not None:
            lines.append(f"{pad}{label}:")
        for key in sorted(node):
            _render_text(node[key], lines, depth + (label is not None), key)
    elif isinstance(node, list) and any(isinstance(x, (dict, list)) for x in node):
        lines.append(f"{pad}{label}:")
        for i, item in enumerate(node):
            _render_text(item, lines, depth + 1, f"[{i}]")
    else:
        if isinstance(node, list):
            node = json.dumps(node)
        lines.append(f"{pad}{label}: {node}")


def _emit(report: dict, args) -> None:
    text = _render(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _parse_kappa(raw: str, where: str) -> Bicomplex:
    return jsonio.parse_scalar(jsonio.loads(raw), where)


def _eigenset_json(es) -> list[dict]:
    return [
        {"value": jsonio.complex_to_json(v), "multiplicity": m} for v, m in es.values
    ]


def _subspace_json(space) -> list[list[list[float]]]:
    return [jsonio.cvector_to_json(v) for v in space.vectors()]


# -- commands -------------------------------------------------------------


def _cmd_decompose(args) -> int:
    obj = _load_input(args.input)
    tol = args.tol
    report: dict = {"command": "decompose", "tol": tol}
    if isinstance(obj, dict) and ("idem" in obj or "cart" in obj or "real" in obj):
        x = jsonio.parse_scalar(obj)
        cls = x.classify(tol)
        report["kind"] = "scalar"
        report["scalar"] = jsonio.scalar_to_json(x)
        report["scalar"]["real"] = list(x.to_real())
        report["class"] = cls.value
        if cls.value == "NonSingular":
            inv = x.inverse(tol)
            product = x * inv
            report["inverse"] = jsonio.scalar_to_json(inv)
            report["inverse_residual"] = abs(product.minus - 1.0) + abs(product.plus - 1.0)
        else:
            report["inverse"] = None
            report["note"] = "singular element: no multiplicative inverse"
    else:
        if isinstance(obj, dict) and "t1" in obj:
            matrix = jsonio.parse_operator(obj).as_matrix()
        else:
            matrix = jsonio.parse_matrix(obj)
        report["kind"] = "matrix"
        report["shape"] = list(matrix.shape)
        report["minus"] = jsonio.cmatrix_to_json(matrix.minus)
        report["plus"] = jsonio.cmatrix_to_json(matrix.plus)
        rows, cols = matrix.shape
        report["entry_classes"] = [
            [matrix.entry(i, j).classify(tol).value for j in range(cols)] for i in range(rows)
        ]
        if rows == cols:
            report["operator_singular"] = is_singular_operator(matrix.as_operator(), tol)
    _emit(report, args)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    op = jsonio.parse_operator(_load_input(args.input))
    report_obj = component_spectra(op, args.cluster_tol)
    desc = upsilon_description(op, args.cluster_tol, report_obj)
    eigenspaces = []
    for lam, _ in report_obj.eigenvalues_of_T.values:
        space = modified_eigenspace(
            op, Bicomplex.from_complex(lam), args.cluster_tol, report_obj
        )
        eigenspaces.append(
            {
                "value": jsonio.complex_to_json(lam),
                "dimension": space.dim,
                "max_residual": space.max_residual(op),
            }
        )
    report = {
        "command": "spectrum",
        "tol": args.tol,
        "cluster_tol": args.cluster_tol,
        "n": op.n,
        "upsilon1": _eigenset_json(report_obj.upsilon1),
        "upsilon2": _eigenset_json(report_obj.upsilon2),
        "eigenvalues": _eigenset_json(report_obj.eigenvalues_of_T),
        "modified_spectrum": desc.symbolic(),
        "eigenspaces": eigenspaces,
    }
    _emit(report, args)
    return EXIT_OK


def _space_report(op, kappa: Bicomplex, cluster_tol: float, tol: float, report_obj) -> dict:
    case = report_obj.classify_modified(kappa)
    out: dict = {
        "kappa": jsonio.scalar_to_json(kappa),
        "is_modified_eigenvalue": case is not None,
        "case": case.value if case else None,
    }
    if case is None:
        out["verdict"] = "not a modified eigenvalue"
        return out
    space = modified_eigenspace(op, kappa, cluster_tol, report_obj)
    out.update(
        {
            "dimension": space.dim,
            "dim_minus": space.minus_basis.dim,
            "dim_plus": space.plus_basis.dim,
            "minus_basis": _subspace_json(space.minus_basis),
            "plus_basis": _subspace_json(space.plus_basis),
            "assembled": [jsonio.vector_to_json(v) for v in space.assembled],
            "vector_classes": [classify_vector(v, tol).value for v in space.assembled],
            "all_eigenvectors_singular": space.all_eigenvectors_singular,
            "max_residual": space.max_residual(op),
        }
    )
    return out


def _cmd_modified(args) -> int:
    op = jsonio.parse_operator(_load_input(args.input))
    kappa = _parse_kappa(args.kappa, "kappa")
    report_obj = component_spectra(op, args.cluster_tol)
    report = {
        "command": "modified",
        "tol": args.tol,
        "cluster_tol": args.cluster_tol,
        "n": op.n,
    }
    report.update(_space_report(op, kappa, args.cluster_tol, args.tol, report_obj))
    _emit(report, args)
    return EXIT_OK


def _cmd_eigenspace(args) -> int:
    if (args.kappa is None) == (args.lam is None):
        raise ParseError("eigenspace: provide exactly one of --kappa or --lam")
    op = jsonio.parse_operator(_load_input(args.input))
    report_obj = component_spectra(op, args.cluster_tol)
    if args.lam is not None:
        lam = jsonio.parse_complex(jsonio.loads(args.lam), "lam")
        kappa = Bicomplex.from_complex(lam)
        extra = {"eigenvalue": jsonio.complex_to_json(lam)}
    else:
        kappa = _parse_kappa(args.kappa, "kappa")
        extra = {}
    report = {
        "command": "eigenspace",
        "tol": args.tol,
        "cluster_tol": args.cluster_tol,
        "n": op.n,
    }
    report.update(extra)
    report.update(_space_report(op, kappa, args.cluster_tol, args.tol, report_obj))
    if args.lam is not None:
        report["is_eigenvalue"] = report["is_modified_eigenvalue"]
    _emit(report, args)
    return EXIT_OK


def _cmd_verify(args) -> int:
    result = run_verify(
        seed=args.seed,
        trials=args.trials,
        n_min=args.n_min,
        n_max=args.n_max,
        tol=args.tol,
        cluster_tol=args.cluster_tol,
        inject_fault=args.inject_kernel_fault,
    )
    report = {
        "command": "verify",
        "seed": result.seed,
        "trials": result.trials,
        "n_min": result.n_min,
        "n_max": result.n_max,
        "tol": result.tol,
        "cluster_tol": result.cluster_tol,
        "passed": result.passed,
        "suites": [
            {
                "name": s.name,
                "statement": s.statement,
                "trials": s.trials,
                "failures": s.failures,
                "passed": s.passed,
                "failure_detail": s.messages,
            }
            for s in result.suites
        ],
    }
    _emit(report, args)
    return EXIT_OK if result.passed else EXIT_SUITE_FAILURE


def _cmd_explore_sum(args) -> int:
    if args.search:
        operator = None
        if args.input is not None:
            operator = jsonio.parse_operator(_load_input(args.input))
        result = run_sum_search(
            seed=args.seed,
            trials=args.trials,
            n_min=args.n_min,
            n_max=args.n_max,
            operator=operator,
            tol=args.tol,
            cluster_tol=args.cluster_tol,
        )
        report = {
            "command": "explore-sum",
            "mode": "search",
            "seed": result.seed,
            "trials": result.trials,
            "tol": args.tol,
            "cluster_tol": args.cluster_tol,
            "direct_count": result.direct_count,
            "non_direct_count": result.non_direct_count,
            "witnesses": result.witnesses,
            "note": "computed findings for the sampled operators and pairs only",
        }
        _emit(report, args)
        return EXIT_OK
    if args.input is None or args.kappa is None or args.kappa2 is None:
        raise ParseError("explore-sum: explicit mode needs --input, --kappa and --kappa2")
    op = jsonio.parse_operator(_load_input(args.input))
    kappa = _parse_kappa(args.kappa, "kappa")
    kappa2 = _parse_kappa(args.kappa2, "kappa2")
    result = eigenspace_sum(op, kappa, kappa2, args.cluster_tol, args.tol)
    report = {
        "command": "explore-sum",
        "mode": "explicit",
        "tol": args.tol,
        "cluster_tol": args.cluster_tol,
        "kappa": jsonio.scalar_to_json(kappa),
        "kappa_prime": jsonio.scalar_to_json(kappa2),
        "dim_first": result.dim_first,
        "dim_second": result.dim_second,
        "sum_dim": result.sum_dim,
        "intersection_dim": result.intersection_dim,
        "is_direct": result.is_direct,
        "note": "computed finding for this operator and pair only",
    }
    _emit(report, args)
    return EXIT_OK


# -- argument parsing ------------------------------------------------------


def _add_common(parser: argparse.ArgumentParser, needs_input: bool = True):
    if needs_input:
        parser.add_argument("--input", required=True, help="path to a JSON file, or inline JSON")
    parser.add_argument("--tol", type=float, default=None, help="singularity tolerance (default 1e-10, env BCSPEC_TOL)")
    parser.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL, help="eigenvalue clustering tolerance (default 1e-8)")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", default=None, help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcspec",
        description="Bicomplex algebra and the spectral theory of operators e1*T1 + e2*T2.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="idempotent/cartesian/real forms and singularity class")
    _add_common(p)
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("spectrum", help="component spectra and the modified-spectrum shape")
    _add_common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("modified", help="modified-eigenvalue verdict and eigenspace basis")
    _add_common(p)
    p.add_argument("--kappa", required=True, help="bicomplex scalar as JSON (idem/cart/real)")
    p.set_defaults(fn=_cmd_modified)

    p = sub.add_parser("eigenspace", help="eigenspace of an eigenvalue (or of a bicomplex kappa)")
    _add_common(p)
    p.add_argument("--kappa", default=None, help="bicomplex scalar as JSON")
    p.add_argument("--lam", default=None, help="complex eigenvalue as [re, im]")
    p.set_defaults(fn=_cmd_eigenspace)

    p = sub.add_parser("verify", help="run the randomized oracle suites")
    _add_common(p, needs_input=False)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--inject-kernel-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("explore-sum", help="directness of the sum of two modified eigenspaces")
    p.add_argument("--input", default=None, help="path to a JSON file, or inline JSON")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--kappa", default=None)
    p.add_argument("--kappa2", default=None)
    p.add_argument("--search", action="store_true", help="sample kappa pairs instead of an explicit pair")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(fn=_cmd_explore_sum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.tol is None:
            args.tol = _default_tol()
        if args.tol <= 0:
            raise ParseError(f"--tol must be positive, got {args.tol}")
        if getattr(args, "trials", 1) < 1:
            raise ParseError("--trials must be at least 1")
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except BcspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
