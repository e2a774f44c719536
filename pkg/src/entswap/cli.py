"""Command line: figure data as CSV, verification and swap reports as JSON.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
CSV cells carry 17 significant digits so values round-trip exactly; JSON
summaries show 4 decimals with the full-precision value in a `_full`
sibling field.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile
from pathlib import Path

import numpy as np

from . import measures, states, swap
from .experiment import RunConfig, run_ensemble
from .linalg import DensityMatrix

FIGURE_Q_SET = (0.1, 0.25, 0.5, 0.75, 0.9)
DEFAULT_GRID = 1001
DEFAULT_SEED = 7
VERIFY_TOL = 1e-9

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _f17(x: float) -> str:
    return format(float(x), ".17g")


def _display(x: float) -> float:
    return round(float(x), 4)


def _grid_points(n: int) -> list[float]:
    return [i / (n - 1) for i in range(n)]


def _figure_rows(which: str, grid: int) -> tuple[list[str], list[list[float]]]:
    if which in ("1a", "1b"):
        kind = "svn_phi" if which == "1a" else "svn_psi"
        pick = 0 if which == "1a" else 1
        header = ["p"] + [f"{kind}_q{q:g}" for q in FIGURE_Q_SET]
        rows = [
            [p] + [swap.post_entropies(p, q)[pick] for q in FIGURE_Q_SET]
            for p in _grid_points(grid)
        ]
        return header, rows
    if which == "2a":
        header = ["q", "pr_phi", "pr_psi", "pl_initial"]
        rows = []
        for q in _grid_points(grid):
            pr_phi, pr_psi = swap.special_case_probs(q)
            pl_value = swap.predictability_probability(q)[2]
            rows.append([q, pr_phi, pr_psi, pl_value])
        return header, rows
    if which == "2b":
        header = ["q", "svn_initial", "pvn_initial", "svn_psi", "pvn_final_psi"]
        rows = []
        for q in _grid_points(grid):
            p = 1.0 - q
            initial = measures.report(DensityMatrix(np.diag([p, 1.0 - p]).astype(complex), (2,)))
            psi_plus = next(o for o in swap.bbm_outcomes(p, q) if o.label == "psi+")
            final = measures.report(psi_plus.post_state.reduced({0}))
            rows.append([q, initial.s_vn, initial.p_vn, final.s_vn, final.p_vn])
        return header, rows
    raise ValueError(f"unknown figure {which!r}")


def _csv_text(header: list[str], rows: list[list[float]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(_f17(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> int:
    """Write to stdout, or atomically (temp file + rename) to `out`."""
    if out is None:
        sys.stdout.write(text)
        return EXIT_OK
    path = Path(out)
    try:
        parent = str(path.parent) or "."
        fd, tmp_name = tempfile.mkstemp(dir=parent, prefix=f".{path.name}.", suffix=".tmp")
        try:
            with os.fdopen(fd, "w", newline="") as fh:
                fh.write(text)
            os.replace(tmp_name, path)
        except BaseException:
            try:
                os.unlink(tmp_name)
            except OSError:
                pass
            raise
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_figures(args: argparse.Namespace) -> int:
    header, rows = _figure_rows(args.which, args.grid)
    return _emit(_csv_text(header, rows), args.out)


def cmd_verify(args: argparse.Namespace) -> int:
    da, db = args.dims
    rows = states.haar_states(da, db, args.seed, args.trials)
    vn_target = math.log2(da)
    l_target = (da - 1) / da
    max_vn = 0.0
    max_l = 0.0
    for row in rows:
        rep = measures.report(states.PureState(row, (da, db)).reduced({0}))
        max_vn = max(max_vn, abs(rep.vn_sum - vn_target))
        max_l = max(max_l, abs(rep.l_sum - l_target))
    ok = max_vn < VERIFY_TOL and max_l < VERIFY_TOL
    doc = {
        "trials": args.trials,
        "dims": [da, db],
        "seed": args.seed,
        "vn_target": vn_target,
        "linear_target": l_target,
        "max_vn_residual": max_vn,
        "max_linear_residual": max_l,
        "tolerance": VERIFY_TOL,
        "pass": ok,
    }
    code = _emit(json.dumps(doc, indent=2) + "\n", args.out)
    if code != EXIT_OK:
        return code
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def cmd_swap(args: argparse.Namespace) -> int:
    entries = []
    for o in swap.bbm_outcomes(args.p, args.q):
        entry: dict = {
            "label": o.label,
            "probability": _display(o.probability),
            "probability_full": o.probability,
        }
        if o.post_state is None:
            entry.update(
                post_state=None,
                svn=None, svn_full=None,
                pvn=None, pvn_full=None,
                cre=None, cre_full=None,
            )
        else:
            rep = measures.report(o.post_state.reduced({0}))
            entry.update(
                post_state=[[z.real, z.imag] for z in o.post_state.amplitudes],
                svn=_display(rep.s_vn), svn_full=rep.s_vn,
                pvn=_display(rep.p_vn), pvn_full=rep.p_vn,
                cre=_display(rep.c_re), cre_full=rep.c_re,
            )
        entries.append(entry)
    pair_p = measures.svn(states.schmidt_pair(args.p).reduced({0}))
    pair_q = measures.svn(states.schmidt_pair(args.q).reduced({0}))
    doc = {
        "p": args.p,
        "q": args.q,
        "initial": {
            "svn_pair_p": _display(pair_p), "svn_pair_p_full": pair_p,
            "svn_pair_q": _display(pair_q), "svn_pair_q_full": pair_q,
        },
        "outcomes": entries,
    }
    if args.shots is not None:
        result = run_ensemble(RunConfig(args.p, args.q, args.shots, args.seed))
        doc["empirical"] = {
            "shots": args.shots,
            "seed": args.seed,
            "counts": result.counts,
            "frequencies": result.empirical_freq,
            "max_abs_error": max(result.freq_error().values()),
        }
    return _emit(json.dumps(doc, indent=2) + "\n", args.out)


def _weight_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a number") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"{text!r} is outside [0, 1]")
    return value


def _dims_arg(text: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("dims must look like DA,DB")
    try:
        da, db = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError("dims must be integers") from None
    if da < 2 or db < 2:
        raise argparse.ArgumentTypeError("each dimension must be >= 2")
    return da, db


def _positive_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be >= 1")
    return value


def _grid_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 2:
        raise argparse.ArgumentTypeError("grid must be >= 2")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entswap",
        description="Entanglement swapping from partially entangled pairs: "
        "figure data, complementarity verification, outcome tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fig = sub.add_parser("figures", help="CSV sweep data behind the entropy/probability figures")
    fig.add_argument("--which", required=True, choices=("1a", "1b", "2a", "2b"),
                     help="which figure's data to produce")
    fig.add_argument("--grid", type=_grid_arg, default=DEFAULT_GRID,
                     help="points per sweep, endpoints included (default 1001)")
    fig.add_argument("--out", default=None, help="output path (default: stdout)")
    fig.set_defaults(func=cmd_figures)

    ver = sub.add_parser("verify", help="complementarity-sum residuals over Haar-random states")
    ver.add_argument("--trials", type=_positive_arg, default=10000,
                     help="number of random states (default 10000)")
    ver.add_argument("--dims", type=_dims_arg, default=(2, 2),
                     help="bipartite dimensions DA,DB (default 2,2)")
    ver.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ver.add_argument("--out", default=None, help="output path (default: stdout)")
    ver.set_defaults(func=cmd_verify)

    swp = sub.add_parser("swap", help="analytic outcome table for one (p, q), optionally sampled")
    swp.add_argument("--p", type=_weight_arg, required=True, help="Schmidt weight of the first pair")
    swp.add_argument("--q", type=_weight_arg, required=True, help="Schmidt weight of the second pair")
    swp.add_argument("--shots", type=_positive_arg, default=None,
                     help="if given, append empirical frequencies from this many draws")
    swp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    swp.add_argument("--out", default=None, help="output path (default: stdout)")
    swp.set_defaults(func=cmd_swap)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)
