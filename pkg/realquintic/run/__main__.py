from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from realquintic.core.errors import ToolkitError
from realquintic.core.logging import configure_logging
from realquintic.polytope.triangulation import VARIANTS
from realquintic.reporting.artifacts import dumps
from realquintic.run.orchestrator import RunConfig, RuntimeOrchestrator
from realquintic.twist.betti import KINDS
from realquintic.twist.twist_errors import InputError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--triangulation",
        choices=VARIANTS,
        default="default",
        help="Facet-interior triangulation (default: default).",
    )
    common.add_argument("--table", type=Path, default=None, help="Load a saved `table --out` file instead of computing.")
    common.add_argument("--h11", type=int, default=None, help="Override the preset h11.")
    common.add_argument("--h12", type=int, default=None, help="Override the preset h12.")
    common.add_argument("--out", type=Path, default=None, help="Write the JSON payload to this path.")
    common.add_argument("--json", action="store_true", help="Print JSON instead of the text report.")
    common.add_argument("--svg", type=Path, default=None, help="Directory for SVG face drawings.")
    common.add_argument("--seed", type=int, default=0, help="Seed for sampled checks (default: 0).")
    common.add_argument("--log-dir", type=Path, default=None, help="Write <log-dir>/<run-id>/events.jsonl.")
    common.add_argument("--run-id", default=None, help="Optional run id (default: auto-generated).")
    common.add_argument("--presets", type=Path, default=None, help="Alternative presets YAML.")
    common.add_argument("-v", "--verbose", action="store_true", help="DEBUG logging on stderr.")
    return common


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m realquintic.run",
        description="Mod-2 intersection tables of the mirror quintic and Betti numbers of real twisted loci.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()

    sub.add_parser("lattice", parents=[common], help="Boundary points, triangulation and fan summary.")

    table = sub.add_parser("table", parents=[common], help="Compute the triple intersection table.")
    table.add_argument("--integer", action="store_true", help="Include integer values in the payload.")

    sub.add_parser("verify-gross", parents=[common], help="Check the table against the face rules.")
    sub.add_parser("beta-rank", parents=[common], help="Rank of the squaring pairing.")
    sub.add_parser("find-twist", parents=[common], help="Solve D^2 + D.L = 0 for an (M-2) twist.")

    validate = sub.add_parser("validate-twist", parents=[common], help="Check a twist certificate.")
    validate.add_argument("file", type=Path, help="JSON file written by find-twist --out.")

    betti = sub.add_parser("betti", parents=[common], help="Betti numbers from the exact sequences.")
    betti.add_argument("--kind", choices=KINDS, default="twisted")
    betti.add_argument("--preset", default=None, help="Hodge preset (default: quintic, or k3 for k3-twisted).")
    betti.add_argument("--rank", type=int, default=None, help="Rank input (default: computed from the table).")

    faces = sub.add_parser("faces", parents=[common], help="Face patterns of a twist, optionally as SVG.")
    faces.add_argument("--twist", type=Path, default=None, help="Twist file (default: the solver's particular twist).")
    faces.add_argument("--minimize", action="store_true", help="Search the coset for the fewest pattern classes.")

    sub.add_parser("check-core", parents=[common], help="Exhaustive finite-model checks.")
    sub.add_parser("reproduce", parents=[common], help="Published values vs computed values.")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    logger = configure_logging(verbose=bool(args.verbose))

    cfg = RunConfig(
        command=str(args.command),
        triangulation=str(args.triangulation),
        table=args.table,
        h11=args.h11,
        h12=args.h12,
        out=args.out,
        json=bool(args.json),
        svg=args.svg,
        seed=int(args.seed),
        log_dir=args.log_dir,
        run_id=str(args.run_id) if args.run_id else None,
        presets=args.presets,
        integer=bool(getattr(args, "integer", False)),
        twist_file=getattr(args, "file", None) or getattr(args, "twist", None),
        kind=str(getattr(args, "kind", "twisted")),
        preset=getattr(args, "preset", None),
        rank=getattr(args, "rank", None),
        minimize=bool(getattr(args, "minimize", False)),
    )

    orch = RuntimeOrchestrator(log_dir=cfg.log_dir, run_id=cfg.run_id)
    try:
        result = orch.run(cfg)
    except (InputError, OSError) as exc:
        logger.error("input error: %s", exc)
        return EXIT_INPUT
    except ToolkitError as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_FAILED

    if cfg.json:
        print(dumps(result.payload))
    else:
        print(result.text)

    if orch.log is not None:
        print(f"Run logs: {orch.log.events_path}", file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
