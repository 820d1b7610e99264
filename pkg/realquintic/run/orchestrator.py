from __future__ import annotations

import json
import logging
import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

from realquintic import __version__
from realquintic.core.config import Presets, load_presets
from realquintic.core.verification import VerificationReport
from realquintic.finite.checks import beta_identity_check, check_l2_structure, filtration_check
from realquintic.orchestrator.log_writer import LogWriter
from realquintic.polytope.fan import SimplicialFan, build_fan
from realquintic.polytope.lattice import classify_counts, enumerate_boundary_points
from realquintic.polytope.triangulation import Triangulation, triangulation_for
from realquintic.reporting.artifacts import read_json, write_json
from realquintic.reporting.svg_face import emit_all_faces
from realquintic.run.reproduce import reproduce
from realquintic.toric.table_checks import verify_triple_table
from realquintic.toric.triple_table import TripleTable, build_triple_table
from realquintic.twist.betti import HodgeInput, betti_report
from realquintic.twist.face_patterns import face_patterns, minimize_patterns
from realquintic.twist.local_cases import LocalSystem, build_local_system, local_validate
from realquintic.twist.pairings import PairingMatrices, TwistClass, build_pairings, twisted_rank, untwisted_rank
from realquintic.twist.solver import TwistCoset, solve_m2_twists, verify_twist
from realquintic.twist.twist_errors import InputError, NoSolutionError
from realquintic.types import LatticeDump, RunMeta, TwistPayload

logger = logging.getLogger(__name__)

COMMANDS = (
    "lattice",
    "table",
    "verify-gross",
    "beta-rank",
    "find-twist",
    "validate-twist",
    "betti",
    "faces",
    "check-core",
    "reproduce",
)


def create_run_id(prefix: str = "run") -> str:
    ts = datetime.now(timezone.utc).strftime("%Y%m%d-%H%M%S")
    return f"{prefix}-{ts}-{uuid.uuid4().hex[:8]}"


@dataclass
class RunConfig:
    command: str
    triangulation: str = "default"
    table: Optional[Path] = None
    h11: Optional[int] = None
    h12: Optional[int] = None
    out: Optional[Path] = None
    json: bool = False
    svg: Optional[Path] = None
    seed: int = 0
    log_dir: Optional[Path] = None
    run_id: Optional[str] = None
    presets: Optional[Path] = None
    # command specific
    integer: bool = False
    twist_file: Optional[Path] = None
    kind: str = "twisted"
    preset: Optional[str] = None
    rank: Optional[int] = None
    minimize: bool = False


@dataclass
class CommandResult:
    exit_code: int
    payload: Any
    text: str
    artifacts: List[Path] = field(default_factory=list)


def load_table(path: Path) -> TripleTable:
    try:
        payload = read_json(path)
        return TripleTable.from_payload(payload)
    except FileNotFoundError as exc:
        raise InputError(f"table file not found: {path}") from exc
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, IndexError) as exc:
        raise InputError(f"malformed table file {path}: {exc}") from exc


def load_twist(path: Path, basis: tuple[str, ...]) -> TwistClass:
    """Read the find-twist schema: {"twist": [divisor ids, ...], ...}."""
    try:
        payload = read_json(path)
    except FileNotFoundError as exc:
        raise InputError(f"twist file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"twist file {path} is not JSON: {exc}") from exc
    if not isinstance(payload, dict) or not isinstance(payload.get("twist"), list):
        raise InputError(f"twist file {path} has no 'twist' list")
    if not all(isinstance(x, str) for x in payload["twist"]):
        raise InputError(f"twist file {path}: divisor ids must be strings")
    repeated = sorted({x for x in payload["twist"] if payload["twist"].count(x) > 1})
    if repeated:
        raise InputError(f"twist file {path}: divisor ids listed more than once: {repeated}")
    return TwistClass.from_ids(basis, payload["twist"])


class Pipeline:
    """
    Lazily built stages shared by the subcommands: triangulation -> fan ->
    triple table -> pairings -> twist coset. A saved table payload can stand
    in for the first three.
    """

    def __init__(self, variant: str = "default", table_path: Optional[Path] = None) -> None:
        self.variant = variant
        self.table_path = table_path

    @cached_property
    def triangulation(self) -> Triangulation:
        try:
            return triangulation_for(self.variant)
        except ValueError as exc:
            raise InputError(str(exc)) from exc

    @cached_property
    def fan(self) -> SimplicialFan:
        return build_fan(self.triangulation)

    @cached_property
    def table(self) -> TripleTable:
        if self.table_path is not None:
            return load_table(self.table_path)
        return build_triple_table(self.fan)

    @cached_property
    def pairings(self) -> PairingMatrices:
        return build_pairings(self.table)

    @cached_property
    def coset(self) -> TwistCoset:
        return solve_m2_twists(self.pairings)

    @cached_property
    def local_system(self) -> LocalSystem:
        return build_local_system(self.table, self.triangulation)


class RuntimeOrchestrator:
    """
    Runtime orchestrator for `python -m realquintic.run <command>`.

    With a log directory it writes <log_dir>/<run_id>/events.jsonl:
      run_start, one stage event per pipeline stage, artifacts_written, run_end
    """

    def __init__(self, log_dir: Optional[Path] = None, run_id: Optional[str] = None) -> None:
        self.log_dir = Path(log_dir) if log_dir is not None else None
        self.run_id = run_id
        self.log: Optional[LogWriter] = None

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        yield
        seconds = round(time.perf_counter() - start, 3)
        logger.debug("stage %s: %.3fs", name, seconds)
        if self.log is not None:
            self.log.event("stage", meta={"stage": name, "seconds": seconds})

    def run(self, cfg: RunConfig) -> CommandResult:
        if cfg.command not in COMMANDS:
            raise InputError(f"unknown command {cfg.command!r}")

        if cfg.log_dir is not None or self.log_dir is not None:
            run_id = cfg.run_id or self.run_id or create_run_id(cfg.command)
            cfg.run_id = run_id
            self.log = LogWriter(log_dir=cfg.log_dir or self.log_dir, run_id=run_id)  # type: ignore[arg-type]
            self.log.event(
                "run_start",
                meta={
                    "kind": cfg.command,
                    "run_id": run_id,
                    "triangulation": cfg.triangulation,
                    "seed": cfg.seed,
                    "version": __version__,
                },
            )

        presets = load_presets(cfg.presets)
        pipe = Pipeline(cfg.triangulation, cfg.table)
        handler = getattr(self, "_cmd_" + cfg.command.replace("-", "_"))
        result: CommandResult = handler(cfg, pipe, presets)

        if cfg.out is not None:
            result.artifacts.insert(0, write_json(cfg.out, result.payload))

        if self.log is not None:
            self.log.event("artifacts_written", meta={"paths": [str(p) for p in result.artifacts]})
            self.log.event("run_end", meta={"run_id": cfg.run_id, "exit_code": result.exit_code})
        return result

    def _record(self, report: VerificationReport) -> None:
        if self.log is not None:
            self.log.checks(report)

    def _meta(self, cfg: RunConfig) -> RunMeta:
        return {
            "command": cfg.command,
            "triangulation": cfg.triangulation,
            "seed": cfg.seed,
            "version": __version__,
        }

    def _cmd_lattice(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        points = enumerate_boundary_points()
        with self.stage("triangulation"):
            tri = pipe.triangulation
        with self.stage("fan"):
            fan = pipe.fan

        payload: LatticeDump = {
            "points": [
                {"id": p.id, "bary": list(p.bary), "ambient": list(p.ambient), "carrier": list(p.carrier)}
                for p in points
            ],
            "cells": [list(c) for c in tri.cells],
            "meta": self._meta(cfg),
        }
        counts = classify_counts(points)
        text = "\n".join(
            [
                "boundary lattice points: " + ", ".join(f"{k}={v}" for k, v in counts.items()) + f" (total {len(points)})",
                f"triangulation {tri.variant}: {len(tri.cells)} unimodular cells",
                f"fan: {fan.n_rays} rays, {len(fan.max_cones)} maximal cones, complete and smooth",
                f"fingerprint: {fan.fingerprint}",
            ]
        )
        return CommandResult(0, payload, text)

    def _table(self, pipe: Pipeline) -> TripleTable:
        with self.stage("table"):
            return pipe.table

    def _cmd_table(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        t = self._table(pipe)
        payload = dict(t.to_payload(integer=cfg.integer))
        payload["meta"] = self._meta(cfg)
        text = (
            f"triple table ({t.variant}): {t.size} generators, "
            f"{len(payload['triples'])} sorted triples with odd intersection\n"
            f"provenance: {t.provenance}"
        )
        return CommandResult(0, payload, text)

    def _cmd_verify_gross(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        t = self._table(pipe)
        with self.stage("verify"):
            report = verify_triple_table(t, pipe.triangulation)
        self._record(report)
        payload = report.to_dict()
        payload["meta"] = self._meta(cfg)
        return CommandResult(0 if report.passed else 1, payload, report.to_text())

    def _cmd_beta_rank(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        self._table(pipe)
        with self.stage("rank"):
            r = untwisted_rank(pipe.pairings)
        payload = {"rank": r, "generators": len(pipe.pairings.basis), "meta": self._meta(cfg)}
        text = f"rank of the squaring pairing Q over {len(pipe.pairings.basis)} generators: {r}"
        return CommandResult(0, payload, text)

    def _cmd_find_twist(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        t = self._table(pipe)
        with self.stage("solve"):
            try:
                coset = pipe.coset
            except NoSolutionError as exc:
                logger.error("%s", exc)
                return CommandResult(1, {"error": str(exc), "diagnostics": exc.diagnostics}, str(exc))

        twist = coset.particular
        with self.stage("local_cases"):
            local = local_validate(t, pipe.triangulation, twist, pipe.local_system)
        verified = (
            verify_twist(pipe.pairings, twist)
            and twist.is_nontrivial(t)
            and local.passed
            and local.consistent
        )
        payload: TwistPayload = {
            "twist": list(twist.support),
            "coset_dim": coset.dim,
            "rank_untwisted": coset.rank_untwisted,
            "verified": bool(verified),
            "meta": self._meta(cfg),
        }
        text = "\n".join(
            [
                f"(M-2) twist: {len(twist.support)} divisors, coset dimension {coset.dim}",
                "L = " + " + ".join(twist.support),
                f"verified: {verified}",
            ]
        )
        return CommandResult(0 if verified else 1, payload, text)

    def _cmd_validate_twist(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        if cfg.twist_file is None:
            raise InputError("validate-twist needs a twist file")
        t = self._table(pipe)
        twist = load_twist(cfg.twist_file, t.basis)

        report = VerificationReport(title=f"twist certificate {cfg.twist_file}")
        r = twisted_rank(pipe.pairings, twist)
        report.add("twisted_rank_zero", r == 0, f"rank Q_L = {r}", rank=r)
        witness = twist.cohomology_witness(t)
        report.add(
            "nontrivial",
            witness is not None,
            f"L.D1.D2 = 1 for {list(witness)}" if witness else "L pairs trivially with every generator pair",
        )
        with self.stage("local_cases"):
            local = local_validate(t, pipe.triangulation, twist, pipe.local_system)
        report.add(
            "local_cases",
            local.passed,
            f"{local.total_failures} local parity equations fail",
            witnesses=[w for ws in local.witnesses.values() for w in ws],
        )
        report.add("local_consistent", local.consistent, f"{len(local.mismatches)} table/formula mismatches")

        self._record(report)
        payload = report.to_dict()
        payload["local_cases"] = local.to_dict()
        payload["meta"] = self._meta(cfg)
        return CommandResult(0 if report.passed else 1, payload, report.to_text() + "\n" + local.to_text())

    def _cmd_betti(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        kind = cfg.kind
        preset = cfg.preset or ("k3" if kind == "k3-twisted" else "quintic")
        h = HodgeInput.from_preset(preset, presets, h11=cfg.h11, h12=cfg.h12)

        rank = cfg.rank
        if rank is None:
            # default ranks come from the mirror-quintic table
            if kind == "untwisted":
                self._table(pipe)
                rank = untwisted_rank(pipe.pairings)
            elif kind == "twisted":
                self._table(pipe)
                rank = twisted_rank(pipe.pairings, pipe.coset.particular)
            else:
                rank = 0

        reference = None
        if kind in ("untwisted", "twisted") and cfg.h11 is None and cfg.h12 is None:
            reference = presets.reference(f"{kind}_b1.{preset}")

        rep = betti_report(kind, h, rank, reference_b1=reference)
        payload = dict(rep.to_payload())
        payload["meta"] = self._meta(cfg)
        return CommandResult(0 if rep.bounds_ok else 1, payload, rep.to_text())

    def _cmd_faces(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        t = self._table(pipe)
        if cfg.minimize:
            with self.stage("pattern_search"):
                twist, report = minimize_patterns(pipe.coset, seed=cfg.seed)
        else:
            twist = load_twist(cfg.twist_file, t.basis) if cfg.twist_file else pipe.coset.particular
            report = face_patterns(twist)

        artifacts: List[Path] = []
        if cfg.svg is not None:
            with self.stage("svg"):
                artifacts = emit_all_faces(pipe.triangulation, twist, cfg.svg)

        payload: Dict[str, Any] = report.to_dict()
        payload["twist"] = list(twist.support)
        payload["svg"] = [str(p) for p in artifacts]
        payload["meta"] = self._meta(cfg)
        return CommandResult(0, payload, report.to_text(), artifacts)

    def _cmd_check_core(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        with self.stage("finite_models"):
            reports = [check_l2_structure(3)]
            reports += [filtration_check(n) for n in (2, 3, 4)]
            reports.append(beta_identity_check(seed=cfg.seed))
        for r in reports:
            self._record(r)
        passed = all(r.passed for r in reports)
        payload = {"passed": passed, "reports": [r.to_dict() for r in reports], "meta": self._meta(cfg)}
        return CommandResult(0 if passed else 1, payload, "\n\n".join(r.to_text() for r in reports))

    def _cmd_reproduce(self, cfg: RunConfig, pipe: Pipeline, presets: Presets) -> CommandResult:
        summary = reproduce(pipe, presets, seed=cfg.seed, stage=self.stage)
        payload = {"rows": summary.rows, "meta": self._meta(cfg)}
        return CommandResult(0 if summary.passed else 1, payload, summary.to_text())
