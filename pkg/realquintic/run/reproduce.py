"""
Reproduction suite: every published quantity next to the value computed here.

Rows whose reference value is known to disagree with the exact-sequence
computation are marked OPEN and do not fail the run.
"""

from __future__ import annotations

import contextlib
import logging
from typing import TYPE_CHECKING, Callable, ContextManager, Optional

import numpy as np

from realquintic.core.config import Presets
from realquintic.finite.checks import beta_identity_check, check_l2_structure, filtration_check
from realquintic.gf2.oracle import cross_check
from realquintic.polytope.fan import build_fan
from realquintic.polytope.triangulation import triangulation_for
from realquintic.reporting.summary import SummaryTable
from realquintic.toric.table_checks import verify_triple_table
from realquintic.toric.triple_table import build_triple_table
from realquintic.twist.betti import HodgeInput, betti_report
from realquintic.twist.local_cases import local_validate
from realquintic.twist.pairings import TwistClass, twisted_rank, untwisted_rank
from realquintic.twist.solver import TwistCoset
from realquintic.twist.twist_errors import NoSolutionError

if TYPE_CHECKING:
    from realquintic.run.orchestrator import Pipeline

logger = logging.getLogger(__name__)

StageFn = Callable[[str], ContextManager[None]]

EQUIVALENCE_SAMPLES = 100


def _no_stage(name: str) -> ContextManager[None]:
    return contextlib.nullcontext()


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def reproduce(
    pipe: "Pipeline",
    presets: Presets,
    seed: int = 0,
    stage: Optional[StageFn] = None,
) -> SummaryTable:
    stage = stage or _no_stage
    ref = presets.reference
    summary = SummaryTable()

    with stage("table"):
        t = pipe.table
    tri = pipe.triangulation

    with stage("verify"):
        checks = verify_triple_table(t, tri)
    summary.add("triple table checks", "pass", _status(checks.passed))

    # untwisted
    quintic = HodgeInput.from_preset("quintic", presets)
    rank_q = untwisted_rank(pipe.pairings)
    summary.add("rank beta", ref("rank_beta"), rank_q)
    untwisted = betti_report("untwisted", quintic, rank_q)
    b1_ref = ref("untwisted_b1.quintic")
    summary.add("b(untwisted)", [2, b1_ref, b1_ref, 2], list(untwisted.b))

    # twisted
    with stage("solve"):
        try:
            coset = pipe.coset
        except NoSolutionError as exc:
            logger.error("%s", exc)
            coset = None
    summary.add("(M-2) twist exists", True, coset is not None)
    if coset is not None:
        twist = coset.particular
        r = twisted_rank(pipe.pairings, twist)
        summary.add("rank Q_L", 0, r)
        summary.add("L nontrivial", True, twist.is_nontrivial(t))
        with stage("local_cases"):
            local = local_validate(t, tri, twist, pipe.local_system)
        summary.add("local cases", "pass", _status(local.passed and local.consistent))

        twisted = betti_report("twisted", quintic, r)
        tb1 = ref("twisted_b1.quintic")
        summary.add("b(twisted)", [1, tb1, tb1, 1], list(twisted.b))
        summary.add("classification(twisted)", ref("twisted_class"), twisted.classification)
        summary.add("sum b(twisted)", ref("twisted_sum"), twisted.total)

        with stage("equivalence"):
            agree, formula_ok, formula_checked = _equivalence(pipe, coset, quintic, seed)
        summary.add("local cases <=> Q_L = 0", f"{EQUIVALENCE_SAMPLES}/{EQUIVALENCE_SAMPLES}", f"{agree}/{EQUIVALENCE_SAMPLES}")
        summary.add(
            "twisted b1 = h11 + h12 - 1 - rank",
            f"{formula_checked}/{formula_checked}",
            f"{formula_ok}/{formula_checked}",
        )

    with stage("flop"):
        alt = build_triple_table(build_fan(triangulation_for("alternate" if tri.variant == "default" else "default")))
    summary.add("flop invariance", True, t.same_mod2(alt))

    with stage("finite_models"):
        beta = beta_identity_check(seed=seed)
        agreeing = beta.get("linear_part_identity").stats.get("agreeing", 0)
        summary.add("beta identity", "4096/4096", f"{agreeing}/4096")
        summary.add("L2 structure", "pass", _status(check_l2_structure(3).passed))
        filt3 = filtration_check(3)
        summary.add("filtration dims (n=3)", [1, 4, 7, 8], list(filt3.get("cumulative_dims").stats["dims"]))
        summary.add(
            "filtration (n=2,3,4)",
            "pass",
            _status(all(filtration_check(n).passed for n in (2, 3, 4))),
        )

    k3 = betti_report("k3-twisted", HodgeInput.from_preset("k3", presets), 0)
    summary.add("K3 twisted b", [1, 18, 1], list(k3.b))
    summary.add("K3 genus", ref("k3_genus"), k3.genus)

    mirror = betti_report(
        "twisted",
        HodgeInput.from_preset("mirror-quintic", presets),
        0,
        reference_b1=ref("twisted_b1.mirror-quintic"),
    )
    open_flag = any(f.startswith("OPEN") for f in mirror.flags)
    summary.add(
        "b1(twisted mirror quintic)",
        mirror.reference_b1,
        mirror.b1,
        status="OPEN" if open_flag else None,
    )

    with stage("gf2_oracle"):
        summary.add("GF(2) core vs oracle", "pass", _status(cross_check(seed=seed).passed))

    logger.info("reproduce: %s", "PASS" if summary.passed else "FAIL")
    return summary


def _equivalence(pipe: "Pipeline", coset: TwistCoset, hodge: HodgeInput, seed: int) -> tuple[int, int, int]:
    """
    Seeded twists, half uniform and half drawn from the solution coset:
    local cases pass exactly when Q_L = 0, and the twisted b1 matches the
    closed formula wherever the rank is admissible.
    """
    rng = np.random.default_rng(seed)
    t = pipe.table
    basis = t.basis
    half = EQUIVALENCE_SAMPLES // 2
    twists = [TwistClass.from_bits(basis, rng.integers(0, 2, size=len(basis))) for _ in range(half)]
    twists += [coset.random_member(rng) for _ in range(EQUIVALENCE_SAMPLES - half)]

    agree = formula_ok = checked = 0
    for twist in twists:
        r = twisted_rank(pipe.pairings, twist)
        local = local_validate(t, pipe.triangulation, twist, pipe.local_system)
        if local.passed == (r == 0):
            agree += 1
        if r <= hodge.h12 - 1:
            checked += 1
            rep = betti_report("twisted", hodge, r)
            if rep.b1 == hodge.h11 + hodge.h12 - 1 - r:
                formula_ok += 1
    return agree, formula_ok, checked
