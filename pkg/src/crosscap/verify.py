"""Exhaustive range verification of the crosscap bounds and expansion identities.

The sweep walks every coprime pair 2 <= q < p <= max_p, checks each enabled
property, and aggregates a deterministic report.  A bound violation is report
data, never an exception: the whole point is to surface one if it exists.
A non-integral crosscap candidate, by contrast, aborts the sweep, because it
means the computation itself is wrong.

Parallel runs partition the pair space by p into contiguous blocks, one per
worker; each block's results are already sorted by (p, q) and the blocks are
merged in order, so the report is identical for every worker count.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Iterator

from .continued_fractions import (
    bredon_wood_N,
    cf_expand,
    cf_value,
    coefficient_sum,
    lemma9_expansions,
    make_rational,
)
from .torus_knots import (
    InvariantRecord,
    TorusKnot,
    invariants,
    q3_closed_form,
    q3_congruence_selector,
)

#: All check names, in canonical (wire) order.
CHECK_NAMES = ("thm1", "thm2", "clark", "my", "lemma2", "lemma9", "q3", "gap")

_BOUND_CHECKS = ("thm1", "thm2", "clark", "my")
_LEMMA_CHECKS = ("lemma2", "lemma9")

#: Upper cap on the sweep range.  Exactness never degrades (Python ints are
#: arbitrary precision), so this bounds runtime, not correctness: the pair
#: count grows quadratically and a full sweep at the cap is ~30M knots.
MAX_SWEEP_P = 10_000


class SweepCapError(ValueError):
    """Requested range exceeds the documented sweep cap."""


@dataclass(frozen=True)
class SweepConfig:
    """Range, parallelism, and check selection for one verification run."""

    max_p: int
    workers: int = 1
    checks: frozenset[str] = frozenset(CHECK_NAMES)

    def __post_init__(self) -> None:
        if self.max_p > MAX_SWEEP_P:
            raise SweepCapError(f"max_p {self.max_p} exceeds the sweep cap {MAX_SWEEP_P}")
        if self.max_p < 3:
            raise ValueError(f"max_p must be at least 3, got {self.max_p}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")
        object.__setattr__(self, "checks", frozenset(self.checks))
        unknown = self.checks - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")


@dataclass(frozen=True)
class BoundCheckRecord:
    """One knot's invariants plus which checks it violated or met exactly."""

    record: InvariantRecord
    violated: frozenset[str]
    equality_hits: frozenset[str]


@dataclass(frozen=True)
class VerificationReport:
    """Aggregate result of a sweep; all lists sorted ascending by (p, q)."""

    max_p: int
    checks: tuple[str, ...]
    knots_checked: int
    violations: tuple[BoundCheckRecord, ...]
    sharpness_hits: tuple[TorusKnot, ...]
    max_gap_witness: InvariantRecord
    lemma_failures: tuple[tuple[TorusKnot, tuple[str, ...]], ...]


def enumerate_coprime(max_p: int) -> Iterator[TorusKnot]:
    """Every torus knot with 2 <= q < p <= max_p, ascending by (p, q)."""
    if max_p < 3:
        raise ValueError(f"max_p must be at least 3, got {max_p}")
    if max_p > MAX_SWEEP_P:
        raise SweepCapError(f"max_p {max_p} exceeds the sweep cap {MAX_SWEEP_P}")
    for p in range(3, max_p + 1):
        for q in range(2, p):
            if gcd(p, q) == 1:
                yield TorusKnot(p, q)


def check_knot(k: TorusKnot, checks: Iterable[str] = CHECK_NAMES) -> BoundCheckRecord:
    """Evaluate every enabled check against one knot.

    Bound checks compare the crosscap number against the four bounds and
    record equality hits.  The lemma checks are range-independent facts
    about continued fractions: the coefficient sum of p/q stays at most p,
    and the two constructed expansions of (p*q -/+ 1)/p^2 evaluate exactly.
    The lemma9 check applies to every p > q > 1 regardless of knot parity.
    The q3 check (only when q = 3 and p is odd, the closed form's domain)
    compares the closed form against the general pipeline and confirms the
    congruence-selected branch attains the minimum.
    """
    enabled = frozenset(checks)
    rec = invariants(k)
    violated: set[str] = set()
    hits: set[str] = set()

    bound_values = {
        "thm1": rec.bounds.thm1,
        "thm2": rec.bounds.thm2,
        "clark": rec.bounds.clark,
        "my": rec.bounds.murakami_yasuhara,
    }
    for name in _BOUND_CHECKS:
        if name not in enabled:
            continue
        if rec.crosscap > bound_values[name]:
            violated.add(name)
        elif rec.crosscap == bound_values[name]:
            hits.add(name)

    if "gap" in enabled and rec.gap < 0:
        violated.add("gap")

    if "lemma2" in enabled:
        if coefficient_sum(cf_expand(make_rational(k.p, k.q))) > k.p:
            violated.add("lemma2")

    if "lemma9" in enabled:
        cf_minus, cf_plus = lemma9_expansions(cf_expand(make_rational(k.q, k.p)))
        p_sq = k.p * k.p
        if cf_value(cf_minus) != make_rational(k.p * k.q - 1, p_sq) or cf_value(
            cf_plus
        ) != make_rational(k.p * k.q + 1, p_sq):
            violated.add("lemma9")

    if "q3" in enabled and k.q == 3 and k.p % 2 == 1:
        _, closed = q3_closed_form(k.p)
        sign = q3_congruence_selector(k.p)
        branch = bredon_wood_N(k.p * 3 + sign, k.p * k.p)
        if (
            closed != rec.crosscap
            or not branch.is_integral
            or branch.as_integer() != rec.crosscap
        ):
            violated.add("q3")

    return BoundCheckRecord(rec, frozenset(violated), frozenset(hits))


@dataclass
class _Partial:
    """Worker-local aggregate over one contiguous block of p values."""

    count: int
    violations: list[BoundCheckRecord]
    sharpness_hits: list[TorusKnot]
    lemma_failures: list[tuple[TorusKnot, tuple[str, ...]]]
    best: InvariantRecord | None


def _sweep_block(args: tuple[int, int, frozenset[str]]) -> _Partial:
    p_lo, p_hi, checks = args
    partial = _Partial(0, [], [], [], None)
    for p in range(p_lo, p_hi + 1):
        for q in range(2, p):
            if gcd(p, q) != 1:
                continue
            checked = check_knot(TorusKnot(p, q), checks)
            partial.count += 1
            if checked.violated:
                partial.violations.append(checked)
            if {"thm1", "thm2"} & checked.equality_hits:
                partial.sharpness_hits.append(checked.record.knot)
            failed_lemmas = tuple(
                name for name in _LEMMA_CHECKS if name in checked.violated
            )
            if failed_lemmas:
                partial.lemma_failures.append((checked.record.knot, failed_lemmas))
            if partial.best is None or checked.record.gap > partial.best.gap:
                partial.best = checked.record
    return partial


def _blocks(max_p: int, workers: int) -> list[tuple[int, int]]:
    """Split [3, max_p] into at most `workers` contiguous, ordered blocks."""
    span = max_p - 2
    n_blocks = min(workers, span)
    base, extra = divmod(span, n_blocks)
    blocks = []
    lo = 3
    for i in range(n_blocks):
        size = base + (1 if i < extra else 0)
        blocks.append((lo, lo + size - 1))
        lo += size
    return blocks


def run_verification(config: SweepConfig) -> VerificationReport:
    """Run the configured sweep and aggregate a deterministic report.

    The merge is order-preserving over the p-ordered blocks, so the result
    does not depend on worker count or scheduling.  The max-gap tie-break
    is the first (smallest-(p, q)) knot attaining the maximum.
    """
    blocks = _blocks(config.max_p, config.workers)
    tasks = [(lo, hi, config.checks) for lo, hi in blocks]
    if len(tasks) == 1 or config.workers == 1:
        partials = [_sweep_block(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            partials = list(pool.map(_sweep_block, tasks))

    count = 0
    violations: list[BoundCheckRecord] = []
    sharpness: list[TorusKnot] = []
    lemma_failures: list[tuple[TorusKnot, tuple[str, ...]]] = []
    best: InvariantRecord | None = None
    for partial in partials:
        count += partial.count
        violations.extend(partial.violations)
        sharpness.extend(partial.sharpness_hits)
        lemma_failures.extend(partial.lemma_failures)
        if partial.best is not None and (best is None or partial.best.gap > best.gap):
            best = partial.best
    assert best is not None  # max_p >= 3 guarantees at least the (3,2) knot

    return VerificationReport(
        max_p=config.max_p,
        checks=tuple(sorted(config.checks)),
        knots_checked=count,
        violations=tuple(violations),
        sharpness_hits=tuple(sharpness),
        max_gap_witness=best,
        lemma_failures=tuple(lemma_failures),
    )


def report_as_dict(report: VerificationReport) -> dict:
    """JSON-ready mapping; field order is fixed and worker count is excluded.

    Excluding workers keeps serialized reports byte-identical across worker
    counts, which is the determinism contract.
    """
    witness = report.max_gap_witness.as_dict()
    return {
        "max_p": report.max_p,
        "checks": list(report.checks),
        "knots_checked": report.knots_checked,
        "violations": [
            {
                **checked.record.as_dict(),
                "violated": sorted(checked.violated),
                "equality_hits": sorted(checked.equality_hits),
            }
            for checked in report.violations
        ],
        "sharpness_hits": [{"p": k.p, "q": k.q} for k in report.sharpness_hits],
        "max_gap_witness": {
            "p": witness["p"],
            "q": witness["q"],
            "genus": witness["genus"],
            "crosscap": witness["crosscap"],
            "gap": witness["gap"],
        },
        "lemma_failures": [
            {"p": knot.p, "q": knot.q, "failed": list(failed)}
            for knot, failed in report.lemma_failures
        ],
    }


def serialize_report(report: VerificationReport) -> str:
    """Stable byte-for-byte JSON rendering of a report."""
    return json.dumps(report_as_dict(report), indent=2) + "\n"
