"""Exact-arithmetic torus-knot invariants and crosscap-bound verification."""

from .continued_fractions import (
    ContinuedFraction,
    HalfInteger,
    Rational,
    bredon_wood_N,
    cf_canonicalize,
    cf_expand,
    cf_value,
    coefficient_sum,
    lemma9_expansions,
    make_rational,
    skipped_sum,
)
from .torus_knots import (
    UNKNOT,
    Bounds,
    IntegralityError,
    InvariantRecord,
    Parity,
    Q3Form,
    TorusKnot,
    Unknot,
    bounds_for,
    crosscap,
    crossing_number,
    genus,
    invariants,
    mobius_family,
    normalize,
    q3_closed_form,
    q3_congruence_selector,
    sharp_family,
)
from .verify import (
    CHECK_NAMES,
    MAX_SWEEP_P,
    BoundCheckRecord,
    SweepCapError,
    SweepConfig,
    VerificationReport,
    check_knot,
    enumerate_coprime,
    report_as_dict,
    run_verification,
    serialize_report,
)

__all__ = [
    "ContinuedFraction",
    "HalfInteger",
    "Rational",
    "bredon_wood_N",
    "cf_canonicalize",
    "cf_expand",
    "cf_value",
    "coefficient_sum",
    "lemma9_expansions",
    "make_rational",
    "skipped_sum",
    "UNKNOT",
    "Bounds",
    "IntegralityError",
    "InvariantRecord",
    "Parity",
    "Q3Form",
    "TorusKnot",
    "Unknot",
    "bounds_for",
    "crosscap",
    "crossing_number",
    "genus",
    "invariants",
    "mobius_family",
    "normalize",
    "q3_closed_form",
    "q3_congruence_selector",
    "sharp_family",
    "CHECK_NAMES",
    "MAX_SWEEP_P",
    "BoundCheckRecord",
    "SweepCapError",
    "SweepConfig",
    "VerificationReport",
    "check_knot",
    "enumerate_coprime",
    "report_as_dict",
    "run_verification",
    "serialize_report",
]
