"""Catalog of identities and the machinery that checks them."""

from .catalog import catalog, lookup
from .records import KINDS, Case, IdentityRecord, SampleDomain, SamplePoint, VerificationReport, record_rng
from .runner import (
    DEFAULT_VERIFY,
    SuiteResult,
    VerifyConfig,
    random_congruence_matrix,
    run_suite,
    select,
    verify_exact,
    verify_modular,
    verify_pointwise,
    verify_record,
)

__all__ = [
    "KINDS",
    "Case",
    "IdentityRecord",
    "SampleDomain",
    "SamplePoint",
    "VerificationReport",
    "record_rng",
    "DEFAULT_VERIFY",
    "SuiteResult",
    "VerifyConfig",
    "random_congruence_matrix",
    "run_suite",
    "select",
    "verify_exact",
    "verify_modular",
    "verify_pointwise",
    "verify_record",
    "catalog",
    "lookup",
]
