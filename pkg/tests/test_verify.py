import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twisted_elliptic.analytic import g_twisted
from twisted_elliptic.characters import kronecker_character
from twisted_elliptic.qseries import FormalSeries, eta_quotient_expand, EtaQuotientSpec
from twisted_elliptic.verify import (
    Case,
    IdentityRecord,
    SampleDomain,
    VerifyConfig,
    catalog,
    lookup,
    random_congruence_matrix,
    record_rng,
    run_suite,
    select,
    verify_exact,
    verify_modular,
    verify_pointwise,
    verify_record,
)

CATALOG = catalog()
AS_PRINTED = [r for r in CATALOG if r.as_printed]
EXACT_AS_PRINTED = [r for r in AS_PRINTED if r.kind == "exact_qseries"]


# -- catalog shape ------------------------------------------------------------------


def test_catalog_is_large_and_unique():
    ids = [r.id for r in CATALOG]
    assert len(ids) >= 40
    assert len(set(ids)) == len(ids)
    assert ids == sorted(ids)


def test_every_record_has_cases_and_statement():
    for r in CATALOG:
        assert r.statement
        assert r.cases or r.kind == "modular"


def test_as_printed_records_explain_themselves():
    for r in AS_PRINTED:
        assert r.note, r.id


def test_lookup():
    assert lookup("d5.item2").kind == "exact_qseries"
    with pytest.raises(KeyError):
        lookup("no.such.record")


def test_select_globs():
    assert len(select(CATALOG, "d5.*")) >= 6
    assert select(CATALOG, "nothing-matches*") == []
    both = select(CATALOG, "d5.item2, d8.item1")
    assert [r.id for r in both] == ["d5.item2", "d8.item1"]


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        IdentityRecord("x", "nonsense", "x")


# -- exact records --------------------------------------------------------------------


def test_empty_suite_passes():
    result = run_suite("nothing-matches*")
    assert result.reports == [] and result.exit_status == 0


def test_d5_suite_reports():
    result = run_suite("d5.*", VerifyConfig(samples=5))
    assert len(result.reports) >= 6
    by_id = {r.id: r for r in result.reports}
    assert by_id["d5.item2"].passed
    assert by_id["d5.item5.weighted"].passed
    assert not by_id["d5.item5"].passed
    assert result.exit_status == 1


@pytest.mark.parametrize("record", EXACT_AS_PRINTED, ids=lambda r: r.id)
def test_failures_carry_stable_witnesses(record):
    low = verify_exact(record, 120)
    high = verify_exact(record, 240)
    assert low.status == high.status == "fail"
    assert low.witness is not None
    assert low.witness["exponent"] == high.witness["exponent"]
    assert low.witness["lhs"] != low.witness["rhs"]


def test_d5_item5_witness_value():
    rep = verify_exact(lookup("d5.item5"))
    assert rep.witness["exponent"] == "2"
    assert (rep.witness["lhs"], rep.witness["rhs"]) == ("0", "5")


def test_exact_detects_a_planted_error():
    spec = EtaQuotientSpec.parse("1^1")

    def good(T):
        return eta_quotient_expand(spec, T)

    def bad(T):
        s = eta_quotient_expand(spec, T)
        return s + FormalSeries.monomial(1, 17, T)

    rec = IdentityRecord("planted", "exact_qseries", "planted", (Case("c", (good, bad)),))
    rep = verify_exact(rec, 40)
    assert rep.status == "fail" and rep.witness["exponent"] == "17"
    assert verify_exact(rec, 10).status == "pass"


def test_kind_mismatch_is_an_error():
    with pytest.raises(ValueError):
        verify_exact(lookup("theta1.four-variable"))
    with pytest.raises(ValueError):
        verify_pointwise(lookup("d5.item2"))


# -- pointwise records ----------------------------------------------------------------


def test_pointwise_detects_a_planted_error():
    chi = kronecker_character(5)
    good = Case("c", (lambda p: g_twisted(p.z, p.tau, chi), lambda p: g_twisted(p.z, p.tau, chi, "sine_series")))
    bad = Case("c", (lambda p: g_twisted(p.z, p.tau, chi), lambda p: g_twisted(p.z, p.tau, chi) * (1 + 1e-6)))
    dom = SampleDomain(z_imag=(-0.5, 0.5))
    ok = verify_pointwise(IdentityRecord("ok", "pointwise_z", "s", (good,), domain=dom))
    assert ok.passed and ok.samples == 20
    ko = verify_pointwise(IdentityRecord("ko", "pointwise_z", "s", (bad,), domain=dom))
    assert not ko.passed
    assert ko.witness["rel_err"] == pytest.approx(1e-6, rel=1e-3)


def test_zero_samples_is_skipped():
    rep = verify_pointwise(lookup("g.sine-form"), n_samples=0)
    assert rep.status == "skipped"


def test_reports_are_deterministic():
    cfg = VerifyConfig(samples=6, seed=7)
    a = run_suite("g.sine-form,d8.item1", cfg).to_json(timing=False)
    b = run_suite("g.sine-form,d8.item1", cfg).to_json(timing=False)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    c = run_suite("g.sine-form", VerifyConfig(samples=6, seed=8)).to_json(timing=False)
    sine = next(r for r in a["reports"] if r["id"] == "g.sine-form")
    assert c["reports"][0]["points"] != sine["points"]


def test_record_rng_is_order_independent():
    assert record_rng(3, "x").uniform() == record_rng(3, "x").uniform()
    assert record_rng(3, "x").uniform() != record_rng(3, "y").uniform()


def test_sample_domain_respects_exclusions():
    dom = SampleDomain(avoid=((math.pi, 0.0),))
    rng = np.random.default_rng(0)
    for _ in range(200):
        p = dom.draw(rng, 0.1)
        k = round(p.z.real / math.pi)
        assert abs(p.z - k * math.pi) >= 0.1
        assert 0.8 <= p.tau.imag <= 1.5


def test_sample_domain_gives_up():
    dom = SampleDomain(z_radius=0.01, avoid=((math.pi, 0.0),))
    with pytest.raises(RuntimeError):
        dom.draw(np.random.default_rng(0), 0.5, max_tries=50)


# -- modular transformations ----------------------------------------------------------


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([5, 8, 12, 13]), st.sampled_from(["gamma0", "gamma1"]), st.integers(0, 2**32))
def test_congruence_matrices(N, group, seed):
    a, b, c, d = random_congruence_matrix(np.random.default_rng(seed), N, group)
    assert a * d - b * c == 1
    assert c % N == 0 and c != 0
    assert max(map(abs, (a, b, c, d))) <= 50
    if group == "gamma1":
        assert a % N == 1 and d % N == 1


def test_congruence_matrix_errors():
    rng = np.random.default_rng(0)
    with pytest.raises(ValueError):
        random_congruence_matrix(rng, 5, "gamma2")
    with pytest.raises(ValueError):
        random_congruence_matrix(rng, 60, "gamma0")


def test_modular_gamma1_multiplier_is_one():
    chi = kronecker_character(5)
    rep = verify_modular(chi, 4, "gamma1", "E", n_matrices=2, tolerance=1e-4, cutoff=150)
    assert rep.passed
    for row in rep.cases:
        assert row["predicted"] == [1.0, 0.0]


def test_modular_catches_wrong_weight(monkeypatch):
    # a weight 4 series tested against weight 6 automorphy must fail
    from twisted_elliptic.verify import runner

    orig = runner.eisenstein_E_lattice
    monkeypatch.setattr(runner, "eisenstein_E_lattice", lambda c, w, tau, M: orig(c, 4, tau, M=M))
    rep = verify_modular(kronecker_character(5), 6, "gamma0", "E", n_matrices=2, tolerance=1e-4, cutoff=100)
    assert not rep.passed and rep.witness is not None


def test_modular_rejects_unknown_series():
    with pytest.raises(ValueError):
        verify_modular(kronecker_character(5), 4, which="G")


def test_verify_record_dispatch():
    rep = verify_record(lookup("d8.item1"))
    assert rep.kind == "exact_qseries" and rep.passed
