import pytest

from finring.storage import ClassificationCache
from finring.theorems import (
    CLAIMS_BY_ID,
    AuditContext,
    CatalogConfig,
    CatalogEntry,
    Claim,
    ClaimOutcome,
    ClaimStatus,
    UnknownClaim,
    Witness,
    all_claims,
    build_catalog,
    check_claim,
    run_suite,
)
from finring.util import Limits

EXPECTED_CLAIMS = [
    "L2.1",
    "L1.2-1",
    "L1.2-2",
    "L1.2-3",
    "L1.2-4",
    "L1.2-5",
    "L1.2-6",
    "L1.2-7",
    "L1.2-8",
    "P-sub",
    "P-quot",
    "P-prod",
    "P-prodchar",
    "C-power",
    "P-matrix",
    "P-corner",
    "P-uper",
    "P-3.4",
    "P-dedekind",
    "L-reduced",
    "P-member",
    "P-mino",
    "L-char",
    "P-3.26",
    "T-3.13",
    "T-3.16",
    "T-m",
    "G-l1",
    "G-torsion",
    "G-2gr",
    "G-3gr",
    "T-groupring",
]

SMALL_CATALOG = CatalogConfig(
    zn_orders=(2, 3, 4, 6),
    gf_orders=((2, 2),),
    groups=("C(1)", "C(2)", "C(3)"),
    matrix_sizes=(),
    triangular_sizes=(2,),
    triple_product_bases=("Z(2)", "Z(3)"),
    extra_expressions=("Quot(Z(8),[4])", "Quot(Prod(Z(4),Z(4)),[2])", "Corner(M(2,Z(2)),1)"),
)


class Contradiction(Claim):
    claim_id = "X-test"
    anchor = "Two statements that disagree."

    def check(self, context, entry):
        return self.agree(entry, {"yes": True, "no": False})


def test_every_claim_is_registered():
    registered = set(CLAIMS_BY_ID)
    assert set(EXPECTED_CLAIMS) <= registered
    assert all_claims()[0].claim_id == "L2.1"
    assert all(c.anchor for c in all_claims())


def test_matrix_claim_reports_its_witness(context):
    outcome = check_claim("P-matrix", "M(2,Z(2))", context)
    assert outcome.status is ClaimStatus.PASS
    assert outcome.witness.elements == (14, 7, 7)


def test_claims_outside_their_subjects_are_not_applicable(context):
    assert check_claim("P-matrix", "Z(6)", context).status is ClaimStatus.NOT_APPLICABLE
    assert check_claim("G-eps", "Z(6)", context).status is ClaimStatus.NOT_APPLICABLE


def test_unknown_claims(context):
    with pytest.raises(UnknownClaim):
        check_claim("BOGUS", "Z(2)", context)
    with pytest.raises(UnknownClaim):
        run_suite(context, ["BOGUS"])


@pytest.mark.parametrize(
    "claim_id, expression, status",
    [
        ("T-groupring", "GR(Z(3),C(3))", ClaimStatus.PASS),
        ("T-groupring", "GR(Z(3),C(2))", ClaimStatus.PASS),
        ("T-groupring", "GR(Prod(Z(2),Z(3)),C(1))", ClaimStatus.PASS),
        ("G-eps", "GR(Z(2),S3)", ClaimStatus.PASS),
        ("G-2gr", "GR(Z(2),C(2))", ClaimStatus.PASS),
        ("G-3gr", "GR(Z(2),C(2))", ClaimStatus.NOT_APPLICABLE),
        ("P-prod", "Prod(Z(3),Z(2))", ClaimStatus.PASS),
        ("P-prod", "Prod(Z(3),Z(3))", ClaimStatus.NOT_APPLICABLE),
        ("P-prodchar", "Prod(Z(3),Z(3))", ClaimStatus.PASS),
        ("C-power", "Prod(Z(4),Z(4))", ClaimStatus.PASS),
        ("P-dedekind", "M(2,Z(2))", ClaimStatus.NOT_APPLICABLE),
        ("P-dedekind", "Z(6)", ClaimStatus.PASS),
        ("P-3.4", "TrivExt(Z(3))", ClaimStatus.PASS),
        ("P-extunits", "TrivExt(Z(3))", ClaimStatus.PASS),
        ("P-uper", "T(2,Z(3))", ClaimStatus.PASS),
        ("P-member", "Z(6)", ClaimStatus.PASS),
        ("L-char", "Z(12)", ClaimStatus.PASS),
        ("T-m", "Z(9)", ClaimStatus.PASS),
        ("L1.2-8", "M(2,Z(2))", ClaimStatus.PASS),
        ("J-oracle", "Z(12)", ClaimStatus.PASS),
        ("J-oracle", "M(2,Z(2))", ClaimStatus.NOT_APPLICABLE),
        ("L2.1", "Quot(Z(8),[4])", ClaimStatus.PASS),
        ("L2.1", "Quot(Prod(Z(4),Z(4)),[2])", ClaimStatus.PASS),
        ("L2.1", "Prod(Z(2),Z(3))", ClaimStatus.PASS),
        ("L2.1", "GR(Z(3),C(3))", ClaimStatus.PASS),
        ("L2.1", "Corner(M(2,Z(2)),1)", ClaimStatus.NOT_APPLICABLE),
    ],
)
def test_single_claims(context, claim_id, expression, status):
    assert check_claim(claim_id, expression, context).status is status


def test_failures_carry_a_recheck_command(context):
    entry = CatalogEntry("Z(6)", context.evaluator.ring("Z(6)"))
    outcome = Contradiction().check(context, entry)
    assert outcome.failed
    assert outcome.witness.note == "yes=True, no=False"
    assert outcome.witness.recheck("X-test") == "finring verify --claims X-test --expr 'Z(6)'"
    assert outcome.encode_json()["witness"]["hash"] == entry.digest


def test_failed_outcomes_need_a_witness():
    with pytest.raises(ValueError):
        ClaimOutcome("X-test", ["abc"], ClaimStatus.FAIL)
    assert ClaimOutcome("X-test", ["abc"], ClaimStatus.FAIL, Witness((1,))).failed


def test_catalog_of_expressions_deduplicates(evaluator):
    catalog = build_catalog(
        CatalogConfig.of_expressions(["Z(6)", "z( 6 )", "Prod(Z(2),Z(3))", "GF(3,1)", "Z(3)"]),
        evaluator=evaluator,
    )
    assert [entry.expression for entry in catalog] == ["Z(6)", "Prod(Z(2),Z(3))", "GF(3,1)"]
    assert [alias.expression for alias in catalog.aliases] == ["Z(3)"]
    assert "Z(3)" in catalog


def test_catalog_skips_constructions_above_the_size_cap():
    limits = Limits(size_cap=64)
    catalog = build_catalog(SMALL_CATALOG, limits)
    assert all(entry.ring.order <= 64 for entry in catalog)
    assert "GR(Z(6),C(3))" not in catalog
    assert "GR(Z(4),C(3))" in catalog
    assert "T(2,Z(4))" in catalog


def test_catalog_is_deterministic():
    first = build_catalog(SMALL_CATALOG)
    second = build_catalog(SMALL_CATALOG)
    assert [e.expression for e in first.presentations()] == [
        e.expression for e in second.presentations()
    ]


def test_small_catalog_covers_every_derived_kind():
    catalog = build_catalog(SMALL_CATALOG)
    kinds = {entry.ring.provenance.kind for entry in catalog.presentations()}
    assert {"product", "quotient", "corner", "group-ring", "triangular"} <= kinds
    assert catalog.find("Quot(Z(8),[4])").ring.provenance.kind == "quotient"
    assert catalog.find("Corner(M(2,Z(2)),1)").ring.provenance.kind == "corner"


def test_audit_over_a_small_catalog():
    context = AuditContext(catalog=build_catalog(SMALL_CATALOG))
    report = run_suite(context)
    assert report.passed, [
        outcome.encode_json()
        for summary in report.summaries
        for outcome in summary.outcomes
        if outcome.failed
    ]
    assert report.catalog_size == len(context.catalog)
    encoded = report.encode_json()
    assert [claim["id"] for claim in encoded["claims"]] == [c.claim_id for c in all_claims()]
    assert encoded["config"]["limits"]["size_cap"] == 4096


def test_reports_are_reproducible():
    config = CatalogConfig.of_expressions(["Z(12)", "GR(Z(3),C(3))", "M(2,Z(2))"])
    first = run_suite(AuditContext(catalog=build_catalog(config)))
    second = run_suite(AuditContext(catalog=build_catalog(config)))
    assert first.encode_json() == second.encode_json()


def test_records_come_back_from_the_cache(tmp_path, evaluator):
    z12 = evaluator.ring("Z(12)")
    first = AuditContext(cache=ClassificationCache(tmp_path), evaluator=evaluator)
    record = first.record(z12)
    cache = ClassificationCache(tmp_path)
    second = AuditContext(cache=cache, evaluator=evaluator)
    assert second.record(z12) == record
    assert cache.hits == 1


def test_cached_records_follow_the_current_limits(tmp_path, evaluator):
    z12 = evaluator.ring("Z(12)")
    AuditContext(cache=ClassificationCache(tmp_path), evaluator=evaluator).record(z12)
    skipping = AuditContext(Limits(skip_expensive=True), cache=ClassificationCache(tmp_path))
    assert skipping.verdict(z12, "exchange") is None
    with pytest.raises(ValueError):
        skipping.holds(z12, "exchange")


@pytest.mark.slow
def test_full_audit():
    context = AuditContext(catalog=build_catalog())
    report = run_suite(context)
    assert report.passed
    assert report.catalog_size > 100
