"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines as they complete. Tolerances and time budgets are pinned here and
nowhere else.
"""

import time

from antimorph.corpus import group_corpus, ring_corpus
from antimorph.kernels import BACKEND
from antimorph.maps import ANTI, STRAIGHT
from antimorph.morphisms import brute_force_tables, enumerate_morphisms
from antimorph.reports import emit_records
from antimorph.suite import (
    RunConfig,
    audit_reports,
    automorphism_algebra_report,
    category_reports,
    correspondence_reports,
    endomorphism_monoid_report,
    reconstruction_reports,
    run,
    semilinear_reports,
    star_monoid_reports,
    theorem_instance_reports,
    variance_table_reports,
)

GROUPS = group_corpus()
RINGS = ring_corpus()


def _gate(num, desc, reports, elapsed=None, budget=None):
    bad = [(r.theorem, c.name, c.witness)
           for r in reports for c in r.failures()]
    ok = not bad and (budget is None or elapsed < budget)
    stamp = f" ({elapsed:.1f}s < {budget}s)" if budget is not None else ""
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {desc}{stamp}")
    assert not bad, bad[:5]
    if budget is not None:
        assert elapsed < budget, f"{elapsed:.1f}s exceeded the {budget}s budget"


def test_criterion_1_variance_law_table():
    t0 = time.time()
    reports = variance_table_reports(GROUPS)
    elapsed = time.time() - t0
    assert len(reports) == len(GROUPS) ** 3  # exhaustive over corpus triples
    _gate(1, f"variance XOR law over all corpus triples [{BACKEND} backend]",
          reports, elapsed, 60)


def test_criterion_2_correspondence_counts():
    reports = correspondence_reports(GROUPS)
    small = [r for r in reports
             if any(c.name == "matches-map-space-scan" for c in r.checks)]
    assert len(small) == 36  # six groups of order <= 6, all ordered pairs
    _gate(2, "straight/anti counts agree, cross-checked by full map scans",
          reports)


def test_criterion_3_s3_endomorphism_monoid():
    rep = endomorphism_monoid_report(GROUPS["s3"])
    n_hom = len(enumerate_morphisms(GROUPS["s3"], GROUPS["s3"], STRAIGHT))
    n_anti = len(enumerate_morphisms(GROUPS["s3"], GROUPS["s3"], ANTI))
    bh, ba = brute_force_tables(GROUPS["s3"], GROUPS["s3"])
    assert n_hom == n_anti == len(bh) == len(ba) == 10
    monoids = star_monoid_reports(GROUPS)
    assert len(monoids) == len(GROUPS)  # every corpus group has order <= 8
    _gate(3, "ten endomorphisms either way and a genuine star monoid "
             "(all corpus groups exhaustively)", [rep] + monoids)


def test_criterion_4_reconstruction_and_factorization_classes():
    reports = reconstruction_reports(GROUPS)
    _gate(4, "every straight map is its twin after the reverse map; "
             "classes partition all anti pairs", reports)


def test_criterion_5_named_theorem_instances():
    t0 = time.time()
    reports = theorem_instance_reports()
    elapsed = time.time() - t0
    names = [r.theorem for r in reports]
    for expected in ("anti-factorization", "anti-homomorphism",
                     "second-anti-isomorphism", "third-anti-isomorphism",
                     "subring-transport"):
        assert any(n == expected for n in names), expected
    assert sum(1 for n in names if n == "third-anti-isomorphism") == 2
    assert sum(1 for n in names if n == "anti-factorization") == 2  # group+ring
    _gate(5, "factorization and isomorphism theorems on the declared "
             "group and ring instances", reports, elapsed, 120)


def test_criterion_6_automorphism_algebra():
    rep = automorphism_algebra_report(GROUPS["s3"])
    _gate(6, "order-six isomorphism groups, order-twelve union with a normal "
             "index-two straight part", [rep])


def test_criterion_7_pointwise_audit_contract():
    reports = audit_reports()
    _gate(7, "pointwise closure audit passes on the two-element quotient ring "
             "and reports witnesses on the triangular matrix ring", reports)


def test_criterion_8_semilinear_instance():
    t0 = time.time()
    reports = semilinear_reports(seed=2024, count=50)
    elapsed = time.time() - t0
    assert sum(1 for r in reports
               if r.theorem == "quotient-image-twisted-iso") >= 50
    assert any(r.theorem == "twisted-hom-grid" for r in reports)
    _gate(8, "fifty seeded twisted maps over F4: twist rule, factor sequence, "
             "rank-nullity, generalized verifiers, hom-grid naturality",
          reports, elapsed, 30)


def test_criterion_9_category_engine():
    t0 = time.time()
    reports = category_reports()
    elapsed = time.time() - t0
    names = [r.theorem for r in reports]
    assert "functor-count/arrow" in names
    assert "anti-product-uniqueness" in names
    assert "equip-forget-adjunctions" in names
    assert "equip-forget-adjunctions-additive" in names
    _gate(9, "equip/forget round trips, anti-category equivalences, "
             "anti-products, and both adjunctions with naturality",
          reports, elapsed, 120)


def test_criterion_10_byte_identical_reports():
    config = RunConfig(selection=("correspondence/", "pointwise-audit/",
                                  "category-roundtrip/", "twist-xor"))
    first = emit_records(run(config))
    second = emit_records(run(config))
    ok = first == second and len(first) > 0
    print(f"[{'PASS' if ok else 'FAIL'}] criterion 10: identical config gives "
          f"byte-identical records ({len(first)} bytes)")
    assert ok


def test_criterion_10_full_run_determinism():
    full = RunConfig()
    first = emit_records(run(full))
    second = emit_records(run(full))
    ok = first == second
    print(f"[{'PASS' if ok else 'FAIL'}] criterion 10 (full suite): "
          f"byte-identical across reruns ({len(first)} bytes)")
    assert ok
