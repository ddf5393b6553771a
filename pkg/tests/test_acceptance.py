"""Acceptance criteria, one test per criterion.

Every identity is exact (zero tolerance); the time limits are part of the
criteria and asserted.  Each test prints a single pass/fail line; run

    pytest -v -s tests/test_acceptance.py

to see them.
"""

import time

from skeindaha import cluster as cl
from skeindaha import curves, pi1
from skeindaha.daha import GenPoly, idempotent, word_eval
from skeindaha.suites import (
    _braid_words,
    _central_product,
    _fourth_power_conjugation,
    _hecke_t0,
    _hecke_t1,
    _hecke_u0,
    _idempotent_checks,
    _kggk,
    _kkgg,
    _recursion,
    _two_chain,
    run_suites,
)


def _report(criterion: str, passed: bool, elapsed: float):
    status = "PASS" if passed else "FAIL"
    print(f"[criterion {criterion}] {status} ({elapsed:.2f}s)")
    assert passed, criterion


def test_criterion_1_operator_kernel_identities():
    worst = 0.0
    ok = True
    for n in range(-3, 4):
        for fn in (_kggk, _kkgg):
            t0 = time.perf_counter()
            passed, _, _ = fn(n)
            dt = time.perf_counter() - t0
            worst = max(worst, dt)
            ok = ok and passed and dt < 5.0
    for n in range(-3, 3):
        t0 = time.perf_counter()
        passed, _, _ = _recursion(n)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        ok = ok and passed and dt < 5.0
    _report("1: kernel identities, each < 5 s", ok, worst)


def test_criterion_2_hecke_suite():
    t0 = time.perf_counter()
    ok = all((
        _hecke_t0()[0],
        _hecke_t1()[0],
        _hecke_u0()[0],
        _central_product()[0],
        _idempotent_checks()[0],
    ))
    dt = time.perf_counter() - t0
    _report("2: Hecke suite < 10 s", ok and dt < 10.0, dt)


def test_criterion_3_curve_images():
    t0 = time.perf_counter()
    e = idempotent()
    ok = True
    # the two plain equalities
    for name in ("k1", "k2"):
        diff = word_eval(curves.curve_word(curves.CurveSpec(name))) \
            - curves.explicit_operator(name)
        ok = ok and diff.is_zero()
    # k3 against both word orderings, then the four twisted images
    k3 = curves.explicit_operator("k3")
    for w in ((("T1", 1), ("T0", 1)), (("T0", 1), ("T1", 1))):
        gp = GenPoly.unit(1, w)
        diff = word_eval(gp + gp.inverse()) - k3
        ok = ok and (diff * e).is_zero()
    for name in ("k12", "k23", "k123", "z"):
        diff = word_eval(curves.curve_word(curves.CurveSpec(name))) \
            - curves.explicit_operator(name)
        ok = ok and (diff * e).is_zero()
    # the same four also through their twist words on the base curves
    for base, twists, target in (
        ("k1", (2,), "k12"),
        ("k2", (3,), "k23"),
        ("k1", (2, 3), "k123"),
        ("k1", (2, 3, -1, -2), "z"),
    ):
        diff = curves.curve_operator(curves.CurveSpec(base, twists)) \
            - curves.explicit_operator(target)
        ok = ok and (diff * e).is_zero()
    _report("3: eight curve-image equalities, e-sided", ok,
            time.perf_counter() - t0)


def test_criterion_4_skein_suites():
    t0 = time.perf_counter()
    ok = True
    for rid, rel in curves.RELATIONS.items():
        passed, level, _ = curves.verify_relation(rid)
        ok = ok and passed
        if rel.group == "first":
            ok = ok and level == "plain"
    dt = time.perf_counter() - t0
    _report("4: both presentations at their level < 300 s", ok and dt < 300, dt)


def test_criterion_5_automorphism_relations():
    t0 = time.perf_counter()
    # the short braids evaluated through the representation; the long one
    # agrees letter-for-letter, which implies the same operator images
    ok = all((
        _braid_words([3, 1], [1, 3], evaluate=True)[0],
        _braid_words([1, 2, 1], [2, 1, 2], evaluate=True)[0],
        _braid_words([2, 3, 2], [3, 2, 3])[0],
        _fourth_power_conjugation()[0],
        _two_chain()[0],
    ))
    _report("5: braid, fourth-power and two-chain relations", ok,
            time.perf_counter() - t0)


def test_criterion_6_operator_families():
    t0 = time.perf_counter()
    ok = True
    for fam, ns in (
        ("k_2_1n", range(-3, 4)),
        ("k_1_2n", range(-3, 4)),
        ("k_3_2n", range(-3, 4)),
        ("k_12^2_1^-n", range(0, 3)),
        ("k_32^2_1^-n", range(0, 3)),
    ):
        for n in ns:
            passed, _, _ = curves.verify_family_member(fam, n)
            ok = ok and passed
    for n in range(0, 3):
        passed, _, _ = curves.verify_zero_mode_coincidence(n)
        ok = ok and passed
    dt = time.perf_counter() - t0
    _report("6: closed-form families < 600 s", ok and dt < 600, dt)


def test_criterion_7_cluster_suite():
    t0 = time.perf_counter()
    ok = all(diff.is_zero() for _, diff in cl.poisson_suite())
    ok = ok and cl.markov_reduction_check()[0]
    for a in (1, 2, 3):
        for curve in cl.TRACE_CURVES:
            ok = ok and cl.mutation_induces_twist_check(a, curve)
    for _, w1, w2 in cl.twist_relation_pairs():
        ok = ok and cl.twist_relation_check(w1, w2)
    ok = ok and cl.fourth_power_check()
    matches, distinct, returns = cl.loop30_check()
    ok = ok and matches and distinct == 29 and returns
    dt = time.perf_counter() - t0
    _report("7: cluster suite < 300 s", ok and dt < 300, dt)


def test_criterion_8_pi1_suite():
    t0 = time.perf_counter()
    ok = all(pi1.relator_preserved(i) for i in (1, 2, 3))
    ok = ok and pi1.relator_image_exact(1) and pi1.relator_image_exact(2)
    dt = time.perf_counter() - t0
    _report("8: fundamental-group suite < 1 s", ok and dt < 1.0, dt)


def test_criterion_9_negative_controls():
    t0 = time.perf_counter()
    reports = run_suites(("qdiff", "daha", "skein", "cluster", "pi1"))
    ok = True
    for rep in reports:
        controls = [c for c in rep.checks if c.check_id.startswith("negctrl")]
        ok = ok and controls and all(c.passed for c in controls)
    _report("9: every suite has a failing perturbed identity", bool(ok),
            time.perf_counter() - t0)
