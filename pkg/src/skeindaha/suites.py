"""The named verification suites behind `verify --suite ...`.

Each suite is a list of exact checks mirroring the displayed identities,
plus at least one deliberately perturbed identity that must fail (guarding
the comparators against vacuous passes).
"""

from __future__ import annotations

from . import cluster as cl
from . import curves, pi1
from .daha import (
    GENERATORS,
    GenPoly,
    U_n,
    compose_twists,
    gen_operator,
    idempotent,
    word_eval,
    word_sh,
)
from .laurent import OP, LaurentPoly
from .qdiff import Operator, ch_x0, make_G, make_K
from .ratfn import RationalFn
from .reports import CheckResult, SuiteReport, run_check, run_negative_control
from .scalars import Scalar

SUITE_NAMES = ("qdiff", "daha", "skein", "cluster", "pi1")


def _m(coeff, **powers) -> LaurentPoly:
    return OP.monomial(coeff, **powers)


# ---------------------------------------------------------------------------
# qdiff: the operator-kernel identities
# ---------------------------------------------------------------------------

def _kggk(n: int):
    diff = make_K(n) * make_G(n).shift_x(1) - make_G(n) * make_K(n)
    return diff.is_zero(), "plain", len(diff)


def _kkgg(n: int):
    kk = make_K(n).sub_x(0, -1) * make_K(n).shift_x(-1)
    gg = make_G(n) * make_G(n)
    rhs = Operator.from_coeff(
        OP.monomial(-1, u=2 * n, x=-1) * (_m(1, u=2) - _m(1, x=1)) ** 2
    )
    diff = kk - gg - rhs
    return diff.is_zero(), "plain", len(diff)


def _recursion(n: int):
    pref = RationalFn.make(_m(1, u=2), {_m(1, u=2) - _m(1, x=1): 1})
    ch0 = ch_x0().as_poly()
    m11 = Operator.from_coeff(_m(-1, x=1) * ch0)
    m12 = Operator.from_coeff(-(_m(1, x=1, x0=-1) + _m(1, u=2, x0=1)))
    m21 = Operator.from_coeff(_m(1, u=2, x0=-1) + _m(1, x=1, x0=1))
    m22 = Operator.from_coeff(_m(1, u=2) * ch0)
    kn, gn = make_K(n).sub_x(0, -1), make_G(n)
    d1 = (kn * m11 + gn * m21).scale(pref) - make_K(n + 1).sub_x(0, -1)
    d2 = (kn * m12 + gn * m22).scale(pref) - make_G(n + 1)
    ok = d1.is_zero() and d2.is_zero()
    return ok, "plain", len(d1) + len(d2)


def _g_three_term(n: int):
    ch0 = Operator.from_coeff(ch_x0())
    d1 = ch0 * make_G(n) - make_G(n - 1) - make_G(n + 1)
    d2 = (
        make_G(n) * ch0
        - make_G(n - 1).scale(_m(1, u=2))
        - make_G(n + 1).scale(_m(1, u=-2))
    )
    ok = d1.is_zero() and d2.is_zero()
    return ok, "plain", len(d1) + len(d2)


def suite_qdiff() -> SuiteReport:
    report = SuiteReport("qdiff")
    add = report.checks.append
    for n in range(-3, 4):
        add(run_check(f"K_G_transport[n={n}]", lambda n=n: _kggk(n)))
        add(run_check(f"KK_minus_GG[n={n}]", lambda n=n: _kkgg(n)))
    for n in range(-3, 3):
        add(run_check(f"KG_recursion[n={n}]", lambda n=n: _recursion(n)))
    for n in range(-3, 4):
        add(run_check(f"G_three_term[n={n}]", lambda n=n: _g_three_term(n)))
    add(run_negative_control(
        "negctrl_K_G_transport",
        lambda: (make_K(0) * make_G(0) - make_G(0) * make_K(0)).is_zero(),
        "transport identity without the argument shift must fail",
    ))
    return report


# ---------------------------------------------------------------------------
# daha: Hecke suite and twist automorphisms
# ---------------------------------------------------------------------------

def _sh_word(unit: GenPoly) -> Operator:
    return word_eval(word_sh(unit))


def _hecke_t0():
    target = Operator.from_coeff(ch_x0().scale(Scalar(0, -1)))
    checks = [
        gen_operator("T0") - gen_operator("T0", -1) - target,
        _sh_word(GenPoly.unit(_m(1, u=-2), (("T0", -1), ("X", 1)))) - target,
        _sh_word(GenPoly.unit(_m(1, u=-2), (("X", 1), ("T0", -1)))) - target,
    ]
    ok = all(d.is_zero() for d in checks)
    return ok, "plain", sum(len(d) for d in checks)


def _hecke_t1():
    i = Scalar.i()
    d1 = gen_operator("T1") - gen_operator("T1", -1) - Operator.from_coeff(
        (_m(1, u=-2, b1=1) + _m(1, u=2, b1=-1)).scale(-i)
    )
    d2 = _sh_word(GenPoly.unit(1, (("T1", 1), ("X", 1)))) - Operator.from_coeff(
        (_m(1, b2=1) + _m(1, b2=-1)).scale(i)
    )
    ok = d1.is_zero() and d2.is_zero()
    return ok, "plain", len(d1) + len(d2)


def _hecke_u0():
    target = make_G(0).scale(_m(1, u=-1))
    checks = [
        gen_operator("U0") - gen_operator("U0", -1) - target,
        _sh_word(GenPoly.unit(_m(1, u=-2), (("U0", -1), ("X", 1)))) - target,
        _sh_word(GenPoly.unit(_m(1, u=-2), (("X", 1), ("U0", -1)))) - target,
    ]
    ok = all(d.is_zero() for d in checks)
    return ok, "plain", sum(len(d) for d in checks)


def _central_product():
    w = GenPoly.unit(1, (
        ("T0", -1), ("U0", 1), ("T0", 1), ("U0", -1), ("X", 1),
    ))
    diff = word_eval(w) - Operator.from_coeff(_m(-1, u=4))
    return diff.is_zero(), "plain", len(diff)


def _idempotent_checks():
    e = idempotent()
    t1, t1i = gen_operator("T1"), gen_operator("T1", -1)
    lam = Operator.from_coeff(_m(Scalar(0, -1), u=2, b1=-1))
    lam_inv = Operator.from_coeff(_m(Scalar(0, 1), u=-2, b1=1))
    checks = [
        e * e - e,
        t1 * e - lam * e,
        e * t1 - lam * e,
        t1i * e - lam_inv * e,
        e * t1i - lam_inv * e,
    ]
    ok = all(d.is_zero() for d in checks)
    return ok, "plain", sum(len(d) for d in checks)


def _gen_inverse(name: str):
    one = Operator.identity()
    d1 = gen_operator(name, 1) * gen_operator(name, -1) - one
    d2 = gen_operator(name, -1) * gen_operator(name, 1) - one
    ok = d1.is_zero() and d2.is_zero()
    return ok, "plain", len(d1) + len(d2)


def _un_consistency(n: int):
    U_n(n)  # raises on disagreement between word and explicit forms
    sh = _sh_word(GenPoly.unit(
        OP.monomial(Scalar.i() ** (-n), u=n), (("U0", 1), ("T0", -n))
    ))
    diff = sh - make_G(n).scale(_m(1, u=-n - 1))
    return diff.is_zero(), "plain", len(diff)


def _un_ladder(n: int):
    ch0 = Operator.from_coeff(ch_x0())
    d1 = ch0 * U_n(n) - U_n(n - 1).scale(_m(1, u=-1)) - U_n(n + 1).scale(_m(1, u=1))
    d2 = U_n(n) * ch0 - U_n(n - 1).scale(_m(1, u=1)) - U_n(n + 1).scale(_m(1, u=-1))
    ok = d1.is_zero() and d2.is_zero()
    return ok, "plain", len(d1) + len(d2)


def _g_commutes_t1(n: int):
    t1 = gen_operator("T1")
    diff = make_G(n) * t1 - t1 * make_G(n)
    return diff.is_zero(), "plain", len(diff)


def _braid_words(w1, w2, evaluate=False):
    """Braid relation on generator images.

    The composites agree letter-for-letter, which already forces equal
    operator images; evaluate=True additionally runs both sides through
    the representation (costly for the longest pair).
    """
    a, b = compose_twists(w1), compose_twists(w2)
    if not a.matches(b):
        return False, "word", 1
    if evaluate:
        for g in GENERATORS:
            diff = word_eval(a.image(g)) - word_eval(b.image(g))
            if not diff.is_zero():
                return False, "plain", len(diff)
        return True, "plain", 0
    return True, "word", 0


def _fourth_power_conjugation():
    comp = compose_twists([3, 2, 1])
    c4 = comp
    for _ in range(3):
        c4 = c4.compose(comp)
    t1w = GenPoly.unit(1, (("T1", 1),))
    t1wi = GenPoly.unit(1, (("T1", -1),))
    total = 0
    for g in GENERATORS:
        diff = word_eval(c4.image(g)) - word_eval(t1wi * GenPoly.gen(g) * t1w)
        if not diff.is_zero():
            return False, "plain", len(diff)
        total += len(diff)
    return True, "plain", total


def _two_chain():
    comp = compose_twists([2, 1])
    c6 = comp
    for _ in range(5):
        c6 = c6.compose(comp)
    xw = GenPoly.unit(1, (("X", 1),))
    xwi = GenPoly.unit(1, (("X", -1),))
    for g in ("T1", "X"):
        if not (word_eval(c6.image(g)) - gen_operator(g)).is_zero():
            return False, "plain", 1
    for g in ("T0", "U0"):
        diff = word_eval(c6.image(g)) - word_eval(xw * GenPoly.gen(g) * xwi)
        if not diff.is_zero():
            return False, "plain", len(diff)
    return True, "plain", 0


def suite_daha() -> SuiteReport:
    report = SuiteReport("daha")
    add = report.checks.append
    for g in GENERATORS:
        add(run_check(f"inverse[{g}]", lambda g=g: _gen_inverse(g)))
    add(run_check("hecke_T0", _hecke_t0))
    add(run_check("hecke_T1", _hecke_t1))
    add(run_check("hecke_U0", _hecke_u0))
    add(run_check("central_T0U0T0U0X", _central_product))
    add(run_check("idempotent", _idempotent_checks))
    for n in range(-3, 4):
        add(run_check(f"U_family[n={n}]", lambda n=n: _un_consistency(n)))
    for n in range(-2, 3):
        add(run_check(f"U_ladder[n={n}]", lambda n=n: _un_ladder(n)))
    for n in range(-2, 3):
        add(run_check(f"G_commutes_T1[n={n}]", lambda n=n: _g_commutes_t1(n)))
    add(run_check("braid_13", lambda: _braid_words([3, 1], [1, 3])))
    add(run_check("braid_121", lambda: _braid_words([1, 2, 1], [2, 1, 2])))
    add(run_check("braid_232", lambda: _braid_words([2, 3, 2], [3, 2, 3])))
    add(run_check("twist_power4_conjugation", _fourth_power_conjugation))
    add(run_check("two_chain_power6", _two_chain))
    add(run_negative_control(
        "negctrl_power2_not_inner",
        _second_power_not_conjugation,
        "the square of the composite twist must not already be inner",
    ))
    return report


def _second_power_not_conjugation():
    comp = compose_twists([3, 2, 1])
    c2 = comp.compose(comp)
    t1w = GenPoly.unit(1, (("T1", 1),))
    t1wi = GenPoly.unit(1, (("T1", -1),))
    for g in GENERATORS:
        diff = word_eval(c2.image(g)) - word_eval(t1wi * GenPoly.gen(g) * t1w)
        if not diff.is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# skein: relation catalogs, curve images, operator families
# ---------------------------------------------------------------------------

def _route_agreement(name: str):
    diff = word_eval(curves.curve_word(curves.CurveSpec(name))) \
        - curves.explicit_operator(name)
    if diff.is_zero():
        return True, "plain", 0
    esided = diff * idempotent()
    return esided.is_zero(), "e-sided", len(esided)


def suite_skein() -> SuiteReport:
    report = SuiteReport("skein")
    add = report.checks.append
    for rid in curves.RELATIONS:
        add(run_check(
            f"relation[{rid}]", lambda rid=rid: curves.verify_relation(rid)
        ))
    for name in ("k1", "k2", "k3", "x", "k12", "k23", "k123", "z", "k32"):
        add(run_check(f"word_route[{name}]", lambda n=name: _route_agreement(n)))
    for fam, ns in (
        ("k_2_1n", range(-3, 4)),
        ("k_1_2n", range(-3, 4)),
        ("k_3_2n", range(-3, 4)),
        ("k_12^2_1^-n", range(0, 3)),
        ("k_32^2_1^-n", range(0, 3)),
    ):
        for n in ns:
            add(run_check(
                f"family[{fam},n={n}]",
                lambda f=fam, n=n: curves.verify_family_member(f, n),
            ))
    for n in range(0, 3):
        add(run_check(
            f"zero_mode_match[n={n}]",
            lambda n=n: curves.verify_zero_mode_coincidence(n),
        ))
    for n in range(-3, 4):
        add(run_check(
            f"k1_ladder[n={n}]", lambda n=n: curves.verify_g_ladder(n)
        ))
    for pair in (("k1", "k2"), ("k2", "k1"), ("k2", "k3"), ("k3", "k2")):
        for sign in (1, -1):
            label = f"twist_formula[{pair[0]},{pair[1]},{'+' if sign > 0 else '-'}]"
            add(run_check(
                label,
                lambda p=pair, s=sign: curves.twist_formula_check(p[0], p[1], s),
            ))
    add(run_negative_control(
        "negctrl_relation_perturbed",
        lambda: curves.verify_relation("kk_11.0", perturb=True),
        "scaling one coefficient by A^2 must break the relation",
    ))
    return report


# ---------------------------------------------------------------------------
# cluster
# ---------------------------------------------------------------------------

def suite_cluster() -> SuiteReport:
    report = SuiteReport("cluster")
    add = report.checks.append
    for label, diff in cl.poisson_suite():
        add(CheckResult(
            f"poisson[{label}]", diff.is_zero(), "plain", len(diff), 0
        ))
    add(run_check("markov_reduction", lambda: cl.markov_reduction_check()[0]))
    for a in (1, 2, 3):
        for curve in cl.TRACE_CURVES:
            add(run_check(
                f"mutation_twist[D{a},{curve}]",
                lambda a=a, c=curve: cl.mutation_induces_twist_check(a, c),
            ))
    for label, w1, w2 in cl.twist_relation_pairs():
        add(run_check(
            f"twist_relation[{label}]",
            lambda w1=w1, w2=w2: cl.twist_relation_check(w1, w2),
        ))
    add(run_check("twist_relation[(D_123)^4=1]", cl.fourth_power_check))
    add(run_check("loop30", _loop30))
    add(run_negative_control(
        "negctrl_markov_constant",
        _markov_wrong_constant,
        "coupled Markov with constant 5 instead of 4 must fail",
    ))
    return report


def _loop30():
    matches, distinct, returns = cl.loop30_check()
    ok = matches and distinct == 29 and returns
    return ok, "plain", 0 if ok else 1


def _markov_wrong_constant():
    from .laurent import CLUSTER, KRING
    diff = cl.coupled_markov_cl_difference() + KRING.one()
    traces = [RationalFn.from_poly(cl.trace_expr(c)) for c in KRING.variables]
    return diff.map_context(CLUSTER, traces).is_zero()


# ---------------------------------------------------------------------------
# pi1
# ---------------------------------------------------------------------------

def suite_pi1() -> SuiteReport:
    report = SuiteReport("pi1")
    add = report.checks.append
    for i in (1, 2, 3):
        add(run_check(
            f"relator_preserved[delta{i}]",
            lambda i=i: pi1.relator_preserved(i),
        ))
    for i in (1, 2):
        add(run_check(
            f"relator_verbatim[delta{i}]",
            lambda i=i: pi1.relator_image_exact(i),
        ))
    for i in (1, 2, 3):
        add(run_check(
            f"delta_inverse[delta{i}]", lambda i=i: _delta_inverse(i)
        ))
    add(run_check("free_reduce_idempotent", _reduce_idempotent))
    add(run_negative_control(
        "negctrl_fake_twist",
        _fake_twist_preserves,
        "B -> B C1 is not a mapping class and must move the relator",
    ))
    return report


def _delta_inverse(i: int) -> bool:
    fwd, inv = pi1.delta_images(i), pi1.delta_inverse_images(i)
    for letter in pi1.LETTERS:
        w = ((letter, 1),)
        if pi1.apply_images(inv, pi1.apply_images(fwd, w)) != w:
            return False
        if pi1.apply_images(fwd, pi1.apply_images(inv, w)) != w:
            return False
    return True


def _reduce_idempotent() -> bool:
    w = pi1.parse_free_word("A B B^-1 A C1 C1^-1 A^-1")
    return pi1.free_reduce(w) == w and len(w) <= 1


def _fake_twist_preserves() -> bool:
    table = {letter: ((letter, 1),) for letter in pi1.LETTERS}
    table["B"] = (("B", 1), ("C1", 1))
    image = pi1.cyclic_reduce(pi1.apply_images(table, pi1.RELATOR))
    target = pi1.cyclic_reduce(pi1.RELATOR)
    if len(image) != len(target):
        return False
    return any(image == target[k:] + target[:k] for k in range(len(target)))


# ---------------------------------------------------------------------------

SUITES = {
    "qdiff": suite_qdiff,
    "daha": suite_daha,
    "skein": suite_skein,
    "cluster": suite_cluster,
    "pi1": suite_pi1,
}


def run_suites(names) -> list:
    return [SUITES[n]() for n in names]
