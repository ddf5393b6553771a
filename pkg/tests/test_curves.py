import pytest

from skeindaha.curves import (
    CurveSpec,
    RELATIONS,
    curve_operator,
    curve_word,
    explicit_operator,
    family_explicit,
    family_spec,
    twist_formula_check,
    verify_family_member,
    verify_g_ladder,
    verify_relation,
    verify_zero_mode_coincidence,
)
from skeindaha.daha import idempotent, word_eval
from skeindaha.errors import SkeindahaError
from skeindaha.laurent import OP
from skeindaha.qdiff import Operator, ch_x0, make_G
from skeindaha.scalars import Scalar


def m(coeff, **powers):
    return OP.monomial(coeff, **powers)


i = Scalar.i()


def test_dictionary_basics():
    assert curve_operator(CurveSpec("k1")) == Operator.from_coeff(ch_x0())
    assert curve_operator(CurveSpec("b2")) == Operator.from_coeff(
        m(1, b2=1) + m(1, b2=-1)
    )
    assert curve_operator(CurveSpec("k12")) == make_G(-1).scale(i)


def test_twice_twisted_k2():
    # two positive twists on the second curve give i q^(-3/4) G_2
    op = curve_operator(CurveSpec("k2", (1, 1)))
    assert op == make_G(2).scale(m(i, u=-3))


def test_unknown_base():
    with pytest.raises(SkeindahaError):
        curve_operator(CurveSpec("k7"))
    with pytest.raises(SkeindahaError):
        curve_operator(CurveSpec("b1", (1,)))  # boundary curves never twist


def test_word_routes_match_explicit():
    e = idempotent()
    for name in ("k1", "k2", "x"):
        assert word_eval(curve_word(CurveSpec(name))) == explicit_operator(name)
    for name in ("k3", "k12", "k23", "k123", "z", "k32"):
        diff = word_eval(curve_word(CurveSpec(name))) - explicit_operator(name)
        assert (diff * e).is_zero(), name


def test_relation_catalog_complete():
    first = [r for r, rel in RELATIONS.items() if rel.group == "first"]
    prz = [r for r, rel in RELATIONS.items() if rel.group == "przytycki"]
    assert len(first) == 8  # 3 cyclic + character + 3 cyclic-pair + character
    assert len(prz) == 16


@pytest.mark.parametrize("rid", sorted(RELATIONS))
def test_relations_pass(rid):
    ok, level, residual = verify_relation(rid)
    assert ok, (rid, level)
    assert residual == 0


def test_relation_negative_control():
    ok, level, residual = verify_relation("kk_11.0", perturb=True)
    assert not ok and residual > 0


def test_any_single_coefficient_shift_breaks_a_relation():
    # adding 1 to each coefficient in turn must break the check, plainly
    # and against the idempotent
    from skeindaha.curves import Relation, _a_to_u
    from skeindaha.laurent import SKEIN_A

    e = idempotent()
    rel = RELATIONS["kk_11.0"]
    for pos in range(len(rel.terms)):
        terms = list(rel.terms)
        coeff, names = terms[pos]
        terms[pos] = (coeff + SKEIN_A.one(), names)
        diff = Relation(rel.rel_id, rel.group, tuple(terms)).specialize()
        assert not diff.is_zero()
        assert not (diff * e).is_zero()


def test_family_k_1_2n_small_values():
    # one positive twist reproduces the k12 image, zero twists the k1 image
    assert family_explicit("k_1_2n", 1) == make_G(-1).scale(i)
    assert family_explicit("k_1_2n", 0) == Operator.from_coeff(ch_x0())


def test_family_specs():
    assert family_spec("k_2_1n", 3).twists == (1, 1, 1)
    assert family_spec("k_2_1n", -2).twists == (-1, -1)
    assert family_spec("k_12^2_1^-n", 2).twists == (2, 2, -1, -1)


@pytest.mark.parametrize("n", range(-2, 3))
def test_families_small_range(n):
    for fam in ("k_2_1n", "k_1_2n"):
        ok, level, _ = verify_family_member(fam, n)
        assert ok and level == "plain", (fam, n)
    ok, level, _ = verify_family_member("k_3_2n", n)
    assert ok, n


@pytest.mark.parametrize("n", (0, 1))
def test_torus_knot_families(n):
    ok, level, _ = verify_family_member("k_12^2_1^-n", n)
    assert ok and level == "plain"
    ok, level, _ = verify_family_member("k_32^2_1^-n", n)
    assert ok
    ok, _, _ = verify_zero_mode_coincidence(n)
    assert ok


def test_torus_knot_zero_mode_is_whole_story_for_k1_variant():
    # the k1-based variant has no s or d part at all
    op = family_explicit("k_12^2_1^-n", 1)
    assert all(k[0] == 0 and k[1] == 0 for k in op.terms)


def test_g_ladder():
    for n in (-1, 0, 2):
        ok, _, _ = verify_g_ladder(n)
        assert ok


def test_twist_formula_known_pairs():
    ok, level, _ = twist_formula_check("k1", "k2", 1)
    assert ok
    ok, level, _ = twist_formula_check("k1", "k2", -1)
    assert ok


def test_twist_formula_disjoint_pair():
    with pytest.raises(SkeindahaError, match="intersection number zero"):
        twist_formula_check("k1", "k3", 1)
    with pytest.raises(SkeindahaError):
        twist_formula_check("k1", "b1", 1)


def test_twisted_negative_matches_k_21n():
    # one negative twist on k2: the n = -1 member, which equals i G_-1
    op = curve_operator(CurveSpec("k2", (-1,)))
    assert op == make_G(-1).scale(i)


def test_third_twist_of_k2_is_k23():
    # applying the third twist to the second curve's word lands on the
    # printed k23 operator (against the idempotent)
    diff = curve_operator(CurveSpec("k2", (3,))) - explicit_operator("k23")
    assert (diff * idempotent()).is_zero()


def test_separating_curve_by_its_five_twists():
    # z is the base curve pushed through five twists; both routes agree
    diff = curve_operator(CurveSpec("k1", (2, 3, -1, -2))) \
        - explicit_operator("z")
    assert (diff * idempotent()).is_zero()
