"""
测试 CSCA 矩阵：校验、分类、滑翔子重建与共轭
"""

import numpy as np
import pytest

from cqca.core.csca import (
    F,
    G,
    GS,
    H,
    IDENTITY,
    P,
    P3,
    CscaMatrix,
    apply,
    classify,
    conjugator,
    conjugator_to_standard,
    csca_from_glider,
    format_matrix,
    generators,
    glider_pair,
    glider_speed,
    inverse,
    invariance_family,
    minimal_glider,
    monomial_eigenvectors,
    named,
    neighborhood_radius,
    parse_automaton,
    parse_matrix,
    pow,
    shear,
    validate,
)
from cqca.core.gf2poly import ONE, ZERO, LaurentPoly, monomial, parse as parse_poly
from cqca.core.symplectic import PhaseVector, parse as parse_vector, same_up_to_unit
from cqca.data.models import AutomatonKind


def _random_automaton(rng, length):
    """命名生成元的随机乘积"""
    pool = [H, P, GS, G, F, P3, shear(ONE), shear(parse_poly("u^-2+u^2"))]
    a = IDENTITY
    for index in rng.integers(0, len(pool), size=length):
        a = a @ pool[int(index)]
    return a


class TestValidation:
    """测试矩阵不变量检查"""

    def test_named_generators_are_valid(self, named_automata):
        """测试所有命名自动机都合法"""
        for name, a in named_automata.items():
            assert validate(a) == [], name
        assert validate(P) == []

    def test_determinant_violation(self):
        """测试行列式不为 1"""
        violations = validate(CscaMatrix(ONE, ONE, ONE, ONE))
        assert any("det" in v for v in violations)

    def test_palindrome_violation(self):
        """测试非回文矩阵元"""
        m = CscaMatrix(ONE, monomial(1), ZERO, ONE)
        assert any("a12" in v for v in validate(m))

    def test_inverse(self, named_automata):
        """测试 a·a^-1 = 1"""
        for a in named_automata.values():
            assert (a @ inverse(a)).is_identity()
        with pytest.raises(ValueError):
            inverse(CscaMatrix(ONE, ONE, ONE, ONE))


class TestPowers:
    """测试矩阵幂与周期"""

    def test_period_three(self):
        """测试 P3 的迹为 1 且三次幂为单位"""
        assert P3.trace() == ONE
        assert pow(P3, 3) == IDENTITY
        assert pow(P3, 1) != IDENTITY

    def test_period_two(self):
        """测试 H 与剪切的平方为单位"""
        assert pow(H, 2) == IDENTITY
        assert pow(shear(parse_poly("u^-1+u")), 2) == IDENTITY

    def test_power_zero_and_negative(self):
        """测试零次幂与负指数"""
        assert pow(GS, 0) == IDENTITY
        with pytest.raises(ValueError):
            pow(GS, -1)


class TestClassification:
    """测试按迹分类"""

    def test_glider_speed(self):
        """测试迹多项式给出的速度"""
        assert glider_speed(parse_poly("u^-1+u")) == 1
        assert glider_speed(parse_poly("u^-3+u^3")) == 3
        assert glider_speed(parse_poly("u^-1+1+u")) == 0
        assert glider_speed(ONE) == 0

    def test_named_kinds(self, named_automata):
        """测试命名自动机的类别"""
        assert classify(GS).summary() == "glider n=1 trace=u^-1+u"
        assert classify(G).speed == 1
        assert classify(named_automata["G^2"]).speed == 2
        assert classify(F).kind == AutomatonKind.FRACTAL
        assert classify(H).period == 2
        assert classify(named_automata["G1"]).period == 2
        assert classify(P3).period == 3

    def test_periodic_class_period_holds(self, named_automata):
        """测试周期类的周期与矩阵幂一致"""
        for a in named_automata.values():
            c = classify(a)
            if c.kind == AutomatonKind.PERIODIC:
                assert pow(a, c.period).is_identity()


class TestGliders:
    """测试极小滑翔子与由滑翔子重建自动机"""

    def test_minimal_gliders(self):
        """测试 Gs 与 G 的极小滑翔子"""
        assert minimal_glider(GS) == (parse_vector("(1 | u)"), 1)
        assert minimal_glider(G) == (parse_vector("(1+u | u)"), 1)

    def test_glider_pair(self):
        """测试反向滑翔子以 u^-n 平移"""
        xi, xb, n = glider_pair(G)
        assert apply(G, xb) == xb.scale(monomial(-n))
        assert apply(G, xi) == xi.scale(monomial(n))

    def test_no_glider_for_fractal(self):
        """测试分形类没有滑翔子"""
        with pytest.raises(ValueError, match="no gliders"):
            minimal_glider(F)

    def test_reconstruct_gs(self):
        """测试 (1, u) 速度 1 重建 Gs"""
        assert csca_from_glider(parse_vector("(1 | u)"), 1) == GS

    def test_reconstruct_speed_three(self):
        """测试速度 3 的滑翔子重建"""
        a = csca_from_glider(parse_vector("(1 | u+u^2)"), 3)
        assert a == parse_matrix("[[1; u^-1+1+u]; [u^-2+u^-1+u+u^2; u^-3+1+u^3]]")
        assert classify(a).speed == 3

    def test_reconstruct_rejects_wrong_speed(self):
        """测试楔积不整除 u^-n + u^n 时报错"""
        with pytest.raises(ValueError, match="not a valid glider"):
            csca_from_glider(parse_vector("(1 | u+u^2)"), 1)
        with pytest.raises(ValueError, match="not minimal"):
            csca_from_glider(parse_vector("(1+u | 1+u)"), 1)

    def test_round_trip_exhaustive(self):
        """测试小支撑向量的滑翔子重建与提取互逆"""
        found = 0
        for plus_mask in range(32):
            for minus_mask in range(32):
                xi = PhaseVector(LaurentPoly(plus_mask, 0), LaurentPoly(minus_mask, 0))
                if xi.is_zero():
                    continue
                for n in (1, 2, 3):
                    try:
                        a = csca_from_glider(xi, n)
                    except ValueError:
                        continue
                    found += 1
                    assert validate(a) == []
                    assert classify(a).speed == n
                    glider, speed = minimal_glider(a)
                    assert speed == n
                    assert same_up_to_unit(glider, xi)
        assert found >= 4


class TestConjugation:
    """测试共轭矩阵"""

    def test_conjugate_g_to_gs(self):
        """测试 b·G·b^-1 = Gs"""
        xi, _ = minimal_glider(G)
        b = conjugator_to_standard(xi)
        assert validate(b) == []
        assert b @ G @ inverse(b) == GS

    def test_conjugator_maps_vector(self):
        """测试 b·ξ = η"""
        xi = parse_vector("(1+u | u)")
        eta = parse_vector("(1 | u)")
        assert apply(conjugator(xi, eta), xi) == eta

    def test_speed_three_has_no_conjugator(self):
        """测试两个速度 3 滑翔子之间不可共轭"""
        with pytest.raises(ValueError, match="not divisible: b11"):
            conjugator(parse_vector("(1 | u+u^2)"), parse_vector("(1+u | u^2)"))

    def test_wedge_mismatch(self):
        """测试楔积不同的向量"""
        with pytest.raises(ValueError, match="different wedge"):
            conjugator(parse_vector("(1 | u)"), parse_vector("(1 | u+u^2)"))

    def test_standard_requires_speed_one(self):
        """测试非速度 1 的向量被拒绝"""
        with pytest.raises(ValueError, match="not a speed-1 glider"):
            conjugator_to_standard(parse_vector("(1 | u+u^2)"))


class TestInvarianceAndEigenvectors:
    """测试不变族与单项式本征向量"""

    def test_invariance_family_fixes_generator(self, yxy):
        """测试 a_ξ(a)·ξ = ξ 且为周期 2"""
        for a in (ONE, parse_poly("u^-1+u"), parse_poly("u^-2+1+u^2")):
            m = invariance_family(yxy, a)
            assert validate(m) == []
            assert apply(m, yxy) == yxy
            assert pow(m, 2) == IDENTITY

    def test_invariance_requires_palindrome(self, yxy):
        """测试参数必须是回文"""
        with pytest.raises(ValueError):
            invariance_family(yxy, parse_poly("1+u"))

    def test_monomial_eigenvectors_of_gs(self):
        """测试 Gs 的两个方向的滑翔子都被找到"""
        found = monomial_eigenvectors(GS, max_span=1, max_shift=1)
        assert (parse_vector("(1 | u)"), 1) in found
        assert (parse_vector("(u | 1)"), -1) in found

    def test_neighborhood_radius(self, named_automata):
        """测试邻域半径"""
        assert neighborhood_radius(GS) == 1
        assert neighborhood_radius(H) == 0
        assert neighborhood_radius(named_automata["G^2"]) == 2


class TestNamingAndParsing:
    """测试命名与文本解析"""

    def test_named_powers(self):
        """测试 "^k" 后缀与 G_n"""
        assert named("G^2") == G @ G
        assert named("Gn:2") == shear(parse_poly("u^-2+u^2"))
        with pytest.raises(ValueError):
            named("Gn:0")
        with pytest.raises(ValueError, match="unknown automaton"):
            named("Q")

    def test_format_and_parse(self):
        """测试矩阵文本格式"""
        assert format_matrix(GS) == "[[0; 1]; [1; u^-1+u]]"
        assert parse_automaton("[[0; 1]; [1; u^-1+u]]") == GS
        assert parse_automaton(" Gs ") == GS

    def test_parse_rejects_invalid(self):
        """测试非法矩阵与格式错误"""
        with pytest.raises(ValueError, match="invalid matrix"):
            parse_automaton("[[1; 1]; [1; 1]]")
        with pytest.raises(ValueError, match="ill formatted matrix"):
            parse_matrix("[[1; 1]]")

    def test_generators(self):
        """测试生成元集合"""
        gens = generators()
        assert gens["H"] == H
        assert gens["P"] == P
        assert gens["G_n"](1) == named("Gn:1")
        assert gens["shear"](ONE) == CscaMatrix(ONE, ZERO, ONE, ONE)
        assert gens["translation_power"](parse_vector("(1 | u)"), 2) == parse_vector("(u^2 | u^3)")


class TestAlgebraicIdentities:
    """测试迹、幂与共轭之间的代数关系"""

    def test_cayley_hamilton(self, named_automata):
        """测试 a² = tr(a)·a + 1"""
        rng = np.random.default_rng(3)
        samples = list(named_automata.values()) + [_random_automaton(rng, 4) for _ in range(30)]
        for a in samples:
            assert pow(a, 2) == a.scale(a.trace()) + IDENTITY

    @pytest.mark.parametrize("t", range(1, 9))
    def test_fractal_powers_stay_fractal(self, t):
        """测试 F 的各次幂仍为分形类"""
        assert classify(pow(F, t)).kind == AutomatonKind.FRACTAL

    def test_trace_invariant_under_conjugation(self, named_automata):
        """测试 b^-1·a·b 与 a 迹相同、类别相同"""
        rng = np.random.default_rng(17)
        for _ in range(40):
            b = _random_automaton(rng, int(rng.integers(1, 6)))
            assert validate(b) == []
            for a in named_automata.values():
                c = inverse(b) @ a @ b
                assert c.trace() == a.trace()
                assert classify(c) == classify(a)

    def test_fixed_vector_implies_period_two(self, named_automata):
        """测试存在不动向量的自动机平方为单位"""
        rng = np.random.default_rng(23)
        samples = list(named_automata.values()) + [_random_automaton(rng, 3) for _ in range(20)]
        checked = 0
        for a in samples:
            for xi, _ in monomial_eigenvectors(a, max_span=2, max_shift=0):
                assert apply(a, xi) == xi
                assert pow(a, 2) == IDENTITY
                checked += 1
        assert checked > 0

    def test_fractal_has_no_monomial_eigenvalue(self):
        """测试 F 没有单项式本征值"""
        assert monomial_eigenvectors(F, max_span=3, max_shift=3) == []
        assert monomial_eigenvectors(pow(F, 2), max_span=2, max_shift=2) == []

    def test_round_trip_random(self):
        """测试 1000 个随机共轭滑翔子自动机经由极小滑翔子重建后不变"""
        rng = np.random.default_rng(99)
        gliders = [GS, G, pow(G, 2), pow(GS, 3), csca_from_glider(parse_vector("(1 | u+u^2)"), 3)]
        for _ in range(1000):
            b = _random_automaton(rng, int(rng.integers(0, 4)))
            a = inverse(b) @ gliders[int(rng.integers(0, len(gliders)))] @ b
            xi, n = minimal_glider(a)
            assert n == classify(a).speed
            shift = int(rng.integers(-3, 4))
            assert csca_from_glider(xi.translate(shift), n) == a
