"""
测试稳定子生成元的校验与纠缠演化
"""

from fractions import Fraction

import numpy as np
import pytest

from cqca.core.csca import (
    F,
    G,
    GS,
    H,
    IDENTITY,
    P,
    CscaMatrix,
    apply,
    g_n,
    invariance_family,
    named,
    shear,
    validate,
)
from cqca.core.errors import InvariantViolation
from cqca.core.gf2poly import ONE, LaurentPoly, monomial
from cqca.core.pauli import letter_word, parse_word, single
from cqca.core.stabilizer_ent import (
    StabilizerGenerator,
    asymptotic_rate,
    centered,
    commutation_matrix,
    conjugated_expectation_timeseries,
    cut_translates,
    entanglement_bipartite,
    entanglement_bound_ok,
    entanglement_finite_region,
    entanglement_rows,
    evolve_entanglement,
    from_word,
    gf2_rank,
    neighborhood_width,
    pairing_oracle,
    preparing_automaton,
    random_generator,
    stabilizer_expectation,
    stabilizer_expectation_timeseries,
    stabilizer_multiplier,
    validate_stabilizer,
)
from cqca.core.symplectic import PhaseVector, parse as parse_vector

WIDE = parse_vector("(u^-20+u^20 | 1)")


def _palindromic_generators(n):
    """穷举 max_deg = n 的合法居中生成元"""
    for plus_half in range(1 << (n + 1)):
        for minus_half in range(1 << (n + 1)):
            components = [
                LaurentPoly.from_exponents(k for j in range(n + 1) if half >> j & 1 for k in {-j, j})
                for half in (plus_half, minus_half)
            ]
            xi = PhaseVector(*components)
            if xi.is_zero() or xi.max_deg != n:
                continue
            if not validate_stabilizer(xi):
                yield xi


def _random_automaton(rng, length):
    """由命名生成元随机相乘得到的合法自动机"""
    pool = [H, P, GS, G, F, g_n(1), g_n(2), shear(ONE)]
    a = IDENTITY
    for index in rng.integers(0, len(pool), size=length):
        a = a @ pool[int(index)]
    return a


class TestGeneratorValidation:
    """测试生成元合法性"""

    def test_word_generators(self):
        """测试由字母串构造的生成元"""
        assert from_word("YXY").n == 1
        assert from_word("YXXXXXY").n == 3
        assert from_word("X").n == 0

    def test_centering(self):
        """测试居中"""
        gen = StabilizerGenerator.from_vector(parse_vector("(u^4+u^5+u^6 | u^4+u^6)"))
        assert gen.xi == parse_vector("(u^-1+1+u | u^-1+u)")
        with pytest.raises(ValueError, match="even length"):
            centered(parse_vector("(1+u | 0)"))

    def test_violations(self):
        """测试各类违反项"""
        assert validate_stabilizer(PhaseVector()) == ["zero vector"]
        assert "support has even length" in validate_stabilizer(parse_vector("(1 | u)"))
        assert "central cell is the identity" in validate_stabilizer(parse_vector("(u^-1+u | 0)"))
        assert "components have a common divisor" in validate_stabilizer(parse_vector("(u^-1+u | 0)"))
        assert (
            "components are not reflection invariant about a common center"
            in validate_stabilizer(parse_vector("(u^-1+u | 1+u)"))
        )

    def test_invalid_word_rejected(self):
        """测试非法生成元报错"""
        with pytest.raises(ValueError, match="invalid stabilizer generator"):
            from_word("XIX")

    def test_random_generator(self):
        """测试随机生成元合法且满足长度上限"""
        rng = np.random.default_rng(11)
        for _ in range(50):
            gen = random_generator(rng, 4)
            assert validate_stabilizer(gen.xi) == []
            assert gen.n <= 4

    def test_images_stay_valid(self):
        """测试随机 (a, ξ) 下 a·ξ 仍是合法生成元"""
        rng = np.random.default_rng(31)
        for _ in range(200):
            a = _random_automaton(rng, int(rng.integers(1, 5)))
            assert validate(a) == []
            xi = random_generator(rng, 4).xi
            for _ in range(3):
                xi = apply(a, xi)
                assert validate_stabilizer(xi) == []


class TestEntanglement:
    """测试纠缠读数与时间演化"""

    def test_bipartite_and_region(self):
        """测试半无限切割与有限区域"""
        assert entanglement_bipartite(WIDE) == 20
        assert entanglement_finite_region(WIDE, 30) == 30
        assert entanglement_finite_region(WIDE, 50) == 40
        with pytest.raises(ValueError):
            entanglement_finite_region(WIDE, 0)

    def test_glider_growth(self, yxy):
        """测试 G 下纠缠每步增加 1"""
        assert evolve_entanglement(G, yxy, 5) == [1, 2, 3, 4, 5, 6]
        assert evolve_entanglement(GS, yxy, 0) == [1]

    def test_periodic_alternation(self, yxy):
        """测试剪切自动机下纠缠在 1 与 2 之间交替"""
        shear = named("Gn:1")
        assert evolve_entanglement(shear, yxy, 5) == [1, 2, 1, 2, 1, 2]
        assert evolve_entanglement(shear, yxy, 3, window=30) == [2, 4, 2, 4]

    def test_region_saturates(self, yxy):
        """测试有限区域纠缠在 L 处饱和"""
        series = evolve_entanglement(G, yxy, 20, window=10)
        assert max(series) == 10
        assert series[-1] == 10

    def test_rows(self, yxy):
        """测试输出行"""
        rows = entanglement_rows(G, yxy, 2, windows=[3])
        assert [row.n for row in rows] == [1, 2, 3]
        assert [row.e_region[3] for row in rows] == [2, 3, 3]

    def test_negative_arguments(self, yxy):
        """测试非法步数与窗口"""
        with pytest.raises(ValueError):
            evolve_entanglement(G, yxy, -1)
        with pytest.raises(ValueError):
            evolve_entanglement(G, yxy, 3, window=0)


class TestRates:
    """测试纠缠增长率"""

    def test_glider_rates(self, yxy):
        """测试滑翔子自动机的增长率等于速度"""
        assert asymptotic_rate(G, yxy, 20) == 1
        assert asymptotic_rate(named("G^2"), yxy, 20) == 2

    def test_periodic_rate_is_zero(self, yxy):
        """测试周期类增长率为 0"""
        assert asymptotic_rate(named("Gn:1"), yxy, 24) == 0
        assert asymptotic_rate(named("P3"), yxy, 24) == 0

    def test_fractal_rate(self, yxy):
        """测试分形自动机的增长率等于迹的次数"""
        rate = asymptotic_rate(F, yxy, 20)
        assert isinstance(rate, Fraction)
        assert rate == 1
        assert asymptotic_rate(F, yxy, 40) == 1

    def test_exact_step_differences(self, yxy):
        """测试 G、G²、F 下每一步的纠缠增量"""
        assert evolve_entanglement(G, yxy, 20) == list(range(1, 22))
        assert evolve_entanglement(named("G^2"), yxy, 20) == list(range(1, 42, 2))
        assert evolve_entanglement(F, yxy, 40) == list(range(1, 42))

    def test_measured_slope_between_10_and_20(self, yxy):
        """测试 t ∈ [10, 20] 上的 ΔE/Δt"""
        expected = {"G": 1, "G^2": 2, "F": 1, "Gn:1": 0}
        for key, slope in expected.items():
            series = evolve_entanglement(named(key), yxy, 20)
            assert Fraction(series[20] - series[10], 10) == slope, key

    def test_short_horizon(self, yxy):
        """测试步数过少"""
        with pytest.raises(ValueError, match="at least"):
            asymptotic_rate(G, yxy, 7)

    def test_bound(self, yxy):
        """测试纠缠变化受邻域宽度限制"""
        assert neighborhood_width(G) == 2
        for a in (G, F, named("G^2")):
            assert entanglement_bound_ok(evolve_entanglement(a, yxy, 15), a)
        assert not entanglement_bound_ok([1, 5], G)
        assert entanglement_bound_ok([], G)


class TestPairingOracle:
    """测试通过切割处的对易矩阵独立计数纠缠对"""

    def test_cut_translates_for_yxy(self, yxy):
        """测试 YXY 的切割矩阵"""
        rows = cut_translates(yxy)
        assert rows.tolist() == [[1, 1, 1, 0], [0, 1, 0, 1]]
        assert commutation_matrix(rows).tolist() == [[0, 1], [1, 0]]

    def test_gf2_rank(self):
        """测试 GF(2) 秩"""
        assert gf2_rank(np.eye(3, dtype=np.int8)) == 3
        assert gf2_rank(np.array([[1, 1], [1, 1]], dtype=np.int8)) == 1
        assert gf2_rank(np.array([[1, 1, 0], [0, 1, 1], [1, 0, 1]], dtype=np.int8)) == 2

    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_exhaustive_small(self, n):
        """测试 n ≤ 4 的所有生成元的计数等于 n"""
        count = 0
        for xi in _palindromic_generators(n):
            assert pairing_oracle(xi) == n
            assert pairing_oracle(xi) == entanglement_bipartite(xi)
            count += 1
        assert count > 0

    def test_random_generators(self):
        """测试 500 个 n ≤ 6 的随机生成元的计数等于 n"""
        rng = np.random.default_rng(2024)
        for _ in range(500):
            gen = random_generator(rng, 6)
            assert pairing_oracle(gen.xi) == gen.n

    def test_cut_translates_are_independent(self):
        """测试切割处的平移生成元满秩"""
        rng = np.random.default_rng(5)
        for _ in range(50):
            gen = random_generator(rng, 6)
            rows = cut_translates(gen.xi)
            assert gf2_rank(rows) == rows.shape[0] == 2 * gen.n

    def test_dependent_rows_rejected(self, yxy, monkeypatch):
        """测试秩不足时报告内部错误"""
        monkeypatch.setattr("cqca.core.stabilizer_ent.gf2_rank", lambda rows: rows.shape[0] - 1)
        with pytest.raises(InvariantViolation, match="dependent"):
            pairing_oracle(yxy)

    def test_evolved_generators(self, yxy):
        """测试演化后的生成元"""
        xi = yxy
        for _ in range(4):
            xi = apply(F, xi)
            assert pairing_oracle(xi) == entanglement_bipartite(xi)



class TestStabilizerExpectation:
    """测试平移不变纯稳定子态上的期望值"""

    def test_multiplier(self, yxy):
        """测试 η = c·ξ 的求解"""
        assert stabilizer_multiplier(yxy, yxy.scale(ONE + monomial(1))) == ONE + monomial(1)
        assert stabilizer_multiplier(yxy, PhaseVector()).is_zero()
        assert stabilizer_multiplier(yxy, parse_vector("(1 | 0)")) is None
        assert stabilizer_multiplier(parse_vector("(0 | 1)"), parse_vector("(0 | u^3)")) == monomial(3)

    def test_generator_and_products(self):
        """测试生成元及其乘积的期望值为精确相位"""
        gen = from_word("YXY")
        assert stabilizer_expectation(gen, letter_word(gen.xi)) == 1
        assert stabilizer_expectation(gen, letter_word(gen.xi, 2)) == -1
        assert stabilizer_expectation(gen, parse_word("-1:Y 0:Z 1:Z 2:Y")) == 1
        assert stabilizer_expectation(gen, parse_word("-1 -1:Y 0:Z 1:Z 2:Y")) == -1
        assert stabilizer_expectation(gen, parse_word("I")) == 1

    def test_non_stabilizer_words_vanish(self):
        """测试不在稳定子群中的字期望值为 0"""
        gen = from_word("YXY")
        assert stabilizer_expectation(gen, single(0, "X")) == 0
        assert stabilizer_expectation(gen, parse_word("0:Y 1:X")) == 0

    def test_spin_up_state_fixed_by_shear(self):
        """测试剪切自动机固定全部自旋向上的态"""
        gen = from_word("Z")
        for word in ("Z", "0:Z 3:Z"):
            values = stabilizer_expectation_timeseries(g_n(1), gen, parse_word(word), 12)
            assert values == [1] * 13

    def test_invariance_family_keeps_expectation(self, yxy):
        """测试不变族自动机下生成元的期望值保持模 1"""
        gen = from_word("YXY")
        a = invariance_family(yxy, ONE)
        values = stabilizer_expectation_timeseries(a, gen, letter_word(yxy), 10)
        assert [abs(v) for v in values] == [1] * 11

    def test_fractal_decays(self, yxy):
        """测试同一个态在 F 下从第一步起期望值为 0"""
        gen = from_word("YXY")
        assert stabilizer_expectation_timeseries(F, gen, letter_word(yxy), 8) == [1] + [0] * 8
        assert stabilizer_expectation_timeseries(G, gen, letter_word(yxy), 8) == [1] + [0] * 8

    def test_negative_steps(self):
        """测试负步数"""
        with pytest.raises(ValueError):
            stabilizer_expectation_timeseries(G, from_word("Z"), single(0, "Z"), -1)
        with pytest.raises(ValueError):
            conjugated_expectation_timeseries(G, from_word("Z"), single(0, "Z"), -1)


class TestPreparingAutomaton:
    """测试把全部自旋向上的态映为稳定子态的自动机"""

    def test_yxy(self, yxy):
        """测试 YXY 的制备自动机"""
        b = preparing_automaton(from_word("YXY"))
        assert b == CscaMatrix(ONE, yxy.plus, ONE, yxy.minus)
        assert validate(b) == []
        assert apply(b, parse_vector("(0 | 1)")) == yxy

    def test_spin_up_needs_no_preparation(self):
        """测试 Z 生成元对应单位矩阵"""
        assert preparing_automaton(from_word("Z")) == IDENTITY

    @pytest.mark.parametrize("n", [0, 1])
    def test_small_generators(self, n):
        """测试 n ≤ 1 的所有生成元都有常数矩阵元的制备自动机"""
        for xi in _palindromic_generators(n):
            gen = StabilizerGenerator(xi)
            b = preparing_automaton(gen, max_degree=0)
            assert validate(b) == []
            assert centered(apply(b, parse_vector("(0 | 1)"))) == gen.xi

    @pytest.mark.parametrize("key", ["G", "F", "Gs", "invariance"])
    @pytest.mark.parametrize("word", ["-1:Y 0:X 1:Y", "0:X 1:Z", "-1:Y 0:Z 1:Z 2:Y"])
    def test_conjugated_path_matches(self, yxy, key, word):
        """测试经由全部自旋向上态的计算与直接计算逐项相等"""
        a = invariance_family(yxy, ONE) if key == "invariance" else named(key)
        gen = from_word("YXY")
        w = parse_word(word)
        direct = stabilizer_expectation_timeseries(a, gen, w, 6)
        assert conjugated_expectation_timeseries(a, gen, w, 6) == pytest.approx(direct)

    def test_explicit_conjugator(self, yxy):
        """测试显式给出的 B"""
        gen = from_word("YXY")
        b = CscaMatrix(ONE, yxy.plus, ONE, yxy.minus)
        w = letter_word(yxy)
        assert conjugated_expectation_timeseries(F, gen, w, 4, b=b) == pytest.approx([1, 0, 0, 0, 0])

    def test_rejects_bad_conjugator(self):
        """测试非法或不匹配的 B"""
        gen = from_word("YXY")
        w = single(0, "X")
        with pytest.raises(ValueError, match="invalid matrix"):
            conjugated_expectation_timeseries(G, gen, w, 2, b=CscaMatrix(ONE, ONE, ONE, ONE))
        with pytest.raises(ValueError, match="does not map Z"):
            conjugated_expectation_timeseries(G, gen, w, 2, b=IDENTITY)
