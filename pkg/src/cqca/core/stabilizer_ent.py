"""
平移不变纯稳定子态的纠缠

稳定子群由生成元 ξ 的所有平移生成。合法的生成元居中之后 max_deg = -min_deg = n，
半无限切割上的纠缠恰为 n 对最大纠缠比特，长度 L 的有限区域为 min(2n, L)。
pairing_oracle 通过切割处的平移生成元与其对易矩阵独立地数出纠缠对。
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence

import numpy as np

from cqca.core.csca import CscaMatrix, apply, format_matrix, inverse, neighborhood_radius, validate
from cqca.core.errors import InvariantViolation
from cqca.core.gf2poly import ONE, ZERO, LaurentPoly, divmod_poly, gcd
from cqca.core.pauli import (
    IDENTITY_WORD,
    PauliWord,
    apply_cqca,
    apply_inverse,
    expectation,
    letter_word,
    parse_word,
    phase_space,
    phase_value,
)
from cqca.core.symplectic import PhaseVector
from cqca.data.models import EntanglementRow, ProductState

logger = logging.getLogger(__name__)

MIN_RATE_HORIZON = 8
# 周期类的周期为 2 或 3，在 6 步滑动平均下恰好抵消
_SMOOTHING = 6


@dataclass(frozen=True, slots=True)
class StabilizerGenerator:
    """居中的合法稳定子生成元"""

    xi: PhaseVector

    @classmethod
    def from_vector(cls, xi: PhaseVector) -> "StabilizerGenerator":
        """
        校验并居中。

        :param xi: 任意平移位置的生成元
        :return: StabilizerGenerator
        """
        violations = validate_stabilizer(xi)
        if violations:
            raise ValueError(f"invalid stabilizer generator {xi}: {'; '.join(violations)}")
        return cls(centered(xi))

    @property
    def n(self) -> int:
        return self.xi.max_deg


def centered(xi: PhaseVector) -> PhaseVector:
    """
    平移使支撑关于 0 对称。

    :param xi: 非零向量，支撑长度为奇数
    :return: 居中后的向量
    """
    if xi.is_zero():
        raise ValueError("cannot center the zero vector")
    offset = xi.min_deg + xi.max_deg
    if offset % 2:
        raise ValueError(f"support of {xi} has even length")
    return xi.translate(-offset // 2)


def validate_stabilizer(xi: PhaseVector) -> List[str]:
    """
    检查生成元是否定义一个纯稳定子态：支撑长度为奇数、两个分量关于同一中心反射不变、
    中心格点非单位、两个分量互素。

    :param xi: 生成元
    :return: 违反项列表，空列表表示合法
    """
    if xi.is_zero():
        return ["zero vector"]
    violations = []
    if (xi.min_deg + xi.max_deg) % 2:
        violations.append("support has even length")
    else:
        c = centered(xi)
        if not (c.plus.is_centered_palindrome() and c.minus.is_centered_palindrome()):
            violations.append("components are not reflection invariant about a common center")
        if not (c.plus.coefficient(0) or c.minus.coefficient(0)):
            violations.append("central cell is the identity")
    if not gcd(xi.plus, xi.minus).is_monomial():
        violations.append("components have a common divisor")
    return violations


def from_word(text: str) -> StabilizerGenerator:
    """由只含字母的 Pauli 字构造生成元，例如 "YXY"，相位被忽略"""
    return StabilizerGenerator.from_vector(phase_space(parse_word(text)))


def random_generator(rng: np.random.Generator, max_half_length: int) -> StabilizerGenerator:
    """
    随机抽取 n ≤ max_half_length 的合法生成元（拒绝采样）。

    :param rng: numpy 随机数生成器
    :param max_half_length: n 的上限
    :return: 居中的合法生成元
    """
    if max_half_length < 0:
        raise ValueError("max_half_length must be non-negative")
    while True:
        n = int(rng.integers(0, max_half_length + 1))
        halves = rng.integers(0, 2, size=(2, n + 1))
        components = [
            LaurentPoly.from_exponents(k for j in range(n + 1) if half[j] for k in {-j, j}) for half in halves
        ]
        xi = PhaseVector(*components)
        if xi.is_zero() or xi.max_deg != n:
            continue
        if not validate_stabilizer(xi):
            return StabilizerGenerator(xi)


def entanglement_bipartite(xi: PhaseVector) -> int:
    """
    半无限切割上的纠缠对数 n。

    :param xi: 合法生成元
    :return: n
    """
    return StabilizerGenerator.from_vector(xi).n


def entanglement_finite_region(xi: PhaseVector, window: int) -> int:
    """
    长度 window 的连续区域与其余部分之间的纠缠对数 min(2n, L)。

    :param xi: 合法生成元
    :param window: 区域长度 L ≥ 1
    :return: 纠缠对数
    """
    if window < 1:
        raise ValueError("window must be positive")
    return min(2 * entanglement_bipartite(xi), window)


def evolve_entanglement(
    a: CscaMatrix, xi: PhaseVector, steps: int, window: Optional[int] = None
) -> List[int]:
    """
    纠缠随时间的演化，E(t) 由 a^t·ξ 重新居中后读出。

    :param a: 已校验的矩阵
    :param xi: 合法生成元
    :param steps: 时间步数 T ≥ 0
    :param window: 有限区域长度，缺省为半无限切割
    :return: 长度 steps + 1 的整数序列
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if window is not None and window < 1:
        raise ValueError("window must be positive")
    current = StabilizerGenerator.from_vector(xi).xi
    series = []
    for t in range(steps + 1):
        if t:
            current = centered(apply(a, current))
        n = current.max_deg
        series.append(n if window is None else min(2 * n, window))
    logger.debug(f"纠缠序列 (window={window}): {series}")
    return series


def entanglement_rows(
    a: CscaMatrix, xi: PhaseVector, steps: int, windows: Sequence[int] = ()
) -> List[EntanglementRow]:
    """
    stab-ent 输出用的完整时间序列。

    :param a: 已校验的矩阵
    :param xi: 合法生成元
    :param steps: 时间步数
    :param windows: 需要报告的有限区域长度
    :return: 每个时刻一行
    """
    bipartite = evolve_entanglement(a, xi, steps)
    return [
        EntanglementRow(t=t, n=n, e_bipartite=n, e_region={L: min(2 * n, L) for L in windows})
        for t, n in enumerate(bipartite)
    ]


def cut_translates(xi: PhaseVector) -> np.ndarray:
    """
    跨越格点 -1 与 0 之间切割的 2n 个平移生成元在左半部分 [-2n, -1] 上的限制。

    行 x + n 对应平移量 x ∈ [-n, n-1]；列为 [X 比特 | Z 比特]，各 2n 个格点。

    :param xi: 合法生成元
    :return: 2n × 4n 的 GF(2) 矩阵 (int8)
    """
    gen = StabilizerGenerator.from_vector(xi)
    n = gen.n
    rows = np.zeros((2 * n, 4 * n), dtype=np.int8)
    for i, x in enumerate(range(-n, n)):
        shifted = gen.xi.translate(x)
        for k in shifted.plus.support():
            if k < 0:
                rows[i, k + 2 * n] = 1
        for k in shifted.minus.support():
            if k < 0:
                rows[i, 2 * n + k + 2 * n] = 1
    return rows


def commutation_matrix(rows: np.ndarray) -> np.ndarray:
    """
    c_ij = σ(s_i, s_j)，即行向量之间的辛形式 mod 2。

    :param rows: [X 比特 | Z 比特] 布局的 GF(2) 矩阵
    :return: 对称、对角为零的 GF(2) 方阵
    """
    half = rows.shape[1] // 2
    plus, minus = rows[:, :half].astype(np.int64), rows[:, half:].astype(np.int64)
    return ((plus @ minus.T + minus @ plus.T) % 2).astype(np.int8)


def gf2_rank(matrix: np.ndarray) -> int:
    """GF(2) 上的 Gauss 消元求秩"""
    m = matrix.copy() % 2
    rank = 0
    for col in range(m.shape[1]):
        pivots = np.nonzero(m[rank:, col])[0]
        if pivots.size == 0:
            continue
        pivot = rank + pivots[0]
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in np.nonzero(m[:, col])[0]:
            if r != rank:
                m[r] ^= m[rank]
        rank += 1
        if rank == m.shape[0]:
            break
    return rank


def pairing_oracle(xi: PhaseVector) -> int:
    """
    独立计算最大纠缠对的个数。

    逐次选出编号最小的反对易行对 (i, j)，用它们清除其余各行与 i、j 的对易关系，
    直到剩下的行两两对易。反对易对的个数即纠缠对数。

    :param xi: 合法生成元
    :return: 纠缠对数，应等于 entanglement_bipartite(xi)
    """
    rows = cut_translates(xi)
    if rows.shape[0] == 0:
        return 0
    rank = gf2_rank(rows)
    if rank != rows.shape[0]:
        raise InvariantViolation(f"cut translates of {xi} are dependent: rank {rank} of {rows.shape[0]}")
    vectors = rows.copy()
    remaining = list(range(vectors.shape[0]))
    pairs = 0
    while remaining:
        c = commutation_matrix(vectors)
        i = remaining[0]
        partners = [j for j in remaining if c[i, j]]
        if not partners:
            remaining.remove(i)
            continue
        j = partners[0]
        remaining.remove(i)
        remaining.remove(j)
        for k in remaining:
            vectors[k] = (vectors[k] + c[k, j] * vectors[i] + c[k, i] * vectors[j]) % 2
        pairs += 1
    return pairs


def neighborhood_width(a: CscaMatrix) -> int:
    """单步作用下纠缠的最大变化量 2·r，r 为邻域半径"""
    return 2 * neighborhood_radius(a)


def entanglement_bound_ok(series: Sequence[int], a: CscaMatrix) -> bool:
    """
    检查 max(0, E(0) - w·t) ≤ E(t) ≤ E(0) + w·t，w = neighborhood_width(a)。
    """
    if not series:
        return True
    width = neighborhood_width(a)
    start = series[0]
    return all(max(0, start - width * t) <= e <= start + width * t for t, e in enumerate(series))


def _least_squares_slope(points: Sequence[tuple]) -> Fraction:
    count = len(points)
    mean_t = Fraction(sum(t for t, _ in points), count)
    mean_e = Fraction(sum(e for _, e in points), count)
    numerator = sum((t - mean_t) * (e - mean_e) for t, e in points)
    denominator = sum((t - mean_t) ** 2 for t, _ in points)
    return numerator / denominator


def asymptotic_rate(a: CscaMatrix, xi: PhaseVector, steps: int) -> Fraction:
    """
    纠缠增长率 ΔE/Δt 的估计，渐近值为 deg(tr a)。

    先做 6 步滑动平均，再对后半段做最小二乘拟合。

    :param a: 已校验的矩阵
    :param xi: 合法生成元
    :param steps: 时间步数 T ≥ 8
    :return: 精确有理数斜率
    """
    if steps < MIN_RATE_HORIZON:
        raise ValueError(f"asymptotic_rate needs at least {MIN_RATE_HORIZON} steps")
    series = evolve_entanglement(a, xi, steps)
    first = max(steps // 2, _SMOOTHING - 1)
    points = [
        (t, Fraction(sum(series[t - _SMOOTHING + 1 : t + 1]), _SMOOTHING))
        for t in range(first, steps + 1)
    ]
    rate = _least_squares_slope(points)
    logger.info(f"纠缠增长率估计: {rate}")
    return rate


# -- 稳定子态上的期望值 -------------------------------------------------------

ALL_SPINS_UP = ProductState(x=0.0, y=0.0, z=1.0)
Z_VECTOR = PhaseVector(ZERO, ONE)


def stabilizer_multiplier(xi: PhaseVector, eta: PhaseVector) -> Optional[LaurentPoly]:
    """
    求 c 使 η = c·ξ。

    :param xi: 非零生成元
    :param eta: 相空间向量
    :return: c，不存在时为 None
    """
    if eta.is_zero():
        return ZERO
    numerator, denominator = (eta.plus, xi.plus) if xi.plus else (eta.minus, xi.minus)
    quotient, remainder = divmod_poly(numerator, denominator)
    if remainder or xi.scale(quotient) != eta:
        return None
    return quotient


def stabilizer_element(gen: StabilizerGenerator, c: LaurentPoly) -> PauliWord:
    """稳定子群元素 ∏_{x ∈ supp c} w(τ^x ξ)，各因子为相位 +1 的字母字且两两对易"""
    element = IDENTITY_WORD
    for x in c.support():
        element = element @ letter_word(gen.xi.translate(x))
    return element


def stabilizer_expectation(gen: StabilizerGenerator, w: PauliWord) -> complex:
    """
    平移不变纯稳定子态上的期望值。

    w 的相空间向量是 ξ 的多项式倍数 c·ξ 时，w 与稳定子群元素只差一个相位，
    期望值即该相位；否则为 0。

    :param gen: 稳定子生成元
    :param w: Pauli 字
    :return: 0 或 i 的幂
    """
    c = stabilizer_multiplier(gen.xi, phase_space(w))
    if c is None:
        return 0j
    element = stabilizer_element(gen, c)
    return phase_value(w.phase_exponent - element.phase_exponent)


def stabilizer_expectation_timeseries(
    a: CscaMatrix, gen: StabilizerGenerator, w: PauliWord, steps: int
) -> List[complex]:
    """
    [stabilizer_expectation(gen, a^t·w) for t = 0..steps]

    :param a: 已校验的矩阵
    :param gen: 稳定子生成元
    :param w: 初始 Pauli 字
    :param steps: 时间步数 T ≥ 0
    :return: 复数列表，长度 steps + 1
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    values = []
    current = w
    for t in range(steps + 1):
        if t:
            current = apply_cqca(a, current)
        values.append(stabilizer_expectation(gen, current))
    logger.info(f"稳定子态期望值序列完成: {steps + 1} 个时刻, 最终支撑 {current.weight}")
    return values


def _centered_palindromes(max_degree: int) -> Iterator[LaurentPoly]:
    for coefficients in itertools.product((0, 1), repeat=max_degree + 1):
        exponents = [k for j, bit in enumerate(coefficients) if bit for k in {-j, j}]
        yield LaurentPoly.from_exponents(exponents)


def preparing_automaton(gen: StabilizerGenerator, max_degree: Optional[int] = None) -> CscaMatrix:
    """
    求把 Z_0 映为 w(ξ) 的自动机 b = [[b11, ξ+], [b21, ξ-]]。

    在 max_deg ≤ max_degree（缺省为 n）的中心回文多项式中穷举 b11、b21，
    使 b11·ξ- + b21·ξ+ = 1，按次数从低到高返回第一个解。

    :param gen: 稳定子生成元
    :param max_degree: b11、b21 的次数上限
    :return: 合法的 CSCA 矩阵
    """
    limit = gen.n if max_degree is None else max_degree
    xi = gen.xi
    for degree in range(limit + 1):
        for b11, b21 in itertools.product(_centered_palindromes(degree), repeat=2):
            if b11 * xi.minus + b21 * xi.plus != ONE:
                continue
            b = CscaMatrix(b11, xi.plus, b21, xi.minus)
            violations = validate(b)
            if violations:
                raise InvariantViolation(f"preparing automaton {b} is invalid: {'; '.join(violations)}")
            return b
    raise ValueError(f"no preparing automaton for {xi} with entries of degree <= {limit}")


def conjugated_expectation_timeseries(
    a: CscaMatrix,
    gen: StabilizerGenerator,
    w: PauliWord,
    steps: int,
    b: Optional[CscaMatrix] = None,
) -> List[complex]:
    """
    经由全部自旋向上的乘积态计算稳定子态的期望值序列。

    ω_ξ = ω_Z ∘ B^-1，因此 ω_ξ(a^t w) = ω_Z(c^t B^-1 w)，c = B^-1 a B 与 a 迹相同。
    结果与 stabilizer_expectation_timeseries 逐项相等。

    :param a: 已校验的矩阵
    :param gen: 稳定子生成元
    :param w: 初始 Pauli 字
    :param steps: 时间步数 T ≥ 0
    :param b: 把 Z_0 映为 ξ 某个平移的自动机，缺省由 preparing_automaton 求出
    :return: 复数列表，长度 steps + 1
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if b is None:
        b = preparing_automaton(gen)
    elif validate(b):
        raise ValueError(f"invalid matrix {format_matrix(b)}: {'; '.join(validate(b))}")
    elif centered(apply(b, Z_VECTOR)) != gen.xi:
        raise ValueError(f"automaton {format_matrix(b)} does not map Z to a translate of {gen.xi}")
    conjugated = inverse(b) @ a @ b
    if conjugated.trace() != a.trace():
        raise InvariantViolation(f"conjugation changed the trace: {conjugated.trace()} != {a.trace()}")
    logger.debug(f"共轭自动机 {format_matrix(conjugated)}")
    values = []
    current = apply_inverse(b, w)
    for t in range(steps + 1):
        if t:
            # 依次作用 B、a、B^-1，相位逐项精确
            current = apply_inverse(b, apply_cqca(a, apply_cqca(b, current)))
        values.append(expectation(ALL_SPINS_UP, current))
    return values
