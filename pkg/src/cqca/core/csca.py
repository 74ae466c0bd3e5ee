"""
中心化辛元胞自动机（CSCA）

每个 CQCA 在相差一个相位的意义下由一个 2×2 Laurent 多项式矩阵表示。
本模块实现矩阵的校验、复合、按迹分类、滑翔子代数、共轭变换、
稳定子不变族以及命名生成元。
"""

import itertools
import logging
import re
from dataclasses import dataclass
from typing import Iterator, List, Tuple

from cqca.core.errors import InvariantViolation
from cqca.core.gf2poly import (
    ONE,
    ZERO,
    LaurentPoly,
    div_exact,
    divides,
    gcd,
    monomial,
    parse as parse_poly,
)
from cqca.core.symplectic import PhaseVector, is_minimal, wedge
from cqca.data.models import AutomatonKind, Classification

logger = logging.getLogger(__name__)

_MATRIX_PATTERN = re.compile(r"^\[\[([^;\]]+);([^;\]]+)\];\[([^;\]]+);([^;\]]+)\]\]$")
_POWER_PATTERN = re.compile(r"^(.+)\^(\d+)$")


@dataclass(frozen=True, slots=True)
class CscaMatrix:
    """
    2×2 矩阵 [[a11, a12], [a21, a22]]

    第一列是 X 的像，第二列是 Z 的像。
    """

    a11: LaurentPoly
    a12: LaurentPoly
    a21: LaurentPoly
    a22: LaurentPoly

    def entries(self) -> Tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
        return (self.a11, self.a12, self.a21, self.a22)

    def det(self) -> LaurentPoly:
        return self.a11 * self.a22 + self.a12 * self.a21

    def trace(self) -> LaurentPoly:
        return self.a11 + self.a22

    def column(self, j: int) -> PhaseVector:
        """第 j 列（0: X 的像，1: Z 的像）"""
        if j == 0:
            return PhaseVector(self.a11, self.a21)
        if j == 1:
            return PhaseVector(self.a12, self.a22)
        raise IndexError(f"column index {j} out of range")

    def is_identity(self) -> bool:
        return self == IDENTITY

    def __matmul__(self, other: "CscaMatrix") -> "CscaMatrix":
        if not isinstance(other, CscaMatrix):
            return NotImplemented
        return CscaMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def scale(self, factor: LaurentPoly) -> "CscaMatrix":
        return CscaMatrix(*(factor * e for e in self.entries()))

    def __add__(self, other: "CscaMatrix") -> "CscaMatrix":
        if not isinstance(other, CscaMatrix):
            return NotImplemented
        return CscaMatrix(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __str__(self) -> str:
        return f"[[{self.a11}; {self.a12}]; [{self.a21}; {self.a22}]]"


IDENTITY = CscaMatrix(ONE, ZERO, ZERO, ONE)


def validate(m: CscaMatrix) -> List[str]:
    """
    检查 CSCA 的全部不变量。

    :param m: 待检查的矩阵
    :return: 违反项列表，空列表表示合法
    """
    violations = []
    det = m.det()
    if det != ONE:
        violations.append(f"det = {det} != 1")
    for name, entry in zip(("a11", "a12", "a21", "a22"), m.entries()):
        if not entry.is_centered_palindrome():
            violations.append(f"entry {name} = {entry} is not a centered palindrome")
    for j in (0, 1):
        col = m.column(j)
        if col.is_zero() or not gcd(col.plus, col.minus).is_monomial():
            violations.append(f"column {j + 1} entries are not coprime")
    return violations


def mul(a: CscaMatrix, b: CscaMatrix) -> CscaMatrix:
    return a @ b


def pow(a: CscaMatrix, t: int) -> CscaMatrix:
    """
    矩阵幂，反复平方。

    :param a: 矩阵
    :param t: 非负整数
    :return: a^t，t = 0 时为单位矩阵
    """
    if t < 0:
        raise ValueError("exponent must be non-negative")
    result, base = IDENTITY, a
    while t:
        if t & 1:
            result = result @ base
        base = base @ base
        t >>= 1
    return result


def apply(a: CscaMatrix, xi: PhaseVector) -> PhaseVector:
    """相空间中的作用 a·ξ"""
    return PhaseVector(
        a.a11 * xi.plus + a.a12 * xi.minus,
        a.a21 * xi.plus + a.a22 * xi.minus,
    )


def trace(a: CscaMatrix) -> LaurentPoly:
    return a.trace()


def inverse(a: CscaMatrix) -> CscaMatrix:
    """det = 1 时的逆矩阵 [[a22, a12], [a21, a11]]"""
    if a.det() != ONE:
        raise ValueError("inverse requires det = 1")
    return CscaMatrix(a.a22, a.a12, a.a21, a.a11)


def glider_speed(tr: LaurentPoly) -> int:
    """
    迹为 u^-n + u^n 时返回 n，否则返回 0。

    :param tr: 迹多项式
    :return: 滑翔子速度或 0
    """
    if tr.weight() != 2:
        return 0
    low, high = tr.support()
    if low == -high and high >= 1:
        return high
    return 0


def classify(a: CscaMatrix) -> Classification:
    """
    按迹分类：常数迹为周期类（周期 c+2），u^-n+u^n 为滑翔类，其余为分形类。

    :param a: 已校验的矩阵
    :return: Classification
    """
    tr = a.trace()
    if tr == ZERO:
        result = Classification(kind=AutomatonKind.PERIODIC, period=2, trace=str(tr))
    elif tr == ONE:
        result = Classification(kind=AutomatonKind.PERIODIC, period=3, trace=str(tr))
    elif speed := glider_speed(tr):
        result = Classification(kind=AutomatonKind.GLIDER, speed=speed, trace=str(tr))
    else:
        result = Classification(kind=AutomatonKind.FRACTAL, trace=str(tr))
    logger.debug(f"分类 {a}: {result.summary()}")
    return result


def minimal_glider(a: CscaMatrix) -> Tuple[PhaseVector, int]:
    """
    滑翔子自动机的极小滑翔子。

    ξ = (a12/g, (u^n + a11)/g)，g = gcd(u^n + a11, a12)；a12 = 0 时改用第二行。

    :param a: 滑翔类矩阵
    :return: (规范化的 ξ, n)，满足 a·ξ = u^n·ξ
    """
    classification = classify(a)
    if classification.kind != AutomatonKind.GLIDER or classification.speed is None:
        raise ValueError(f"no gliders: automaton is {classification.kind}")
    n = classification.speed
    un = monomial(n)
    if a.a12:
        g = gcd(un + a.a11, a.a12)
        xi = PhaseVector(div_exact(a.a12, g), div_exact(un + a.a11, g))
    else:
        g = gcd(un + a.a22, a.a21)
        xi = PhaseVector(div_exact(un + a.a22, g), div_exact(a.a21, g))
    xi = xi.normalized()
    if apply(a, xi) != xi.scale(un):
        raise InvariantViolation(f"reconstructed glider {xi} is not an eigenvector of {a}")
    return xi, n


def glider_pair(a: CscaMatrix) -> Tuple[PhaseVector, PhaseVector, int]:
    """
    正向与反向极小滑翔子。

    :param a: 滑翔类矩阵
    :return: (ξ, ξ̄, n)，a·ξ̄ = u^-n·ξ̄
    """
    xi, n = minimal_glider(a)
    return xi, xi.bar(), n


def csca_from_glider(xi: PhaseVector, n: int) -> CscaMatrix:
    """
    由极小滑翔子与速度唯一确定的 CSCA。

    :param xi: 极小相空间向量
    :param n: 速度，正整数
    :return: 以 ξ 为速度 n 滑翔子的矩阵
    """
    if n < 1:
        raise ValueError("glider speed must be positive")
    if xi.is_zero() or not is_minimal(xi):
        raise ValueError(f"glider vector {xi} is not minimal")
    xb = xi.bar()
    w = wedge(xi, xb)
    un, um = monomial(n), monomial(-n)
    if w.is_zero() or not divides(w, un + um):
        raise ValueError(f"not a valid glider for speed {n}: wedge {w}")
    try:
        a = CscaMatrix(
            div_exact(un * xi.plus * xb.minus + um * xb.plus * xi.minus, w),
            div_exact((un + um) * xi.plus * xb.plus, w),
            div_exact((un + um) * xi.minus * xb.minus, w),
            div_exact(um * xi.plus * xb.minus + un * xb.plus * xi.minus, w),
        )
    except ValueError as e:
        raise ValueError(f"not a valid glider for speed {n}: {e}") from e
    violations = validate(a)
    if violations:
        raise InvariantViolation(f"glider matrix for {xi} is invalid: {violations}")
    if apply(a, xi) != xi.scale(un):
        raise InvariantViolation(f"glider matrix does not translate {xi} by u^{n}")
    return a


def conjugator(xi: PhaseVector, eta: PhaseVector) -> CscaMatrix:
    """
    求解 b·ξ = η（同时 b·ξ̄ = η̄）的 CSCA b。

    两个向量必须有相同的 ξ∧ξ̄；b 的矩阵元需要在 R 中整除，否则无解。

    :param xi: 起点向量
    :param eta: 目标向量
    :return: 满足条件的矩阵 b
    """
    xb, eb = xi.bar(), eta.bar()
    w = wedge(xi, xb)
    if w.is_zero():
        raise ValueError(f"wedge of {xi} with its reflection vanishes")
    if wedge(eta, eb) != w:
        raise ValueError(f"vectors {xi} and {eta} have different wedge products")
    numerators = (
        eta.plus * xb.minus + eb.plus * xi.minus,
        xi.plus * eb.plus + xb.plus * eta.plus,
        eta.minus * xb.minus + eb.minus * xi.minus,
        xi.plus * eb.minus + xb.plus * eta.minus,
    )
    entries = []
    for name, numerator in zip(("b11", "b12", "b21", "b22"), numerators):
        if not divides(w, numerator):
            raise ValueError(f"not divisible: {name} has no solution in R for {xi} -> {eta}")
        entries.append(div_exact(numerator, w))
    b = CscaMatrix(*entries)
    violations = validate(b)
    if violations:
        raise InvariantViolation(f"conjugator for {xi} -> {eta} is invalid: {violations}")
    if apply(b, xi) != eta:
        raise InvariantViolation(f"conjugator does not map {xi} to {eta}")
    return b


STANDARD_GLIDER = PhaseVector(ONE, monomial(1))


def conjugator_to_standard(xi: PhaseVector) -> CscaMatrix:
    """
    把速度 1 的极小滑翔子映到 (1, u) 的 CSCA。

    :param xi: ξ∧ξ̄ = u^-1 + u 的极小向量
    :return: b，b·ξ = (1, u)
    """
    if xi.is_zero() or not is_minimal(xi):
        raise ValueError(f"not a speed-1 glider: {xi} is not minimal")
    if wedge(xi, xi.bar()) != monomial(-1) + monomial(1):
        raise ValueError(f"not a speed-1 glider: wedge of {xi} is {wedge(xi, xi.bar())}")
    return conjugator(xi, STANDARD_GLIDER)


def invariance_family(xi: PhaseVector, a: LaurentPoly) -> CscaMatrix:
    """
    固定稳定子生成元 ξ 的周期 2 自动机族 a_ξ(a)。

    :param xi: 稳定子生成元
    :param a: 中心回文多项式
    :return: [[1+aξ+ξ-, aξ+²], [aξ-², 1+aξ+ξ-]]
    """
    if not a.is_centered_palindrome():
        raise ValueError(f"invariance parameter {a} is not a centered palindrome")
    diag = ONE + a * xi.plus * xi.minus
    return CscaMatrix(diag, a * xi.plus * xi.plus, a * xi.minus * xi.minus, diag)


def monomial_eigenvectors(
    a: CscaMatrix, max_span: int, max_shift: int
) -> List[Tuple[PhaseVector, int]]:
    """
    穷举搜索单项式本征值 u^k 的本征向量。

    搜索所有指数位于 [0, max_span] 且最低指数为 0 的非零 ξ，以及 |k| ≤ max_shift。

    :param a: 矩阵
    :param max_span: 指数跨度上限
    :param max_shift: 本征值指数上限
    :return: (ξ, k) 列表
    """
    found = []
    for xi in _anchored_vectors(max_span):
        image = apply(a, xi)
        for k in range(-max_shift, max_shift + 1):
            if image == xi.scale(monomial(k)):
                found.append((xi, k))
    return found


def _anchored_vectors(max_span: int) -> Iterator[PhaseVector]:
    size = 1 << (max_span + 1)
    for plus_mask, minus_mask in itertools.product(range(size), repeat=2):
        if not (plus_mask | minus_mask) & 1:
            continue
        yield PhaseVector(LaurentPoly(plus_mask, 0), LaurentPoly(minus_mask, 0))


def neighborhood_radius(a: CscaMatrix) -> int:
    """矩阵元中绝对值最大的指数"""
    radius = 0
    for entry in a.entries():
        if entry:
            radius = max(radius, abs(entry.min_deg), abs(entry.max_deg))
    return radius


# -- 命名生成元 -------------------------------------------------------------

S = monomial(-1) + monomial(1)

H = CscaMatrix(ONE, ZERO, ONE, ONE)
P = CscaMatrix(ZERO, ONE, ONE, ZERO)
GS = CscaMatrix(ZERO, ONE, ONE, S)
G = CscaMatrix(ONE, S, ONE, S + ONE)
F = CscaMatrix(S + ONE, ONE, ONE, ZERO)
P3 = CscaMatrix(ONE, ONE, ONE, ZERO)


def shear(a: LaurentPoly) -> CscaMatrix:
    """下三角剪切 [[1, 0], [a, 1]]"""
    if not a.is_centered_palindrome():
        raise ValueError(f"shear parameter {a} is not a centered palindrome")
    return CscaMatrix(ONE, ZERO, a, ONE)


def g_n(n: int) -> CscaMatrix:
    """G_n = shear(u^n + u^-n)"""
    if n < 1:
        raise ValueError("G_n requires n >= 1")
    return shear(monomial(n) + monomial(-n))


NAMED_AUTOMATA = {
    "Gs": GS,
    "G": G,
    "F": F,
    "H": H,
    "P": P,
    "P3": P3,
}


def generators() -> dict:
    """命名生成元集合；G_n 与平移以函数形式给出"""
    return {
        "H": H,
        "P": P,
        "shear": shear,
        "G_n": g_n,
        "translation_power": lambda xi, k: xi.translate(k),
    }


def named(key: str) -> CscaMatrix:
    """
    按名称取自动机："Gs"、"G"、"F"、"H"、"P"、"P3"、"Gn:<n>"，可加后缀 "^k" 表示幂。

    :param key: 名称
    :return: 矩阵
    """
    key = key.strip()
    power = _POWER_PATTERN.match(key)
    if power and not key.startswith("[["):
        return pow(named(power.group(1)), int(power.group(2)))
    if key in NAMED_AUTOMATA:
        return NAMED_AUTOMATA[key]
    if key.startswith("Gn:"):
        try:
            n = int(key[3:])
        except ValueError as e:
            raise ValueError(f"invalid G_n index in '{key}'") from e
        return g_n(n)
    raise ValueError(f"unknown automaton '{key}'")


def parse_matrix(text: str) -> CscaMatrix:
    """
    解析 "[[p11; p12]; [p21; p22]]" 形式的矩阵文本。

    :param text: 矩阵文本
    :return: 矩阵（未校验）
    """
    compact = "".join(text.split())
    match = _MATRIX_PATTERN.match(compact)
    if match is None:
        raise ValueError(f"ill formatted matrix: '{text}'")
    return CscaMatrix(*(parse_poly(group) for group in match.groups()))


def parse_automaton(text: str) -> CscaMatrix:
    """命名自动机或矩阵文本；结果必须通过校验"""
    text = text.strip()
    m = parse_matrix(text) if text.startswith("[") else named(text)
    violations = validate(m)
    if violations:
        raise ValueError(f"invalid matrix {m}: {'; '.join(violations)}")
    return m


def format_matrix(a: CscaMatrix) -> str:
    return str(a)
