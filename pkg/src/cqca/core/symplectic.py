"""
相空间向量

ξ = (ξ+, ξ-) 表示一类平移不变的 Pauli 乘积：ξ+ 为 X 分量，ξ- 为 Z 分量。
本模块提供多项式值的楔积、对合、平移与极小性判定。
"""

import logging
from dataclasses import dataclass

from cqca.core.gf2poly import ONE, ZERO, LaurentPoly, gcd, monomial, parse as parse_poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PhaseVector:
    """相空间向量 (ξ+, ξ-)"""

    plus: LaurentPoly = ZERO
    minus: LaurentPoly = ZERO

    def is_zero(self) -> bool:
        return self.plus.is_zero() and self.minus.is_zero()

    def __add__(self, other: "PhaseVector") -> "PhaseVector":
        if not isinstance(other, PhaseVector):
            return NotImplemented
        return PhaseVector(self.plus + other.plus, self.minus + other.minus)

    def scale(self, factor: LaurentPoly) -> "PhaseVector":
        """分量同乘一个 Laurent 多项式"""
        return PhaseVector(factor * self.plus, factor * self.minus)

    def bar(self) -> "PhaseVector":
        return PhaseVector(self.plus.bar(), self.minus.bar())

    def translate(self, k: int) -> "PhaseVector":
        return PhaseVector(self.plus.shift(k), self.minus.shift(k))

    @property
    def min_deg(self) -> int:
        """两个分量中最低的指数"""
        degrees = [c.min_deg for c in (self.plus, self.minus) if c]
        if not degrees:
            raise ValueError("zero polynomial")
        return min(degrees)

    @property
    def max_deg(self) -> int:
        """两个分量中最高的指数"""
        degrees = [c.max_deg for c in (self.plus, self.minus) if c]
        if not degrees:
            raise ValueError("zero polynomial")
        return max(degrees)

    def normalized(self) -> "PhaseVector":
        """平移使最低指数为 0，作为单位等价类的代表元"""
        if self.is_zero():
            return self
        return self.translate(-self.min_deg)

    def __str__(self) -> str:
        return f"({self.plus} | {self.minus})"


X_VECTOR = PhaseVector(ONE, ZERO)
Z_VECTOR = PhaseVector(ZERO, ONE)


def wedge(xi: PhaseVector, eta: PhaseVector) -> LaurentPoly:
    """
    楔积 ξ∧η = ξ+η- + η+ξ-（特征 2 下对称）

    :param xi: 相空间向量
    :param eta: 相空间向量
    :return: Laurent 多项式
    """
    return xi.plus * eta.minus + eta.plus * xi.minus


def bar(xi: PhaseVector) -> PhaseVector:
    return xi.bar()


def translate(xi: PhaseVector, k: int) -> PhaseVector:
    return xi.translate(k)


def is_minimal(xi: PhaseVector) -> bool:
    """
    两个分量没有非单位公因子时为极小向量。

    :param xi: 非零相空间向量
    :return: gcd(ξ+, ξ-) 是否为单项式
    """
    if xi.is_zero():
        raise ValueError("is_minimal undefined for the zero vector")
    return gcd(xi.plus, xi.minus).is_monomial()


def same_up_to_unit(xi: PhaseVector, eta: PhaseVector) -> bool:
    """两个向量是否只差一个单项式因子"""
    return xi.normalized() == eta.normalized()


def monomial_multiple(xi: PhaseVector, k: int) -> PhaseVector:
    """u^k · ξ"""
    return xi.scale(monomial(k))


def parse(text: str) -> PhaseVector:
    """
    解析 "(p | m)" 形式的文本，括号可省略。

    :param text: 两个多项式以 "|" 分隔
    :return: 相空间向量
    """
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split("|")
    if len(parts) != 2:
        raise ValueError(f"ill formatted phase vector: '{text}'")
    return PhaseVector(parse_poly(parts[0]), parse_poly(parts[1]))
