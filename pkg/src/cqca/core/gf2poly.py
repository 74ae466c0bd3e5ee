"""
GF(2) 上的 Laurent 多项式

这个模块实现环 P = GF(2)[u, u^-1] 的精确算术以及其回文子环 R。
系数以 Python 整数的比特位存储：第 i 位对应 u^(min_deg + i)。
所有值在构造后不可变，运算都是纯函数。
"""

import logging
import re
from dataclasses import dataclass
from typing import Iterable, List, Tuple

logger = logging.getLogger(__name__)

_TERM_PATTERN = re.compile(r"^(?:1|u|u\^(-?\d+))$")


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> Tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by zero polynomial")
    m = a.bit_length() - 1
    n = b.bit_length() - 1
    if m < n:
        return 0, a
    b <<= m - n
    q = 0
    for i in range(m - n + 1):
        q <<= 1
        if (a >> m - i) & 1:
            a ^= b
            q ^= 1
        b >>= 1
    return q, a


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _divmod(a, b)[1]
    return a


def _reverse(mask: int) -> int:
    return int(bin(mask)[:1:-1], 2) if mask else 0


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """
    GF(2) 上的 Laurent 多项式

    规范化：mask 的最低位为 1，或者多项式为零（mask = 0, min_deg = 0）。
    规范化之后逐系数比较即为相等。
    """

    mask: int = 0
    min_deg: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("coefficient mask must be non-negative")
        if self.mask == 0:
            object.__setattr__(self, "min_deg", 0)
            return
        trailing = (self.mask & -self.mask).bit_length() - 1
        if trailing:
            object.__setattr__(self, "mask", self.mask >> trailing)
            object.__setattr__(self, "min_deg", self.min_deg + trailing)

    # -- 构造 -------------------------------------------------------------

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentPoly":
        """
        由指数集合构造多项式，重复指数按 GF(2) 相消。

        :param exponents: 指数序列
        :return: 对应的多项式
        """
        exps = list(exponents)
        if not exps:
            return cls()
        low = min(exps)
        mask = 0
        for k in exps:
            mask ^= 1 << (k - low)
        return cls(mask, low)

    # -- 查询 -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.mask == 0

    def __bool__(self) -> bool:
        return self.mask != 0

    @property
    def max_deg(self) -> int:
        """最高指数；零多项式没有次数"""
        if self.mask == 0:
            raise ValueError("zero polynomial")
        return self.min_deg + self.mask.bit_length() - 1

    @property
    def degree_span(self) -> int:
        """max_deg - min_deg；零多项式约定为 0"""
        if self.mask == 0:
            return 0
        return self.mask.bit_length() - 1

    def is_monomial(self) -> bool:
        """是否为单项式（P 中唯一的可逆元）"""
        return self.mask == 1

    def is_centered_palindrome(self) -> bool:
        """是否关于 u^0 反射不变"""
        return self.bar() == self

    def coefficient(self, k: int) -> int:
        i = k - self.min_deg
        if i < 0 or self.mask == 0:
            return 0
        return (self.mask >> i) & 1

    def support(self) -> List[int]:
        """非零系数的指数，升序"""
        out = []
        mask, k = self.mask, self.min_deg
        while mask:
            if mask & 1:
                out.append(k)
            mask >>= 1
            k += 1
        return out

    def weight(self) -> int:
        return self.mask.bit_count()

    # -- 代数运算 ---------------------------------------------------------

    def shift(self, k: int) -> "LaurentPoly":
        """乘以 u^k"""
        if self.mask == 0:
            return self
        return LaurentPoly(self.mask, self.min_deg + k)

    def bar(self) -> "LaurentPoly":
        """对合 u -> u^-1（空间反射）"""
        if self.mask == 0:
            return self
        return LaurentPoly(_reverse(self.mask), -self.max_deg)

    def even_part(self) -> "LaurentPoly":
        """偶数指数部分压缩：u^(2k) -> u^k"""
        return LaurentPoly.from_exponents(k // 2 for k in self.support() if k % 2 == 0)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.mask == 0:
            return other
        if other.mask == 0:
            return self
        low = min(self.min_deg, other.min_deg)
        mask = (self.mask << (self.min_deg - low)) ^ (other.mask << (other.min_deg - low))
        return LaurentPoly(mask, low)

    __sub__ = __add__

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.mask == 0 or other.mask == 0:
            return ZERO
        return LaurentPoly(_mul(self.mask, other.mask), self.min_deg + other.min_deg)

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            return monomial(self.min_deg * exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        if self.mask == 0:
            return "0"
        terms = []
        for k in self.support():
            if k == 0:
                terms.append("1")
            elif k == 1:
                terms.append("u")
            else:
                terms.append(f"u^{k}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly(1, 0)
U = LaurentPoly(1, 1)


def monomial(k: int) -> LaurentPoly:
    """u^k"""
    return LaurentPoly(1, k)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """逐系数异或"""
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """GF(2) 卷积"""
    return a * b


def involution(a: LaurentPoly) -> LaurentPoly:
    return a.bar()


def is_centered_palindrome(a: LaurentPoly) -> bool:
    return a.is_centered_palindrome()


def is_monomial(a: LaurentPoly) -> bool:
    return a.is_monomial()


def degree_span(a: LaurentPoly) -> int:
    return a.degree_span


def max_deg(a: LaurentPoly) -> int:
    return a.max_deg


def overlap(a: LaurentPoly, b: LaurentPoly) -> int:
    """两个多项式共同非零系数的个数"""
    if a.is_zero() or b.is_zero():
        return 0
    low = min(a.min_deg, b.min_deg)
    return ((a.mask << (a.min_deg - low)) & (b.mask << (b.min_deg - low))).bit_count()


def divmod_poly(a: LaurentPoly, b: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """
    带余除法。

    b 的最低项对齐到 u^0 后按普通多项式长除法计算，满足 a = q*b + r，
    且 r 的指数跨度小于 b 的指数跨度（或 r = 0）。

    :param a: 被除数
    :param b: 除数，非零
    :return: (q, r)
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return ZERO, ZERO
    q, r = _divmod(a.mask, b.mask)
    return LaurentPoly(q, a.min_deg - b.min_deg), LaurentPoly(r, a.min_deg)


def div_exact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    精确除法 a / b。

    :param a: 被除数
    :param b: 除数，非零且整除 a
    :return: 商 q，满足 q*b = a
    """
    q, r = divmod_poly(a, b)
    if r:
        raise ValueError(f"not divisible: ({a}) / ({b})")
    return q


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """
    最大公因式，单位（单项式）之下唯一，规范代表元的 min_deg = 0。

    :param a: 多项式
    :param b: 多项式，不能与 a 同时为零
    :return: 规范化的 gcd
    """
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined")
    return LaurentPoly(_gcd(a.mask, b.mask), 0)


def divides(d: LaurentPoly, a: LaurentPoly) -> bool:
    """d 是否整除 a"""
    if d.is_zero():
        return a.is_zero()
    return not divmod_poly(a, d)[1]


def parse(text: str) -> LaurentPoly:
    """
    解析 "u^-1+1+u" 形式的文本。

    :param text: 单项式以 "+" 连接，0 次写作 "1"，1 次写作 "u"
    :return: 多项式
    """
    compact = "".join(text.split())
    if compact in ("", "0"):
        if compact == "":
            raise ValueError("ill formatted polynomial: empty text")
        return ZERO
    exponents: List[int] = []
    position = 0
    for term in compact.split("+"):
        match = _TERM_PATTERN.match(term)
        if match is None:
            raise ValueError(f"ill formatted polynomial at position {position}: '{term}'")
        if term == "1":
            k = 0
        elif term == "u":
            k = 1
        else:
            k = int(match.group(1))
        if k in exponents:
            raise ValueError(f"ill formatted polynomial at position {position}: repeated term '{term}'")
        exponents.append(k)
        position += len(term) + 1
    return LaurentPoly.from_exponents(exponents)
