"""
有限支撑 Pauli 字

PauliWord 记录相位 i^e 与各格点上的字母 X/Y/Z，乘法按 Weyl 关系精确追踪相位。
CQCA 的作用由生成元 X_x、Z_x 的像决定：两者都取矩阵列对应的字母字、相位 +1。
本模块同时给出乘积态上的期望值及其时间序列。
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from cqca.core.csca import CscaMatrix, apply, inverse
from cqca.core.gf2poly import LaurentPoly, overlap
from cqca.core.symplectic import PhaseVector
from cqca.data.models import ProductState

logger = logging.getLogger(__name__)

LETTERS = ("X", "Y", "Z")
_PHASE_TOKENS = {"+1": 0, "1": 0, "+i": 1, "i": 1, "-1": 2, "-i": 3}
_PHASE_TEXT = ("+1", "+i", "-1", "-i")
_PHASE_VALUE = (1, 1j, -1, -1j)


@dataclass(frozen=True, slots=True)
class PauliWord:
    """
    i^phase_exponent · ⊗ letters

    letters 按格点升序存放 (site, letter)，单位算符不出现。
    """

    phase_exponent: int = 0
    letters: Tuple[Tuple[int, str], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase_exponent", self.phase_exponent % 4)
        cleaned = []
        seen = set()
        for site, letter in sorted(self.letters):
            if letter == "I":
                continue
            if letter not in LETTERS:
                raise ValueError(f"unknown Pauli letter '{letter}' at site {site}")
            if site in seen:
                raise ValueError(f"site {site} occupied twice")
            seen.add(site)
            cleaned.append((site, letter))
        object.__setattr__(self, "letters", tuple(cleaned))

    @classmethod
    def from_mapping(cls, letters: Mapping[int, str], phase_exponent: int = 0) -> "PauliWord":
        return cls(phase_exponent, tuple(letters.items()))

    def as_dict(self) -> Dict[int, str]:
        return dict(self.letters)

    @property
    def weight(self) -> int:
        """非单位字母个数"""
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def sites(self) -> List[int]:
        return [site for site, _ in self.letters]

    def with_phase(self, phase_exponent: int) -> "PauliWord":
        return PauliWord(phase_exponent, self.letters)

    def commutes_with(self, other: "PauliWord") -> bool:
        return symplectic_form(phase_space(self), phase_space(other)) == 0

    def __matmul__(self, other: "PauliWord") -> "PauliWord":
        if not isinstance(other, PauliWord):
            return NotImplemented
        return weyl_mul(self, other)

    def __str__(self) -> str:
        return format_word(self)


IDENTITY_WORD = PauliWord()


def single(site: int, letter: str) -> PauliWord:
    """单格点字母"""
    return PauliWord(0, ((site, letter),))


def phase_space(w: PauliWord) -> PhaseVector:
    """字母部分的相空间向量（Y 同时计入两个分量）"""
    plus = [site for site, letter in w.letters if letter in ("X", "Y")]
    minus = [site for site, letter in w.letters if letter in ("Z", "Y")]
    return PhaseVector(LaurentPoly.from_exponents(plus), LaurentPoly.from_exponents(minus))


def letter_word(xi: PhaseVector, phase_exponent: int = 0) -> PauliWord:
    """
    相空间向量对应的字母字。

    :param xi: 相空间向量
    :param phase_exponent: 相位指数
    :return: i^phase_exponent 乘以各格点的 X/Y/Z
    """
    plus = set(xi.plus.support())
    minus = set(xi.minus.support())
    letters = []
    for site in sorted(plus | minus):
        if site in plus and site in minus:
            letters.append((site, "Y"))
        elif site in plus:
            letters.append((site, "X"))
        else:
            letters.append((site, "Z"))
    return PauliWord(phase_exponent, tuple(letters))


def _y_count(xi: PhaseVector) -> int:
    return overlap(xi.plus, xi.minus)


def symplectic_form(xi: PhaseVector, eta: PhaseVector) -> int:
    """
    格点上的辛形式 Σ ξ+η- + η+ξ- (mod 2)；0 为对易，1 为反对易。
    """
    return (overlap(xi.plus, eta.minus) + overlap(eta.plus, xi.minus)) % 2


def weyl_mul(a: PauliWord, b: PauliWord) -> PauliWord:
    """
    精确乘积 a·b。

    字母字 i^e L(ξ) = i^(e + #Y) w(ξ)，w(ξ)w(η) = (-1)^(Σ ξ-η+) w(ξ+η)。

    :param a: 左因子
    :param b: 右因子
    :return: 乘积，相位精确
    """
    xi, eta = phase_space(a), phase_space(b)
    zeta = xi + eta
    exponent = (
        a.phase_exponent
        + b.phase_exponent
        + _y_count(xi)
        + _y_count(eta)
        + 2 * overlap(xi.minus, eta.plus)
        - _y_count(zeta)
    )
    return letter_word(zeta, exponent)


def generator_images(a: CscaMatrix, site: int) -> Tuple[PauliWord, PauliWord]:
    """X_site 与 Z_site 的像（相位 +1 的字母字）"""
    return (
        letter_word(a.column(0).translate(site)),
        letter_word(a.column(1).translate(site)),
    )


def apply_cqca(a: CscaMatrix, w: PauliWord) -> PauliWord:
    """
    CQCA 作用于 Pauli 字，相位精确。

    把 w 分解为按格点升序、每个格点先 X 后 Z 的生成元乘积，逐个替换为像再相乘。

    :param a: 已校验的矩阵
    :param w: Pauli 字
    :return: 像
    """
    xi = phase_space(w)
    result = PauliWord(w.phase_exponent + _y_count(xi))
    plus = set(xi.plus.support())
    minus = set(xi.minus.support())
    for site in sorted(plus | minus):
        image_x, image_z = generator_images(a, site)
        if site in plus:
            result = weyl_mul(result, image_x)
        if site in minus:
            result = weyl_mul(result, image_z)
    return result


def apply_inverse(a: CscaMatrix, w: PauliWord) -> PauliWord:
    """
    逆作用 a^-1(w)，满足 apply_cqca(a, apply_inverse(a, w)) == w。

    字母由逆矩阵给出，相位按正向作用的结果校正。

    :param a: 已校验的矩阵
    :param w: Pauli 字
    :return: 原像
    """
    candidate = letter_word(apply(inverse(a), phase_space(w)))
    image = apply_cqca(a, candidate)
    return candidate.with_phase(w.phase_exponent - image.phase_exponent)


def phase_value(phase_exponent: int) -> complex:
    """i^phase_exponent"""
    return complex(_PHASE_VALUE[phase_exponent % 4])


def expectation(s: ProductState, w: PauliWord) -> complex:
    """
    乘积态上的期望值：相位乘以各格点 Bloch 分量之积。

    :param s: 乘积态
    :param w: Pauli 字
    :return: 复数期望值
    """
    value: complex = _PHASE_VALUE[w.phase_exponent]
    for _, letter in w.letters:
        value *= s.component(letter)
        if value == 0:
            break
    return complex(value)


def expectation_timeseries(a: CscaMatrix, s: ProductState, w: PauliWord, steps: int) -> List[complex]:
    """
    [expectation(s, a^t·w) for t = 0..steps]

    :param a: 矩阵
    :param s: 乘积态
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
        values.append(expectation(s, current))
    logger.info(f"期望值时间序列完成: {steps + 1} 个时刻, 最终支撑 {current.weight}")
    return values


def parse_word(text: str, start: int = 0) -> PauliWord:
    """
    解析 "<phase> <site>:<letter> ..."，例如 "+1 -1:Z 0:Y 1:X"。

    没有 "site:letter" 记号时，其余记号拼接为从 start 开始的连续字母串，如 "YXY"。

    :param text: 文本
    :param start: 连续字母串的起始格点
    :return: Pauli 字
    """
    tokens = text.split()
    if not tokens:
        raise ValueError("empty Pauli word")
    phase = 0
    if tokens[0] in _PHASE_TOKENS:
        phase = _PHASE_TOKENS[tokens[0]]
        tokens = tokens[1:]
    letters: Dict[int, str] = {}
    if any(":" in token for token in tokens):
        for position, token in enumerate(tokens):
            site_text, _, letter = token.partition(":")
            try:
                site = int(site_text)
            except ValueError as e:
                raise ValueError(f"ill formatted Pauli word at token {position + 1}: '{token}'") from e
            letter = letter.upper()
            if letter not in LETTERS + ("I",):
                raise ValueError(f"ill formatted Pauli word at token {position + 1}: '{token}'")
            if site in letters:
                raise ValueError(f"site {site} occupied twice")
            letters[site] = letter
    else:
        for offset, letter in enumerate("".join(tokens).upper()):
            if letter not in LETTERS + ("I",):
                raise ValueError(f"ill formatted Pauli word at position {offset}: '{letter}'")
            letters[start + offset] = letter
    return PauliWord.from_mapping(letters, phase)


def format_word(w: PauliWord) -> str:
    """格式化为 "+1 -1:Z 0:Y 1:X" """
    parts = [_PHASE_TEXT[w.phase_exponent]]
    parts.extend(f"{site}:{letter}" for site, letter in w.letters)
    return " ".join(parts)
