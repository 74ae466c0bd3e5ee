"""
费米链上的平移不变准自由态

态由 2×2 符号 Q(p) 给出，这里只处理分段常数符号加解析相位扭转：
滑翔子 Bogoliubov 平移 m_{2x} -> m_{2x-2}, m_{2x+1} -> m_{2x+3} 使非对角元获得 e^{±2itp}。
两点矩阵按分段积分的闭式计算，熵以 qubit 为单位（log2）。
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh
from scipy.special import xlogy

from cqca.data.models import ConvergenceReport

logger = logging.getLogger(__name__)

HERMITIAN_TOLERANCE = 1e-9
CLAMP_TOLERANCE = 1e-9
EPSILON = 1e-12

Block = Tuple[Tuple[complex, complex], Tuple[complex, complex]]

_PURE_UP: Block = ((1, 1j), (-1j, 1))
_EMPTY: Block = ((0, 0), (0, 0))
_FULL: Block = ((2, 0), (0, 2))


@dataclass(frozen=True)
class Piece:
    """区间 [lo, hi) 上的常数 2×2 矩阵"""

    lo: float
    hi: float
    value: Block

    def contains(self, p: float) -> bool:
        return self.lo <= p < self.hi

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)


@dataclass(frozen=True)
class SymbolQ:
    """
    分段常数符号

    pieces 按区间升序覆盖 [-π, π)；phase_twist = t 表示非对角元乘以 e^{2itp} 与 e^{-2itp}。
    """

    pieces: Tuple[Piece, ...]
    phase_twist: int = 0

    def __post_init__(self) -> None:
        if not self.pieces:
            raise ValueError("symbol needs at least one piece")
        if not math.isclose(self.pieces[0].lo, -math.pi) or not math.isclose(self.pieces[-1].hi, math.pi):
            raise ValueError("pieces must cover [-pi, pi)")
        for left, right in zip(self.pieces, self.pieces[1:]):
            if not math.isclose(left.hi, right.lo):
                raise ValueError(f"pieces are not contiguous at {left.hi}")

    def breakpoints(self) -> List[float]:
        return [piece.hi for piece in self.pieces[:-1]]


@dataclass(frozen=True)
class TwoPointMatrix:
    """
    窗口 [0, L) 上 majorana 算符的两点矩阵

    行 2x 对应 m_{2x}，行 2x+1 对应 m_{2x+1}。
    """

    window: int
    matrix: np.ndarray = field(repr=False)

    def is_hermitian(self, tolerance: float = HERMITIAN_TOLERANCE) -> bool:
        return bool(np.allclose(self.matrix, self.matrix.conj().T, atol=tolerance, rtol=0))

    def offdiagonal_block_max(self) -> float:
        """m_{2x} 与 m_{2y+1} 之间关联的最大模"""
        return float(np.abs(self.matrix[0::2, 1::2]).max())

    def entry(self, r: int, s: int) -> complex:
        return complex(self.matrix[r, s])


def _merge(pieces: Sequence[Piece]) -> Tuple[Piece, ...]:
    merged: List[Piece] = []
    for piece in pieces:
        if piece.hi <= piece.lo:
            continue
        if merged and merged[-1].value == piece.value:
            merged[-1] = Piece(merged[-1].lo, piece.hi, piece.value)
        else:
            merged.append(piece)
    return tuple(merged)


def symbol_omega_A(amplitude: float) -> SymbolQ:
    """
    ω_A 族：A = 0 为全部自旋向上，A = 1 为滑翔子不变态。

    :param amplitude: A ∈ [0, 1]
    :return: 分段常数符号，相邻相同的段已合并
    """
    if not 0.0 <= amplitude <= 1.0:
        raise ValueError(f"amplitude must lie in [0, 1], got {amplitude}")
    edge = math.pi * amplitude
    return SymbolQ(
        _merge(
            [
                Piece(-math.pi, -edge, _PURE_UP),
                Piece(-edge, 0.0, _EMPTY),
                Piece(0.0, edge, _FULL),
                Piece(edge, math.pi, _PURE_UP),
            ]
        )
    )


def evolve_symbol(q: SymbolQ, steps: int) -> SymbolQ:
    """滑翔子演化 steps 步：只累加相位扭转"""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if steps == 0:
        return q
    return replace(q, phase_twist=q.phase_twist + steps)


def symbol_at(q: SymbolQ, p: float) -> np.ndarray:
    """
    Q(p)，含相位扭转。

    :param q: 符号
    :param p: 动量 ∈ [-π, π]
    :return: 2×2 复矩阵
    """
    if p < -math.pi or p > math.pi:
        raise ValueError(f"momentum {p} outside [-pi, pi]")
    piece = next((piece for piece in q.pieces if piece.contains(p)), q.pieces[-1])
    value = np.array(piece.value, dtype=complex)
    twist = np.exp(2j * q.phase_twist * p)
    value[0, 1] *= twist
    value[1, 0] *= np.conj(twist)
    return value


def check_symbol(q: SymbolQ) -> List[str]:
    """
    在每段中点 p 及 -p 处检查 Hermitian、Q(-p) = 2 - Q(p)^T 与 0 ≤ Q ≤ 2。

    :param q: 符号
    :return: 违反项列表
    """
    violations = []
    for piece in q.pieces:
        p = piece.midpoint
        value = symbol_at(q, p)
        if not np.allclose(value, value.conj().T, atol=HERMITIAN_TOLERANCE):
            violations.append(f"Q({p:.6g}) is not Hermitian")
            continue
        if not np.allclose(symbol_at(q, -p), 2 * np.eye(2) - value.T, atol=HERMITIAN_TOLERANCE):
            violations.append(f"Q(-p) != 2 - Q(p)^T at p = {p:.6g}")
        eigenvalues = np.linalg.eigvalsh(value)
        if eigenvalues.min() < -CLAMP_TOLERANCE or eigenvalues.max() > 2 + CLAMP_TOLERANCE:
            violations.append(f"eigenvalues of Q({p:.6g}) outside [0, 2]")
    return violations


def full_chain_eigenvalues(q: SymbolQ, momenta: Sequence[float]) -> np.ndarray:
    """每个动量处 Q(p) 的本征值，形状 (len(momenta), 2)"""
    return np.array([np.linalg.eigvalsh(symbol_at(q, p)) for p in momenta])


def _fourier(lo: float, hi: float, k: np.ndarray) -> np.ndarray:
    """(1/2π)∫_lo^hi e^{-ipk} dp，k 为整数数组"""
    nonzero = k != 0
    safe = np.where(nonzero, k, 1)
    value = (np.exp(-1j * lo * safe) - np.exp(-1j * hi * safe)) / (2j * math.pi * safe)
    return np.where(nonzero, value, (hi - lo) / (2 * math.pi))


def two_point_matrix(q: SymbolQ, window: int) -> TwoPointMatrix:
    """
    M[2x+i][2y+j] = (1/2π)∫ q_ij(p) e^{-ipk} dp，
    k = x - y（对角块）、x - y - 2t（q12）、x - y + 2t（q21）。

    :param q: 符号
    :param window: 窗口长度 L ≥ 1
    :return: 2L × 2L 两点矩阵
    """
    if window < 1:
        raise ValueError("window must be positive")
    sites = np.arange(window)
    distance = sites[:, None] - sites[None, :]
    shifts = {(0, 0): 0, (0, 1): -2 * q.phase_twist, (1, 0): 2 * q.phase_twist, (1, 1): 0}
    matrix = np.zeros((2 * window, 2 * window), dtype=complex)
    for (i, j), shift in shifts.items():
        k = distance + shift
        block = np.zeros((window, window), dtype=complex)
        for piece in q.pieces:
            coefficient = piece.value[i][j]
            if coefficient:
                block += coefficient * _fourier(piece.lo, piece.hi, k)
        matrix[i::2, j::2] = block
    return TwoPointMatrix(window=window, matrix=matrix)


def spectrum(m: TwoPointMatrix) -> np.ndarray:
    """
    截断到 [0, 2] 的本征值。

    :param m: 两点矩阵
    :return: 升序本征值
    """
    if not m.is_hermitian():
        raise ValueError("two-point matrix is not Hermitian")
    eigenvalues = eigh(m.matrix, eigvals_only=True)
    if eigenvalues.min() < -CLAMP_TOLERANCE or eigenvalues.max() > 2 + CLAMP_TOLERANCE:
        raise ValueError("symbol violates positivity")
    return np.clip(eigenvalues, 0.0, 2.0)


def entropy(m: TwoPointMatrix) -> float:
    """
    S = -Σ (λ/2) log2(λ/2)，λ ≤ ε 或 λ ≥ 2 - ε 的项记为 0。

    :param m: 两点矩阵
    :return: 熵（qubit）
    """
    eigenvalues = spectrum(m)
    mixed = eigenvalues[(eigenvalues > EPSILON) & (eigenvalues < 2 - EPSILON)] / 2
    return float(-xlogy(mixed, mixed).sum() / math.log(2))


def entropy_timeseries(amplitude: float, window: int, steps: int) -> List[float]:
    """
    ω_A 在滑翔子演化下长度 L 窗口的熵 S(t)，t = 0..steps。

    :param amplitude: A ∈ [0, 1]
    :param window: 窗口长度 L
    :param steps: 时间步数 T ≥ 0
    :return: 熵序列
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    q = symbol_omega_A(amplitude)
    series = [entropy(two_point_matrix(evolve_symbol(q, t), window)) for t in range(steps + 1)]
    logger.info(f"准自由熵序列完成: A={amplitude}, L={window}, S(T)={series[-1]:.6g}")
    return series


def spectrum_timeseries(amplitude: float, window: int, steps: int) -> List[np.ndarray]:
    """每个时刻窗口两点矩阵的本征值，用于调试输出"""
    q = symbol_omega_A(amplitude)
    return [spectrum(two_point_matrix(evolve_symbol(q, t), window)) for t in range(steps + 1)]


def check_invariance(q: SymbolQ) -> bool:
    """滑翔子不变当且仅当所有非对角元为零"""
    return all(piece.value[0][1] == 0 and piece.value[1][0] == 0 for piece in q.pieces)


def check_convergence(q: SymbolQ, window: int, steps: int) -> ConvergenceReport:
    """
    非对角块最大模随时间的变化。

    :param q: 符号
    :param window: 窗口长度 L
    :param steps: 时间步数 T
    :return: ConvergenceReport
    """
    values = [two_point_matrix(evolve_symbol(q, t), window).offdiagonal_block_max() for t in range(steps + 1)]
    return ConvergenceReport(window=window, steps=steps, max_offdiagonal=values)


def majorana_shift(r: int, steps: int) -> int:
    """
    滑翔子在 majorana 指标上的作用：m_{2x} -> m_{2x-2t}，m_{2x+1} -> m_{2x+1+2t}。
    """
    if r % 2 == 0:
        return r - 2 * steps
    return r + 2 * steps


def wick_four_point(m: TwoPointMatrix, r1: int, r2: int, r3: int, r4: int) -> complex:
    """ω(m1 m2 m3 m4) = ω12 ω34 - ω13 ω24 + ω14 ω23"""
    e = m.entry
    return e(r1, r2) * e(r3, r4) - e(r1, r3) * e(r2, r4) + e(r1, r4) * e(r2, r3)
