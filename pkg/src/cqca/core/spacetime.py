"""
时空图

单个观测量在自动机下的迭代演化、周期检测、支撑统计与渲染。
时间轴在 ASCII 与 PGM 输出中向下增长。
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

import numpy as np
from rich.text import Text

from cqca.core.csca import CscaMatrix, IDENTITY, apply
from cqca.core.pauli import PauliWord, phase_space
from cqca.core.symplectic import PhaseVector
from cqca.data.models import SupportRow

logger = logging.getLogger(__name__)

# 单元格编码沿用 σ 下标：0 = I, 1 = X, 2 = Y, 3 = Z
CELL_LETTERS = (" ", "X", "Y", "Z")
ASCII_GLYPHS = (" ", "1", "2", "3")
GRAY_LEVELS = np.array([255, 80, 160, 0], dtype=np.uint8)
RICH_STYLES = ("", "on blue", "on red", "on yellow")
_CODE_FROM_BITS = (0, 1, 3, 2)


@dataclass(frozen=True)
class SpacetimeGrid:
    """行 t 为 a^t·seed 在窗口 [xmin, xmax] 上的字母（忽略相位）"""

    automaton: CscaMatrix
    seed: PauliWord
    vectors: List[PhaseVector]
    cells: np.ndarray
    xmin: int

    @property
    def xmax(self) -> int:
        return self.xmin + self.cells.shape[1] - 1

    @property
    def steps(self) -> int:
        return len(self.vectors) - 1

    @property
    def rows(self) -> List[np.ndarray]:
        return list(self.cells)

    def row_letters(self, t: int) -> Dict[int, str]:
        """第 t 行的非单位字母 site -> letter"""
        return {
            self.xmin + int(i): CELL_LETTERS[code]
            for i, code in enumerate(self.cells[t])
            if code
        }


def support(xi: PhaseVector) -> List[int]:
    """两个分量支撑的并集"""
    return sorted(set(xi.plus.support()) | set(xi.minus.support()))


def even_site_support(xi: PhaseVector) -> List[int]:
    """偶数格点上的支撑，按 2k -> k 压缩"""
    return [k // 2 for k in support(xi) if k % 2 == 0]


def _row_codes(xi: PhaseVector, xmin: int, width: int) -> np.ndarray:
    row = np.zeros(width, dtype=np.uint8)
    for k in xi.plus.support():
        row[k - xmin] |= 1
    for k in xi.minus.support():
        row[k - xmin] |= 2
    return np.array(_CODE_FROM_BITS, dtype=np.uint8)[row]


def evolve_grid(a: CscaMatrix, seed: PauliWord, steps: int) -> SpacetimeGrid:
    """
    生成时空图，窗口自动覆盖所有行的支撑。

    :param a: 矩阵
    :param seed: 初始 Pauli 字
    :param steps: 时间步数 T ≥ 0
    :return: SpacetimeGrid
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    vectors = [phase_space(seed)]
    for _ in range(steps):
        vectors.append(apply(a, vectors[-1]))
    extents = [(xi.min_deg, xi.max_deg) for xi in vectors if not xi.is_zero()]
    if extents:
        xmin = min(low for low, _ in extents)
        xmax = max(high for _, high in extents)
    else:
        xmin = xmax = 0
    width = xmax - xmin + 1
    cells = np.stack([_row_codes(xi, xmin, width) for xi in vectors])
    logger.debug(f"时空图: {steps + 1} 行, 窗口 [{xmin}, {xmax}]")
    return SpacetimeGrid(automaton=a, seed=seed, vectors=vectors, cells=cells, xmin=xmin)


def detect_period(a: CscaMatrix, max_t: int) -> Optional[int]:
    """
    最小的 t ≤ max_t 使 a^t 为单位矩阵。

    :param a: 矩阵
    :param max_t: 搜索上限
    :return: 周期，找不到时为 None
    """
    power = IDENTITY
    for t in range(1, max_t + 1):
        power = power @ a
        if power.is_identity():
            return t
    return None


def support_stats(grid: SpacetimeGrid) -> List[SupportRow]:
    """每行的非单位字母数与最左、最右格点"""
    stats = []
    for t, xi in enumerate(grid.vectors):
        sites = support(xi)
        if sites:
            stats.append(SupportRow(t=t, support_count=len(sites), leftmost=sites[0], rightmost=sites[-1]))
        else:
            stats.append(SupportRow(t=t, support_count=0))
    return stats


def pure_letter_rows(grid: SpacetimeGrid) -> Dict[str, List[int]]:
    """
    只含一种 Pauli 字母（及单位）的行。

    :param grid: 时空图
    :return: letter -> 时间步列表
    """
    found: Dict[str, List[int]] = {letter: [] for letter in CELL_LETTERS[1:]}
    for t, row in enumerate(grid.cells):
        kinds = set(int(code) for code in row if code)
        if len(kinds) == 1:
            found[CELL_LETTERS[kinds.pop()]].append(t)
    return found


def render_ascii(grid: SpacetimeGrid) -> str:
    """I -> ' ', X -> '1', Y -> '2', Z -> '3'，每行以 LF 结尾"""
    glyphs = np.array(ASCII_GLYPHS)
    return "".join("".join(glyphs[row]) + "\n" for row in grid.cells)


def render_rich(grid: SpacetimeGrid) -> Text:
    """带颜色的终端渲染：X 蓝、Y 红、Z 黄"""
    text = Text()
    for row in grid.cells:
        for code in row:
            text.append(" ", style=RICH_STYLES[code])
        text.append("\n")
    return text


def render_pgm(grid: SpacetimeGrid) -> bytes:
    """二进制 PGM (P5)，灰度 I=255, X=80, Y=160, Z=0"""
    height, width = grid.cells.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + GRAY_LEVELS[grid.cells].tobytes()
