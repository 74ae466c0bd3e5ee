"""
CQCA 工具集核心模块

此模块包含 Clifford 量子元胞自动机的精确计算功能，包括：
- GF(2) Laurent 多项式 (gf2poly)
- 相空间向量与楔积 (symplectic)
- 中心辛元胞自动机的分类与滑翔子 (csca)
- Pauli 字的演化与期望值 (pauli)
- 时空图 (spacetime)
- 稳定子态纠缠 (stabilizer_ent)
- 准自由费米态纠缠 (quasifree)
"""

__version__ = "0.1.0"
__all__ = [
    "gf2poly",
    "symplectic",
    "csca",
    "pauli",
    "spacetime",
    "stabilizer_ent",
    "quasifree",
    "errors",
]
