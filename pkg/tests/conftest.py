"""
测试共用的 fixtures
"""

import pytest

from cqca.core.csca import F, G, GS, H, named
from cqca.core.stabilizer_ent import from_word


@pytest.fixture
def named_automata():
    """常用的命名自动机"""
    return {"Gs": GS, "G": G, "F": F, "H": H, "G^2": named("G^2"), "G1": named("Gn:1"), "P3": named("P3")}


@pytest.fixture
def yxy():
    """σ2⊗σ1⊗σ2 的稳定子生成元"""
    return from_word("YXY").xi
