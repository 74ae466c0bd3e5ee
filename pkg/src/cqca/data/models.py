"""
CQCA 工具集的数据模型定义

这个模块包含分类结果、乘积态、运行配置以及各类时间序列报告的数据结构，
全部支持 YAML 序列化与反序列化。
"""

import math
from enum import Enum
from typing import Dict, List, Optional

import yaml
from pydantic import BaseModel, Field, field_validator, model_validator


class AutomatonKind(str, Enum):
    """CQCA 的三大类别"""

    PERIODIC = "periodic"
    GLIDER = "glider"
    FRACTAL = "fractal"

    def __str__(self) -> str:
        return self.value


class Classification(BaseModel):
    """按迹多项式得到的分类结果"""

    kind: AutomatonKind = Field(..., description="类别")
    period: Optional[int] = Field(default=None, description="周期（仅周期类）")
    speed: Optional[int] = Field(default=None, description="滑翔子速度 n（仅滑翔类）")
    trace: str = Field(..., description="迹多项式文本")

    @field_validator("period")
    def validate_period(cls, v: Optional[int]) -> Optional[int]:
        """周期只能是 2 或 3"""
        if v is not None and v not in (2, 3):
            raise ValueError("周期只能是 2 或 3")
        return v

    @field_validator("speed")
    def validate_speed(cls, v: Optional[int]) -> Optional[int]:
        """速度必须为正"""
        if v is not None and v < 1:
            raise ValueError("滑翔子速度必须 ≥ 1")
        return v

    @model_validator(mode="after")
    def validate_kind_fields(self) -> "Classification":
        """类别与附加字段必须一致"""
        if self.kind == AutomatonKind.PERIODIC and self.period is None:
            raise ValueError("周期类必须给出 period")
        if self.kind == AutomatonKind.GLIDER and self.speed is None:
            raise ValueError("滑翔类必须给出 speed")
        if self.kind != AutomatonKind.PERIODIC and self.period is not None:
            raise ValueError("只有周期类才有 period")
        if self.kind != AutomatonKind.GLIDER and self.speed is not None:
            raise ValueError("只有滑翔类才有 speed")
        return self

    def summary(self) -> str:
        """命令行输出使用的一行摘要"""
        if self.kind == AutomatonKind.PERIODIC:
            return f"periodic period={self.period}"
        if self.kind == AutomatonKind.GLIDER:
            return f"glider n={self.speed} trace={self.trace}"
        return f"fractal trace={self.trace}"

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "Classification":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class ProductState(BaseModel):
    """平移不变乘积态，由单格点 Bloch 向量给出"""

    x: float = Field(default=0.0, description="<σ1>")
    y: float = Field(default=0.0, description="<σ2>")
    z: float = Field(default=1.0, description="<σ3>")

    @model_validator(mode="after")
    def validate_bloch_ball(self) -> "ProductState":
        """Bloch 向量必须在单位球内"""
        if self.x**2 + self.y**2 + self.z**2 > 1.0 + 1e-12:
            raise ValueError("Bloch 向量长度超过 1")
        return self

    def component(self, letter: str) -> float:
        """
        单格点期望值

        :param letter: "X"、"Y" 或 "Z"
        :return: 对应的 Bloch 分量
        """
        mapping = {"X": self.x, "Y": self.y, "Z": self.z}
        if letter not in mapping:
            raise ValueError(f"未知的 Pauli 字母: {letter}")
        return mapping[letter]

    @classmethod
    def from_text(cls, text: str) -> "ProductState":
        """解析 "x,y,z" 文本"""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"Bloch 向量需要三个分量: '{text}'")
        try:
            x, y, z = (float(p) for p in parts)
        except ValueError as e:
            raise ValueError(f"Bloch 分量不是有效数字: '{text}'") from e
        return cls(x=x, y=y, z=z)

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "ProductState":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class CommandName(str, Enum):
    """命令行子命令"""

    CLASSIFY = "classify"
    SPACETIME = "spacetime"
    STAB_ENT = "stab-ent"
    QF_ENT = "qf-ent"
    GLIDER = "glider"
    CONJUGATE = "conjugate"
    EXPECTATION = "expectation"

    def __str__(self) -> str:
        return self.value


class OutputFormat(str, Enum):
    """输出格式"""

    CSV = "csv"
    ASCII = "ascii"
    PGM = "pgm"

    def __str__(self) -> str:
        return self.value


class RunConfig(BaseModel):
    """一次命令行运行的完整配置"""

    command: CommandName = Field(..., description="子命令")
    automaton: str = Field(default="Gs", description="命名自动机或矩阵文本")
    word: Optional[str] = Field(default=None, description="Pauli 字文本")
    xi: Optional[str] = Field(default=None, description="相空间向量文本")
    target: Optional[str] = Field(default=None, description="共轭目标向量文本")
    steps: int = Field(default=20, description="时间步数", ge=0)
    window: Optional[int] = Field(default=None, description="有限区域长度", ge=1)
    regions: List[int] = Field(default_factory=list, description="stab-ent 报告的有限区域长度列表")
    stabilizer: Optional[str] = Field(default=None, description="稳定子生成元字母字，给出时在该稳定子态上求期望值")
    amplitude: float = Field(default=0.0, description="ω_A 族参数 A", ge=0.0, le=1.0)
    bloch: ProductState = Field(default_factory=ProductState, description="乘积态")
    format: OutputFormat = Field(default=OutputFormat.CSV, description="输出格式")
    out: Optional[str] = Field(default=None, description="输出文件路径")
    seed: int = Field(default=0, description="随机种子")

    @field_validator("automaton")
    def validate_automaton(cls, v: str) -> str:
        """自动机描述不能为空"""
        if not v.strip():
            raise ValueError("自动机描述不能为空")
        return v.strip()

    @field_validator("regions")
    def validate_regions(cls, v: List[int]) -> List[int]:
        """区域长度必须为正"""
        if any(L < 1 for L in v):
            raise ValueError(f"区域长度必须为正: {v}")
        return v

    def region_lengths(self) -> List[int]:
        """regions 优先，否则退回单个 window"""
        if self.regions:
            return list(dict.fromkeys(self.regions))
        return [self.window] if self.window is not None else []

    @model_validator(mode="after")
    def validate_required_inputs(self) -> "RunConfig":
        """检查各子命令需要的输入"""
        if self.command == CommandName.QF_ENT and self.window is None:
            raise ValueError("qf-ent 需要 window")
        if self.command == CommandName.CONJUGATE and self.xi is None:
            raise ValueError("conjugate 需要 xi")
        return self

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "RunConfig":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class SupportRow(BaseModel):
    """时空图单行的支撑统计"""

    t: int = Field(..., description="时间步", ge=0)
    support_count: int = Field(..., description="非单位字母个数", ge=0)
    leftmost: Optional[int] = Field(default=None, description="最左格点")
    rightmost: Optional[int] = Field(default=None, description="最右格点")

    @model_validator(mode="after")
    def validate_extent(self) -> "SupportRow":
        """空行没有范围，非空行范围有序"""
        if self.support_count == 0:
            if self.leftmost is not None or self.rightmost is not None:
                raise ValueError("单位行没有支撑范围")
        elif self.leftmost is None or self.rightmost is None or self.leftmost > self.rightmost:
            raise ValueError("支撑范围无效")
        return self

    @property
    def width(self) -> int:
        if self.leftmost is None or self.rightmost is None:
            return 0
        return self.rightmost - self.leftmost + 1

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "SupportRow":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class EntanglementRow(BaseModel):
    """稳定子态纠缠时间序列的一行"""

    t: int = Field(..., description="时间步", ge=0)
    n: int = Field(..., description="生成元半长度", ge=0)
    e_bipartite: int = Field(..., description="半无限切割的纠缠对数", ge=0)
    e_region: Dict[int, int] = Field(default_factory=dict, description="有限区域 L -> 纠缠对数")

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "EntanglementRow":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class ConvergenceReport(BaseModel):
    """准自由态两点函数非对角块随时间的衰减"""

    window: int = Field(..., description="窗口长度 L", ge=1)
    steps: int = Field(..., description="时间步数", ge=0)
    max_offdiagonal: List[float] = Field(default_factory=list, description="每个 t 的非对角块最大模")

    @field_validator("max_offdiagonal")
    def validate_values(cls, v: List[float]) -> List[float]:
        """数值必须非负且有限"""
        for value in v:
            if value < 0 or not math.isfinite(value):
                raise ValueError("非对角元模必须为非负有限数")
        return v

    def decay_factor(self) -> float:
        """首末两个时刻的比值；末值为零时为无穷"""
        if not self.max_offdiagonal:
            raise ValueError("报告为空")
        first, last = self.max_offdiagonal[0], self.max_offdiagonal[-1]
        if last == 0:
            return math.inf
        return first / last

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "ConvergenceReport":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)


class GliderReport(BaseModel):
    """滑翔子自动机的极小滑翔子信息"""

    automaton: str = Field(..., description="自动机描述")
    speed: int = Field(..., description="速度 n", ge=1)
    glider: str = Field(..., description="极小滑翔子 ξ")
    conjugate: str = Field(..., description="反向滑翔子 ξ̄")
    wedge: str = Field(..., description="ξ∧ξ̄")

    def to_yaml(self) -> str:
        """序列化为 YAML 字符串"""
        return yaml.dump(
            self.model_dump(mode="json"), default_flow_style=False, allow_unicode=True
        )

    @classmethod
    def from_yaml(cls, yaml_str: str) -> "GliderReport":
        """从 YAML 字符串反序列化"""
        data = yaml.safe_load(yaml_str)
        return cls(**data)
