"""
核心模块共用的异常类型

用户输入错误使用内建的 ValueError / ZeroDivisionError；
内部后置条件失败使用 InvariantViolation。
"""


class InvariantViolation(RuntimeError):
    """内部计算结果违反了应当成立的不变量"""
