# -*- coding: utf-8 -*-
"""
统一异常层次。数学输入错误一律为 DomainError，CLI 将其映射为退出码 1。
"""


class QsubError(Exception):
    """Base class for every error raised by the package."""


class ConfigError(QsubError):
    """Malformed configuration file, environment value or --caps flag."""


class DomainError(QsubError, ValueError):
    """Invalid mathematical input."""


class CapExceededError(DomainError):
    def __init__(self, axis, limit, size=None):
        self.axis = axis
        self.limit = limit
        self.size = size
        msg = f"cap exceeded on axis '{axis}' (limit {limit}"
        msg += f", requested {size})" if size is not None else ")"
        super().__init__(msg)


class AmbientMismatchError(DomainError):
    """Two data (or a family) do not share type, rank and ell."""


class InvalidDatumError(DomainError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(v.message for v in self.violations) or "invalid datum")
