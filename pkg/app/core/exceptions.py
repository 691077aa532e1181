"""
Custom exceptions for the application
"""


class ParameterError(Exception):
    def __init__(self, detail: str):
        super().__init__(f"Parameter Error: {detail}")


class DomainError(Exception):
    def __init__(self, detail: str):
        super().__init__(f"Domain Error: {detail}")


class UsageError(Exception):
    def __init__(self, detail: str):
        super().__init__(f"Usage Error: {detail}")


class NumericError(Exception):
    """수치 계산 실패 공통 예외 (CLI 종료 코드 3)"""
    def __init__(self, detail: str):
        self.detail = detail
        super().__init__(f"{self.label}: {detail}")

    label = "Numeric Error"


class QuadratureError(NumericError):
    label = "Quadrature Error"


class GridResolutionError(NumericError):
    label = "Grid Resolution Error"


class EigensolverError(NumericError):
    label = "Eigensolver Error"


class SpectrumOverflowError(NumericError):
    label = "Spectrum Overflow Error"


class VerificationError(NumericError):
    label = "Verification Error"
