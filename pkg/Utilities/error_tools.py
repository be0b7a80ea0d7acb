"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Hopf-Galois Structure Counter ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Error Tools
"""


class HGSError(Exception):
    """
    모든 계산 오류의 기반 클래스
    detail 구조는 HTTP 응답의 detail 과 동일하게 유지함
    """
    kind: str = "engine error"
    exit_code: int = 1
    http_status: int = 500

    def __init__(self, message: str, **inputs):
        super().__init__(message)
        self.message = message
        self.inputs = inputs

    @property
    def detail(self) -> dict:
        detail: dict = {
            "type": self.kind,
            "message": self.message
        }
        if self.inputs:
            detail["input"] = {key: str(value) for key, value in self.inputs.items()}
        return detail


# ========== 입력 오류 (exit 2) ==========
class GroupParseError(HGSError):
    kind = "parse error"
    exit_code = 2
    http_status = 400

    def __init__(self, message: str, line: int = 0, **inputs):
        if line:
            message = f"line {line}: {message}"
        super().__init__(message, line=line, **inputs)
        self.line = line


class UnknownGroupError(HGSError):
    kind = "unknown group"
    exit_code = 2
    http_status = 400


class TableError(HGSError):
    kind = "invalid table"
    exit_code = 2
    http_status = 400


class PreconditionError(HGSError):
    kind = "precondition failed"
    exit_code = 2
    http_status = 400


class CheckpointError(HGSError):
    kind = "checkpoint mismatch"
    exit_code = 2
    http_status = 400


# ========== 계산 불가 (exit 3) ==========
class CapExceededError(HGSError):
    kind = "cap exceeded"
    exit_code = 3
    http_status = 422


class InfeasibleError(HGSError):
    kind = "infeasible"
    exit_code = 3
    http_status = 422


# ========== 엔진 버그 신호 (exit 1) ==========
class EngineInvariantError(HGSError):
    kind = "engine invariant"
    exit_code = 1
    http_status = 500
