"""
예외 계층

수학적 불일치는 예외가 아니라 VerificationReport로 보고합니다.
여기의 예외는 잘못된 입력 또는 내부 산술 오류를 나타냅니다.
"""


class DeltaSquareError(Exception):
    """패키지 공통 예외"""


class InvalidParameterError(DeltaSquareError, ValueError):
    """파라미터가 허용 범위를 벗어남"""


class DegreeMismatchError(DeltaSquareError, ValueError):
    """서로 다른 차수의 대칭함수 간 연산"""


class BoundExceededError(DeltaSquareError, ValueError):
    """설정된 크기 상한 초과"""


class NotPolynomialError(DeltaSquareError, ValueError):
    """다항식이어야 하는 값이 유리함수로 남음"""


class CacheIntegrityError(DeltaSquareError):
    """캐시 파일이 손상되었거나 직교성 검사에 실패"""

    def __init__(self, message: str, partition: tuple[int, ...] | None = None):
        super().__init__(message)
        self.partition = partition


class SymmetryError(DeltaSquareError):
    """열거한 생성함수가 대칭이 아님 (열거 로직 오류)"""

    def __init__(self, message: str, content: tuple[int, ...] | None = None):
        super().__init__(message)
        self.content = content


class InvariantError(DeltaSquareError, ArithmeticError):
    """내부 불변식 위반 (넓이 손실, Pieri 지지 집합 등)"""
