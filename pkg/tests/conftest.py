"""공통 테스트 설정"""

import os

# 디스크 캐시 없이 H̃ 를 매번 계산
os.environ["DELTASQ_CACHE_ENABLED"] = "false"

import pytest


@pytest.fixture
def fresh_basis():
    """모듈 전역 H̃ 메모리 캐시 초기화"""
    from src.macdonald.basis import clear_basis_memory

    clear_basis_memory()
    yield
    clear_basis_memory()
