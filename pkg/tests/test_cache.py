"""H̃ 캐시 테스트"""

import pytest


@pytest.fixture
def cache(tmp_path):
    from src.core.cache import HTildeCache

    return HTildeCache(cache_dir=str(tmp_path / "htilde"), version=1)


@pytest.fixture
def table_two():
    from src.macdonald.basis import MacdonaldBasis

    return MacdonaldBasis.compute(2).table


class TestHTildeCache:
    """Parquet 저장/로드/검증"""

    def test_missing_returns_none(self, cache):
        assert cache.load(2) is None
        assert cache.check(3) == []

    def test_save_and_load(self, cache, table_two):
        path = cache.save(2, table_two)
        assert path.exists()
        assert cache.exists(2)

        loaded = cache.load(2)
        assert set(loaded) == set(table_two)
        assert all(loaded[mu] == table_two[mu] for mu in table_two)

    def test_check_lists_degrees(self, cache, table_two):
        cache.save(2, table_two)
        assert cache.check(3) == [2]

    def test_tampered_table_rejected(self, cache, table_two):
        from src.algebra.partitions import Partition
        from src.core.exceptions import CacheIntegrityError

        swapped = {
            Partition((2,)): table_two[Partition((1, 1))],
            Partition((1, 1)): table_two[Partition((2,))],
        }
        cache.save(2, swapped)
        with pytest.raises(CacheIntegrityError) as info:
            cache.load(2)
        assert info.value.partition is not None

    def test_missing_partition_rejected(self, cache, table_two):
        from src.algebra.partitions import Partition
        from src.core.exceptions import CacheIntegrityError

        cache.save(2, {Partition((2,)): table_two[Partition((2,))]})
        with pytest.raises(CacheIntegrityError):
            cache.load(2)

    def test_clear_and_stats(self, cache, table_two):
        cache.save(2, table_two)
        stats = cache.get_cache_stats()
        assert stats["total_files"] == 1
        assert stats["version"] == 1

        assert cache.clear() == 1
        assert not cache.exists(2)
        assert cache.get_cache_stats()["total_files"] == 0

    def test_basis_uses_cache(self, tmp_path, monkeypatch):
        from src.core.cache import HTildeCache
        from src.core.config import settings
        from src.macdonald.basis import clear_basis_memory, get_basis

        store = HTildeCache(cache_dir=str(tmp_path), version=1)
        monkeypatch.setattr(settings, "cache_enabled", True)
        clear_basis_memory()
        try:
            basis = get_basis(2, cache=store)
            assert store.exists(2)
            assert basis.orthogonality_violation() is None
        finally:
            clear_basis_memory()


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
