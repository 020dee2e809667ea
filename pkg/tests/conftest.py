import pytest


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path_factory, monkeypatch):
    """Keep any default-location cache writes out of the working tree."""
    monkeypatch.setenv("GAMMAENUM_CACHE", str(tmp_path_factory.getbasetemp() / "shared-cache"))
