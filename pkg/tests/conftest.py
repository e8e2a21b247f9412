import pytest

from relicpress.luminary import curated_manifest


@pytest.fixture
def manifest():
    return curated_manifest()


@pytest.fixture
def manifest_file(tmp_path, manifest):
    path = tmp_path / "manifest.json"
    path.write_text(manifest.to_json(), encoding="utf-8")
    return path
