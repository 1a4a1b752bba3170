import pytest

from cycleops import CycleOpsInvalidParameters
from cycleops.builder import build_config
from cycleops.models.settings import CycleOpsSettings


def test_defaults():
    config = build_config()
    assert (config.lemma2_m_max, config.theorem_m_max, config.p7_m_max) == (200, 400, 200)
    assert (config.workers, config.indent) == (1, 2)


def test_yaml_file(tmp_path):
    config_file = tmp_path / "cycleops.yml"
    config_file.write_text("---\nworkers: 3\nindent: 0\n", encoding="utf-8")
    config = build_config(str(config_file))
    assert config.workers == 3
    assert config.indent == 0
    assert config.theorem_m_max == 400


def test_dictionary():
    assert build_config({"p7_m_max": 50}).p7_m_max == 50


@pytest.mark.parametrize("content", ["workers: 0\n", "unknown: 1\n", "- 1\n- 2\n", "workers: [\n"])
def test_invalid_files(tmp_path, content):
    config_file = tmp_path / "cycleops.yml"
    config_file.write_text(content, encoding="utf-8")
    with pytest.raises(CycleOpsInvalidParameters):
        build_config(str(config_file))


def test_missing_file(tmp_path):
    with pytest.raises(CycleOpsInvalidParameters):
        build_config(str(tmp_path / "absent.yml"))


def test_subset_cap_setting(monkeypatch):
    assert CycleOpsSettings().brute_subset_cap == 22
    monkeypatch.setenv("CYCLEOPS_BRUTE_SUBSET_CAP", "10")
    assert CycleOpsSettings().brute_subset_cap == 10
