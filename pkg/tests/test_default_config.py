import pytest

from package_safa.common_errors import InvalidArgumentError
from package_safa.default_config import (ENV_LOG_LEVEL, ENV_NUM_PROCESS,
                                         ENV_ORACLE_MAX_DEPTH,
                                         ENV_ORACLE_MAX_STATES, DefaultConfig)


def test_set_class_variable() -> None:
    DefaultConfig.set_class_variable(oracle_max_depth=64, num_process=2)
    assert DefaultConfig.oracle_max_depth == 64
    assert DefaultConfig.num_process == 2


def test_set_class_variable_keeps_unset_values() -> None:
    before = DefaultConfig.oracle_max_states
    DefaultConfig.set_class_variable(oracle_max_depth=32)
    assert DefaultConfig.oracle_max_states == before


@pytest.mark.parametrize('settings', [{'oracle_max_depth': 0},
                                      {'oracle_max_states': -1},
                                      {'num_process': 0},
                                      {'log_level': 'LOUD'}])
def test_set_class_variable_rejects_invalid_values(settings: dict) -> None:
    with pytest.raises(InvalidArgumentError):
        DefaultConfig.set_class_variable(**settings)


def test_load_environment(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(ENV_LOG_LEVEL, 'error')
    monkeypatch.setenv(ENV_ORACLE_MAX_DEPTH, '12')
    monkeypatch.setenv(ENV_ORACLE_MAX_STATES, '1024')
    monkeypatch.setenv(ENV_NUM_PROCESS, '3')
    DefaultConfig.load_environment()
    assert DefaultConfig.log_level == 'ERROR'
    assert DefaultConfig.oracle_max_depth == 12
    assert DefaultConfig.oracle_max_states == 1024
    assert DefaultConfig.num_process == 3


def test_load_environment_keeps_defaults_on_bad_values(
        monkeypatch: pytest.MonkeyPatch) -> None:
    DefaultConfig.set_class_variable(oracle_max_depth=256)
    monkeypatch.setenv(ENV_ORACLE_MAX_DEPTH, 'deep')
    monkeypatch.setenv(ENV_ORACLE_MAX_STATES, '-5')
    monkeypatch.setenv(ENV_LOG_LEVEL, 'LOUD')
    monkeypatch.delenv(ENV_NUM_PROCESS, raising=False)
    before = DefaultConfig.oracle_max_states
    DefaultConfig.load_environment()
    assert DefaultConfig.oracle_max_depth == 256
    assert DefaultConfig.oracle_max_states == before
    assert DefaultConfig.num_process >= 1
