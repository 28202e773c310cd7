import pytest

from package_safa.default_config import DefaultConfig
from package_safa.safa_core import Safa
from package_safa.safa_fixtures import safa_fixture


@pytest.fixture(autouse=True)
def restore_config():
    """Undo every DefaultConfig change made by a test."""

    saved = (DefaultConfig.log_level, DefaultConfig.oracle_max_depth,
             DefaultConfig.oracle_max_states, DefaultConfig.num_process)
    yield
    DefaultConfig.set_class_variable(log_level=saved[0],
                                     oracle_max_depth=saved[1],
                                     oracle_max_states=saved[2],
                                     num_process=saved[3])


@pytest.fixture(name='fig1')
def fixture_fig1() -> Safa:
    return safa_fixture('fig1')


@pytest.fixture(name='fig2')
def fixture_fig2() -> Safa:
    return safa_fixture('fig2')


@pytest.fixture(name='fig3')
def fixture_fig3() -> Safa:
    return safa_fixture('fig3_simple')


@pytest.fixture(name='fig5')
def fixture_fig5() -> Safa:
    return safa_fixture('fig5_pair')


@pytest.fixture(name='fig6')
def fixture_fig6() -> Safa:
    return safa_fixture('fig6')
