import pytest

from agdalache import abi


@pytest.fixture
def runtime():
    """Fresh exported-surface runtime with silenced tick output."""
    abi.al_exit()
    abi.al_set_tick_observer(None)
    abi.al_init()
    yield abi
    abi.al_set_tick_observer(None)
    abi.al_exit()
