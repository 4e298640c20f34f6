import numpy as np
import pytest

from sloccinv import PureState

SQRT_HALF = 2**-0.5


def make_state(amps) -> PureState:
    amps = np.asarray(amps, dtype=np.complex128)
    n = int(np.log2(amps.size))
    return PureState(n, amps)


@pytest.fixture
def ghz3() -> PureState:
    amps = np.zeros(8, dtype=np.complex128)
    amps[0] = amps[7] = SQRT_HALF
    return PureState(3, amps)


@pytest.fixture
def w3() -> PureState:
    amps = np.zeros(8, dtype=np.complex128)
    amps[1] = amps[2] = amps[4] = 3**-0.5
    return PureState(3, amps)


@pytest.fixture
def ghz4() -> PureState:
    amps = np.zeros(16, dtype=np.complex128)
    amps[0] = amps[15] = SQRT_HALF
    return PureState(4, amps)


@pytest.fixture
def epr_epr() -> PureState:
    # product of two maximally entangled pairs: a0 = a5 = a10 = a15 = 1/2
    amps = np.zeros(16, dtype=np.complex128)
    amps[0] = amps[5] = amps[10] = amps[15] = 0.5
    return PureState(4, amps)
