import numpy as np
import pytest

from framerep import Frame


@pytest.fixture
def psi0():
    """The overcomplete workhorse frame {(1,0), (0,1), (1,1)} of C^2."""
    return Frame([[1, 0], [0, 1], [1, 1]])


@pytest.fixture
def mercedes():
    """Three unit vectors at 120 degrees: a tight frame of C^2 with A = B = 3/2."""
    s = np.sqrt(3) / 2
    return Frame([[0, 1], [-s, -0.5], [s, -0.5]])


@pytest.fixture
def onb2():
    return Frame(np.eye(2))
