import numpy as np
import pytest

from geamkit import qubit_mub, qutrit_mub, qutrit_single_frame

# layouts exercised by the basis/frame property tests: MUB-type, single
# frame, and one ragged split per dimension
LAYOUTS = {
    2: [[2, 2, 2], [4], [3, 2]],
    3: [[3, 3, 3, 3], [9], [5, 3, 3]],
    4: [[4, 4, 4, 4, 4], [16], [6, 5, 4, 4]],
}


@pytest.fixture(scope="session")
def qubit_geam():
    return qubit_mub()


@pytest.fixture(scope="session")
def qutrit_geam():
    return qutrit_mub()


@pytest.fixture(scope="session")
def single_frame_geam():
    return qutrit_single_frame()


@pytest.fixture(scope="session")
def all_fixture_geams(qubit_geam, qutrit_geam, single_frame_geam):
    return {
        "qubit_mub": qubit_geam,
        "qutrit_mub": qutrit_geam,
        "qutrit_single_frame": single_frame_geam,
    }


def assert_close(actual, expected, tol, label=""):
    err = np.abs(np.asarray(actual) - np.asarray(expected)).max()
    assert err <= tol, f"{label}: deviation {err:.3e} > {tol:.1e}"
