import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rnds_atlas import BlackHoleParams, classify_horizons


@pytest.fixture(scope="session")
def demo_params():
    # three-horizon triple used throughout: well separated roots,
    # photon sphere at exactly r = 4
    return BlackHoleParams(M=1.5, Q=1.0, Lambda=0.01)


@pytest.fixture(scope="session")
def demo_structure(demo_params):
    return classify_horizons(demo_params)
