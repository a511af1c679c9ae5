import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from envlat.dynkin import build_diagram  # noqa: E402


@pytest.fixture(scope="session")
def A2():
    return build_diagram("A", 2)


@pytest.fixture(scope="session")
def A3():
    return build_diagram("A", 3)
