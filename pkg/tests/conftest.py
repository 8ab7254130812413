import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from services.diagram_service import DiagramService  # noqa: E402
from services.fox_service import FoxService  # noqa: E402
from services.homology_service import HomologyService  # noqa: E402
from services.planar_service import PlanarService  # noqa: E402
from services.state_service import StateService  # noqa: E402
from services.torsion_service import TorsionService  # noqa: E402
from services.weight_service import WeightService  # noqa: E402

FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def diagram_service():
    return DiagramService()


@pytest.fixture(scope="session")
def planar_service(diagram_service):
    return PlanarService(diagram_service)


@pytest.fixture(scope="session")
def state_service():
    return StateService()


@pytest.fixture(scope="session")
def weight_service():
    return WeightService()


@pytest.fixture(scope="session")
def weight_table(weight_service):
    return weight_service.load_table()


@pytest.fixture(scope="session")
def torsion_service(diagram_service, planar_service, state_service, weight_service):
    return TorsionService(diagram_service, planar_service, state_service, weight_service)


@pytest.fixture(scope="session")
def homology_service(torsion_service):
    return HomologyService(torsion_service)


@pytest.fixture(scope="session")
def fox_service(diagram_service):
    return FoxService(diagram_service)


@pytest.fixture(scope="session")
def load_fixture(diagram_service):
    def _load(name: str):
        return diagram_service.parse_mld((FIXTURES / f"{name}.mld").read_text())
    return _load


@pytest.fixture
def clasp1(load_fixture):
    return load_fixture("clasp1")


@pytest.fixture
def trefoil(load_fixture):
    return load_fixture("trefoil")


@pytest.fixture
def unknot_switched(load_fixture):
    return load_fixture("unknot_switched")
