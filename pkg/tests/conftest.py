import pytest

from vertex_bounds import dto
from vertex_bounds.graphs import generators
from vertex_bounds.settings import toolkit_settings


@pytest.fixture(autouse = True)
def reset_settings():
    yield
    toolkit_settings.configure()


@pytest.fixture
def square():
    return dto.HalfspaceSystem.cube(2)


@pytest.fixture
def cube():
    return dto.HalfspaceSystem.cube(3)


@pytest.fixture
def triangle():
    # x >= 0, y >= 0, x + y <= 1
    return dto.HalfspaceSystem.create(2, [
        ((-1, 0), 0),
        ((0, -1), 0),
        ((1, 1), 1),
    ])


@pytest.fixture
def petersen():
    return generators.petersen()


@pytest.fixture
def k4():
    return generators.complete(4)


@pytest.fixture
def k33():
    return generators.complete_bipartite(3, 3)


@pytest.fixture
def gadget():
    return generators.gadget()
