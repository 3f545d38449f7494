import pytest

from gdet import ring_element, symmetric_group4


@pytest.fixture(scope="session")
def s4():
    return symmetric_group4()


@pytest.fixture(scope="session")
def make_elem(s4):
    """Build an S4 ring element from slot names like a1..a12, b1..b12."""

    def build(**slots):
        coeffs = [0] * 24
        for name, value in slots.items():
            offset = 12 if name[0] == "b" else 0
            coeffs[offset + int(name[1:]) - 1] = value
        return ring_element(s4, coeffs)

    return build
