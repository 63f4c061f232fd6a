"""Shared fixture codes: the validated reference diagrams used across the suite."""
import pytest

import knotoids as K

# four-crossing virtual knotoid with signs (-1,-1,-1,+1); its 0-smoothing at
# crossing 1 is the labelled three-crossing flat knotoid FLAT3
VK4 = "O1- U2- U3- U4+ O3- O2- U1- O4+"
FLAT3 = "B1 B3 A2 A3 A1 B2"

# singular knotoid whose resolutions drive the derivative fixtures
SING1 = "O2+ SA1 U2+ SB1"
SING1_PLUS = "O2+ O1+ U2+ U1+"
SING1_MINUS = "O2+ U1- U2+ O1-"

# six-crossing homotopic pair separated by the gluing invariant only
HEX1 = "U1+ U5- O6+ O1+ O3- U4+ O5- U6+ U2- U3- O4+ O2-"
HEX2 = "U1+ O5+ U6- O1+ O3- U4+ U5+ O6- U2- U3- O4+ O2-"
STRING_G5 = "B1 SA5* A6 A1 B3 B4 SB5* B6 A2 A3 A4 B2"
STRING_G6 = "B1 A5 SA6* A1 B3 B4 B5 SB6* A2 A3 A4 B2"

# four-crossing homotopic pair separated from the 1-smoothing invariant
QUAD3 = "U2+ O1- U3- O4+ U1- O2+ U4+ O3-"
QUAD4 = "U2+ O1- O3+ U4- U1- O2+ O4- U3+"
STRING_G3 = "B2 B1 SA3* A4 A1 A2 B4 SB3*"
STRING_G4 = "B2 B1 A3 SA4* A1 A2 SB4* B3"

B5 = [
    [0, 2, -2, -2, 0, 2, 0],
    [-2, 0, -2, -2, 0, 1, 0],
    [2, 2, 0, 1, 2, 2, 2],
    [2, 2, -1, 0, 1, 2, 1],
    [0, 0, -2, -1, 0, 1, 0],
    [-2, -1, -2, -2, -1, 0, -1],
    [0, 0, -2, -1, 0, 1, 0],
]
B6 = [
    [0, 2, -2, -2, 0, 0, 2],
    [-2, 0, -2, -2, 0, 0, 1],
    [2, 2, 0, 1, 2, 2, 2],
    [2, 2, -1, 0, 1, 1, 2],
    [0, 0, -2, -1, 0, 0, 1],
    [0, 0, -2, -1, 0, 0, 1],
    [-2, -1, -2, -2, -1, -1, 0],
]
B3 = [
    [0, 2, 2, -2, -2],
    [-2, 0, 0, -2, -3],
    [-2, 0, 0, -1, -2],
    [2, 2, 1, 0, 0],
    [2, 3, 2, 0, 0],
]
B4 = [
    [0, 2, 2, -2, -2],
    [-2, 0, 0, -3, -2],
    [-2, 0, 0, -2, -1],
    [2, 3, 2, 0, 0],
    [2, 2, 1, 0, 0],
]


@pytest.fixture
def vk4():
    return K.parse(VK4)


@pytest.fixture
def flat3():
    return K.parse(FLAT3)


@pytest.fixture
def sing1():
    return K.parse(SING1)
