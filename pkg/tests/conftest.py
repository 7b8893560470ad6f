import pytest

from dominocells import DominoTableau, SignedPermutation, TableauPair


def W(text: str) -> SignedPermutation:
    return SignedPermutation.parse(text)


# Example pair in rank 2 for w = (4,-3,-2,1); the element is an involution
EX_W = "4,-3,-2,1"
EX_T = {1: [(1, 3), (1, 4)], 2: [(3, 1), (4, 1)], 3: [(2, 2), (3, 2)], 4: [(2, 3), (2, 4)]}
# its image under InSwap(3)
EX_V = "4,-3,1,-2"
EX_V_LEFT = {1: [(1, 3), (1, 4)], 2: [(3, 1), (4, 1)], 3: [(2, 2), (3, 2)], 4: [(2, 3), (3, 3)]}
EX_V_RIGHT = {1: [(1, 3), (1, 4)], 2: [(3, 1), (4, 1)], 3: [(2, 2), (2, 3)], 4: [(3, 2), (3, 3)]}
# right tableau of the image under SignChange(3)
EX_SC_RIGHT = {1: [(3, 1), (4, 1)], 2: [(2, 2), (3, 2)], 3: [(1, 3), (2, 3)], 4: [(1, 4), (2, 4)]}


@pytest.fixture
def example_pair() -> TableauPair:
    T = DominoTableau(2, EX_T)
    return TableauPair(T, T)
