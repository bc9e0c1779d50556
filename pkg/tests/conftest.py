"""Configure unit tests."""

from pathlib import Path

import pytest
from gv_bounds.oracle import ExplicitGraph, build_gilbert_graph
from gv_bounds.params import CodeParams, SplitParams


@pytest.fixture
def known_binary_codes() -> dict[tuple[int, int], int]:
    """Get known values of A2(n, d), the largest binary code of length n and distance d."""
    known = {}
    for n in range(1, 9):
        known[(n, 1)] = 2**n
        if n >= 2:
            known[(n, 2)] = 2 ** (n - 1)
    known.update({(3, 3): 2, (4, 3): 2, (5, 3): 4, (6, 3): 8, (7, 3): 16, (8, 3): 20})
    known.update({(4, 4): 2, (5, 4): 2, (6, 4): 4, (7, 4): 8, (8, 4): 16})
    known.update({(5, 5): 2, (6, 5): 2, (7, 5): 2, (8, 5): 4})
    known.update({(6, 6): 2, (7, 6): 2, (8, 6): 2, (7, 7): 2, (8, 7): 2, (8, 8): 2})
    return known


@pytest.fixture
def gilbert_4_3() -> ExplicitGraph:
    """Build the Gilbert graph of binary words of length 4 with distance 3."""
    return build_gilbert_graph(CodeParams(4, 3))


@pytest.fixture
def default_split() -> SplitParams:
    """Get the split used for the threshold analysis."""
    return SplitParams(lam=0.999, epsilon=1e-6)


@pytest.fixture
def codebook_5_3_file(tmp_path: Path) -> Path:
    """Write a maximum binary code of length 5 and distance 3 to a file."""
    path = tmp_path / "code.txt"
    path.write_text("# n=5 d=3 q=2 size=4 mindist=3\n00000\n00111\n11001\n11110\n", encoding="utf-8")
    return path
