import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nearly_toric.dyck import DyckPath, all_paths  # noqa: E402

BK_PATH = DyckPath("NNEENNNNEEENNEEE")
PEAK_FIGURE = DyckPath.parse("1,0,1,0,1,1,0,1,1,1,0,0,1,1,0,0,1,0,0,0")
DESCENT_FIGURE = DyckPath.parse("1,1,1,0,0,1,0,1,0,1,1,0,1,1,0,0,0,1,1,1,0,0,0,0")
SPHERICAL_FIGURES = (DyckPath("NNNEEENNNEENEENE"), DyckPath("NNENNNEEENNNEEEE"))
EXCEPTIONAL = (DyckPath("NNNENNEEEE"), DyckPath("NNENNENEEE"), DyckPath("NNNENENEEE"))

# paths of the 312-avoiders of S_5 with exactly one 321, with their labels
UNIQUE_321_N5 = {
    "1,0,1,0,1,1,1,0,0,0": "12543",
    "1,0,1,1,0,1,1,0,0,0": "13542",
    "1,1,0,0,1,1,1,0,0,0": "21543",
    "1,1,0,1,0,1,1,0,0,0": "23541",
    "1,0,1,1,1,0,0,0,1,0": "14325",
    "1,0,1,1,1,0,0,1,0,0": "14352",
    "1,1,0,1,1,0,0,0,1,0": "24315",
    "1,1,0,1,1,0,0,1,0,0": "24351",
    "1,1,1,0,0,0,1,0,1,0": "32145",
    "1,1,1,0,0,0,1,1,0,0": "32154",
    "1,1,1,0,0,1,0,0,1,0": "32415",
    "1,1,1,0,0,1,0,1,0,0": "32451",
}


@pytest.fixture(scope="session")
def paths_upto_8():
    return {n: list(all_paths(n)) for n in range(0, 9)}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
