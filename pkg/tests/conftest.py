import pytest
from hypothesis import strategies as st

from ws_lab.diagrams import ChordDiagram


@st.composite
def diagrams(draw, min_order=0, max_order=6):
    n = draw(st.integers(min_order, max_order))
    labels = [k for k in range(1, n + 1) for _ in range(2)]
    return ChordDiagram(draw(st.permutations(labels)))


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(number, title, ok, detail=""):
        line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}" + (f" -- {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
