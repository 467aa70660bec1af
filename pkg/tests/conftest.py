import pytest

from htforest.text import parse_diagram

CRITERIA = 11
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(criterion: int, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[criterion] = (ok, detail)
        assert ok, f"acceptance {criterion} failed: {detail}"

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in range(1, CRITERIA + 1):
        ok, detail = ACCEPTANCE.get(k, (False, "did not complete"))
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")


@pytest.fixture
def x_elem():
    """(*,(*,*));[1,2,3];((*,*),*): 0w -> 00w, 10w -> 01w, 11w -> 1w."""
    return parse_diagram("(*,(*,*));[1,2,3];((*,*),*)")


@pytest.fixture
def swap():
    return parse_diagram("(*,*);[2,1];(*,*)")
