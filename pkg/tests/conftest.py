import pytest

from fcgroups import AffineGroup, PermGroup, load_group
from fcgroups.perm import from_cycles


@pytest.fixture(scope="session")
def fx():
    """Bundled fixture groups by name."""
    names = ("trivial", "S3", "D8", "A4", "C12", "Dinf", "ZxS3", "Z2C4")
    return {n: load_group(n).group for n in names}


@pytest.fixture(scope="session")
def dinf(fx):
    return fx["Dinf"]


@pytest.fixture(scope="session")
def zxs3(fx):
    return fx["ZxS3"]


@pytest.fixture(scope="session")
def z2c4(fx):
    return fx["Z2C4"]


@pytest.fixture(scope="session")
def z2():
    return AffineGroup(2, PermGroup(1, []), [], name="Z2")


def cyc(n, *cycles):
    return from_cycles(n, *[list(c) for c in cycles])


def aff(G, v, f=None):
    """Affine element from a vector and optional 1-based image array."""
    if f is None:
        return G.translation(tuple(v))
    return G.parse_element({"v": list(v), "f": list(f)})


ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str, elapsed: float, limit: float) -> None:
    status = "PASS" if ok and elapsed < limit else "FAIL"
    line = f"criterion {criterion:2d}: {status}  {detail}  ({elapsed:.2f}s, limit {limit:g}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
