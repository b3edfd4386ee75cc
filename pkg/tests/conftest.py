import random
from fractions import Fraction

import pytest

from combibounds.channel import Channel
from combibounds.zoo import deletion_channel, grain_channel, random_channel

# 4 inputs, 3 outputs; input degrees (1, 2, 2, 2), output degrees (2, 3, 2)
FIG1_NBRS = [[0], [0, 1], [0, 2], [1, 2]]


def fig1() -> Channel:
    return Channel.from_neighborhoods(FIG1_NBRS, 3)


@pytest.fixture
def fig1_channel() -> Channel:
    return fig1()


def random_corpus(count: int = 100, seed: int = 20240601) -> list[Channel]:
    """Random channels with at most 12 inputs and 12 outputs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        nx, ny = rng.randint(1, 12), rng.randint(1, 12)
        out.append(random_channel(nx, ny, rng.uniform(0.1, 0.6), rng))
    return out


def structured_corpus(max_n: int = 8) -> list[tuple[str, int, Channel]]:
    out = []
    for n in range(2, max_n + 1):
        out.append(("deletion", n, deletion_channel(n)))
        out.append(("grain", n, grain_channel(n)))
    return out


def random_weights(size: int, rng: random.Random) -> list[Fraction]:
    return [Fraction(rng.randint(1, 12), rng.randint(1, 6)) for _ in range(size)]


# -- one summary line per acceptance criterion -------------------------------

_criteria: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _criteria.setdefault(name, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcomes in sorted(_criteria.items(), key=lambda kv: _order(kv[0])):
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  {name}")


def _order(name: str):
    digits = "".join(ch for ch in name.split("_")[2] if ch.isdigit()) if name.count("_") >= 2 else ""
    return (int(digits) if digits else 99, name)
