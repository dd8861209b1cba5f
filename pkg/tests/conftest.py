import re

import pytest

from chromachain.gateway import BackendConfig
from chromachain.knowledge import CompositionRules, load_knowledge
from chromachain.pipeline import Pipeline
from chromachain.scene import load_scene_registry

PAPER_STYLES = (
    "Modern and Simple",
    "Classical and Elegant",
    "Cool and Natural",
    "Warm and Cozy",
    "Energetic and Dynamic",
)


@pytest.fixture(scope="session")
def kb():
    return load_knowledge()


@pytest.fixture(scope="session")
def rules():
    return CompositionRules()


@pytest.fixture(scope="session")
def scenes():
    return load_scene_registry()


@pytest.fixture()
def pipeline():
    return Pipeline(cfg=BackendConfig(kind="mock", seed=0))


_ACCEPTANCE = re.compile(r"test_criterion_(\d+)")
_acceptance_results: dict[str, tuple[int, str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = _ACCEPTANCE.search(report.nodeid)
    if m:
        _acceptance_results[report.nodeid] = (int(m.group(1)), report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (num, outcome) in sorted(_acceptance_results.items(), key=lambda kv: kv[1][0]):
        status = "PASS" if outcome == "passed" else outcome.upper()
        terminalreporter.write_line(f"criterion {num}: {status}  ({nodeid.split('::')[-1]})")
