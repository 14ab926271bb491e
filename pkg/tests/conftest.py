import pytest

from aspkernel import ground, parse_program
from aspkernel.corpus import PROGRAMS


@pytest.fixture
def corpus():
    """Ground versions of the corpus programs, keyed by name."""
    return {name: ground(parse_program(text)) for name, text in PROGRAMS.items()}


def answer_strings(models):
    return [set(m.strings()) for m in models]


ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record a pass/fail line for an acceptance criterion."""
    def record(label, ok, detail=""):
        ACCEPTANCE_RESULTS.append((label, bool(ok), detail))
        assert ok, f"{label}: {detail}"
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
