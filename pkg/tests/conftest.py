import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def session_cache_dir(tmp_path_factory):
    """Point the character-table cache at a session-scoped temp directory."""
    d = tmp_path_factory.mktemp("symlevel_cache")
    old = os.environ.get("SYMLEVEL_CACHE_DIR")
    os.environ["SYMLEVEL_CACHE_DIR"] = str(d)
    yield d
    if old is None:
        os.environ.pop("SYMLEVEL_CACHE_DIR", None)
    else:
        os.environ["SYMLEVEL_CACHE_DIR"] = old


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" in nodeid and getattr(rep, "when", "call") == "call":
                rows.append((nodeid.split("::")[-1], "PASS" if outcome == "passed" else "FAIL"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, status in sorted(rows):
            terminalreporter.write_line(f"{status}  {name}")
