import re

import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when != "call":
        return
    m = re.match(r"test_criterion_(\d+)", item.name)
    if m and item.module.__name__.endswith("test_acceptance"):
        verdict = "PASS" if rep.passed else "FAIL"
        item.config.pluginmanager.get_plugin("terminalreporter").write_line(
            f"ACCEPTANCE {int(m.group(1)):2d} {verdict}  ({item.name}, {rep.duration:.1f}s)"
        )
