"""Per-criterion summary for the acceptance suite."""

_CRITERIA = {}   # nodeid -> criterion number
_RESULTS = {}    # criterion -> list of (nodeid, outcome)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            _CRITERIA[item.nodeid] = m.args[0]


def pytest_runtest_logreport(report):
    k = _CRITERIA.get(report.nodeid)
    if k is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        if hasattr(report, "wasxfail"):
            outcome = "xfail" if report.skipped else "xpass"
        else:
            outcome = report.outcome
        _RESULTS.setdefault(k, []).append((report.nodeid, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_RESULTS):
        res = _RESULTS[k]
        bad = [(n, o) for n, o in res if o != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        note = ""
        if bad:
            note = "  (" + "; ".join(f"{n.split('::')[-1]}: {o}" for n, o in bad) + ")"
        tr.write_line(f"criterion {k}: {verdict}  [{len(res) - len(bad)}/{len(res)} checks]{note}")
