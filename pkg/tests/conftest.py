import sys


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in mod.TITLES.items():
        checks = mod.RESULTS.get(n)
        if not checks:
            terminalreporter.write_line(f"criterion {n:>2} ({title}): NOT RUN")
            continue
        failed = [label for label, ok in checks if not ok]
        if failed:
            terminalreporter.write_line(
                f"criterion {n:>2} ({title}): FAIL ({len(failed)} of {len(checks)} checks): " + "; ".join(failed)
            )
        else:
            terminalreporter.write_line(f"criterion {n:>2} ({title}): PASS ({len(checks)} checks)")
