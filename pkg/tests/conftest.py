"""Prints one line per acceptance criterion at the end of the run."""

from __future__ import annotations


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" and outcome != "error":
                continue
            props = dict(getattr(rep, "user_properties", ()))
            if "criterion" in props:
                rows.append((props["criterion"], "PASS" if outcome == "passed" else "FAIL",
                             props.get("title", ""), rep.duration))
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, verdict, title, secs in sorted(rows):
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}  ({secs:.2f}s)")
