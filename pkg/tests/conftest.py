"""Collects acceptance-criterion outcomes and prints one line per criterion
at the end of the run."""

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, name: str, ok: bool, detail: str) -> bool:
    ACCEPTANCE[number] = (name, bool(ok), detail)
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {number:2d}. {name}: {detail}")
