"""Shared pytest wiring: the acceptance verdict summary."""

VERDICTS: list[tuple[int, str, bool]] = []
NOTES: list[str] = []


def record_verdict(num: int, label: str, ok: bool) -> None:
    VERDICTS.append((num, label, ok))


def record_note(text: str) -> None:
    NOTES.append(text)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not VERDICTS:
        return
    terminalreporter.section("acceptance verdicts")
    for num, label, ok in sorted(VERDICTS):
        state = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"acceptance {num:02d} {label}: {state}")
    for note in NOTES:
        terminalreporter.write_line(note)
