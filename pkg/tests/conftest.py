from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import REPORT_LINES

    if REPORT_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(REPORT_LINES):
            terminalreporter.write_line(line)
