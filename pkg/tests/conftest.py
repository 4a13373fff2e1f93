"""Shared pytest hooks: an acceptance summary line per criterion."""

import re

CRITERIA = {
    1: "even-word count equals n!/2 and the rank certificate holds, n = 3..7",
    2: "defining relations reduce to exact zero; f-presentation exact",
    3: "relation residuals < 1e-10 for every shape and sample q, n = 3..7",
    4: "regularized q = 1 matrices match the orthogonal form within 1e-12",
    5: "classification: commutants, splits, intertwiners, sum of dim^2",
    6: "1000 random word images match their normal forms within 1e-9",
    7: "induction multiplicities reproduce the index-2 pattern, n = 3..5",
    8: "smallest split spectrum solves z^2 + (1+c^2)z + 1 and is unimodular",
}

_PATTERN = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(key, []):
            match = _PATTERN.search(report.nodeid)
            if match:
                num = int(match.group(1))
                outcomes[num] = outcomes.get(num, True) and key == "passed"
    if not outcomes:
        return
    terminalreporter.write_line("")
    for num in sorted(outcomes):
        verdict = "PASS" if outcomes[num] else "FAIL"
        terminalreporter.write_line(
            f"[acceptance] criterion {num}: {verdict} - {CRITERIA[num]}")
