"""Every acceptance criterion at its stated tolerance and time limit.

Each test prints one JSON line with PASS/FAIL and the measured values,
whether or not pytest is capturing output.  Run this file directly for
the same lines without pytest.
"""

import pytest

from monophilic import paths, verify


@pytest.fixture
def report(capsys):
    def emit(result):
        with capsys.disabled():
            print(f"\n{result.status} criterion {result.criterion}: {result.line()}")
    return emit


@pytest.mark.parametrize("criterion", verify.CRITERIA, ids=lambda c: f"{c.number:02d}")
def test_criterion(criterion, report):
    result = verify.run_criterion(criterion, threads=2)
    report(result)
    assert result.passed, result.measured


def test_harness_surfaces_a_corrupted_path_constant(monkeypatch, report):
    real_A = paths.A
    monkeypatch.setattr(paths, "A", lambda k, n: real_A(k, n) + (1 if (k, n) == (4, 3) else 0))
    (formulas,) = [c for c in verify.CRITERIA if c.number == 2]
    result = verify.run_criterion(formulas)
    report(result)
    assert result.status == "FAIL"
    assert [4, 3] in [list(x) for x in result.measured["construction_mismatches"]]


if __name__ == "__main__":
    import sys

    results = verify.run_suite("full", threads=2, emit=lambda r: print(r.line(), flush=True))
    sys.exit(0 if all(r.passed for r in results) else 1)
