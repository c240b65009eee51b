from fractions import Fraction

import pytest

from dbmis.bench import SUITES, fmt_ratio, run_ratio_suite
from dbmis.errors import InvalidArgument


def test_zero_trials():
    rep = run_ratio_suite("algorithm1", 0, 1)
    assert rep.rows == [] and rep.violations == 0 and rep.min_ratio is None
    assert "trials 0" in rep.to_text()


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_clean_and_deterministic(suite):
    a = run_ratio_suite(suite, 25, 3)
    b = run_ratio_suite(suite, 25, 3)
    assert a.to_csv() == b.to_csv() and a.to_text() == b.to_text()
    assert a.violations == 0
    text = a.to_csv() + a.to_text()
    assert "." not in text.replace("via-parity", "")  # exact ratios only


def test_params_and_errors():
    rep = run_ratio_suite("branching", 5, 0, {"solver": "via-parity"})
    assert all(r.solver == "via-parity" for r in rep.rows)
    with pytest.raises(InvalidArgument):
        run_ratio_suite("algorithm1", 1, 0, {"p": 2})
    with pytest.raises(InvalidArgument):
        run_ratio_suite("nope", 1, 0)
    with pytest.raises(InvalidArgument):
        run_ratio_suite("algorithm1", -1, 0)


def test_fmt_ratio():
    assert fmt_ratio(Fraction(6, 8)) == "3/4"
    assert fmt_ratio(Fraction(1)) == "1/1"
    assert fmt_ratio(None) == "-"
