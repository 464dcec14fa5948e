"""All eleven acceptance criteria, exact, one PASS/FAIL line each.

The lines are printed as the criteria run and repeated in the pytest
terminal summary (see ``conftest.py``).
"""

import pytest

from qcipoincare.acceptance import CRITERIA, run_criterion

LINES: list[str] = []


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    outcome = run_criterion(number)
    LINES.append(outcome.line())
    print(outcome.line())
    assert outcome.ok, outcome.line()


def test_residue_identity_requires_edim_preserved():
    """x in F[x]/(x^2) is q.c.i. with R = k: the bare (1-t^2)^(n-m) factor misses (1-t)^-1."""
    from qcipoincare.acceptance import certified_instances
    from qcipoincare.series import one_minus_t, one_minus_t2

    c = next(c for c in certified_instances() if c.label == "x^1 in x^2")
    assert c.qci and (c.edim_q, c.edim_r) == (1, 0)
    D = c.pkq.order
    assert c.pkq != c.pkr * one_minus_t2(D) ** (c.n - c.m)
    assert c.pkq * one_minus_t(D) == c.pkr * one_minus_t2(D) ** (c.n - c.m)
