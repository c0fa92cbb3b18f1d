"""Acceptance gate: every criterion runs at its stated tolerance, one
pass/fail line per claim (pytest -v).

The three PS# sweeps are exhaustive over all 2^17 (shift, affine) pairs
each and dominate the runtime of this module (a few minutes total).
"""

import os

import pytest

from bentforge.verify import CLAIMS

JOBS = min(4, os.cpu_count() or 1)


@pytest.mark.parametrize(
    "claim", CLAIMS, ids=[f"c{c.criterion:02d}-{c.name}" for c in CLAIMS]
)
def test_acceptance(claim):
    ok, detail = claim.run({"jobs": JOBS})
    assert ok, f"criterion {claim.criterion} [{claim.name}]: {detail}"
