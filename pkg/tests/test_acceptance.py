"""Acceptance criteria at full scale; each test prints one PASS/FAIL line."""
import json

import pytest

from heapcrys.suite import CRITERIA, run_criterion


@pytest.mark.parametrize("cid", sorted(CRITERIA))
def test_criterion(cid, capsys):
    res = run_criterion(cid, bound="full", root_seed=0)
    with capsys.disabled():
        print(f"\ncriterion {cid:2d} {res.status}: {res.name} ({res.runtime_ms} ms)")
    assert res.status == "PASS", json.dumps(res.to_json(timing=False), default=str)[:2000]
