from __future__ import annotations

import json

from wprm import sweep
from wprm.cli import main


def _run(check, **kw):
    rep = sweep.SweepReport()
    check(rep, **kw)
    return rep


def test_hilbert_four_routes():
    rep = _run(sweep.hilbert_agreement)
    assert rep.ok and len(rep.cases) == sum(3 * q * b + 1 for q in (2, 3, 4, 5) for b in range(2, 8))


def test_hilbert_two_routes():
    assert _run(sweep.hilbert_two_way).ok


def test_regularity_grid():
    assert _run(sweep.regularity).ok


def test_report_bookkeeping():
    rep = sweep.SweepReport()
    rep.record("x", True, q=2)
    rep.record("x", False, q=3)
    assert not rep.ok
    assert rep.summary() == {"x": {"pass": 1, "fail": 1}}
    assert rep.failures() == [{"check": "x", "q": 3, "pass": False}]


def test_full_sweep_exits_zero(capsys):
    code = main(["sweep"])
    doc = json.loads(capsys.readouterr().out)
    assert code == 0, doc["failures"]
