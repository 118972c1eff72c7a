import time

import pytest

from chromabound import bounds, selfcheck
from chromabound.cli import main


def test_quick_level_passes_in_time(capsys):
    start = time.perf_counter()
    code = main(["selfcheck", "--level", "quick"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert code == 0, out
    assert elapsed < 60
    for name in selfcheck.SUITES:
        assert f"[PASS] {name}" in out


def test_sign_flip_gives_named_failure(monkeypatch, capsys):
    original = bounds._f
    monkeypatch.setattr(bounds, "_f", lambda *args: -original(*args))
    code = main(["selfcheck", "--level", "quick", "--only", "tree-bounds", "--only", "bound-engine"])
    out = capsys.readouterr().out
    assert code == 1
    assert "[FAIL] tree-bounds" in out and "[FAIL] bound-engine" in out


def test_crashing_suite_is_reported(monkeypatch):
    def broken(level):
        raise RuntimeError("boom")

    monkeypatch.setitem(selfcheck.SUITES, "penrose", broken)
    (res,) = selfcheck.run("quick", ["penrose"])
    assert not res.passed and "boom" in res.detail


def test_unknown_level():
    with pytest.raises(ValueError):
        selfcheck.make_level("medium")
