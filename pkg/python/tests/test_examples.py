"""
Smoke tests for the example scripts
"""

import runpy
from pathlib import Path

EXAMPLES = Path(__file__).resolve().parent.parent / "examples"


def test_basic_diagram(capsys):
    """Test the basic example runs"""
    runpy.run_path(str(EXAMPLES / "basic_diagram.py"), run_name="example")["main"]()
    out = capsys.readouterr().out
    assert ".#.#.#." in out
    assert "Example Complete" in out


def test_feature_report(tmp_path, monkeypatch, capsys):
    """Test the feature report example writes its image"""
    monkeypatch.chdir(tmp_path)
    runpy.run_path(str(EXAMPLES / "feature_report.py"), run_name="example")["main"](str(tmp_path))
    assert (tmp_path / "sin_diagram.png").read_bytes().startswith(b"\x89PNG")
    assert "Period   7" in capsys.readouterr().out
