"""
Tests for the high-level API
"""

import pytest

from peakcell import (
    Convexity,
    EmptyInputError,
    InvalidArgumentError,
    RenderFormat,
    RenderSpec,
    Series,
    analyze_series,
    build_diagram,
    diagram_from_csv,
    iterate,
    render_series,
)

from .oracles import decode_pbm

WEEKLY = [5, 9, 9, 9, 9, 9, 4]


@pytest.fixture(autouse=True)
def no_local_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("PEAKCELL_CONFIG", raising=False)


def test_build_diagram_explicit_steps():
    """Test build_diagram matches iterate"""
    diagram = build_diagram([0, 2, 0.5, 2, 0.5, 2, 0], steps=2)
    expected = iterate([0, 2, 0.5, 2, 0.5, 2, 0], 2)
    assert diagram.masks.tolist() == expected.masks.tolist()
    assert diagram.layers.tolist() == expected.layers.tolist()


def test_build_diagram_default_steps():
    """Test the default K is min(N, 256) and at least 1"""
    assert build_diagram(list(range(10))).steps == 10
    assert build_diagram([0.0] * 300).steps == 256
    assert build_diagram([]).steps == 1


def test_build_diagram_uses_configured_cap(tmp_path):
    """Test max_default_steps from ./config.toml"""
    (tmp_path / "config.toml").write_text("[iteration]\nmax_default_steps = 16\n")
    assert build_diagram([0.0] * 100).steps == 16


def test_build_diagram_accepts_series():
    """Test a Series is used as is"""
    series = Series([1.0, 3.0, 1.0])
    assert build_diagram(series, steps=1).source is series


def test_analyze_series_weekly():
    """Test analyze_series on the weekly pattern"""
    report = analyze_series(WEEKLY * 20, steps=64)
    assert report.periods[0].period == 7
    assert report.convexity is Convexity.MIXED


def test_analyze_series_options():
    """Test keyword options reach the detectors"""
    report = analyze_series(list(range(50)), steps=8, window=5, stationary_min_length=50)
    assert report.instabilities == []
    assert [(s.start, s.end) for s in report.stationary] == [(0, 49)]
    with pytest.raises(InvalidArgumentError):
        analyze_series(list(range(50)), steps=8, threshold=2.0)


def test_render_series_writes_file(tmp_path):
    """Test render_series returns bytes and saves them"""
    out = tmp_path / "d.pbm"
    data = render_series([0, 1, 0, 1, 0], steps=3, output_path=out)
    assert out.read_bytes() == data
    width, height, _ = decode_pbm(data)
    assert (width, height) == (5, 3)


def test_render_series_ascii():
    """Test a custom render spec"""
    data = render_series([0, 1, 0], steps=1, spec=RenderSpec(format=RenderFormat.ASCII))
    assert data == b".#.\n"


def test_diagram_from_csv(tmp_path):
    """Test loading one CSV column"""
    path = tmp_path / "data.csv"
    path.write_text("t,value\n0,0\n1,2\n2,0.5\n3,2\n4,0.5\n5,2\n6,0\n")
    diagram = diagram_from_csv(path, column=1, steps=2)
    assert diagram.n == 7
    assert diagram.masks.astype(int).tolist() == [
        [0, 1, 0, 1, 0, 1, 0],
        [0, 0, 1, 0, 1, 0, 0],
    ]


def test_diagram_from_csv_empty(tmp_path):
    """Test a header-only file"""
    path = tmp_path / "empty.csv"
    path.write_text("value\n")
    with pytest.raises(EmptyInputError):
        diagram_from_csv(path)
