"""foldplot: schema handling, rendering, and the lossless dump round trip."""

import shutil
import subprocess
from pathlib import Path

import pytest

from foldplot import EmptyInput, FigureSpec, SchemaError, read_table, render
from foldplot.cli import main

DATA = Path(__file__).parent / "data"
SAMPLE = DATA / "sample_sweep.csv"  # produced by `multifold figure 3 --grid 0.5:20:0.5`


def table_section(text: str) -> str:
    lines = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
    return "\n".join(lines) + "\n"


def test_read_table_sample():
    table = read_table(str(SAMPLE))
    assert len(table.raw_rows) == 40
    assert set(table.columns) == {"t", "log_rho_exact", "log_rho_leading", "rel_error"}
    assert table.columns["t"][0] == 0.5
    assert dict(table.metadata)["kind"] == "loschmidt"


def test_dump_round_trip_is_byte_identical():
    table = read_table(str(SAMPLE))
    assert table.dump() == table_section(SAMPLE.read_text())


def test_cli_dump_parsed(capsys):
    code = main(["render", "--csv", str(SAMPLE), "--dump-parsed"])
    out = capsys.readouterr().out
    assert code == 0
    assert out == table_section(SAMPLE.read_text())


def test_render_both_panels(tmp_path):
    out = tmp_path / "sample.png"
    path = render(FigureSpec(csv=str(SAMPLE), out=str(out)))
    data = Path(path).read_bytes()
    assert data[:8] == b"\x89PNG\r\n\x1a\n"
    assert len(data) > 5_000


@pytest.mark.parametrize("panel", ["curves", "relative-error"])
def test_render_single_panels_via_cli(tmp_path, panel):
    out = tmp_path / f"{panel}.png"
    code = main(["render", "--csv", str(SAMPLE), "--panel", panel,
                 "--out", str(out)])
    assert code == 0 and out.exists()


def test_single_row_plot_succeeds(tmp_path):
    src = read_table(str(SAMPLE))
    one = tmp_path / "one.csv"
    one.write_text(src.header + "\n" + src.raw_rows[0] + "\n")
    out = tmp_path / "one.png"
    assert main(["render", "--csv", str(one), "--out", str(out)]) == 0
    assert out.exists()


def test_missing_column_is_schema_error(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,log_rho_exact,log_rho_leading\n1.0,2.0,3.0\n")
    with pytest.raises(SchemaError):
        read_table(str(bad))
    assert main(["render", "--csv", str(bad), "--out", str(tmp_path / "x.png")]) == 2
    assert "error" in capsys.readouterr().err


def test_garbled_row_is_schema_error(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text(
        "t,log_rho_exact,log_rho_leading,rel_error\n1.0,2.0,not-a-number,0\n"
    )
    with pytest.raises(SchemaError):
        read_table(str(bad))


def test_empty_input(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("# only = metadata\nt,log_rho_exact,log_rho_leading,rel_error\n")
    with pytest.raises(EmptyInput):
        read_table(str(empty))
    nothing = tmp_path / "nothing.csv"
    nothing.write_text("")
    with pytest.raises(EmptyInput):
        read_table(str(nothing))


def test_rendering_never_alters_data(tmp_path):
    """Render, then dump again: parsed numbers and raw text unchanged."""
    before = read_table(str(SAMPLE))
    render(FigureSpec(csv=str(SAMPLE), out=str(tmp_path / "img.png")))
    after = read_table(str(SAMPLE))
    assert before.dump() == after.dump()
    assert before.columns == after.columns


@pytest.mark.skipif(shutil.which("multifold") is None,
                    reason="producer CLI not installed")
def test_live_pipeline_from_producer(tmp_path):
    """End to end against a freshly produced sweep file."""
    csv_path = tmp_path / "fig3.csv"
    proc = subprocess.run(
        ["multifold", "figure", "3", "--grid", "0.5:10:0.5",
         "--out", str(csv_path)],
        capture_output=True, text=True, timeout=300,
    )
    assert proc.returncode == 0
    out = tmp_path / "fig3.png"
    assert main(["render", "--csv", str(csv_path), "--panel", "both",
                 "--out", str(out)]) == 0
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    dump = subprocess.run(
        ["foldplot", "render", "--csv", str(csv_path), "--dump-parsed"],
        capture_output=True, text=True, timeout=120,
    ) if shutil.which("foldplot") else None
    if dump is not None:
        assert dump.returncode == 0
        body = [l for l in csv_path.read_text().splitlines()
                if l and not l.startswith("#")]
        assert dump.stdout == "\n".join(body) + "\n"
