import csv

from ffkit import construct_field
from ffkit.cli import run
from ffkit.report import write_field_report

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_writes_all_files(tmp_path, F8):
    paths = write_field_report(F8, tmp_path / "f8")
    names = sorted(p.name for p in paths)
    assert names == [
        "addition.csv",
        "multiplication.csv",
        "orders.csv",
        "tables.png",
    ]
    for p in paths:
        assert p.exists() and p.stat().st_size > 0


def test_csv_contents_match_tables(tmp_path, F4):
    outdir = tmp_path / "f4"
    write_field_report(F4, outdir)
    with (outdir / "addition.csv").open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["+", "0", "1", "z", "z+1"]
    assert rows[4] == ["z+1", "z+1", "z", "1", "0"]
    with (outdir / "multiplication.csv").open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["*", "0", "1", "z", "z+1"]
    assert rows[3] == ["z", "0", "z", "z+1", "1"]


def test_orders_csv(tmp_path, F7):
    outdir = tmp_path / "f7"
    write_field_report(F7, outdir)
    with (outdir / "orders.csv").open() as handle:
        rows = list(csv.reader(handle))
    assert rows[0] == ["element", "multiplicative_order", "is_generator"]
    generators = [r[0] for r in rows[1:] if r[2] == "True"]
    assert generators == ["3", "5"]


def test_figure_is_png(tmp_path, F9):
    outdir = tmp_path / "f9"
    paths = write_field_report(F9, outdir)
    png = [p for p in paths if p.suffix == ".png"][0]
    assert png.read_bytes()[:8] == PNG_MAGIC


def test_large_field_uses_unannotated_grid(tmp_path):
    outdir = tmp_path / "f25"
    paths = write_field_report(construct_field(5, 2), outdir)
    assert (outdir / "tables.png").exists()
    assert len(paths) == 4


def test_cli_report_prints_paths(tmp_path, capsys):
    outdir = tmp_path / "cli_out"
    code = run(["report", "-p", "2", "-r", "2", "-o", str(outdir)])
    out = capsys.readouterr().out
    assert code == 0
    printed = out.strip().splitlines()
    assert len(printed) == 4
    assert str(outdir / "tables.png") in printed
