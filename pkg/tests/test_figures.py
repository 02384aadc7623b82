"""Figure rendering: files get written and are real PNGs."""

import pytest

from grasscalc import GrassContext, Partition, witness
from grasscalc.cli import main
from grasscalc.figures import divisibility_chart, save_figure, witness_figure

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def test_witness_figure_writes_png(tmp_path):
    cert = witness(Partition((8, 3, 1)), Partition((4, 4, 1)),
                   GrassContext(10, 21))
    out = tmp_path / "cert.png"
    save_figure(witness_figure(cert), str(out))
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_divisibility_chart_writes_png(tmp_path):
    rows = [{"label": "P^3", "ed": 3}, {"label": "G(1,4)", "ed": 4}]
    out = tmp_path / "chart.png"
    save_figure(divisibility_chart(rows), str(out))
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_cli_witness_figure_flag(tmp_path):
    out = tmp_path / "w.png"
    code = main(["witness", "-k", "5", "-n", "12", "--a", "3,2,1",
                 "--b", "2,2,1", "--figure", str(out)])
    assert code == 0
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_cli_table_figure_flag(tmp_path):
    out = tmp_path / "t.png"
    code = main(["table", "--max-n", "4", "--figure", str(out)])
    assert code == 0
    assert out.read_bytes()[:8] == PNG_MAGIC


def test_empty_inner_shape_renders(tmp_path):
    cert = witness(Partition(()), Partition((2, 1)), GrassContext(1, 4))
    out = tmp_path / "straight.png"
    save_figure(witness_figure(cert), str(out))
    assert out.exists()
