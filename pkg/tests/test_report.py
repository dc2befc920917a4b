from pathlib import Path

from dominopack.report import SERIES_HEADER, series_csv, write_series


def test_series_csv_shape_and_markers():
    text = series_csv(20)
    lines = text.rstrip().splitlines()
    assert lines[0] == SERIES_HEADER
    assert len(lines) == 22  # header plus sizes 0..20
    first = lines[1].split(",")
    assert first[0] == "0" and first[5] == "undef" and first[7] == "undef"
    n1 = lines[2].split(",")
    assert n1[7] == "undef"  # zero bound at size 1


def test_series_csv_values_at_200():
    lines = series_csv(200).rstrip().splitlines()
    last = lines[-1].split(",")
    assert last[0] == "200" and last[1] == "3368" and last[2] == "3384"
    assert last[4] == "3376/1"
    assert last[8] == "1717/282"  # 20604/3384 in lowest terms
    assert last[7].startswith("6.08")


def test_series_is_byte_stable():
    assert series_csv(50) == series_csv(50)


def test_write_series_with_figures(tmp_path: Path):
    out = tmp_path / "series.csv"
    written = write_series(40, out, figures=True)
    assert written[0] == out and out.exists()
    assert len(written) == 3
    for fig in written[1:]:
        assert fig.suffix == ".png" and fig.stat().st_size > 0


def test_write_series_without_figures(tmp_path: Path):
    out = tmp_path / "bare.csv"
    written = write_series(10, out, figures=False)
    assert written == [out]
