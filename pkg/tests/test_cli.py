import csv
import io

import pytest

from morphocube.cli import main, parse_checkpoints, parse_size
from morphocube.raster import load_raster
from morphocube.space import load_csv
from tests.util import checkerboard

HEADER = "label,category,De,iPe,I,population,source"


def _write_pgm(path, rows):
    body = "\n".join(" ".join(str(v) for v in row) for row in rows)
    path.write_text(f"P2\n{len(rows[0])} {len(rows)}\n255\n{body}\n")

    return str(path)


def _blank(size=8):
    return [[255] * size for _ in range(size)]


@pytest.fixture
def tiny(tmp_path):
    rows = _blank()
    rows[3][4] = 0

    return _write_pgm(tmp_path / "tiny.pgm", rows)


@pytest.fixture
def empty(tmp_path):
    return _write_pgm(tmp_path / "empty.pgm", _blank())


@pytest.fixture
def dataset_file(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text(
        HEADER
        + "\n"
        + "midrange,city,0.45,0.5,0.3,250000,\n"
        + "sparse,non-urban,0.05,0.95,0.3,,\n"
        + "packed,,0.95,0.01,0.95,,\n"
    )

    return str(path)


def test_parse_size_and_checkpoints():
    assert parse_size("30x20") == (30, 20)
    assert parse_size("12") == (12, 12)
    assert parse_checkpoints("10,20, 40") == [10, 20, 40]


def test_measure_hull_density_of_a_single_cell(tiny, capsys):
    assert main(["measure", "--mode", "hull", tiny]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == HEADER
    assert lines[1].startswith("tiny,,1,")


def test_measure_empty_raster(empty, capsys):
    assert main(["measure", empty]) == 0

    assert capsys.readouterr().out.splitlines()[1] == f"empty,,0,1,1,,{empty}"


def test_measure_reports_failures_and_keeps_going(tiny, tmp_path, capsys):
    missing = str(tmp_path / "missing.pgm")

    assert main(["measure", tiny, missing]) == 1

    captured = capsys.readouterr()
    rows = captured.out.splitlines()
    assert len(rows) == 2
    assert rows[1].startswith("tiny,")
    assert "missing.pgm" in captured.err


def test_measure_output_does_not_depend_on_workers(tiny, empty, capsys):
    main(["measure", tiny, empty, "--workers", "1"])
    single = capsys.readouterr().out

    main(["measure", tiny, empty, "--workers", "4"])

    assert capsys.readouterr().out == single


def test_measure_appends_to_dataset(tiny, empty, tmp_path):
    dataset = str(tmp_path / "corpus.csv")

    assert main(["measure", tiny, "--dataset", dataset]) == 0
    assert main(["measure", empty, "--dataset", dataset]) == 0

    assert [point.label for point in load_csv(dataset).points] == ["tiny", "empty"]

    # Labels must stay unique; the colliding input fails and new inputs are still appended
    again = _write_pgm(tmp_path / "again.pgm", _blank())
    assert main(["measure", tiny, again, "--dataset", dataset]) == 1

    assert [point.label for point in load_csv(dataset).points] == ["tiny", "empty", "again"]


def test_measure_same_stem_keeps_the_first(tmp_path, capsys):
    (tmp_path / "a").mkdir()
    (tmp_path / "b").mkdir()
    first = _write_pgm(tmp_path / "a" / "city.pgm", _blank())
    second = _write_pgm(tmp_path / "b" / "city.pgm", _blank())

    assert main(["measure", first, second]) == 1

    captured = capsys.readouterr()
    assert captured.out.splitlines() == [HEADER, f"city,,0,1,1,,{first}"]
    assert second in captured.err
    assert "already in the dataset" in captured.err


def test_generate_is_deterministic(tmp_path):
    first, second = tmp_path / "a.pgm", tmp_path / "b.pgm"
    args = ["generate", "--kind", "random", "--p", "0.5", "--size", "64", "--seed", "7"]

    assert main([*args, "--out", str(first)]) == 0
    assert main([*args, "--out", str(second)]) == 0

    assert first.read_bytes() == second.read_bytes()


def test_generate_checkerboard(tmp_path):
    out = tmp_path / "ordered.txt"

    assert main(["generate", "--kind", "ordered", "--block", "1", "--street", "1", "--size", "8", "--out", str(out)]) == 0

    assert load_raster(str(out)) == checkerboard(8, 8)


def test_generate_single_particle_dla(tmp_path):
    out = tmp_path / "dla.pgm"

    assert main(["generate", "--kind", "dla", "--particles", "1", "--size", "101", "--out", str(out)]) == 0

    grid = load_raster(str(out))
    assert grid.built_count == 1
    assert grid.cells[50, 50] == 1


def test_generate_and_measure(tmp_path, capsys):
    out = tmp_path / "dispersed.pgm"

    assert main(["generate", "--kind", "dispersed", "--spacing", "4", "--size", "32", "--out", str(out), "--measure"]) == 0

    row = capsys.readouterr().out.splitlines()[1]
    assert row.startswith("dispersed,theoretical,0.0625,")
    assert ",genspec:dispersed:" in row

    # The measured row never replaces the raster
    assert load_raster(str(out)).built_count == 64


def test_generate_and_measure_into_dataset(tmp_path, capsys):
    out, dataset = tmp_path / "dispersed.txt", str(tmp_path / "corpus.csv")
    args = ["generate", "--kind", "dispersed", "--spacing", "4", "--size", "32", "--measure", "--dataset", dataset]

    assert main([*args, "--out", str(out)]) == 0

    assert capsys.readouterr().out == ""
    assert load_raster(str(out)).built_count == 64
    assert [point.label for point in load_csv(dataset).points] == ["dispersed"]

    # Same label again: the raster is still written, the dataset keeps its single row
    assert main([*args, "--out", str(out)]) == 1
    assert "already in the dataset" in capsys.readouterr().err
    assert len(load_csv(dataset)) == 1


def test_generate_anneal_trace(tmp_path):
    trace = tmp_path / "trace.csv"

    args = ["generate", "--kind", "anneal", "--size", "16", "--steps", "20", "--out", str(tmp_path / "a.pgm")]
    assert main([*args, "--trace", str(trace)]) == 0

    lines = trace.read_text().splitlines()
    assert lines[0] == "step,H,accepted"
    assert len(lines) == 21


def test_generate_failures(tmp_path, capsys):
    assert main(["generate", "--kind", "random", "--size", "8"]) == 2

    out = str(tmp_path / "x.pgm")
    assert main(["generate", "--kind", "ordered", "--block", "8", "--street", "2", "--size", "8", "--out", out]) == 1
    assert "error:" in capsys.readouterr().err


def test_plot_empty_dataset(tmp_path):
    dataset = tmp_path / "empty.csv"
    dataset.write_text(HEADER + "\n")

    assert main(["plot", str(dataset), "--out", str(tmp_path / "plots")]) == 0

    for name in ("De-iPe.svg", "De-I.svg", "iPe-I.svg"):
        assert (tmp_path / "plots" / name).read_text().startswith("<?xml")


def test_plot_is_byte_identical(dataset_file, tmp_path):
    main(["plot", dataset_file, "--out", str(tmp_path / "first")])
    main(["plot", dataset_file, "--out", str(tmp_path / "second")])

    for name in ("De-iPe.svg", "De-I.svg", "iPe-I.svg"):
        assert (tmp_path / "first" / name).read_bytes() == (tmp_path / "second" / name).read_bytes()


def test_plot_malformed_dataset(tmp_path, capsys):
    dataset = tmp_path / "bad.csv"
    dataset.write_text(HEADER + "\n" + "a,,0.1,0.2,0.3,,\n" + "b,,x,0.2,0.3,,\n")

    assert main(["plot", str(dataset), "--out", str(tmp_path / "plots")]) == 1
    assert "line 3" in capsys.readouterr().err


def test_classify_default_bands(dataset_file, capsys):
    assert main(["classify", dataset_file]) == 0

    assert capsys.readouterr().out.splitlines() == [
        "label,band",
        "midrange,urban-band",
        "sparse,non-urban",
        "packed,unoccupied",
    ]


def test_classify_custom_bands(dataset_file, tmp_path, capsys):
    bands = tmp_path / "bands.json"
    bands.write_text('[{"name": "all", "De": [0, 1], "iPe": [0, 1], "I": [0, 1]}]')

    assert main(["classify", dataset_file, "--bands", str(bands)]) == 0

    assert capsys.readouterr().out.splitlines()[1:] == ["midrange,all", "sparse,all", "packed,all"]


def test_classify_bad_band_table(dataset_file, tmp_path):
    bands = tmp_path / "bands.json"
    bands.write_text("[]")

    assert main(["classify", dataset_file, "--bands", str(bands)]) == 1


def test_cluster(dataset_file, capsys):
    assert main(["cluster", dataset_file, "--k", "3"]) == 0

    assert capsys.readouterr().out.splitlines() == ["label,cluster", "midrange,0", "sparse,1", "packed,2"]

    assert main(["cluster", dataset_file, "--k", "4"]) == 1


def test_classify_and_cluster_quote_labels(tmp_path, capsys):
    dataset = tmp_path / "quoted.csv"
    dataset.write_text(HEADER + "\n" + '"alpha, north",,0.1,0.9,0.3,,\n' + '"say ""hi""",,0.9,0.1,0.8,,\n')
    bands = tmp_path / "bands.json"
    bands.write_text('[{"name": "all", "De": [0, 1], "iPe": [0, 1], "I": [0, 1]}]')

    assert main(["classify", str(dataset), "--bands", str(bands)]) == 0
    assert list(csv.reader(io.StringIO(capsys.readouterr().out))) == [
        ["label", "band"],
        ["alpha, north", "all"],
        ['say "hi"', "all"],
    ]

    assert main(["cluster", str(dataset), "--k", "2"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert [row[0] for row in rows] == ["label", "alpha, north", 'say "hi"']
    assert all(len(row) == 2 for row in rows)


def test_trajectory(capsys):
    assert main(["trajectory", "--kind", "dla", "--size", "41", "--checkpoints", "1,5,10"]) == 0

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == HEADER
    assert [line.split(",")[0] for line in lines[1:]] == ["dla@1", "dla@5", "dla@10"]


def test_trajectory_rejects_non_growth_kinds():
    assert main(["trajectory", "--kind", "random", "--size", "16", "--checkpoints", "1,2"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["measure", "a.pgm", "--workers", "0"],
        ["measure", "a.pgm", "--threshold", "300"],
        ["generate", "--kind", "dla", "--size", "3", "--out", "x.pgm"],
    ],
)
def test_invalid_configuration(argv, capsys):
    assert main(argv) == 2
    assert "invalid arguments" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["stack"],
        ["measure"],
        ["generate", "--kind", "voronoi", "--out", "x.pgm"],
        ["cluster", "points.csv"],
        ["measure", "a.pgm", "--resample", "big"],
    ],
)
def test_usage_errors_exit_with_two(argv):
    with pytest.raises(SystemExit) as e:
        main(argv)

    assert e.value.code == 2
