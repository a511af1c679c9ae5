import json

from envlat import report
from envlat.dynkin import build_diagram
from envlat.envlattice import enumerate_lattice


def test_dot_layers_and_edges():
    L = enumerate_lattice(build_diagram("G", 2))
    dot = report.lattice_dot(L)
    assert dot.count("rank=same") == 5
    assert dot.count("->") == len(L.hasse())
    # edges run from a lower cover to an upper one
    for lo, hi in L.hasse():
        assert f"n{lo} -> n{hi};" in dot


def test_json_round_trip():
    L = enumerate_lattice(build_diagram("B", 2))
    data = json.loads(report.dumps(report.lattice_json(L)))
    assert data["schema"] == report.SCHEMA
    assert len(data["elements"]) == len(L)
    for k, rec in enumerate(data["elements"]):
        assert rec["covers"] == L.upper_covers[k]
        assert sorted(rec["lambda_lower"] + rec["lambda_upper"]) == sorted(set(rec["lambda_lower"]) | set(rec["lambda_upper"]))


def test_poset_dot_escapes_quotes():
    dot = report.poset_dot('x"y', ['a"b'], [])
    assert 'digraph "x\\"y"' in dot and 'label="a\\"b"' in dot


def test_plots(tmp_path):
    L = enumerate_lattice(build_diagram("A", 3))
    p = report.plot_hasse(L, tmp_path / "hasse.png")
    assert p.read_bytes()[:4] == b"\x89PNG"
    rows = [{"n": n, "d": d, "e": d - 2**n if n else 0} for n, d in enumerate([1, 3, 11, 41])]
    p = report.plot_counts(rows, tmp_path / "counts.svg")
    assert p.read_text().lstrip().startswith("<?xml")
