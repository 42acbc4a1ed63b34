"""Smoke tests for the _levigon extension module."""

import pytest

lg = pytest.importorskip("_levigon")


def test_plane_basics():
    p = lg.make_plane(2, 1)
    assert p.n == 2
    assert p.N == 7
    assert len(p.lines()) == 7
    assert all(len(line) == 3 for line in p.lines())
    assert lg.levi_girth(p) == 6


def test_counts_and_walks():
    p = lg.make_plane(2, 1)
    assert lg.count_gons(p, 3) == 28
    assert lg.count_gons(p, 4) == 21
    assert lg.count_cycles(p, 6) == 28
    assert lg.closed_walks_formula(2, 3) == 1554
    assert lg.closed_walks_direct(p, 3) == 1554


def test_census_dict():
    p = lg.make_plane(2, 1)
    c = lg.census(p, 4)
    assert c["Q"] == {1: 0, 2: 0, 3: 672, 4: 168}
    assert c["A_k"] == 672
    assert c["B_k"] == 0


def test_dual_and_io(tmp_path):
    p = lg.make_plane(3, 1)
    d = lg.dual_plane(p)
    assert d.N == p.N
    path = str(tmp_path / "p.txt")
    lg.save_plane(p, path)
    q = lg.load_plane(path)
    assert q.lines() == p.lines()


def test_fit_and_cap():
    p9 = lg.make_plane(3, 2)
    counts = [(q, lg.count_gons(lg.make_plane(*pe), 3)) for q, pe in
              [(2, (2, 1)), (3, (3, 1)), (4, (2, 2)), (5, (5, 1)), (7, (7, 1)), (8, (2, 3))]]
    counts.append((9, lg.count_gons(p9, 3)))
    coeffs = lg.fit_coefficients(counts)
    assert coeffs[6] == "1/6"
    assert coeffs[5] == "1/3"
    assert lg.table1_row(3) == ["1/6", "1/3", "1/3", "1/6"]
    assert lg.theorem5_cap(14, 3) == "35"


def test_errors():
    with pytest.raises(Exception):
        lg.make_plane(4, 1)
    with pytest.raises(Exception):
        lg.census(lg.make_plane(5, 1), 5, 0, 100)
