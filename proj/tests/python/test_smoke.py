from fractions import Fraction
import warnings

import pytest

import latcount

SQUARE = ([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 0, 1, 0])


def test_count_square():
    assert latcount.count_polytope(*SQUARE) == 4
    assert latcount.brute_count(*SQUARE) == 4


def test_count_large_simplex():
    A = [[-1, 0], [0, -1], [1, 1]]
    assert latcount.count_polytope(A, [0, 0, 10**6]) == (10**6 + 1) * (10**6 + 2) // 2


def test_detailed():
    d = latcount.count_polytope_detailed([[-1, 0], [0, -1], [7, 1]], [0, 0, 7], max_index=2)
    assert d["count"] == 9
    assert d["num_vertices"] == 3


def test_parse_roundtrip():
    A, b = latcount.parse_polytope("2 4\n1 0 1\n-1 0 0\n0 1 1\n0 -1 0\n")
    assert (A, b) == SQUARE


def test_parse_error():
    with pytest.raises(ValueError, match="line 1"):
        latcount.parse_polytope("0 1\n1\n")


def test_smith_normal_form():
    V, W, s = latcount.smith_normal_form([[2, 0], [0, 3]])
    assert s == [1, 6]


def test_facet_strictness():
    assert latcount.facet_strictness([-1, 1, -1], [-1, 1, 1], 0, 3) == -1
    assert latcount.facet_strictness([-1, 1, -1], [-1, 1, 1], 2, 3) == 1


def test_find_w():
    w, alpha = latcount.find_w([[1, 0], [0, 2]])
    assert w == [0, 1]
    assert alpha == [Fraction(0), Fraction(1, 2)]


def test_parametric_segment_family():
    pc = latcount.ParametricCounter([[-1], [2], [1]], [[0], [1], [1]], [0, 6, 0])
    values = [pc.evaluate([q]) for q in range(13)]
    assert values == [q + 1 if q <= 6 else q // 2 + 4 for q in range(13)]
    assert pc.evaluate_by_activity([Fraction(13, 2)]) == 7
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert pc.evaluate([-1]) == 0
    assert caught


def test_run_cli():
    code, out, err = latcount.run_cli(["count", "-", "--help"])
    assert code == 0
    code, out, err = latcount.run_cli(["frobnicate"])
    assert code == 1 and "usage" in err
