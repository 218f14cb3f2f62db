import cmath
import itertools
import json
import math
from fractions import Fraction

import pytest

import lattice_walks as lw

KNIGHT = "(2,-1);(-1,2)"
SQUARE = "(1,0);(0,1);(-1,0);(0,-1)"


def brute(steps, start, n):
    counts = {}
    for w in itertools.product(steps, repeat=n):
        i, j = start
        ok = True
        for dx, dy in w:
            i, j = i + dx, j + dy
            if i < 0 or j < 0:
                ok = False
                break
        if ok:
            counts[(i, j)] = counts.get((i, j), 0) + 1
    return counts


def test_version():
    assert lw.__version__ == "0.1.0"


def test_counts_match_brute_force():
    steps = [(2, -1), (-1, 2)]
    got = lw.count(KNIGHT, (1, 1), 8)
    for n in range(9):
        for (i, j), c in brute(steps, (1, 1), n).items():
            assert got[(i, j, n)] == c


def test_table_entries():
    agg = lw.count_aggregate(KNIGHT, (1, 1), 22)
    assert agg[(8, 8)] == 1440
    assert agg[(12, 0)] == 24


def test_square_closed_form():
    seq = lw.length_sequence(SQUARE, (0, 0), 14)
    for n, c in enumerate(seq):
        assert c == math.comb(n, n // 2) * math.comb(n + 1, (n + 1) // 2)


def test_big_counts_are_python_ints():
    seq = lw.length_sequence(SQUARE, (0, 0), 60)
    assert seq[60] == math.comb(60, 30) * math.comb(61, 31)
    assert seq[60] > 2**64


def test_criterion():
    assert lw.holonomy_criterion(SQUARE) == "GuaranteedDFinite"
    assert lw.holonomy_criterion(KNIGHT) == "Unknown"


def test_bijection_roundtrip():
    image, flipped = lw.flip_down(SQUARE, (0, 0), [(0, 1), (1, 0), (0, 1), (0, 1)])
    assert image == [(0, -1), (1, 0), (0, -1), (0, 1)]
    assert flipped == [0, 2]
    back, _ = lw.flip_up(SQUARE, (0, 0), image)
    assert back == [(0, 1), (1, 0), (0, 1), (0, 1)]
    with pytest.raises(ValueError):
        lw.flip_down(SQUARE, (0, 2), [(0, 1)])


def test_xi_series():
    xi = lw.series("xi", 17)
    assert all(isinstance(c, Fraction) for c in xi)
    for m in range(6):
        assert xi[3 * m + 2] == Fraction(math.comb(3 * m, m), 2 * m + 1)
    assert lw.series("psi", 6)[3] == Fraction(-3, 8)


def test_identities():
    for name in ["main", "knight-kernel", "diagonal", "main2"]:
        assert lw.verify_identity(name, 16)["holds"]
    assert lw.verify_identity("main2", 12, 1)["holds"]


def test_analytic():
    c = lw.constants()
    assert abs(c["x_c"] - 3 * c["y_c"] ** 2) < 1e-14
    xi0, xi1, xi2 = lw.eval_branches(0.3)
    for y in (xi0, xi1, xi2):
        assert abs(y**3 - 0.3 * y + 0.3**3) < 1e-12
    assert abs(xi0 + xi1 + xi2) < 1e-12
    with pytest.raises(ValueError):
        lw.eval_branches(complex(-0.5, 0))
    assert len(lw.singularity_survey()) == 12
    chain = lw.singularity_chain()
    assert abs(chain[3]) > 1.33


def test_recurrence():
    spec = lw.knight_recurrence_json()
    v = lw.validate_recurrence(spec)
    assert v["valid"] and v["weight"] == [1, 1]
    values = lw.evaluate_recurrence(spec, "0:6,0:6")
    assert values[(5, 5)] == 14
    assert values[(2, 6)] == 5
    bad = json.dumps({"d": 1, "shifts": [{"h": [1], "c": "1"}], "start": [0], "initial": {"type": "constant", "value": "1"}})
    assert not lw.validate_recurrence(bad)["valid"]


def test_cli_in_process():
    code, out, _ = lw.run_cli(["criterion", "--steps", SQUARE])
    assert code == 0 and out.strip() == "GuaranteedDFinite"
    code, _, err = lw.run_cli(["count", "--nmax", "x"])
    assert code == 2 and "walks --help" in err
