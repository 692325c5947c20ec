#!/usr/bin/env python3
"""Exercise every werner_py binding once against known values.

Build the extension first:  cargo build -p werner-py
Then run:                   python3 python/smoke_test.py
"""

import cmath
import math
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "debug" / "libwerner_py.so",
        root / "target" / "release" / "libwerner_py.so",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        sys.exit("libwerner_py.so not found; run: cargo build -p werner-py")
    stage = Path(tempfile.mkdtemp(prefix="werner_py_"))
    shutil.copy2(lib, stage / "werner_py.so")
    sys.path.insert(0, str(stage))
    import werner_py

    return werner_py


wp = load_module()


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol


def matrix_diff(a, b):
    return max(
        abs(x - y) for row_a, row_b in zip(a, b) for x, y in zip(row_a, row_b)
    )


def check_diagrams():
    d = wp.Diagram("2 1 | 3")
    assert str(d) == "1 2 | 3"
    assert d.n == 3
    assert d.blocks == [[1, 2], [3]]
    assert d.noncrossing
    assert not wp.Diagram("1 3 | 2 4").noncrossing
    assert d == wp.Diagram("1 2 | 3")
    assert len({d, wp.Diagram("1 2 | 3")}) == 1

    singles = wp.Diagram.from_blocks(3, [[1], [2], [3]])
    assert singles.refines(d)
    assert not d.refines(singles)

    assert len(wp.Diagram.all_noncrossing(4)) == 14
    assert [wp.catalan(m) for m in range(7)] == [1, 1, 2, 5, 14, 42, 132]

    meet = wp.Diagram.glb([wp.Diagram("1 2 | 3 4"), wp.Diagram("1 4 | 2 3")])
    assert str(meet) == "1 2 3 4"

    chords = wp.ChordDiagram.all_noncrossing(4)
    assert [str(c) for c in chords] == ["1 2 | 3 4", "1 4 | 2 3"]
    assert len(wp.ChordDiagram.all_noncrossing(6)) == 5
    c = wp.ChordDiagram("1 4 | 2 3")
    assert c.pairs == [(1, 4), (2, 3)]
    assert str(c.glue()) == "1 2"
    assert str(wp.ChordDiagram("1 2 | 3 4").glue()) == "1 | 2"


def check_states():
    s = wp.singlet()
    r = 1 / math.sqrt(2)
    assert close(s[1], r) and close(s[2], -r)
    assert close(sum(abs(z) ** 2 for z in s), 1.0)

    assert wp.cyclic("00") is None
    assert wp.cyclic("0101") is None
    assert matrix_diff([wp.cyclic("01")], [s]) < 1e-12

    c = wp.cyclic("001")
    w = cmath.exp(2j * math.pi / 3)
    r3 = 1 / math.sqrt(3)
    for idx, k in [(1, 0), (2, 1), (4, 2)]:
        assert close(c[idx], r3 * w**k)
    assert all(c[i] == 0 for i in (0, 3, 5, 6, 7))

    rho = wp.cn_density(2)
    assert close(rho[1][1], 0.5) and close(rho[1][2], -0.5)
    assert close(sum(rho[i][i] for i in range(4)), 1.0)

    coeffs = wp.pauli_expand(wp.sym_element(1, 1, 0, 2))
    assert close(coeffs[6], 0.5) and close(coeffs[9], 0.5)
    coeffs = wp.pauli_expand(wp.radial_element(1, 2))
    assert all(close(coeffs[i], 1.0) for i in (5, 10, 15))

    rho = wp.cn_density(3)
    back = wp.pauli_reconstruct(wp.pauli_expand(rho))
    assert matrix_diff(rho, back) < 1e-12


def check_analysis():
    assert [wp.commutant_dimension(n) for n in (1, 2, 3, 4)] == [1, 2, 5, 14]
    assert [wp.pure_werner_dimension(n) for n in range(1, 7)] == [0, 1, 0, 2, 0, 5]

    report = wp.is_werner(wp.cn_density(3))
    assert report["is_werner"] and report["residual"] < 1e-12

    proj00 = [[1 if i == j == 0 else 0 for j in range(4)] for i in range(4)]
    assert not wp.is_werner(proj00)["is_werner"]

    twirled = wp.pauli_expand(wp.twirl(proj00))
    assert close(twirled[0], 0.25)
    assert all(close(twirled[i], 1 / 12) for i in (5, 10, 15))

    mc1 = wp.monte_carlo_twirl(proj00, samples=2000, seed=5)
    mc2 = wp.monte_carlo_twirl(proj00, samples=2000, seed=5)
    assert matrix_diff(mc1, mc2) == 0.0
    assert matrix_diff(mc1, wp.twirl(proj00)) < 0.06


def check_reports():
    for n in (2, 3):
        r = wp.conjecture(n)
        assert r["verdict"] == "consistent"
        assert r["gram_rank"] == r["catalan"] == r["commutant_dim"]

    r = wp.symmetric_check(3)
    assert r["consistent"] and r["span_dimension"] == 2

    r = wp.stabilizer([("1 2 | 3 4", 1.0), ("1 4 | 2 3", 1.0)])
    assert r["glb"] == "1 2 3 4"
    assert r["computed_dim"] == r["predicted_dim"] == 3
    assert r["containment_ok"] and r["match"]

    r = wp.stabilizer([(wp.Diagram("1 2 | 3 | 4"), 1.0)])
    assert r["computed_dim"] == 9 and r["match"]

    r = wp.pure_stabilizer([("1 2 | 3 4", 1.0)])
    assert r["computed_dim"] == 6 and not r["criterion"] and r["consistent"]

    r = wp.pure_stabilizer([("1 2 | 3 4", 1.0), (wp.ChordDiagram("1 4 | 2 3"), 2.0)])
    assert r["computed_dim"] == 3 and r["criterion"] and r["consistent"]


def check_errors():
    for bad in (lambda: wp.Diagram("1 4 | 2 x"),
                lambda: wp.pauli_reconstruct([0.5] * 7),
                lambda: wp.cn_density(0),
                lambda: wp.stabilizer([("1 2", 0.0)])):
        try:
            bad()
        except ValueError:
            continue
        raise AssertionError(f"{bad} should raise ValueError")


check_diagrams()
check_states()
check_analysis()
check_reports()
check_errors()
print("smoke test passed")
