import math
from fractions import Fraction

import pytest

import hktwistor as hk


@pytest.fixture(scope="module")
def u3():
    return hk.PeriodData.load("U3")


def test_builtin_signatures():
    assert hk.PeriodData.load("U3").signature == (3, 3, 0)
    assert hk.PeriodData.load("K3").signature == (3, 19, 0)
    assert hk.PeriodData.load("K3").rank == 22
    assert hk.signature([[0, 1], [1, 0]]) == (1, 1, 0)


def test_projection_and_pi(u3):
    omega = [1, 1, 1, 0, 0, 0]
    assert hk.project_to_v(u3, omega) == (Fraction(1), Fraction(1, 2), Fraction(0))
    assert hk.pi_map(u3, omega)["ray"] == (2, 1, 0)
    assert hk.q_eval(u3, omega, omega) == 2
    with pytest.raises(hk.HktError):
        hk.pi_map(u3, [1, 0, 0, 0, 0, 0])


def test_rational_inputs(u3):
    assert hk.pi_map(u3, ["1/2", "1/2", 0, 0, 0, 0])["ray"] == (1, 0, 0)
    assert hk.pi_map(u3, [Fraction(1, 3), 1, 0, 0, 0, 0])["ray"] == (1, 0, 0)


def test_perp_and_kernel(u3):
    perp = hk.perp_v_basis(u3)
    assert len(perp) == 3
    for v in perp:
        assert hk.project_to_v(u3, v) == (0, 0, 0)
    assert hk.integer_kernel([[1, 1, 1]]) and all(sum(v) == 0 for v in hk.integer_kernel([[1, 1, 1]]))


def test_general_type(u3):
    kind, witness = hk.is_general_type(u3, [1, 1, 0])
    assert kind == "NotGeneralType"
    assert hk.hodge_type_11(u3, witness, [1, 1, 0])
    kind, bound = hk.is_general_type(u3, [1.0, math.sqrt(2.0), 0.0], bound=2)
    assert (kind, bound) == ("GeneralTypeUpToBound", 2)


def test_stereographic_and_antipode():
    assert hk.stereographic([1, 0, 0]) == math.inf
    assert hk.stereographic([-1, 0, 0]) == 0
    assert hk.antipode([2, 1, 0])["ray"] == (-2, -1, 0)


def test_scans(u3):
    alg = hk.scan_algebraic(u3, 1)
    ngt = hk.scan_non_general_type(u3, 1)
    assert len(alg) == 98
    assert {r for r, _ in alg} <= {r for r, _ in ngt}
    assert hk.scan_algebraic(u3, 1, threads=2) == alg
    directions = [hk.pi_map(u3, w)["unit"] for _, w in alg]
    assert hk.covering_radius(directions, 200) == pytest.approx(0.30723529605618172, abs=1e-12)
    with pytest.raises(hk.HktError):
        hk.scan_algebraic(u3, 0)


def test_quaternion_report():
    report = hk.quaternion_report(samples=10)
    assert report and all(passed for _, passed, _ in report)


def test_cli_passthrough():
    code, out, _ = hk.run_cli(["validate", "--lattice", "U3"])
    assert code == 0 and "(3, 3, 0)" in out
    assert hk.run_cli(["bogus"])[0] == 2
