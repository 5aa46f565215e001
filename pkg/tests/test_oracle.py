import io
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from cordic3d.fixedpoint import AngleCode, MagCode
from cordic3d.oracle import (
    TABLE4_ANGLES,
    ErrorReport,
    grid_cases,
    polar_oracle,
    report_2d,
    report_3d,
    report_grid,
    report_table5,
    spherical_oracle,
    sweep_2d,
)
from cordic3d.spherical3d import GainMode, SphericalInput


def test_spherical_oracle_examples():
    assert spherical_oracle(1, 45, 45) == pytest.approx((0.5, 0.5, math.sqrt(0.5)), abs=1e-15)
    assert spherical_oracle(1, 60, 30) == pytest.approx((0.75, 0.4330127019, 0.5), abs=1e-10)
    for phi in (-30, 0, 77):
        assert spherical_oracle(1, 0, phi) == pytest.approx((0, 0, 1), abs=1e-15)


def test_polar_oracle_examples():
    assert polar_oracle(1, 90) == pytest.approx((0, 1), abs=1e-15)
    assert polar_oracle(1, 30) == pytest.approx((0.8660254038, 0.5), abs=1e-10)
    mpmath.mp.dps = 30
    ref = float(mpmath.mpf("0.607253") * mpmath.cos(mpmath.pi / 4))
    x, y = polar_oracle(0.607253, 45)
    assert x == pytest.approx(ref, abs=1e-15) and y == pytest.approx(ref, abs=1e-15)
    assert MagCode.from_real(x).raw == 0x10C6


@settings(max_examples=1000)
@given(st.floats(0.01, 100), st.floats(-180, 180), st.floats(-180, 180))
def test_oracle_norm(r, t, p):
    x, y, z = spherical_oracle(r, t, p)
    assert x * x + y * y + z * z == pytest.approx(r * r, rel=1e-12)


def test_report_2d_table4_envelope():
    rep = report_2d(TABLE4_ANGLES)
    assert len(rep.rows) == 12
    assert all(r.ok for r in rep.rows)
    avg = rep.averages
    assert avg["x"] <= Fraction(5, 2) and avg["y"] <= Fraction(5, 2)
    assert max(rep.maxima.values()) <= 4


def test_report_2d_zero_angle():
    row = report_2d([0]).rows[0]
    assert row.theoretical == (MagCode(0x2710), MagCode(0))


def test_report_2d_code_uses_exact_angle():
    # 0x0AAA is 29.9927 deg; its theoretical cosine differs from cos(30)
    nominal = report_2d([30]).rows[0].theoretical[0].raw
    exact = report_2d([AngleCode(0x0AAA)]).rows[0].theoretical[0].raw
    assert nominal == 8660 and exact == 8661


def test_empty_report():
    rep = report_2d([])
    assert rep.rows == []
    assert rep.averages == {"x": None, "y": None}
    assert "undefined" in rep.summary()


def test_bad_row_flagged_not_dropped():
    rep = report_2d([45, 120, -45])
    assert len(rep.rows) == 3
    assert [r.ok for r in rep.rows] == [True, False, True]
    assert "convergence" in rep.rows[1].error
    assert len(rep.deviations("x")) == 2


def test_deviation_and_average_recomputed():
    rep = report_grid(10)
    for r in rep.rows:
        assert r.deviation == tuple(abs(t.raw - s.raw) for t, s in zip(r.theoretical, r.simulated))
        assert min(r.deviation) >= 0
    for ch in rep.channels:
        d = rep.deviations(ch)
        assert rep.averages[ch] == Fraction(sum(d), len(d))


def test_report_3d_worked_cases():
    rep = report_table5()
    assert len(rep.rows) == 2
    assert max(rep.maxima.values()) <= 6


def test_report_3d_pole():
    row = report_3d([SphericalInput(MagCode(0x0E68), AngleCode(0), AngleCode(0x0AAA))]).rows[0]
    assert row.theoretical[0].raw == 0 and row.theoretical[1].raw == 0


def test_grid_shape_and_bound():
    assert len(grid_cases(5)) == 17 * 17
    rep = report_grid(5)
    assert len(rep.rows) == 289
    # frozen from the 5-degree grid evaluation
    assert rep.maxima == {"x": 7, "y": 7, "z": 3}


def test_csv_layout():
    rep = report_table5(GainMode.CORRECTED)
    buf = io.StringIO()
    rep.write_csv(buf)
    lines = buf.getvalue().splitlines()
    assert lines[0] == (
        "label,r_hex,theta_deg,theta_hex,phi_deg,phi_hex,"
        "x_theoretical,x_simulated,x_deviation,y_theoretical,y_simulated,y_deviation,"
        "z_theoretical,z_simulated,z_deviation,error"
    )
    assert len(lines) == 3
    assert lines[1].startswith("45/45,0E68,45,1000,45,1000,")


def test_sweep_frozen_figures():
    # Regression pins for the exhaustive sweep (default truncate profile and round-shift variant).
    t = sweep_2d()
    assert (t.count, t.max_deviation, round(t.mean_deviation, 4)) == (16385, 10, 1.5614)
    from cordic3d.cordic2d import CordicConfig

    r = sweep_2d(cfg=CordicConfig(shift_mode="round"))
    assert (r.max_deviation, round(r.mean_deviation, 4)) == (5, 1.0724)
