"""Bit-exact fixed-point model of a 3-D CORDIC spherical-to-Cartesian converter."""
from .cordic2d import (
    CordicConfig,
    CordicState,
    directions,
    micro_rotation,
    polar_to_cartesian,
    rotate2d,
    rotate2d_array,
    rotate_float,
    sin_cos,
)
from .errors import CordicError, DomainError, RangeError
from .fixedpoint import (
    AngleCode,
    MagCode,
    angle_code_to_degrees,
    degrees_to_angle_code,
    mag_code_to_real,
    real_to_mag_code,
)
from .oracle import ErrorReport, ErrorRow, polar_oracle, report_2d, report_3d, spherical_oracle, sweep_2d
from .spherical3d import (
    CartesianTriple,
    GainMode,
    SphericalInput,
    latency,
    spherical_to_cartesian,
    spherical_to_cartesian_array,
)
from .tables import AtanLut, GainConstants, build_atan_lut, cordic_gain, gain_constants

__version__ = "0.1.0"
