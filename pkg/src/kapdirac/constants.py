"""Physical constants (SI, CODATA 2018).

All internal computation is in SI units so that field amplitudes (V/m),
wavelengths (m) and velocities (fractions of c) stay directly legible in
configuration files and outputs.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class PhysicalConstants:
    """Fundamental constants used by every engine. Immutable."""

    e: float = 1.602176634e-19      # elementary charge (C), exact
    m0: float = 9.1093837015e-31    # electron rest mass (kg)
    hbar: float = 1.054571817e-34   # reduced Planck constant (J s)
    c: float = 299792458.0          # vacuum light speed (m/s), exact

    def __post_init__(self):
        for name in ("e", "m0", "hbar", "c"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"constant {name} must be positive")


CONSTANTS = PhysicalConstants()
