"""Validated configuration types shared by the analytic and TDSE engines.

Every derived kinematic quantity (angular frequency, wavenumbers, vector
potential amplitude, optical period) is computed here exactly once, from
immutable configs. Config files are JSON with explicit units in the key
names (``E0_V_per_m``, ``lambda_ph_m``, ``phi_deg``); angles are accepted
in degrees in files and stored in radians internally.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .constants import CONSTANTS

TWO_PI = 2.0 * math.pi


class ConfigError(ValueError):
    """Raised when a configuration violates a validity bound."""


@dataclass(frozen=True)
class PlaneWave:
    """Infinite plane-wave envelope (the analytic model's field)."""


@dataclass(frozen=True)
class GaussianParaxial:
    """Paraxial TEM00 envelope for each beam of the pair.

    waist : 1/e amplitude radius at focus (m); must be >= 1.5 wavelengths
      for the paraxial model to be a valid description of the focus.
    focus_center : (x, y) position of the common focus (m).
    """

    waist: float
    focus_center: tuple[float, float] = (0.0, 0.0)


@dataclass(frozen=True)
class BeamConfig:
    """Two-beam optical field: each beam at +/- phi from the electron axis.

    E0 is the electric-field amplitude of a single beam (V/m); the coherent
    pair produces vector-potential components with amplitude 2*A0 where
    A0 = E0/omega. carrier_phase sets the relative phase between the field
    oscillation and the electron arrival (rad).
    """

    E0: float
    lambda_ph: float
    phi: float
    envelope: PlaneWave | GaussianParaxial = field(default_factory=PlaneWave)
    carrier_phase: float = 0.0

    def __post_init__(self):
        if self.E0 < 0.0:
            raise ConfigError("E0 must be >= 0")
        if self.lambda_ph <= 0.0:
            raise ConfigError("lambda_ph must be > 0")
        if not 0.0 <= self.phi <= math.pi / 2.0:
            raise ConfigError("phi must lie in [0, pi/2]")
        if isinstance(self.envelope, GaussianParaxial):
            if self.envelope.waist < 1.5 * self.lambda_ph:
                raise ConfigError(
                    "paraxial waist must be >= 1.5 wavelengths "
                    f"(got {self.envelope.waist:g} for lambda={self.lambda_ph:g})"
                )

    @property
    def omega(self) -> float:
        """Angular frequency 2*pi*c/lambda (rad/s)."""
        return TWO_PI * CONSTANTS.c / self.lambda_ph

    @property
    def k_ph(self) -> float:
        """Photon wavenumber omega/c (1/m)."""
        return self.omega / CONSTANTS.c

    @property
    def A0(self) -> float:
        """Vector-potential amplitude of a single beam, E0/omega (V s/m)."""
        return self.E0 / self.omega

    @property
    def period(self) -> float:
        """Optical period 2*pi/omega (s)."""
        return TWO_PI / self.omega


@dataclass(frozen=True)
class ElectronConfig:
    """Incident electron wavepacket, drifting along +x.

    W_x, W_y are the Gaussian width parameters of the amplitude profile
    exp(-x^2 / (2 W^2)); the probability density falls to 1/e at W.
    plane_wave=True selects an infinite plane wave (analytic work and
    carrier-only grid initialization); widths are then ignored.
    """

    v_el: float
    W_x: float = 0.0
    W_y: float = 0.0
    center: tuple[float, float] = (0.0, 0.0)
    plane_wave: bool = False

    def __post_init__(self):
        if not 0.0 < self.v_el < CONSTANTS.c:
            raise ConfigError("v_el must satisfy 0 < v_el < c (nonrelativistic model)")
        if not self.plane_wave:
            if self.W_x <= 0.0 or self.W_y <= 0.0:
                raise ConfigError("W_x and W_y must be > 0 for a wavepacket electron")

    @property
    def k_el(self) -> float:
        """Carrier wavenumber m0*v_el/hbar (1/m), nonrelativistic."""
        return CONSTANTS.m0 * self.v_el / CONSTANTS.hbar

    @property
    def Omega(self) -> float:
        """Kinetic angular frequency, hbar*Omega = m0*v_el^2/2 (rad/s)."""
        return 0.5 * CONSTANTS.m0 * self.v_el**2 / CONSTANTS.hbar


@dataclass(frozen=True)
class InteractionWindow:
    """Interaction duration delta_t, also expressed in optical periods.

    Construct with from_periods() when the duration is naturally a number
    of optical cycles: the periods value is then carried exactly, which
    keeps the cycle-periodic couplings exactly zero at integer periods.
    """

    delta_t: float
    periods: float

    def __post_init__(self):
        if self.delta_t < 0.0 or self.periods < 0.0:
            raise ConfigError("delta_t must be >= 0")

    @classmethod
    def from_duration(cls, delta_t: float, beam: BeamConfig) -> "InteractionWindow":
        return cls(delta_t=delta_t, periods=delta_t / beam.period)

    @classmethod
    def from_periods(cls, periods: float, beam: BeamConfig) -> "InteractionWindow":
        return cls(delta_t=periods * beam.period, periods=periods)


@dataclass(frozen=True)
class DerivedQuantities:
    """All derived kinematics in one bundle (pure function of the configs)."""

    omega: float
    k_ph: float
    A0: float
    T: float
    k_el: float
    Omega: float


def derive_kinematics(beam: BeamConfig, electron: ElectronConfig) -> DerivedQuantities:
    """Compute every derived scalar the engines need. Deterministic, side-effect free."""
    if not 0.0 < electron.v_el < CONSTANTS.c:
        raise ConfigError("v_el must satisfy 0 < v_el < c")
    return DerivedQuantities(
        omega=beam.omega,
        k_ph=beam.k_ph,
        A0=beam.A0,
        T=beam.period,
        k_el=electron.k_el,
        Omega=electron.Omega,
    )


def cos_two_phi(phi: float) -> float:
    """cos(2*phi) via (cos-sin)(cos+sin).

    The product form avoids the catastrophic cancellation of cos(2*phi)
    near phi = 45 deg, where the ponderomotive Bessel argument must vanish.
    """
    c, s = math.cos(phi), math.sin(phi)
    return (c - s) * (c + s)


def sin_cycle(periods: float) -> float:
    """sin(2*pi*periods) with the argument reduced mod 1 first.

    Exact zero at integer periods, where the raw product 2*pi*n would
    leave an O(n*eps) phase residue.
    """
    return math.sin(TWO_PI * (periods - round(periods)))


def one_minus_cos_cycle(periods: float) -> float:
    """1 - cos(2*pi*periods), reduced mod 1. Exact zero at integer periods."""
    frac = periods - round(periods)
    # 1 - cos(x) = 2 sin^2(x/2), stable near x = 0
    s = math.sin(math.pi * frac)
    return 2.0 * s * s


# ---------------------------------------------------------------------------
# Config file I/O
# ---------------------------------------------------------------------------

def beam_to_dict(beam: BeamConfig) -> dict:
    d = {
        "E0_V_per_m": beam.E0,
        "lambda_ph_m": beam.lambda_ph,
        "phi_rad": beam.phi,
        "carrier_phase_rad": beam.carrier_phase,
    }
    if isinstance(beam.envelope, GaussianParaxial):
        d["envelope"] = {
            "type": "gaussian_paraxial",
            "waist_m": beam.envelope.waist,
            "focus_center_m": list(beam.envelope.focus_center),
        }
    else:
        d["envelope"] = {"type": "plane_wave"}
    return d


def beam_from_dict(d: dict) -> BeamConfig:
    if "phi_rad" in d:
        phi = float(d["phi_rad"])
    elif "phi_deg" in d:
        phi = math.radians(float(d["phi_deg"]))
    else:
        raise ConfigError("beam config needs phi_rad or phi_deg")
    env_d = d.get("envelope", {"type": "plane_wave"})
    if env_d.get("type") == "gaussian_paraxial":
        envelope: PlaneWave | GaussianParaxial = GaussianParaxial(
            waist=float(env_d["waist_m"]),
            focus_center=tuple(float(v) for v in env_d.get("focus_center_m", (0.0, 0.0))),
        )
    elif env_d.get("type") == "plane_wave":
        envelope = PlaneWave()
    else:
        raise ConfigError(f"unknown envelope type {env_d.get('type')!r}")
    return BeamConfig(
        E0=float(d["E0_V_per_m"]),
        lambda_ph=float(d["lambda_ph_m"]),
        phi=phi,
        envelope=envelope,
        carrier_phase=float(d.get("carrier_phase_rad", 0.0)),
    )


def electron_to_dict(electron: ElectronConfig) -> dict:
    return {
        "v_el_m_per_s": electron.v_el,
        "W_x_m": electron.W_x,
        "W_y_m": electron.W_y,
        "center_m": list(electron.center),
        "plane_wave": electron.plane_wave,
    }


def electron_from_dict(d: dict) -> ElectronConfig:
    if "v_el_m_per_s" in d:
        v = float(d["v_el_m_per_s"])
    elif "v_el_over_c" in d:
        v = float(d["v_el_over_c"]) * CONSTANTS.c
    else:
        raise ConfigError("electron config needs v_el_m_per_s or v_el_over_c")
    return ElectronConfig(
        v_el=v,
        W_x=float(d.get("W_x_m", 0.0)),
        W_y=float(d.get("W_y_m", 0.0)),
        center=tuple(float(x) for x in d.get("center_m", (0.0, 0.0))),
        plane_wave=bool(d.get("plane_wave", False)),
    )


def window_to_dict(window: InteractionWindow) -> dict:
    return {"delta_t_s": window.delta_t, "delta_t_over_T": window.periods}


def window_from_dict(d: dict, beam: BeamConfig) -> InteractionWindow:
    if "delta_t_over_T" in d:
        return InteractionWindow.from_periods(float(d["delta_t_over_T"]), beam)
    if "delta_t_s" in d:
        return InteractionWindow.from_duration(float(d["delta_t_s"]), beam)
    raise ConfigError("window config needs delta_t_over_T or delta_t_s")


def load_config(path: str | Path) -> dict:
    """Load a JSON config file and return the raw dict."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc


def dump_config(payload: dict, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
