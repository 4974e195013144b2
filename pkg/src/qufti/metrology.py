"""Phase sensitivity, resource-counting baselines, efficiency, dephasing.

Sensitivity comes from error propagation on the coincidence observable,
delta_phi = sqrt(P - P^2) / |dP/dphi|. At phi = 0 this is 0/0; the
small-angle limit sqrt(3 / (2 n (n+1) (n-1))) takes over below PHI_EPS.
Baselines use Ordinal Resource Counting, which converts the linearly
increasing phase interrogations into an equivalent photon number
N = 1 + n(n-1)/2; the shot-noise and Heisenberg limits are 1/sqrt(N)
and 1/N of that count.

Divergent sensitivities (zero derivative while P < 1) are returned as
math.inf rather than raised, so sweep outputs stay rectangular.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import analytics
from .exceptions import SizeLimitError
from .matrices import CustomMask, InterferometerSpec, compose_qufti
from .permanent import permanent_ryser, permanent_with_repeats

# Switchover to the small-angle closed form around the P = 1 stationary point.
PHI_EPS = 1e-8

# |sin(n phi)| below this counts as an interior stationary point.
STATIONARY_SIN_TOL = 1e-12

# Central finite-difference step for the numeric-derivative paths.
FD_STEP = 1e-6

# Outcome enumeration guard: C(2n-1, n) outcomes, each needing a permanent.
DISTRIBUTION_MODE_LIMIT = 7

CSV_HEADER = "n,phi,P,dP,delta_phi,snl,hl"


@dataclass(frozen=True)
class DephasingParams:
    """Per-mode Gaussian phase noise, parameterized by its variance <dchi^2>."""

    chi_sq: float

    def __post_init__(self) -> None:
        if self.chi_sq < 0:
            raise ValueError(f"phase-noise variance must be >= 0, got {self.chi_sq}")

    def damping(self, n: int) -> float:
        """Signal damping factor exp(-n^2 <dchi^2> / 2)."""
        return math.exp(-0.5 * n * n * self.chi_sq)


@dataclass(frozen=True)
class SensitivityPoint:
    """One row of a sensitivity sweep."""

    n: int
    phi: float
    p: float
    dp: float
    delta_phi: float
    snl: float
    hl: float

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "phi": self.phi,
            "P": self.p,
            "dP": self.dp,
            "delta_phi": self.delta_phi,
            "snl": self.snl,
            "hl": self.hl,
        }

    def to_csv_row(self) -> str:
        return ",".join(
            [str(self.n)]
            + [repr(v) for v in (self.phi, self.p, self.dp, self.delta_phi, self.snl, self.hl)]
        )


@dataclass(frozen=True)
class OutcomeDistribution:
    """Probabilities of every photon-count pattern at the output."""

    n: int
    entries: list[tuple[tuple[int, ...], float]]

    def total(self) -> float:
        return sum(p for _, p in self.entries)

    def probability_of(self, occupation: tuple[int, ...]) -> float:
        for occ, p in self.entries:
            if occ == occupation:
                return p
        raise KeyError(f"no outcome {occupation}")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [
                {"occupation": list(occ), "probability": p} for occ, p in self.entries
            ],
        }

    def to_csv_rows(self) -> list[str]:
        return [
            "-".join(map(str, occ)) + "," + repr(p) for occ, p in self.entries
        ]


def phase_sensitivity_small_angle(n: int) -> float:
    """Sensitivity at the phi -> 0 operating point, sqrt(3/(2n(n+1)(n-1)))."""
    if n < 2:
        raise ValueError(f"need n >= 2 for interference, got {n}")
    return math.sqrt(3.0 / (2.0 * n * (n + 1) * (n - 1)))


def phase_sensitivity_numeric(n: int, phi: float) -> float:
    """Sensitivity via error propagation at the given phase.

    Below PHI_EPS the 0/0 limit is replaced by the small-angle closed form.
    Interior stationary points with P < 1 return math.inf.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 for interference, got {n}")
    if abs(phi) < PHI_EPS:
        return phase_sensitivity_small_angle(n)
    p = analytics.coincidence_probability(n, phi)
    if abs(math.sin(n * phi)) < STATIONARY_SIN_TOL:
        # periodic maximum: the phi = 0 limit applies again; any other
        # stationary point is a genuine divergence of the estimator
        if p > 1 - 1e-12:
            return phase_sensitivity_small_angle(n)
        return math.inf
    dp = analytics.probability_derivative(n, phi)
    return _propagate(p, dp)


def _propagate(p: float, dp: float) -> float:
    variance = max(p - p * p, 0.0)
    if dp == 0.0:
        return 0.0 if variance == 0.0 else math.inf
    return math.sqrt(variance) / dp


def orc_photon_count(n: int) -> int:
    """Equivalent photon number under Ordinal Resource Counting, 1 + n(n-1)/2."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 1 + n * (n - 1) // 2


def shotnoise_limit(n: int) -> float:
    """Shot-noise baseline 1/sqrt(N) at the ORC photon count."""
    return 1.0 / math.sqrt(orc_photon_count(n))


def heisenberg_limit(n: int) -> float:
    """Heisenberg baseline 1/N at the ORC photon count."""
    return 1.0 / orc_photon_count(n)


def protocol_efficiency(eta_source: float, eta_detector: float, n: int) -> float:
    """Success probability (eta_s * eta_d)^n with per-photon source/detector loss."""
    if not (0.0 <= eta_source <= 1.0 and 0.0 <= eta_detector <= 1.0):
        raise ValueError("efficiencies must lie in [0, 1]")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return (eta_source * eta_detector) ** n


def dephased_probability(n: int, phi: float, params: DephasingParams) -> float:
    """Coincidence probability with the cosine signal damped by dephasing."""
    return analytics._damped_probability(n, phi, params.damping(n))


def dephased_derivative(n: int, phi: float, params: DephasingParams) -> float:
    """|dP/dphi| of the dephased probability; same product structure."""
    return analytics._damped_derivative(n, phi, params.damping(n))


def dephased_sensitivity(n: int, phi: float, params: DephasingParams) -> float:
    """Error-propagation sensitivity under dephasing.

    With zero noise this reduces exactly to phase_sensitivity_numeric. The
    small-angle substitute only applies in that noiseless case: dephased
    P(0) < 1, so phi = 0 is a genuine divergence, not a removable one.
    """
    if n < 2:
        raise ValueError(f"need n >= 2 for interference, got {n}")
    if params.chi_sq == 0.0 and abs(phi) < PHI_EPS:
        return phase_sensitivity_small_angle(n)
    p = dephased_probability(n, phi, params)
    if abs(math.sin(n * phi)) < STATIONARY_SIN_TOL and p < 1 - 1e-12:
        return math.inf
    dp = dephased_derivative(n, phi, params)
    return _propagate(p, dp)


def noon_dephased_sensitivity(n_photons: int, phi: float, params: DephasingParams) -> float:
    """Sensitivity of an N-photon NOON interferometer under the same noise model.

    The two-mode NOON signal is cos(N phi); its expectation observable is
    (1 + cos(N phi) d)/2 with d the N-photon damping factor. Undamped and
    at small phi this saturates the Heisenberg limit 1/N.
    """
    if n_photons < 2:
        raise ValueError(f"need N >= 2, got {n_photons}")
    d = params.damping(n_photons)
    if params.chi_sq == 0.0 and abs(phi) < PHI_EPS:
        return 1.0 / n_photons
    p = 0.5 * (1.0 + math.cos(n_photons * phi) * d)
    dp = 0.5 * n_photons * abs(math.sin(n_photons * phi)) * d
    return _propagate(p, dp)


def fock_output_distribution(spec: InterferometerSpec) -> OutcomeDistribution:
    """Full output distribution over photon-count patterns.

    Enumerates all C(2n-1, n) occupation vectors summing to n. With one
    photon per input mode, outcome S has probability
    |Per(U with column k repeated s_k times)|^2 / prod_k s_k!.
    Serves as the normalization oracle: probabilities must sum to 1.
    """
    n = spec.n
    if n > DISTRIBUTION_MODE_LIMIT:
        raise SizeLimitError(
            f"distribution enumeration limited to n <= {DISTRIBUTION_MODE_LIMIT}, got {n}"
        )
    u = compose_qufti(spec)
    entries = []
    for placement in itertools.combinations_with_replacement(range(n), n):
        occ = [0] * n
        for mode in placement:
            occ[mode] += 1
        amp = permanent_with_repeats(u, occ)
        norm = 1.0
        for s in occ:
            norm *= math.factorial(s)
        entries.append((tuple(occ), abs(amp) ** 2 / norm))
    return OutcomeDistribution(n=n, entries=entries)


def sensitivity_for_mask(spec: InterferometerSpec, phi_probe: float) -> float:
    """Sensitivity for an arbitrary phase mask, fully numeric.

    P(phi) comes from the Ryser permanent of the composed unitary and the
    derivative from a central finite difference, so this works for masks
    with no closed form (single-mode, custom). spec.phi is ignored in favor
    of phi_probe. A custom mask's phases are treated as per-mode weights
    multiplied by the probed phase: fixed absolute phases would have zero
    derivative and no sensitivity to speak of.
    """
    if spec.n > DISTRIBUTION_MODE_LIMIT:
        raise SizeLimitError(
            f"numeric mask sensitivity limited to n <= {DISTRIBUTION_MODE_LIMIT}, got {spec.n}"
        )

    def prob(phi: float) -> float:
        probed = _respec_phi(spec, phi)
        return abs(permanent_ryser(compose_qufti(probed))) ** 2

    p = prob(phi_probe)
    dp = abs(prob(phi_probe + FD_STEP) - prob(phi_probe - FD_STEP)) / (2 * FD_STEP)
    return _propagate(p, dp)


def _respec_phi(spec: InterferometerSpec, phi: float) -> InterferometerSpec:
    mask = spec.mask
    if isinstance(mask, CustomMask):
        mask = CustomMask(tuple(w * phi for w in mask.phases))
    return InterferometerSpec(n=spec.n, phi=phi, theta=spec.theta, mask=mask)
