"""Closed-form results for the gradient-mask interferometer.

The permanent of the n-mode interferometer follows an empirical product
pattern, Per(U) = (1/n^{n-1}) prod_{j=1}^{n-1} (j e^{i n phi} + n - j).
This is a conjecture, not a theorem; `conjecture_verify` checks it against
the Ryser permanent of the explicitly composed matrix and reports the
worst-case absolute error. From the pattern follow a real product form for
the coincidence probability and an analytic derivative.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .exceptions import SizeLimitError
from .matrices import InterferometerSpec, compose_qufti
from .permanent import RYSER_DIM_LIMIT, permanent_ryser


def coefficient_a(n: int, j: int) -> float:
    """Cosine-term coefficient 2j(n-j) of the probability product, j = 1..n-1."""
    return float(2 * j * (n - j))


def coefficient_b(n: int, j: int) -> float:
    """Constant coefficient n^2 - 2jn + 2j^2; note a + b = n^2 and b - a = (n-2j)^2."""
    return float(n * n - 2 * j * n + 2 * j * j)


def permanent_closed_form(n: int, phi: float) -> complex:
    """Conjectured product form of the interferometer permanent.

    Each factor is divided by n as it is accumulated, keeping intermediate
    magnitudes O(1) instead of forming n^{n-1} explicitly. n = 1 is the
    empty product, 1.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    z = np.exp(1j * n * phi)
    result = 1 + 0j
    for j in range(1, n):
        result *= (j * z + (n - j)) / n
    return complex(result)


def coincidence_probability(n: int, phi: float) -> float:
    """Probability of one photon in every output mode, |Per(U)|^2.

    Real product form: prod_j [a(j) cos(n phi) + b(j)] / n^2. Equals 1 at
    phi = 0 and is periodic in phi with period 2 pi / n.
    """
    return _damped_probability(n, phi, 1.0)


def probability_derivative(n: int, phi: float) -> float:
    """|dP/dphi| of the coincidence probability, analytic form.

    Evaluated as a sum of leave-one-out products rather than P times a sum
    of ratios, so factors that hit zero do not produce 0/0.
    """
    return _damped_derivative(n, phi, 1.0)


def _damped_probability(n: int, phi: float, damping: float) -> float:
    """Probability product with the cosine term scaled by `damping`.

    damping = 1 is the ideal device; dephasing enters as
    damping = exp(-n^2 <dchi^2> / 2), absorbed into the a(j) coefficients.
    """
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    c = math.cos(n * phi) * damping
    p = 1.0
    for j in range(1, n):
        p *= (coefficient_a(n, j) * c + coefficient_b(n, j)) / (n * n)
    return p


def _damped_derivative(n: int, phi: float, damping: float) -> float:
    """|dP/dphi| with damped cosine coefficients."""
    if n < 1:
        raise ValueError(f"dimension must be >= 1, got {n}")
    if n == 1:
        return 0.0
    c = math.cos(n * phi) * damping
    factors = [
        (coefficient_a(n, j) * c + coefficient_b(n, j)) / (n * n)
        for j in range(1, n)
    ]
    # prefix[i] * suffix[i] = product of all factors except factors[i]
    m = len(factors)
    prefix = [1.0] * (m + 1)
    for i in range(m):
        prefix[i + 1] = prefix[i] * factors[i]
    suffix = [1.0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] * factors[i]
    leave_one_out = sum(
        (coefficient_a(n, j) / (n * n)) * prefix[j - 1] * suffix[j]
        for j in range(1, n)
    )
    return n * abs(math.sin(n * phi)) * damping * leave_one_out


@dataclass(frozen=True)
class ConjectureReport:
    """Worst-case disagreement between the product form and the Ryser permanent."""

    n_range: tuple[int, int]
    samples: int
    max_abs_error: float
    worst_case: tuple[int, float]  # (n, phi)

    def to_json_dict(self) -> dict:
        return {
            "n_range": [self.n_range[0], self.n_range[1]],
            "samples": self.samples,
            "max_abs_error": self.max_abs_error,
            "worst_case": {"n": self.worst_case[0], "phi": self.worst_case[1]},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def _scan_one_n(args: tuple[int, int]) -> tuple[float, int, float]:
    """Worst absolute error for a single matrix size over the phi grid."""
    n, phi_samples = args
    worst = (-1.0, n, 0.0)
    for phi in np.linspace(0.0, 2 * np.pi, phi_samples, endpoint=False):
        spec = InterferometerSpec(n=n, phi=float(phi))
        err = abs(permanent_ryser(compose_qufti(spec)) - permanent_closed_form(n, float(phi)))
        if err > worst[0]:
            worst = (err, n, float(phi))
    return worst


def conjecture_verify(
    n_max: int, phi_samples: int, workers: int = 1
) -> ConjectureReport:
    """Check the product form against the Ryser permanent on a phi grid.

    Scans n = 2..n_max and phi_samples uniform points over [0, 2 pi).
    Work is distributed per n; the max-reduction over ordered results is
    deterministic regardless of worker count.
    """
    if not 2 <= n_max <= RYSER_DIM_LIMIT:
        raise SizeLimitError(f"n_max must be in 2..{RYSER_DIM_LIMIT}, got {n_max}")
    if phi_samples < 1:
        raise ValueError(f"phi_samples must be >= 1, got {phi_samples}")
    jobs = [(n, phi_samples) for n in range(2, n_max + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_one_n, jobs))
    else:
        results = [_scan_one_n(job) for job in jobs]
    err, n_worst, phi_worst = max(results, key=lambda r: r[0])
    return ConjectureReport(
        n_range=(2, n_max),
        samples=phi_samples,
        max_abs_error=err,
        worst_case=(n_worst, phi_worst),
    )
