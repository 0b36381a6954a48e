# Copyright 2025 Vijil, Inc.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
# The vijil trademark is owned by Vijil Inc.

"""
Numerical evaluation of the three roots of y^3 - xy + x^3 = 0.

Roots are computed label-free, then labelled Xi0, Xi1, Xi2 by matching the
exact root series at a base point of modulus ``base_modulus`` and continuing
along the radial segment from there. The cut plane removes the negative
real axis and the three rays {r w : r > x_c}, w in {1, j, j^2}; radial
segments never cross these rays.
"""
import cmath
import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from .series.kernel import Branch, kernel_root_series
from .shared.config import AnalyticSettings, get_settings
from .shared.errors import (
    AmbiguousSelectionError, CutError, DomainError, PathError
)

logger = logging.getLogger(__name__)

X_C = 4 ** (1 / 3) / 3
Y_C = 2 ** (1 / 3) / 3
J = cmath.exp(2j * math.pi / 3)


@dataclass(frozen=True)
class AnalyticConstants:
    x_c: float = X_C
    y_c: float = Y_C
    j: complex = J

    def check(self, tol: float = 1e-12) -> bool:
        return (abs(3 * self.y_c ** 2 - self.x_c) <= tol
                and abs(self.x_c ** 3 + self.y_c ** 3
                        - self.x_c * self.y_c) <= tol)


CONSTANTS = AnalyticConstants()


def _settings(settings: Optional[AnalyticSettings]) -> AnalyticSettings:
    return settings or get_settings().analytic


@lru_cache(maxsize=1)
def _mp_singular_points() -> Tuple[mpmath.mpc, ...]:
    with mpmath.workdps(80):
        x_c = mpmath.cbrt(4) / 3
        return (mpmath.mpc(0), x_c * mpmath.mpc(1),
                x_c * mpmath.expjpi(mpmath.mpf(2) / 3),
                x_c * mpmath.expjpi(mpmath.mpf(-2) / 3))


SINGULAR_CANDIDATES: Dict[str, complex] = {
    "0": 0j,
    "x_c": complex(X_C),
    "j x_c": J * X_C,
    "j^2 x_c": J.conjugate() * X_C,
}


def _exact(x: complex) -> mpmath.mpc:
    """
    x as an mpmath number; doubles that round one of the four singular
    points are replaced by the exact point.
    """
    for c in _mp_singular_points():
        if abs(x - complex(c)) <= 8 * np.finfo(float).eps:
            return c
    return mpmath.mpc(x)


def _cubic_roots_mp(x: mpmath.mpc) -> List[mpmath.mpc]:
    if x == 0:
        return [mpmath.mpc(0)] * 3
    a = mpmath.sqrt(x / 3)
    u = x ** 3 / (2 * a ** 3)
    theta = mpmath.asin(u)
    return [2 * a * mpmath.sin((theta + 2 * mpmath.pi * k) / 3)
            for k in range(3)]


def cubic_roots(x: complex, settings: Optional[AnalyticSettings] = None
                ) -> Tuple[complex, complex, complex]:
    """
    The three roots of y^3 - xy + x^3 at working precision, unlabelled.

    With A = sqrt(x/3) the roots are 2A sin((asin(u) + 2 pi k)/3),
    u = x^3 / (2 A^3), which stays exact at the double roots.
    """
    s = _settings(settings)
    with mpmath.workdps(s.precision_digits):
        roots = _cubic_roots_mp(_exact(complex(x)))
        return tuple(complex(r) for r in roots)


def companion_roots(xs: Sequence[complex]) -> np.ndarray:
    """
    Roots for many points at once, as eigenvalues of the companion
    matrices; returns an array of shape (len(xs), 3).
    """
    xs = np.asarray(xs, dtype=complex)
    companion = np.zeros((xs.size, 3, 3), dtype=complex)
    companion[:, 1, 0] = 1
    companion[:, 2, 1] = 1
    companion[:, 0, 2] = -xs ** 3
    companion[:, 1, 2] = xs
    return np.linalg.eigvals(companion)


def residual(x: complex, y: complex) -> float:
    return abs(y ** 3 - x * y + x ** 3)


class Method(str, Enum):
    SERIES_NEAR_ZERO = "SeriesNearZero"
    PATH_CONTINUATION = "PathContinuation"
    CLOSED_FORM = "ClosedForm"


@dataclass(frozen=True)
class BranchValues:
    at: complex
    values: Dict[Branch, complex]
    method: Method

    def __getitem__(self, branch: Branch) -> complex:
        return self.values[branch]

    def as_tuple(self) -> Tuple[complex, complex, complex]:
        return tuple(self.values[b] for b in Branch)

    def residuals(self) -> Dict[Branch, float]:
        return {b: residual(self.at, v) for b, v in self.values.items()}

    def to_dict(self) -> dict:
        return {
            'at': [self.at.real, self.at.imag],
            'method': self.method.value,
            'values': {b.value: [v.real, v.imag]
                       for b, v in self.values.items()},
        }


@lru_cache(maxsize=4)
def _root_series(order: int):
    return [kernel_root_series(b, order) for b in Branch]


def series_values(x: complex, order: int) -> Tuple[complex, ...]:
    """The three truncated root series evaluated at x."""
    return tuple(r.evaluate(complex(x)) for r in _root_series(order))


def _best_matching(reference: Sequence[complex], roots: Sequence[complex]
                   ) -> Tuple[Tuple[int, ...], float]:
    """Permutation p minimising sum |reference[k] - roots[p[k]]|."""
    best = min(
        itertools.permutations(range(3)),
        key=lambda p: sum(abs(reference[k] - roots[p[k]]) for k in range(3))
    )
    return best, max(abs(reference[k] - roots[best[k]]) for k in range(3))


def _separation(values: Sequence[complex]) -> float:
    return min(abs(a - b) for a, b in itertools.combinations(values, 2))


def on_cut(x: complex, band: float) -> bool:
    """
    True iff x lies within ``band`` of the negative real axis or of a ray
    {r w : r > x_c}. The ``band``-neighbourhoods of the ray origins are
    not part of the cuts.
    """
    if x.real < -band and abs(x.imag) <= band:
        return True
    for omega in (1, J, J.conjugate()):
        z = x * omega.conjugate()
        if z.real > X_C + band and abs(z.imag) <= band:
            return True
    return False


def _labelled(reference: Sequence[complex], roots: Sequence[complex]
              ) -> List[complex]:
    perm, _ = _best_matching(reference, roots)
    return [roots[perm[k]] for k in range(3)]


def _checked(found: BranchValues, s: AnalyticSettings) -> BranchValues:
    """
    Raise PathError unless the values are the three roots at ``found.at``:
    residuals within ``residual_tolerance * max(1, |x|^3)`` and elementary
    symmetric functions 0, -x, -x^3 within ``symmetric_tolerance``.
    """
    x = found.at
    cube = max(1.0, abs(x) ** 3)
    worst = max(found.residuals().values())
    if worst > s.residual_tolerance * cube:
        raise PathError(f"Branch values at {x} miss a root by residual "
                        f"{worst:.3g}")
    y0, y1, y2 = found.as_tuple()
    linear = max(1.0, abs(x))
    defects = (abs(y0 + y1 + y2) / linear,
               abs(y0 * y1 + y0 * y2 + y1 * y2 + x) / linear,
               abs(y0 * y1 * y2 + x ** 3) / cube)
    if max(defects) > s.symmetric_tolerance:
        raise PathError(f"Branch values at {x} are not the three roots "
                        f"(symmetric function defects {defects})")
    return found


def eval_branches(x: complex, settings: Optional[AnalyticSettings] = None
                  ) -> BranchValues:
    """
    Values of Xi0, Xi1, Xi2 at x on the cut plane.

    :param x: Point off the cuts; the singular points 0, x_c, j x_c and
        j^2 x_c are allowed and give the limit values.
    :raises CutError: x lies within ``cut_band`` of a cut.
    :raises PathError: continuation could not keep the labels apart, or
        the values found are not the three roots at x.
    """
    s = _settings(settings)
    x = complex(x)
    if on_cut(x, s.cut_band):
        raise CutError(f"{x} lies on a branch cut", field="x")
    if x == 0:
        return _checked(BranchValues(x, {b: 0j for b in Branch},
                                     Method.SERIES_NEAR_ZERO), s)

    if abs(x) <= s.base_modulus:
        values = _labelled(series_values(x, s.series_order),
                           cubic_roots(x, s))
        return _checked(BranchValues(x, dict(zip(Branch, values)),
                                     Method.SERIES_NEAR_ZERO), s)

    base = s.base_modulus * x / abs(x)
    current = _labelled(series_values(base, s.series_order),
                        cubic_roots(base, s))
    t, dt = 0.0, 1.0 / s.continuation_steps
    failures = steps = 0
    collision = s.symmetric_tolerance * max(1.0, abs(x))
    while t < 1.0:
        t_next = min(1.0, t + dt)
        point = x if t_next == 1.0 else base + t_next * (x - base)
        if t_next < 1.0 and on_cut(point, s.cut_band):
            raise PathError(f"Continuation path to {x} meets a cut at {point}")
        roots = cubic_roots(point, s)
        perm, displacement = _best_matching(current, roots)
        separation = min(_separation(roots), _separation(current))
        at_collision = t_next == 1.0 and _separation(roots) <= collision
        if at_collision or displacement < 0.5 * separation:
            current = [roots[perm[k]] for k in range(3)]
            t = t_next
            dt = min(2 * dt, 1.0)
            failures = 0
            steps += 1
            continue
        dt /= 2
        failures += 1
        logger.debug("Refining continuation to %s at t=%.6g (dt=%.3g)",
                     x, t, dt)
        if failures > s.max_refinements:
            raise PathError(
                f"Labels could not be separated near {point} after "
                f"{s.max_refinements} refinements"
            )
    logger.debug("Continued to %s in %d steps", x, steps)
    return _checked(BranchValues(x, dict(zip(Branch, current)),
                                 Method.PATH_CONTINUATION), s)


def closed_form(x: complex, which: str,
                settings: Optional[AnalyticSettings] = None) -> complex:
    """
    xi(x) = 2 sqrt(x/3) sin(asin((3x)^(3/2) / 2) / 3) or
    psi(x) = cos(asin((3x)^(3/2) / 2) / 3), with principal branches.
    """
    if which not in ('xi', 'psi'):
        raise DomainError(f"Unknown closed form '{which}'", field="which")
    s = _settings(settings)
    with mpmath.workdps(s.precision_digits):
        z = _exact(complex(x))
        u = 3 * z * mpmath.sqrt(3 * z) / 2
        angle = mpmath.asin(u) / 3
        if which == 'xi':
            return complex(2 * mpmath.sqrt(z / 3) * mpmath.sin(angle))
        return complex(mpmath.cos(angle))


def closed_form_branches(x: complex,
                         settings: Optional[AnalyticSettings] = None
                         ) -> BranchValues:
    """
    Xi0 = xi, Xi1,2 = -xi/2 +/- sqrt(x) psi from the closed forms; valid for
    |x| <= x_c off the negative real axis.
    """
    x = complex(x)
    if abs(x) > X_C * (1 + 1e-12):
        raise DomainError(f"Closed forms label the roots only for |x| <= x_c,"
                          f" got |x| = {abs(x)}", field="x")
    xi = closed_form(x, 'xi', settings)
    psi = closed_form(x, 'psi', settings)
    root = cmath.sqrt(x) * psi
    return BranchValues(x, {Branch.XI0: xi, Branch.XI1: root - xi / 2,
                            Branch.XI2: -root - xi / 2},
                        Method.CLOSED_FORM)


@dataclass(frozen=True)
class SingularFit:
    """
    f(c + r d) - f(c) ~ slope * r^exponent along a direction d; for a
    square-root singularity the exponent is 1/2. ``amplitude`` is f(c).
    """
    location: complex
    amplitude: complex
    slope: float
    exponent: float


def singular_fit(f: Callable[[complex], complex], location: complex,
                 direction: complex, offsets: Sequence[float],
                 value: Optional[complex] = None) -> SingularFit:
    """
    Log-log regression of |f(c + r d) - f(c)| against r over ``offsets``.

    :param value: f(c), if already known.
    """
    if value is None:
        value = f(location)
    r = np.asarray(offsets, dtype=float)
    diffs = np.array([abs(f(location + ri * direction) - value) for ri in r])
    if np.any(diffs == 0):
        return SingularFit(location, value, 0.0, math.inf)
    exponent, _ = np.polyfit(np.log(r), np.log(diffs), 1)
    slope = float(diffs[np.argmin(r)] / math.sqrt(r.min()))
    return SingularFit(location, value, slope, float(exponent))


class Verdict(str, Enum):
    SINGULAR = "singular"
    REGULAR = "regular"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CandidateReport:
    branch: Branch
    candidate: str
    location: complex
    verdict: Verdict
    fits: Dict[str, SingularFit] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            'branch': self.branch.value,
            'candidate': self.candidate,
            'location': [self.location.real, self.location.imag],
            'verdict': self.verdict.value,
            'fits': {
                name: {'exponent': fit.exponent, 'slope': fit.slope,
                       'amplitude': [fit.amplitude.real, fit.amplitude.imag]}
                for name, fit in self.fits.items()
            },
        }


def _classify(exponents: Sequence[float], tol: float) -> Verdict:
    if all(abs(e - 0.5) <= tol for e in exponents):
        return Verdict.SINGULAR
    if all(e >= 1 - tol for e in exponents):
        return Verdict.REGULAR
    return Verdict.INCONCLUSIVE


def _directions(c: complex) -> Dict[str, complex]:
    if c == 0:
        return {'real': 1 + 0j, 'imaginary': 1j}
    unit = c / abs(c)
    return {'radial': -unit, 'tangential': 1j * unit}


def singularity_survey(settings: Optional[AnalyticSettings] = None
                       ) -> Dict[Branch, List[CandidateReport]]:
    """
    Classify each branch at 0, x_c, j x_c and j^2 x_c by the local
    growth exponent, approached from two directions.
    """
    s = _settings(settings)
    offsets = [10.0 ** e for e in s.ladder_exponents]
    cache: Dict[complex, BranchValues] = {}

    def branches(x: complex) -> BranchValues:
        if x not in cache:
            cache[x] = eval_branches(x, s)
        return cache[x]

    report: Dict[Branch, List[CandidateReport]] = {b: [] for b in Branch}
    for name, c in SINGULAR_CANDIDATES.items():
        at_c = branches(c)
        for branch in Branch:
            fits = {
                label: singular_fit(lambda x: branches(x)[branch], c, d,
                                    offsets, value=at_c[branch])
                for label, d in _directions(c).items()
            }
            verdict = _classify([f.exponent for f in fits.values()],
                                s.exponent_tolerance)
            if verdict is Verdict.INCONCLUSIVE:
                logger.warning("Branch %s at %s is inconclusive: %s",
                               branch.value, name,
                               {k: f.exponent for k, f in fits.items()})
            report[branch].append(CandidateReport(branch, name, c, verdict,
                                                  fits))
    return report


def dominant_root_check(x: complex,
                        settings: Optional[AnalyticSettings] = None) -> bool:
    """True iff some root at x has modulus larger than |x|."""
    x = complex(x)
    if x == 0:
        raise DomainError("The dominant root check needs x != 0", field="x")
    return max(abs(r) for r in cubic_roots(x, settings)) > abs(x)


@dataclass(frozen=True)
class BatchCheck:
    samples: int
    failures: int
    worst_margin: float

    @property
    def passes(self) -> bool:
        return self.failures == 0


def dominant_root_batch(samples: Optional[int] = None,
                        seed: Optional[int] = None,
                        inner: float = 0.01, outer: float = 10.0,
                        settings: Optional[AnalyticSettings] = None
                        ) -> BatchCheck:
    """
    Dominant-root check on pseudo-random points of the annulus
    inner <= |x| <= outer, with batched companion roots.
    """
    s = _settings(settings)
    samples = s.lemma_samples if samples is None else samples
    rng = np.random.default_rng(s.lemma_seed if seed is None else seed)
    modulus = rng.uniform(inner, outer, samples)
    angle = rng.uniform(-math.pi, math.pi, samples)
    xs = modulus * np.exp(1j * angle)
    largest = np.abs(companion_roots(xs)).max(axis=1)
    margin = largest - np.abs(xs)
    return BatchCheck(samples, int(np.count_nonzero(margin <= 0)),
                      float(margin.min()))


@dataclass(frozen=True)
class BoundCheck:
    bound_value: float
    threshold: float
    critical_value: float
    terms: int
    passes: bool

    def to_dict(self) -> dict:
        return {'bound_value': self.bound_value, 'threshold': self.threshold,
                'critical_value': self.critical_value, 'terms': self.terms,
                'passes': self.passes}


def gprime_majorant_term(i: int) -> float:
    return 3 * (i + 1) * math.comb(3 * i - 2, i - 1) * Y_C ** (3 * i + 2)


def gprime_bound_check(settings: Optional[AnalyticSettings] = None
                       ) -> BoundCheck:
    """
    Majorant 3 sum_{i>=1} (i+1) C(3i-2, i-1) y_c^(3i+2) of G'(y_c), summed
    until terms drop below ``majorant_cutoff``, against 2 x_c^2 y_c.
    """
    s = _settings(settings)
    total, i = 0.0, 1
    while True:
        term = gprime_majorant_term(i)
        total += term
        if term < s.majorant_cutoff:
            break
        i += 1
    critical = 2 * X_C ** 2 * Y_C
    passes = total < s.majorant_threshold and 0.23 <= critical <= 0.24
    logger.info("G'(y_c) majorant %.6f after %d terms, 2x_c^2y_c = %.6f",
                total, i, critical)
    return BoundCheck(total, s.majorant_threshold, critical, i, passes)


@dataclass(frozen=True)
class Chain:
    points: Tuple[complex, ...]
    roots_at_x1: Tuple[complex, ...]

    def contains_start(self, tol: float = 1e-9) -> bool:
        return any(abs(r - self.points[0]) <= tol for r in self.roots_at_x1)

    def to_dict(self) -> dict:
        return {
            'points': [[p.real, p.imag] for p in self.points],
            'roots_at_x1': [[r.real, r.imag] for r in self.roots_at_x1],
        }


def _select(candidates: Sequence[complex], rule: Callable[[complex], bool],
            description: str) -> complex:
    chosen = [c for c in candidates if rule(c)]
    if len(chosen) != 1:
        raise AmbiguousSelectionError(
            f"Expected exactly one root with {description}, found "
            f"{len(chosen)} among {list(candidates)}",
            candidates=list(candidates),
        )
    return chosen[0]


def singularity_chain_rec2(settings: Optional[AnalyticSettings] = None
                           ) -> Chain:
    """
    x0 = x_c, x1 = Xi2(x0), x2 = the root at x1 with negative imaginary
    part, x3 = the root at x2 with modulus above ``chain_modulus_bound``.
    """
    s = _settings(settings)
    x0 = complex(X_C)
    x1 = eval_branches(x0, s)[Branch.XI2]
    if abs(x1.imag) <= s.symmetric_tolerance:
        x1 = complex(x1.real)
    roots1 = cubic_roots(x1, s)
    x2 = _select(roots1, lambda r: r.imag < -s.symmetric_tolerance,
                 "negative imaginary part")
    roots2 = cubic_roots(x2, s)
    x3 = _select(roots2, lambda r: abs(r) > s.chain_modulus_bound,
                 f"modulus above {s.chain_modulus_bound}")
    logger.info("Singularity chain: %s", [x0, x1, x2, x3])
    return Chain((x0, x1, x2, x3), tuple(roots1))


def r_singularity_bound() -> float:
    """Largest modulus among the roots of x^3 - x + 1."""
    return float(np.abs(np.roots([1, 0, -1, 1])).max())


@dataclass(frozen=True)
class RadiusEstimate:
    estimate: float
    index: int

    def to_dict(self) -> dict:
        return {'estimate': self.estimate, 'index': self.index}


def radius_estimate(seq: Sequence[int], stride: int = 1,
                    min_terms: int = 10) -> RadiusEstimate:
    """
    Root-test estimate g_m^(-1/m) at the largest index m that is a
    multiple of ``stride`` with g_m != 0.
    """
    if stride < 1:
        raise DomainError(f"Stride must be positive, got {stride}",
                          field="stride")
    support = [m for m in range(stride, len(seq), stride) if seq[m]]
    if len(support) < min_terms:
        raise DomainError(
            f"Radius estimation needs at least {min_terms} non-zero terms at "
            f"stride {stride}, got {len(support)}", field="seq"
        )
    m = support[-1]
    return RadiusEstimate(math.exp(-math.log(abs(seq[m])) / m), m)


def local_expansion_constants(g: Sequence[int]) -> SingularFit:
    """
    A = x_c^2 y_c^2 - G(y_c) and B = sqrt(x_c/3) (2 x_c^2 y_c - G'(y_c)),
    the constant and square-root amplitude of G at x_c.

    :param g: Coefficients g_0, g_1, ... of G.
    """
    g_value = sum(c * Y_C ** m for m, c in enumerate(g) if c)
    g_prime = sum(m * c * Y_C ** (m - 1) for m, c in enumerate(g) if c)
    a = X_C ** 2 * Y_C ** 2 - g_value
    b = math.sqrt(X_C / 3) * (2 * X_C ** 2 * Y_C - g_prime)
    return SingularFit(complex(X_C), complex(a), b, 0.5)


def real_branch_ordering(samples: int = 32,
                         settings: Optional[AnalyticSettings] = None
                         ) -> List[Tuple[float, Tuple[float, float, float]]]:
    """
    Sample (0, x_c) and return the points where Xi2 < 0 < Xi0 < Xi1 fails,
    with the three real values found there.
    """
    violations = []
    for k in range(1, samples + 1):
        x = X_C * k / (samples + 1)
        values = eval_branches(x, settings)
        xi0, xi1, xi2 = (values[b].real for b in Branch)
        if not xi2 < 0 < xi0 < xi1:
            violations.append((x, (xi0, xi1, xi2)))
    return violations
