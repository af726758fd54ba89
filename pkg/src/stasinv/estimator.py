"""Parameter recovery from sampled data.

The pipeline inverts the family definition step by step: the empirical
invariant gives a = 1/p^2, whose square root leaves a sign ambiguity in p;
adjacent pair sums g_i + g_{i+1} = p^t * (1 + p) depend on p itself and
resolve the sign; the residual after removing p^t is a linear model in
(q1, q2) for fixed frequencies, solved by 2x2 normal equations; frequencies
are found by exhaustive search over odd pairs.

Identifiability caveat: on a unit-spaced grid both sin(r1*pi*(t0+k)) and
cos(r2*pi*(t0+k)) reduce to a constant times (-1)^k for every odd r, so the
two amplitude columns are collinear and only the single combination
q1*sin(r1*pi*t0) + q2*cos(r2*pi*t0) is observable.  Joint recovery of
(q1, q2, r1, r2) needs sub-unit sampling; a step of 1/8 separates all odd
frequencies below 16.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, replace
from math import cos, fsum, inf, pi, sin, sqrt

from .core import SampleSeries, StasParams, estimate_invariant, _pow, _reduced_phase
from .errors import DegenerateParameter, DomainError, IllConditioned, NoValidWindows

__all__ = [
    "FitResult",
    "recover_p",
    "disambiguate_p",
    "fit_trig",
    "search_frequencies",
    "fit_series",
]

COND_LIMIT = 1e12
SIGN_AMBIGUITY_TOL = 1e-6
DEFAULT_R_MAX = 15


@dataclass(frozen=True)
class FitResult:
    """Recovered parameters with fit diagnostics.

    tied_frequencies lists every (r1, r2) pair whose residual matches the
    winner's to within rounding; aliasing on coarse grids makes distinct
    odd pairs literally indistinguishable, and the tie set reports that
    instead of asserting uniqueness.
    """

    params: StasParams
    residual_rms: float
    p_sign_ambiguous: bool
    tied_frequencies: tuple[tuple[int, int], ...] = ()


def recover_p(a: complex) -> tuple[complex, complex]:
    """The two square roots of 1/a, i.e. both candidates for p given a = 1/p^2."""
    if a == 0:
        raise DegenerateParameter("a = 0 has no finite base")
    w = cmath.sqrt(1.0 / a)
    return (w, -w)


def disambiguate_p(candidates: tuple[complex, complex],
                   series: SampleSeries) -> tuple[complex, bool]:
    """Pick the candidate whose predicted pair sums match the data.

    For each candidate pb, adjacent observed sums g_i + g_{i+1} are compared
    with pb^{t_i} * (1 + pb); the mean relative mismatch decides.  Returns
    (choice, ambiguous) where ambiguous is set when the two mismatches agree
    to within 1e-6.
    """
    if series.step != 1.0:
        raise DomainError("sign disambiguation requires a unit-spaced series")
    g = series.values
    if len(g) < 2:
        raise NoValidWindows(f"need at least 2 samples, got {len(g)}")
    grid = series.grid()

    def mean_mismatch(pb: complex) -> float:
        total = 0.0
        pairs = len(g) - 1
        for i in range(pairs):
            obs = g[i] + g[i + 1]
            pred = _pow(pb, grid[i]) * (1.0 + pb)
            scale = max(abs(obs), abs(pred))
            total += abs(obs - pred) / scale if scale > 0 else 0.0
        return total / pairs

    m0 = mean_mismatch(candidates[0])
    m1 = mean_mismatch(candidates[1])
    ambiguous = abs(m0 - m1) < SIGN_AMBIGUITY_TOL
    return (candidates[0] if m0 <= m1 else candidates[1], ambiguous)


def _trig_columns(grid, r1: int, r2: int) -> tuple[list[float], list[float]]:
    s = [sin(pi * _reduced_phase(r1, t)) for t in grid]
    c = [cos(pi * _reduced_phase(r2, t)) for t in grid]
    return s, c


def fit_trig(series: SampleSeries, p: complex, r1: int, r2: int) -> tuple[complex, complex]:
    """Least-squares (q1, q2) for fixed p, r1, r2 via 2x2 normal equations.

    Minimizes sum |g_i - p^{t_i} - q1*sin(r1*pi*t_i) - q2*cos(r2*pi*t_i)|^2.
    Raises IllConditioned when the normal matrix condition exceeds 1e12,
    which happens in particular on integer grids (the sine column vanishes
    for every odd r) and on unit-spaced grids (the two columns are
    collinear).
    """
    g = series.values
    if len(g) < 4:
        raise NoValidWindows(f"need at least 4 samples, got {len(g)}")
    grid = series.grid()
    s, c = _trig_columns(grid, r1, r2)
    y = [g[i] - _pow(p, grid[i]) for i in range(len(g))]

    m00 = fsum(x * x for x in s)
    m01 = fsum(x * z for x, z in zip(s, c))
    m11 = fsum(z * z for z in c)
    # eigenvalues of the symmetric 2x2 normal matrix
    tr = m00 + m11
    disc = sqrt(max((m00 - m11) ** 2 + 4.0 * m01 * m01, 0.0))
    lo = (tr - disc) / 2.0
    hi = (tr + disc) / 2.0
    cond = hi / lo if lo > 0.0 else inf
    if cond > COND_LIMIT:
        raise IllConditioned(
            f"normal matrix condition {cond:.3e} exceeds {COND_LIMIT:.0e} "
            f"for (r1, r2) = ({r1}, {r2})")

    b0 = complex(fsum(x * z.real for x, z in zip(s, y)),
                 fsum(x * z.imag for x, z in zip(s, y)))
    b1 = complex(fsum(x * z.real for x, z in zip(c, y)),
                 fsum(x * z.imag for x, z in zip(c, y)))
    det = m00 * m11 - m01 * m01
    q1 = (m11 * b0 - m01 * b1) / det
    q2 = (m00 * b1 - m01 * b0) / det
    return q1, q2


def _residual_rms(series: SampleSeries, params: StasParams) -> float:
    g = series.values
    grid = series.grid()
    total = 0.0
    for i, t in enumerate(grid):
        s = sin(pi * _reduced_phase(params.r1, t))
        c = cos(pi * _reduced_phase(params.r2, t))
        model = _pow(params.p, t) + params.q1 * s + params.q2 * c
        total += abs(model - g[i]) ** 2
    return sqrt(total / len(g))


def search_frequencies(series: SampleSeries, p: complex,
                       r_max: int = DEFAULT_R_MAX) -> FitResult:
    """Exhaustive fit over odd (r1, r2) pairs in [1, r_max]^2.

    Returns the minimal-residual fit; exact residual ties are broken by the
    lexicographically smaller pair and the full tie set is reported.
    Raises IllConditioned only when every pair fails.
    """
    if r_max < 1 or r_max % 2 == 0:
        raise DomainError(f"r_max must be a positive odd integer, got {r_max}")
    if len(series) < 8:
        raise NoValidWindows(f"need at least 8 samples, got {len(series)}")
    odd = range(1, r_max + 1, 2)
    fits = []
    failure: IllConditioned | None = None
    for r1 in odd:
        for r2 in odd:
            try:
                q1, q2 = fit_trig(series, p, r1, r2)
            except IllConditioned as exc:
                failure = exc
                continue
            params = StasParams(p=p, q1=q1, q2=q2, r1=r1, r2=r2)
            fits.append((_residual_rms(series, params), (r1, r2), params))
    if not fits:
        assert failure is not None
        raise failure
    best_rms, best_pair, best_params = min(fits, key=lambda item: (item[0], item[1]))
    data_scale = sqrt(fsum(abs(v) ** 2 for v in series.values) / len(series))
    tie_band = best_rms + 1e-9 * max(data_scale, 1.0)
    ties = tuple(pair for rms, pair, _ in fits if rms <= tie_band)
    return FitResult(params=best_params, residual_rms=best_rms,
                     p_sign_ambiguous=False, tied_frequencies=ties)


def fit_series(series: SampleSeries, r_max: int = DEFAULT_R_MAX) -> FitResult:
    """Full recovery pipeline: invariant -> base -> sign -> frequencies/amplitudes.

    The invariant and sign stages need unit spacing; for a series sampled at
    step 1/m they run on the every-m-th subseries while the frequency search
    uses the full grid.
    """
    if series.step == 1.0:
        unit = series
    else:
        m = round(1.0 / series.step)
        if m < 1 or m * series.step != 1.0:
            raise DomainError(
                f"step must be 1 or an exact reciprocal 1/m, got {series.step}")
        unit = SampleSeries(series.t0, series.values[::m], kind=series.kind)
    report = estimate_invariant(unit)
    candidates = recover_p(report.a_hat)
    p, ambiguous = disambiguate_p(candidates, unit)
    result = search_frequencies(series, p, r_max)
    return replace(result, p_sign_ambiguous=ambiguous)
