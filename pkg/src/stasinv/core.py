"""Parametric signal family, exact discrete sequences, and the four-point invariant.

The family is

    f(t) = p^t + q1*sin(r1*pi*t) + q2*cos(r2*pi*t),      s(t) = f(t) / t,

with complex p, q1, q2 and odd integers r1, r2.  For every such function the
four-point ratio

    (f(t) + f(t+1)) / (f(t+2) + f(t+3))

is the constant 1/p^2: unit shifts flip the sign of both oscillatory terms
(odd frequency multipliers), so they cancel in adjacent pair sums and only
the exponential survives.

The discrete specialization p=1/2, q1=0, q2=1, r1=r2=1 restricted to integer
arguments is a_n = ((1/2)^n + (-1)^n)/n, which satisfies an exact two-step
recurrence and a four-term integer-coefficient identity; those are verified
here in exact rational arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from math import fsum
from statistics import median

from .errors import DomainError, NoValidWindows, SingularWindow

__all__ = [
    "Rational",
    "StasParams",
    "SampleSeries",
    "InvariantReport",
    "eval_f",
    "eval_s",
    "invariant_ratio",
    "closed_form_invariant",
    "seq_a",
    "recurrence_next",
    "four_term_residual",
    "sample_series",
    "estimate_invariant",
]

DEFAULT_SKIP_THRESHOLD = 1e-9

_EXCLUDED_T = (0.0, -1.0, -2.0, -3.0)


class Rational(Fraction):
    """Exact arbitrary-precision fraction, always reduced with positive denominator.

    Thin subclass of fractions.Fraction adding the num/den field names; the
    canonical zero is 0/1.
    """

    __slots__ = ()

    @property
    def num(self) -> int:
        return self.numerator

    @property
    def den(self) -> int:
        return self.denominator

    def __repr__(self) -> str:
        return f"Rational({self.numerator}, {self.denominator})"


@dataclass(frozen=True)
class StasParams:
    """Parameters (p, q1, q2, r1, r2) of one member of the family.

    p is the base of the exponential part (p not in {0, -1}); q1, q2 are the
    sine/cosine amplitudes; r1, r2 are odd integer frequency multipliers.
    """

    p: complex
    q1: complex = 0j
    q2: complex = 0j
    r1: int = 1
    r2: int = 1

    def __post_init__(self):
        object.__setattr__(self, "p", complex(self.p))
        object.__setattr__(self, "q1", complex(self.q1))
        object.__setattr__(self, "q2", complex(self.q2))
        if self.p == 0:
            raise DomainError("p must be non-zero")
        if self.p == -1:
            raise DomainError("p = -1 is excluded (paired sums vanish identically)")
        for name in ("r1", "r2"):
            r = getattr(self, name)
            if not isinstance(r, int) or isinstance(r, bool):
                raise DomainError(f"{name} must be an integer, got {r!r}")
            if r % 2 == 0:
                raise DomainError(f"{name} must be odd, got {r}")


@dataclass(frozen=True)
class SampleSeries:
    """Weighted samples g(t0 + i*step) = f(t0 + i*step) on an evenly spaced grid.

    The canonical stored values are f-values; series ingested as s-values are
    converted via g = t*s on load.  `kind` records the original form.  The
    four-point machinery (invariant estimation, codec) requires step == 1;
    the least-squares fitting accepts denser grids.
    """

    t0: float
    values: tuple[complex, ...]
    kind: str = "f"
    step: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))
        if self.kind not in ("f", "s"):
            raise DomainError(f"kind must be 'f' or 's', got {self.kind!r}")
        if self.step == 0:
            raise DomainError("step must be non-zero")

    @classmethod
    def from_f(cls, t0: float, values, step: float = 1.0) -> "SampleSeries":
        return cls(float(t0), tuple(values), kind="f", step=float(step))

    @classmethod
    def from_s(cls, t0: float, values, step: float = 1.0) -> "SampleSeries":
        """Ingest s-values; converts to weighted form g = t*s (grid must avoid 0)."""
        t0 = float(t0)
        step = float(step)
        values = tuple(values)
        grid = [t0 + i * step for i in range(len(values))]
        if any(t == 0.0 for t in grid):
            raise DomainError("s-value series has a grid point at t = 0")
        g = tuple(t * complex(v) for t, v in zip(grid, values))
        return cls(t0, g, kind="s", step=step)

    def grid(self) -> list[float]:
        return [self.t0 + i * self.step for i in range(len(self.values))]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class InvariantReport:
    """Empirical invariant estimate plus dispersion diagnostics."""

    a_hat: complex
    max_rel_dev: float
    windows_used: int
    windows_skipped: int


def _pow(p: complex, t: float) -> complex:
    """p^t on the principal branch: exp(t*(ln|p| + i*Arg p)), Arg p in (-pi, pi].

    Integer t uses exact integer powering, which agrees with the principal
    branch there (e^{i*pi*n} = (-1)^n) and is exact for dyadic bases.
    """
    if float(t).is_integer():
        return p ** int(t)
    return cmath.exp(t * cmath.log(p))


def _reduced_phase(r: int, t: float) -> float:
    """w in [0, 2) with r*t congruent to w (mod 2), so sin(r*pi*t) = sin(pi*w).

    fmod is exact; the only rounding is in the product r*t.
    """
    w = math.fmod(r * t, 2.0)
    return w + 2.0 if w < 0.0 else w


def _trig_part(params: StasParams, t: float) -> complex:
    """q1*sin(r1*pi*t) + q2*cos(r2*pi*t), via reduced phases."""
    s = math.sin(math.pi * _reduced_phase(params.r1, t))
    c = math.cos(math.pi * _reduced_phase(params.r2, t))
    return params.q1 * s + params.q2 * c


def eval_f(params: StasParams, t: float) -> complex:
    """f(t) = p^t + q1*sin(r1*pi*t) + q2*cos(r2*pi*t); defined for all real t."""
    return _pow(params.p, t) + _trig_part(params, t)


def eval_s(params: StasParams, t: float) -> complex:
    """s(t) = f(t) / t; t must be non-zero."""
    if t == 0:
        raise DomainError("s(t) is undefined at t = 0")
    return eval_f(params, t) / t


def closed_form_invariant(params: StasParams) -> complex:
    """The constant value of the four-point ratio: 1/p^2."""
    return 1.0 / (params.p * params.p)


def _csum(terms) -> complex:
    """Exactly rounded complex sum via per-component fsum."""
    return complex(fsum(z.real for z in terms), fsum(z.imag for z in terms))


def _window_pair_sums(params: StasParams, t: float) -> tuple[complex, complex]:
    """(f(t)+f(t+1), f(t+2)+f(t+3)) evaluated coherently across the window.

    The oscillatory part is evaluated once at the exactly reduced base phase;
    a unit shift multiplies both terms by (-1)^r = -1 for odd r, which is
    applied as an exact sign flip.  Pair sums are accumulated with fsum.
    Without this, the rounding of four independent trig evaluations swamps
    the exponential part wherever |p^t| is many orders below |q1| + |q2|.
    """
    p = params.p
    if float(t).is_integer():
        n = int(t)
        exps = [p ** (n + m) for m in range(4)]
    else:
        log_p = cmath.log(p)
        exps = [cmath.exp((t + m) * log_p) for m in range(4)]
    trig = _trig_part(params, t)
    num = _csum([exps[0], trig, exps[1], -trig])
    den = _csum([exps[2], trig, exps[3], -trig])
    return num, den


def invariant_ratio(params: StasParams, t: float) -> complex:
    """The four-point ratio (f(t)+f(t+1)) / (f(t+2)+f(t+3)) at real t.

    The defining form uses s(t)*t terms, whose t-factors cancel; the domain
    of that form excludes t in {0, -1, -2, -3}, and the exclusion is enforced
    even though the f-form stays finite there.
    """
    if t in _EXCLUDED_T:
        raise DomainError(f"t = {t} is outside the invariant's domain")
    num, den = _window_pair_sums(params, t)
    if den == 0:
        raise SingularWindow(f"f(t+2) + f(t+3) = 0 at t = {t}")
    return num / den


# -- exact discrete sequence -------------------------------------------------

def seq_a(n: int) -> Rational:
    """a_n = ((1/2)^n + (-1)^n) / n, exactly, for n >= 1."""
    if n < 1:
        raise DomainError(f"sequence index must be >= 1, got {n}")
    sign = 1 if n % 2 == 0 else -1
    return Rational(Fraction(1 + sign * 2**n, n * 2**n))


def recurrence_next(n: int, a_prev2: Fraction) -> Rational:
    """a_n from a_{n-2} via the exact two-step recurrence.

    a_n = ((n-2) * a_{n-2} + 3*(-1)^n) / (4n), for n >= 3.
    """
    if n < 3:
        raise DomainError(f"recurrence needs n >= 3, got {n}")
    sign = 1 if n % 2 == 0 else -1
    return Rational(((n - 2) * a_prev2 + 3 * sign) / (4 * n))


def four_term_residual(n: int) -> Rational:
    """4n*a_n + 4(n-1)*a_{n-1} - (n-2)*a_{n-2} - (n-3)*a_{n-3}, exactly.

    Identically zero for n >= 4; computed, not assumed.
    """
    if n < 4:
        raise DomainError(f"four-term identity needs n >= 4, got {n}")
    lhs = 4 * n * seq_a(n) + 4 * (n - 1) * seq_a(n - 1)
    rhs = (n - 2) * seq_a(n - 2) + (n - 3) * seq_a(n - 3)
    return Rational(lhs - rhs)


# -- series generation and empirical invariant -------------------------------

def sample_series(params: StasParams, t0: float, count: int,
                  step: float = 1.0) -> SampleSeries:
    """Synthesize count weighted samples g(t0 + i*step) = f(t0 + i*step).

    On unit-spaced grids the oscillatory part is generated with exact sign
    alternation from a single reduced-phase evaluation, matching how the
    invariant machinery evaluates windows.
    """
    if count < 0:
        raise DomainError("count must be non-negative")
    t0 = float(t0)
    step = float(step)
    p = params.p
    log_p = cmath.log(p)

    def exp_at(t: float) -> complex:
        if t.is_integer():
            return p ** int(t)
        return cmath.exp(t * log_p)

    values = []
    if step == 1.0:
        trig0 = _trig_part(params, t0)
        for i in range(count):
            sign = -1.0 if i % 2 else 1.0
            values.append(exp_at(t0 + i) + sign * trig0)
    else:
        for i in range(count):
            t = t0 + i * step
            values.append(exp_at(t) + _trig_part(params, t))
    return SampleSeries(t0, tuple(values), kind="f", step=step)


def estimate_invariant(series: SampleSeries,
                       skip_threshold: float = DEFAULT_SKIP_THRESHOLD) -> InvariantReport:
    """Estimate the invariant from data: component-wise median over windows.

    Window i contributes ratio_i = (g_i + g_{i+1}) / (g_{i+2} + g_{i+3});
    windows whose denominator magnitude falls below skip_threshold times the
    window's max slot magnitude (or is exactly zero) are skipped as
    near-singular.  max_rel_dev is max |ratio_i - a_hat| / max(|a_hat|, 1)
    over retained windows.
    """
    if series.step != 1.0:
        raise DomainError("invariant estimation requires a unit-spaced series")
    g = series.values
    n = len(g)
    if n < 4:
        raise NoValidWindows(f"need at least 4 samples, got {n}")
    ratios = []
    skipped = 0
    for i in range(n - 3):
        den = g[i + 2] + g[i + 3]
        scale = max(abs(g[i + j]) for j in range(4))
        if den == 0 or abs(den) < skip_threshold * scale:
            skipped += 1
            continue
        ratios.append((g[i] + g[i + 1]) / den)
    if not ratios:
        raise NoValidWindows("every window was skipped as near-singular")
    a_hat = complex(median(r.real for r in ratios), median(r.imag for r in ratios))
    norm = max(abs(a_hat), 1.0)
    max_rel_dev = max(abs(r - a_hat) / norm for r in ratios)
    return InvariantReport(a_hat=a_hat, max_rel_dev=max_rel_dev,
                           windows_used=len(ratios), windows_skipped=skipped)
