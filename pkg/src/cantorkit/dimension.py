"""Hausdorff-Besicovitch dimension computations.

Every family here is Moran-structured: its dimension is the unique root of a
pressure equation.  Roots are found by bisection in the contraction variable
t = s^-alpha, where the defining polynomial is monotone on (0, 1); this
converges unconditionally and needs no derivatives.  Closed forms (the cubic
for the odd-gap family, the periodic-gap ratio, the log formula for the
one-parameter Cantor family) are evaluated directly and cross-checked
against the generic root path.

This is the only module (with boxcount) that uses floating point; residuals
of the defining equations are reported so callers can judge conditioning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import OutOfRangeError, UnsupportedFamilyError
from .families import BlockSet, FamilySpec, blocks_of_family
from .radix import CantorBasis

ROOT_TOL = 1e-13
MAX_ITER = 200


@dataclass(frozen=True)
class RatioList:
    """Similarity ratios of a Moran construction, each strictly inside (0, 1)."""

    ratios: tuple

    def __post_init__(self):
        object.__setattr__(self, "ratios", tuple(self.ratios))
        if not self.ratios:
            raise ValueError("need at least one ratio")
        for r in self.ratios:
            if not 0 < r < 1:
                raise OutOfRangeError(f"ratio {r} outside (0, 1)")


@dataclass(frozen=True)
class DimensionResult:
    alpha: float
    method: str
    residual: float
    bracket: tuple[float, float]
    iterations: int
    degenerate: bool = False
    cross_check: float | None = None
    note: str | None = None

    def __post_init__(self):
        if not -1e-12 <= self.alpha <= 1 + 1e-12:
            raise ValueError(f"dimension {self.alpha} outside [0, 1]")
        object.__setattr__(self, "alpha", min(max(self.alpha, 0.0), 1.0))
        lo, hi = self.bracket
        if not (lo - 1e-9 <= self.alpha <= hi + 1e-9):
            raise ValueError(f"alpha {self.alpha} outside bracket {self.bracket}")


def _bisect_increasing(f: Callable[[float], float], lo: float, hi: float) -> tuple[float, int, float, float]:
    """Root of an increasing f with f(lo) < 0 < f(hi), to float resolution."""
    it = 0
    for it in range(1, MAX_ITER + 1):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi or hi - lo < ROOT_TOL * max(1.0, abs(mid)):
            break
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi), it, lo, hi


def moran_dimension(ratios) -> DimensionResult:
    """The unique alpha >= 0 with sum_i sigma_i^alpha = 1."""
    if not isinstance(ratios, RatioList):
        ratios = RatioList(tuple(ratios))
    sigmas = [float(r) for r in ratios.ratios]
    p = len(sigmas)
    if p == 1:
        return DimensionResult(0.0, "moran-root", 0.0, (0.0, 0.0), 0, degenerate=True)
    logs = [math.log(x) for x in sigmas]

    def pressure(a):
        return math.fsum(math.exp(a * L) for L in logs)

    def f(a):  # increasing in a: pressure itself is decreasing
        return 1.0 - pressure(a)

    hi = 1.0
    while f(hi) < 0:
        hi *= 2
        if hi > 2**40:
            raise OutOfRangeError("Moran equation root out of reach")
    alpha, it, lo, hi = _bisect_increasing(f, 0.0, hi)
    residual = abs(pressure(alpha) - 1.0)
    return DimensionResult(alpha, "moran-root", residual, (lo, hi), it)


def _alpha_from_t(t: float, s: int) -> float:
    return math.log(1.0 / t) / math.log(s)


def block_dimension(s: int, blocks: BlockSet) -> DimensionResult:
    """Root of sum_k N_k t^k = 1 in t = s^-alpha over the length histogram.

    The polynomial is increasing on (0, 1), so bisection brackets the unique
    root; the analytic odd-zero-runs language is handled through its
    generating function (s-1) t^3 / (1 - t^2) = 1, i.e. (s-1)t^3 + t^2 = 1.
    A block set that overcounts the interval (root below 1/s) is rejected.
    """
    if s < 2:
        raise OutOfRangeError(f"base must be >= 2, got {s}")
    note = None
    if blocks.analytic == "odd-zero-runs":

        def poly(t):
            return (s - 1) * t**3 + t**2 - 1.0

        note = "solved (s-1)t^3 + t^2 = 1 with t = s^-alpha"
    else:
        if blocks.size == 0:
            raise ValueError("empty block set")
        hist = blocks.counts()
        if blocks.size == 1:
            return DimensionResult(
                0.0, "block-root", 0.0, (0.0, 0.0), 0, degenerate=True,
                note="single block: the set is one point",
            )

        def poly(t):
            return math.fsum(n * t**k for k, n in sorted(hist.items())) - 1.0

        note = "solved sum_k N_k t^k = 1 with t = s^-alpha; N = " + str(dict(sorted(hist.items())))
    t, it, t_lo, t_hi = _bisect_increasing(poly, 0.0, 1.0)
    alpha = _alpha_from_t(t, s)
    residual = abs(poly(s**-alpha))
    bracket = (_alpha_from_t(t_hi, s), _alpha_from_t(max(t_lo, 1e-300), s))
    return DimensionResult(alpha, "block-root", residual, bracket, it, note=note)


def family_dimension(fam: FamilySpec) -> DimensionResult:
    """Dimension of a family by its defining equation.

    Run/block families go through their block histogram; the free odd-gap
    family uses the cubic closed form; the periodic-gap family the exact
    ratio t/(m_1+...+m_t).
    """
    if fam.kind == "Cantor":
        raise UnsupportedFamilyError(
            "Cantor-restriction families use cantor_series_dim_estimate"
        )
    if fam.kind == "MD":
        return md_closed_form(fam.s)
    if fam.kind == "MDper":
        return periodic_dimension(fam.period)
    return block_dimension(fam.s, blocks_of_family(fam))


def md_closed_form(s: int) -> DimensionResult:
    """Closed-form dimension of the free odd-gap family.

    alpha = log_s x where x = cbrt((s-1)/2 + R) + cbrt((s-1)/2 - R),
    R = sqrt((27(s-1)^2 - 4)/3)/6; x is the positive root of x^3 - x = s-1.
    The generic cubic bisection is recorded as a cross-check.
    """
    if s < 2:
        raise OutOfRangeError(f"base must be >= 2, got {s}")
    a = (s - 1) / 2.0
    r = math.sqrt((27.0 * (s - 1) ** 2 - 4.0) / 3.0) / 6.0
    x = (a + r) ** (1.0 / 3.0) + (a - r) ** (1.0 / 3.0)  # a - r > 0 (a^2 - r^2 = 1/27)
    alpha = math.log(x) / math.log(s)

    def poly(t):
        return (s - 1) * t**3 + t**2 - 1.0

    t, it, t_lo, t_hi = _bisect_increasing(poly, 0.0, 1.0)
    cross = _alpha_from_t(t, s)
    residual = abs(poly(s**-alpha))
    lo, hi = sorted((alpha, cross))
    return DimensionResult(
        alpha, "closed-cubic", residual, (lo - 1e-12, hi + 1e-12), it, cross_check=cross
    )


def periodic_dimension(m: Sequence[int]) -> DimensionResult:
    """Dimension t/(m_1+...+m_t) of the periodic-gap family, exactly."""
    m = tuple(int(v) for v in m)
    if not m:
        raise ValueError("empty period")
    for v in m:
        if v < 1 or v % 2 == 0:
            raise OutOfRangeError(f"period entries must be odd positive integers, got {v}")
    alpha = len(m) / sum(m)
    return DimensionResult(
        alpha, "periodic", 0.0, (alpha, alpha), 0,
        degenerate=(alpha == 1.0),
        note=f"exact {len(m)}/{sum(m)}",
    )


def lambda_dimension(lam: float, l: int) -> DimensionResult:
    """log l / (-log lambda) for the one-parameter Cantor family.

    When lambda = 1/s for an integer s this is the exact s-adic case
    alpha = log_s l; the formula's hypothesis s - 1 < (l - 1)^2 is reported
    in the note but does not block evaluation.  lambda must not exceed 1/l
    (the formula would leave [0, 1]).
    """
    if not 0 < lam < 1:
        raise OutOfRangeError(f"lambda {lam} outside (0, 1)")
    if l < 1:
        raise OutOfRangeError(f"need l >= 1, got {l}")
    alpha = math.log(l) / (-math.log(lam)) if l > 1 else 0.0
    if alpha > 1 + 1e-12:
        raise OutOfRangeError(f"lambda {lam} above 1/l: formula leaves [0, 1]")
    note = None
    s_guess = round(1.0 / lam)
    if s_guess >= 2 and abs(1.0 / lam - s_guess) < 1e-9:
        hyp = "holds" if s_guess - 1 < (l - 1) ** 2 else "fails"
        note = f"lambda = 1/{s_guess}: alpha = log_{s_guess}({l}); hypothesis s-1 < (l-1)^2 {hyp}"
    return DimensionResult(min(alpha, 1.0), "closed-log", 0.0, (alpha, alpha), 0, note=note)


@dataclass(frozen=True)
class CantorSeriesEstimate:
    """Running dimension ratios r_n for a digit-restricted Cantor series.

    ``proxy`` is the minimum of r_n over the trailing window, reported as a
    stand-in for the liminf (which no finite prefix determines)."""

    ratios: tuple[float, ...]
    proxy: float
    window: int
    side_condition_last: float
    side_condition_slow: bool

    def to_dimension_result(self) -> DimensionResult:
        tail = self.ratios[-self.window :]
        return DimensionResult(
            self.proxy,
            "liminf-estimate",
            0.0,
            (min(tail), max(tail)),
            len(self.ratios),
            note=f"min of r_n over the last {self.window} of {len(self.ratios)} terms",
        )


def cantor_series_dim_estimate(
    basis: CantorBasis,
    level_sets: Sequence[Sequence[int]],
    n_max: int,
    window: int | None = None,
) -> CantorSeriesEstimate:
    """r_n = sum_(j<=n) log|I_j| / sum_(j<=n) log d_j plus a liminf proxy.

    Logs are accumulated (never the products themselves), so bases like
    d_n = 2^n stay exact in float range.  The side condition
    log d_n / log(d_1...d_n) -> 0 is evaluated on the horizon and flagged
    (not failed) when it is still above 0.1 at n_max.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    sets = [tuple(sorted(set(int(d) for d in I))) for I in level_sets]
    if not sets:
        raise ValueError("need at least one level digit set")
    for I in sets:
        if not I:
            raise ValueError("empty level digit set")
    q = len(sets)
    # digits must fit below every basis element they pair with
    probe = max(q, len(basis.values) or 1, 1)
    for j in range(1, probe * 2 + 1):
        I = sets[(j - 1) % q]
        dj = basis.d(j) if basis.kind != "power" else basis.base  # d_1 is smallest
        if dj < 2:
            raise ValueError(f"basis element d_{j} = {dj} must be > 1")
        if I[-1] >= dj and basis.kind != "power":
            raise ValueError(f"digit {I[-1]} >= d_{j} = {dj}")
        if basis.kind == "power" and I[-1] >= basis.base:
            raise ValueError(f"digit {I[-1]} >= d_1 = {basis.base}")
    log_sizes = [math.log(len(I)) for I in sets]
    # Kahan-compensated accumulators: 10^5 naive additions would drift the
    # constant-basis ratio past the 1e-12 the estimate is good for
    num = num_c = 0.0
    den = den_c = 0.0
    ratios = []
    side = 1.0
    for n in range(1, n_max + 1):
        ld = basis.log_d(n)
        y = log_sizes[(n - 1) % q] - num_c
        t = num + y
        num_c = (t - num) - y
        num = t
        y = ld - den_c
        t = den + y
        den_c = (t - den) - y
        den = t
        ratios.append(num / den)
        side = ld / den
    w = window if window is not None else max(100, n_max // 10)
    w = min(w, n_max)
    proxy = min(ratios[-w:])
    return CantorSeriesEstimate(
        ratios=tuple(ratios),
        proxy=proxy,
        window=w,
        side_condition_last=side,
        side_condition_slow=side > 0.1,
    )
