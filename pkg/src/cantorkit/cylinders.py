"""Exact cylinder geometry: interval formulas, an enumeration oracle, gaps,
orderings and covering sums.

Closed-form intervals exist for the run-length families S/Su (any u), NSu
with u = 0, and Sminus; each cylinder is the image of the whole set under an
affine contraction, so its hull is the prefix value plus a signed rescale of
the whole-set hull.  For every other enumerable family the hull is computed
exactly as the fixed point of the family's affine digit maps.

The tail-extrema oracle never touches those formulas: it walks *all*
admissible digit continuations of an address out to a given rank, closes
each one with a periodic admissible tail (so every enumerated value is an
actual member of the set), and returns the exact min/max.  Containment of
the oracle interval in the formula interval, with Hausdorff distance below
the geometric tail bound, is the package's independent evidence for the
interval formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from . import kernels
from .errors import CapExceededError, FamilyConstraintError, UnsupportedFamilyError
from .families import (
    BLOCK_KINDS,
    DEFAULT_CAP,
    CylinderAddress,
    FamilySpec,
    address_frame,
    as_address,
    enumerate_addresses,
    family_blocks,
)


@dataclass(frozen=True)
class IntervalR:
    """A closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")

    def __str__(self):
        return f"[{self.lo}, {self.hi}]"

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, other: "IntervalR") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def hausdorff(self, other: "IntervalR") -> Fraction:
        return max(abs(self.lo - other.lo), abs(self.hi - other.hi))


@dataclass(frozen=True)
class CylinderReport:
    """Summary of one cylinder: hull, diameter, child ratio, sibling layout."""

    address: tuple
    interval: IntervalR
    diameter: Fraction
    child_ratio: Fraction | None
    orientation: str | None


@dataclass(frozen=True)
class OracleResult:
    interval: IntervalR
    bound: Fraction
    leaves: int


# -- whole-set constants (run-length families) --------------------------------


def _su_bounds(s: int, u: int) -> tuple[Fraction, Fraction]:
    """inf/sup of the Su whole set; the branch structure follows the extremal
    digit tails (all-(s-1) runs for low u, the digit next to u for the sup)."""
    if u in (0, 1):
        inf0 = Fraction(u, s - 1) + Fraction(s - 1 - u, s ** (s - 1) - 1)
    else:
        inf0 = Fraction(1, s - 1)
    if u == 0:
        sup0 = Fraction(1, s - 1)
    elif u <= s - 2:
        sup0 = Fraction(u, s - 1) + Fraction(1, s ** (u + 1) - 1)
    else:
        sup0 = 1 - Fraction(1, s ** (s - 2) - 1)
    return inf0, sup0


def _nega0_bounds(s: int) -> tuple[Fraction, Fraction]:
    """inf/sup of the NSu(u=0) whole set: the sup is the all-2s tail
    2/(s^2-1); the inf starts with digit 1 and then rides the sup tail."""
    sup0 = Fraction(2, s * s - 1)
    inf0 = -Fraction(s * s + 1, s * (s * s - 1))
    return inf0, sup0


def _sminus_bounds(s: int) -> tuple[Fraction, Fraction]:
    inf0 = Fraction(-(s ** (s - 1)) + s - 1, s**s - 1)
    sup0 = Fraction(-s * s + s + 1, s**s - 1)
    return inf0, sup0


def sminus_diameter_constant(s: int) -> Fraction:
    """d(Sminus) = (s^(s-1) - s^2 + 2) / (s^s - 1), independently of the
    inf/sup constants."""
    return Fraction(s ** (s - 1) - s * s + 2, s**s - 1)


# -- closed-form cylinder intervals --------------------------------------------

_FORMULA_KINDS = ("S", "Su", "NSu", "Sminus")


def _require_formula_family(fam: FamilySpec) -> None:
    if fam.kind not in _FORMULA_KINDS or (fam.kind == "NSu" and fam.u != 0):
        raise UnsupportedFamilyError(
            f"no closed cylinder formula for {fam.label()}; use the oracle hull"
        )


def cylinder_interval(fam: FamilySpec, addr) -> IntervalR:
    """Exact [inf, sup] of a cylinder from the closed-form case analysis."""
    _require_formula_family(fam)
    addr = as_address(fam, addr)
    s = fam.s
    base = addr.base
    esum = sum(base)
    scale = Fraction(1, s**esum)
    if fam.kind in ("S", "Su"):
        u = fam.u
        tau = Fraction(0)
        ck = 0
        for c in base:
            ck += c
            tau += Fraction(c - u, s**ck)
        tau += Fraction(u, s - 1) * (1 - scale)
        inf0, sup0 = _su_bounds(s, u)
        return IntervalR(tau + inf0 * scale, tau + sup0 * scale)
    if fam.kind == "NSu":
        g = Fraction(0)
        ck = 0
        for c in base:
            ck += c
            g += Fraction((-1) ** ck * c, s**ck)
        inf0, sup0 = _nega0_bounds(s)
        if esum % 2 == 0:
            return IntervalR(g + inf0 * scale, g + sup0 * scale)
        return IntervalR(g - sup0 * scale, g - inf0 * scale)
    # Sminus
    sig = Fraction(0)
    ck = 0
    for i, c in enumerate(base, 1):
        ck += c
        sig += Fraction((-1) ** i * c, s**ck)
    inf0, sup0 = _sminus_bounds(s)
    if addr.rank % 2 == 0:
        return IntervalR(sig + inf0 * scale, sig + sup0 * scale)
    return IntervalR(sig - sup0 * scale, sig - inf0 * scale)


def cylinder_diameter(fam: FamilySpec, addr) -> Fraction:
    """Exact diameter; equals s^-(c_1+...+c_n) times the whole-set diameter."""
    if fam.kind in _FORMULA_KINDS and not (fam.kind == "NSu" and fam.u != 0):
        return cylinder_interval(fam, addr).width
    return cylinder_hull(fam, addr).width


# -- exact hulls for arbitrary enumerable families ------------------------------


def solve_affine_hull(maps: Sequence[tuple[Fraction, Fraction]]) -> tuple[Fraction, Fraction]:
    """Exact hull [lo, hi] of the attractor of x -> g_i + k_i * x, |k_i| < 1.

    Iterates the interval map until the extremal selectors stabilise, then
    solves the resulting 2x2 linear system exactly and verifies it is the
    true fixed point.
    """
    maps = [(Fraction(g), Fraction(k)) for g, k in maps]
    if not maps:
        raise ValueError("need at least one affine map")
    kmax = max(abs(k) for _, k in maps)
    if kmax >= 1:
        raise ValueError("affine maps must be contractions")
    bound = max(abs(g) for g, _ in maps) / (1 - kmax) + 1
    lo, hi = -bound, bound

    def step(lo, hi):
        cand_lo = [(g + (k * lo if k > 0 else k * hi), i) for i, (g, k) in enumerate(maps)]
        cand_hi = [(g + (k * hi if k > 0 else k * lo), i) for i, (g, k) in enumerate(maps)]
        blo, ilo = min(cand_lo)
        bhi, ihi = max(cand_hi)
        return blo, bhi, ilo, ihi

    prev_sel = None
    stable = 0
    for _ in range(400):
        lo, hi, ilo, ihi = step(lo, hi)
        sel = (ilo, ihi)
        stable = stable + 1 if sel == prev_sel else 0
        prev_sel = sel
        if stable < 3:
            continue
        g1, k1 = maps[ilo]
        g2, k2 = maps[ihi]
        if k1 > 0 and k2 > 0:
            L, H = g1 / (1 - k1), g2 / (1 - k2)
        elif k1 > 0:
            L = g1 / (1 - k1)
            H = g2 + k2 * L
        elif k2 > 0:
            H = g2 / (1 - k2)
            L = g1 + k1 * H
        else:
            L = (g1 + k1 * g2) / (1 - k1 * k2)
            H = g2 + k2 * L
        ok_lo = L == min(g + (k * L if k > 0 else k * H) for g, k in maps)
        ok_hi = H == max(g + (k * H if k > 0 else k * L) for g, k in maps)
        if ok_lo and ok_hi and L <= H:
            return L, H
    raise RuntimeError("affine hull iteration did not stabilise")


def _local_maps(fam: FamilySpec) -> list[tuple[Fraction, Fraction]]:
    s, u = fam.s, fam.u or 0
    if fam.kind in ("S", "Su"):
        return [(Fraction(a - u, s**a), Fraction(1, s**a)) for a in fam.run_digits]
    if fam.kind == "NSu":
        return [
            (Fraction((a - u) * (-1) ** a, s**a), Fraction((-1) ** a, s**a))
            for a in fam.run_digits
        ]
    if fam.kind == "Sminus":
        return [(Fraction(-a, s**a), Fraction(-1, s**a)) for a in fam.run_digits]
    if fam.kind in BLOCK_KINDS:
        out = []
        for b in family_blocks(fam):
            val = sum(Fraction(d, s**i) for i, d in enumerate(b, 1))
            out.append((val, Fraction(1, s ** len(b))))
        return out
    raise UnsupportedFamilyError(f"{fam.kind} has no single-phase digit maps")


def _mdper_hulls(s: int, period: tuple[int, ...]) -> list[IntervalR]:
    """Per-phase hulls of the MDper local tail values.

    Phase p sees gaps period[p], period[p+1], ... cyclically; one level maps
    (inf, sup) -> (-(s-1)q - q*sup, -q*inf) with q = s^-gap.  The cycle of
    those swap-affine maps has a unique fixed point, solved exactly.
    """
    t = len(period)

    def level_map(gap):
        q = Fraction(1, s**gap)
        # matrix rows act on the column (inf, sup); translation column last
        return ((Fraction(0), -q, -(s - 1) * q), (-q, Fraction(0), Fraction(0)))

    def compose(m_outer, m_inner):
        (a, b, e), (c, d, f) = m_outer
        (a2, b2, e2), (c2, d2, f2) = m_inner
        return (
            (a * a2 + b * c2, a * b2 + b * d2, a * e2 + b * f2 + e),
            (c * a2 + d * c2, c * b2 + d * d2, c * e2 + d * f2 + f),
        )

    total = ((Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0)))
    for p in range(t):
        total = compose(total, level_map(period[p]))
    # fixed point of x = A x + b
    (a, b, e), (c, d, f) = total
    det = (1 - a) * (1 - d) - b * c
    inf0 = (e * (1 - d) + b * f) / det
    sup0 = (f * (1 - a) + c * e) / det
    hulls = [None] * t
    hulls[0] = IntervalR(inf0, sup0)
    for p in range(t - 1, 0, -1):
        nxt = hulls[(p + 1) % t]
        (a, b, e), (c, d, f) = level_map(period[p])
        hulls[p] = IntervalR(a * nxt.lo + b * nxt.hi + e, c * nxt.lo + d * nxt.hi + f)
    return hulls


_HULL_CACHE: dict = {}


def _local_hull(fam: FamilySpec, phase: int = 0) -> tuple[Fraction, Fraction]:
    """Exact hull of the local tail-value set (family constant excluded)."""
    key = (fam.core_key(), phase)
    hit = _HULL_CACHE.get(key)
    if hit is not None:
        return hit
    if fam.kind == "MDper":
        iv = _mdper_hulls(fam.s, fam.period)[phase]
        res = (iv.lo, iv.hi)
    else:
        res = solve_affine_hull(_local_maps(fam))
    _HULL_CACHE[key] = res
    return res


def set_interval(fam: FamilySpec) -> IntervalR:
    """Exact hull [inf, sup] of the whole family."""
    if fam.kind in _FORMULA_KINDS and not (fam.kind == "NSu" and fam.u != 0):
        return cylinder_interval(fam, ())
    if fam.kind == "MD":
        # sup -> 0 as the first gap grows; inf pairs the shortest gap with the
        # largest digit and the sup tail
        return IntervalR(Fraction(-(fam.s - 1), fam.s**3), Fraction(0))
    if fam.kind == "Cantor":
        return _cantor_interval(fam)
    value0, sign, e, phase = address_frame(fam, ())
    lo, hi = _local_hull(fam, phase)
    if sign > 0:
        return IntervalR(value0 + lo, value0 + hi)
    return IntervalR(value0 - hi, value0 - lo)


def _cantor_interval(fam: FamilySpec) -> IntervalR:
    if fam.basis.kind == "power":
        raise UnsupportedFamilyError("no closed hull for power bases")
    p, q = len(fam.basis.values), len(fam.level_sets)
    span = p * q // gcd(p, q)
    lo = hi = Fraction(0)
    denom = 1
    for j in range(1, span + 1):
        I = fam.level_sets[(j - 1) % q]
        denom *= fam.basis.d(j)
        lo += Fraction(I[0], denom)
        hi += Fraction(I[-1], denom)
    closure = Fraction(denom, denom - 1)
    return IntervalR(lo * closure, hi * closure)


def cylinder_hull(fam: FamilySpec, addr) -> IntervalR:
    """Exact hull of any enumerable cylinder via the affine frame.

    For the closed-form families this coincides with `cylinder_interval`;
    it additionally covers NSu with u > 0, Blocks/Tilde and MDper.
    """
    value, sign, e, phase = address_frame(fam, addr)
    lo, hi = _local_hull(fam, phase)
    scale = Fraction(1, fam.s**e)
    if sign > 0:
        return IntervalR(value + scale * lo, value + scale * hi)
    return IntervalR(value - scale * hi, value - scale * lo)


# -- the brute-force oracle ------------------------------------------------------

_ORACLE_KINDS = ("S", "Su", "NSu", "Sminus", "Tilde", "Blocks", "MDper")

_LOCAL_CACHE: dict = {}


def _oracle_levels(fam: FamilySpec, depth: int, phase: int):
    """Continuation tree + closure tail for the enumeration kernel."""
    s, u = fam.s, fam.u or 0
    if fam.kind in ("S", "Su"):
        digits = fam.run_digits
        levels = [[(a, ((a - u, a),)) for a in digits]] * depth
        a = digits[0]
        return levels, False, a - u, s**a - 1
    if fam.kind == "NSu":
        digits = fam.run_digits
        levels = [[(a, ((a - u, a),)) for a in digits]] * depth
        a = digits[0]
        if a % 2 == 0:
            return levels, True, a - u, s**a - 1
        return levels, True, -(a - u), s**a + 1
    if fam.kind == "Sminus":
        digits = fam.run_digits
        levels = [
            [(a, ((a if j % 2 == 0 else -a, a),)) for a in digits] for j in range(1, depth + 1)
        ]
        a = digits[0]
        tnum = a if (depth + 1) % 2 == 0 else -a
        return levels, False, tnum, s**a + 1
    if fam.kind in BLOCK_KINDS:
        blocks = family_blocks(fam)
        levels = [
            [(len(b), tuple((d, i) for i, d in enumerate(b, 1) if d)) for b in blocks]
        ] * depth
        b = blocks[0]
        tnum = sum(d * s ** (len(b) - i) for i, d in enumerate(b, 1))
        return levels, False, tnum, s ** len(b) - 1
    if fam.kind == "MDper":
        t = len(fam.period)
        levels = []
        for j in range(1, depth + 1):
            m = fam.period[(phase + j - 1) % t]
            levels.append(
                [(m, (() if e == 0 else ((e if j % 2 == 0 else -e, m),))) for e in range(s)]
            )
        # the all-zero continuation is itself admissible: no closure needed
        return levels, False, 0, 1
    raise UnsupportedFamilyError(f"the oracle cannot enumerate {fam.kind} continuations")


def _oracle_local(fam: FamilySpec, depth: int, phase: int) -> tuple[Fraction, Fraction]:
    key = (fam.core_key(), depth, phase)
    hit = _LOCAL_CACHE.get(key)
    if hit is not None:
        return hit
    levels, parity, tnum, tden = _oracle_levels(fam, depth, phase)
    wmin, wmax, emax = kernels.local_extrema(fam.s, levels, parity, tnum, tden)
    denom = fam.s**emax * tden
    res = (Fraction(wmin, denom), Fraction(wmax, denom))
    _LOCAL_CACHE[key] = res
    return res


def tail_extrema_oracle(
    fam: FamilySpec, addr, depth: int, cap: int = DEFAULT_CAP
) -> OracleResult:
    """Exact min/max over all admissible continuations of `addr` to rank `depth`.

    Every continuation is closed with a periodic admissible tail, so the
    returned interval sits inside the true cylinder hull; the rigorous bound
    guarantees the true hull lies within it inflated by `bound`.
    """
    if depth < 1:
        raise ValueError("oracle depth must be >= 1")
    if fam.kind not in _ORACLE_KINDS:
        raise UnsupportedFamilyError(f"the oracle cannot enumerate {fam.kind} continuations")
    addr = as_address(fam, addr)
    value, sign, e, phase = address_frame(fam, addr)
    leaves = 1
    for level in range(1, depth + 1):
        leaves *= fam.branching(level, phase)
        if leaves > cap:
            raise CapExceededError(
                f"oracle needs {leaves}+ continuations at depth {depth}, cap is {cap}"
            )
    lo, hi = _oracle_local(fam, depth, phase)
    scale = Fraction(1, fam.s**e)
    if sign > 0:
        iv = IntervalR(value + scale * lo, value + scale * hi)
    else:
        iv = IntervalR(value - scale * hi, value - scale * lo)
    bound = _oracle_bound(fam, e, depth, phase)
    return OracleResult(interval=iv, bound=bound, leaves=leaves)


def _oracle_bound(fam: FamilySpec, prefix_exp: int, depth: int, phase: int) -> Fraction:
    s = fam.s
    if fam.kind in ("S", "Su", "NSu", "Sminus"):
        tail_exp = depth  # every continuation digit adds at least 1
    elif fam.kind in BLOCK_KINDS:
        tail_exp = depth * min(len(b) for b in family_blocks(fam))
    else:  # MDper: the next `depth` gaps are known exactly
        t = len(fam.period)
        tail_exp = sum(fam.period[(phase + j) % t] for j in range(depth))
    return Fraction(s, s - 1) * Fraction(1, s ** (prefix_exp + tail_exp))


# -- gaps, orderings, coverings ---------------------------------------------------


def gap_interval(fam: FamilySpec, addr, p: int) -> IntervalR | None:
    """The open interval strictly between sibling cylinders p and p+1.

    Returns None when the siblings touch or overlap (which the closed-form
    case analysis rules out; callers treat None as a finding).
    """
    _require_formula_family(fam)
    addr = as_address(fam, addr)
    left_digit, right_digit = p, p + 1
    for d in (left_digit, right_digit):
        try:
            as_address(fam, addr.base + (d,))
        except FamilyConstraintError:
            raise FamilyConstraintError(f"sibling digit {d} not admissible for {fam.label()}")
    a = cylinder_interval(fam, addr.base + (left_digit,))
    b = cylinder_interval(fam, addr.base + (right_digit,))
    first, second = (a, b) if a.lo <= b.lo else (b, a)
    if first.hi >= second.lo:
        return None
    return IntervalR(first.hi, second.lo)


@dataclass(frozen=True)
class OrderingEntry:
    p: int
    q: int
    predicted: str | None
    observed: str
    ok: bool


@dataclass(frozen=True)
class OrderingReport:
    address: tuple
    entries: tuple[OrderingEntry, ...]
    passed: bool


def _predicted_orientation(fam: FamilySpec, addr_base: tuple, p: int, q: int) -> str | None:
    s, u = fam.s, fam.u
    if fam.kind in ("S", "Su"):
        if u in (0, 1):
            return "right-to-left"
        if u >= s - 2:
            return "left-to-right"
        if q < u:
            return "left-to-right"
        if p > u:
            return "right-to-left"
        return None  # the pair straddling the excluded digit: compare directly
    if fam.kind == "NSu":
        return "right-to-left" if (sum(addr_base) + p) % 2 == 0 else "left-to-right"
    # Sminus: orientation set by the rank of the siblings
    rank = len(addr_base) + 1
    return "right-to-left" if rank % 2 == 0 else "left-to-right"


def ordering_check(fam: FamilySpec, addr) -> OrderingReport:
    """Verify the sibling layout under `addr` against the predicted cases."""
    _require_formula_family(fam)
    if fam.degenerate:
        raise FamilyConstraintError("degenerate family has no sibling pair")
    addr = as_address(fam, addr)
    digits = fam.run_digits
    entries = []
    for p, q in zip(digits, digits[1:]):
        a = cylinder_interval(fam, addr.base + (p,))
        b = cylinder_interval(fam, addr.base + (q,))
        if a.hi < b.lo:
            observed = "left-to-right"
        elif b.hi < a.lo:
            observed = "right-to-left"
        else:
            observed = "overlap"
        predicted = _predicted_orientation(fam, addr.base, p, q)
        ok = observed != "overlap" and (predicted is None or predicted == observed)
        entries.append(OrderingEntry(p, q, predicted, observed, ok))
    return OrderingReport(addr.base, tuple(entries), all(e.ok for e in entries))


def covering_sum(fam: FamilySpec, depth: int, cap: int = DEFAULT_CAP) -> Fraction:
    """Exact total length of the rank-`depth` cylinder cover."""
    total = Fraction(0)
    for addr in enumerate_addresses(fam, depth, cap=cap):
        total += cylinder_hull(fam, addr).width
    return total


def cylinder_report(fam: FamilySpec, addr, child: int | None = None) -> CylinderReport:
    addr = as_address(fam, addr)
    iv = (
        cylinder_interval(fam, addr)
        if fam.kind in _FORMULA_KINDS and not (fam.kind == "NSu" and fam.u != 0)
        else cylinder_hull(fam, addr)
    )
    ratio = None
    if child is not None:
        child_iv = cylinder_hull(fam, addr.base + (child,))
        ratio = child_iv.width / iv.width if iv.width else None
    orientation = None
    if fam.kind in _FORMULA_KINDS and not (fam.kind == "NSu" and fam.u != 0) and not fam.degenerate:
        report = ordering_check(fam, addr)
        seen = {e.observed for e in report.entries}
        orientation = seen.pop() if len(seen) == 1 else "mixed"
    return CylinderReport(addr.base, iv, iv.width, ratio, orientation)


# -- the cylinder property suite --------------------------------------------------


@dataclass(frozen=True)
class PropertyResult:
    name: str
    checked: int
    passed: bool
    failures: tuple[str, ...]


@dataclass(frozen=True)
class VerificationReport:
    family: str
    results: tuple[PropertyResult, ...]
    passed: bool


def _fail(failures: list[str], addr, lhs, rhs, what: str):
    if len(failures) < 5:
        failures.append(f"addr={tuple(addr)}: {what}: {lhs!s} vs {rhs!s}")


def verify_family(
    fam: FamilySpec,
    depth: int = 4,
    oracle_depth: int = 10,
    cap: int = DEFAULT_CAP,
) -> VerificationReport:
    """Run the full cylinder property suite for one closed-form family.

    Checks, over all addresses of rank <= depth: oracle containment with the
    geometric tail bound, child nesting, the exact ratio law, nonempty
    sibling gaps, predicted orderings, the covering-sum decay law, and the
    Sminus diameter/endpoint consistency identity.
    """
    _require_formula_family(fam)
    s = fam.s
    addresses: list[CylinderAddress] = []
    for r in range(depth + 1):
        addresses.extend(enumerate_addresses(fam, r, cap=cap))
    results = []

    # oracle containment + Hausdorff bound
    checked, failures = 0, []
    for addr in addresses:
        formula = cylinder_interval(fam, addr)
        oracle = tail_extrema_oracle(fam, addr, oracle_depth, cap=cap)
        checked += 1
        if not formula.contains(oracle.interval):
            _fail(failures, addr.base, oracle.interval, formula, "oracle escapes formula")
        elif formula.hausdorff(oracle.interval) > oracle.bound:
            _fail(
                failures,
                addr.base,
                formula.hausdorff(oracle.interval),
                oracle.bound,
                "Hausdorff distance above tail bound",
            )
    results.append(PropertyResult("interval-vs-oracle", checked, not failures, tuple(failures)))

    # nesting + ratio law + partition
    nest_f, ratio_f, part_f = [], [], []
    checked = 0
    for addr in addresses:
        if addr.rank >= depth:
            continue
        parent = cylinder_interval(fam, addr)
        child_sum = Fraction(0)
        for c in fam.run_digits:
            child = cylinder_interval(fam, addr.base + (c,))
            checked += 1
            if not parent.contains(child):
                _fail(nest_f, addr.base + (c,), child, parent, "child escapes parent")
            if parent.width:
                if child.width * s**c != parent.width:
                    _fail(
                        ratio_f,
                        addr.base + (c,),
                        child.width / parent.width,
                        Fraction(1, s**c),
                        "ratio law",
                    )
            child_sum += child.width
        if parent.width and child_sum > parent.width:
            _fail(part_f, addr.base, child_sum, parent.width, "children exceed parent length")
    results.append(PropertyResult("nesting", checked, not nest_f, tuple(nest_f)))
    results.append(PropertyResult("ratio-law", checked, not ratio_f, tuple(ratio_f)))
    results.append(PropertyResult("partition", checked, not part_f, tuple(part_f)))

    # sibling gaps + orderings
    gap_f, ord_f = [], []
    gaps_checked = orders_checked = 0
    digits = fam.run_digits
    if len(digits) > 1:
        for addr in addresses:
            if addr.rank >= depth:
                continue
            for p, q in zip(digits, digits[1:]):
                a = cylinder_interval(fam, addr.base + (p,))
                b = cylinder_interval(fam, addr.base + (q,))
                gaps_checked += 1
                lo, hi = (a, b) if a.lo <= b.lo else (b, a)
                if lo.hi >= hi.lo:
                    _fail(gap_f, addr.base, lo.hi, hi.lo, f"siblings {p},{q} touch or overlap")
                if q == p + 1:
                    gap = gap_interval(fam, addr, p)
                    if gap is None or gap.width <= 0:
                        _fail(gap_f, addr.base, a, b, f"empty gap between {p},{p + 1}")
            report = ordering_check(fam, addr)
            orders_checked += len(report.entries)
            if not report.passed:
                bad = next(e for e in report.entries if not e.ok)
                _fail(
                    ord_f,
                    addr.base,
                    bad.observed,
                    bad.predicted,
                    f"pair ({bad.p},{bad.q}) orientation",
                )
    results.append(PropertyResult("sibling-gaps", gaps_checked, not gap_f, tuple(gap_f)))
    results.append(PropertyResult("ordering", orders_checked, not ord_f, tuple(ord_f)))

    # geometric covering-sum law
    cov_f = []
    rho = sum(Fraction(1, s**a) for a in digits)
    base_sum = covering_sum(fam, 0)
    cov_depth = min(depth + 2, 8)
    for d in range(cov_depth + 1):
        if len(digits) ** d > cap:
            break
        total = covering_sum(fam, d, cap=cap)
        if total != base_sum * rho**d:
            _fail(cov_f, (d,), total, base_sum * rho**d, "covering law")
    results.append(PropertyResult("covering-law", cov_depth + 1, not cov_f, tuple(cov_f)))

    # Sminus endpoint/diameter consistency
    if fam.kind == "Sminus":
        inf0, sup0 = _sminus_bounds(s)
        ok = sup0 - inf0 == sminus_diameter_constant(s)
        results.append(
            PropertyResult(
                "diameter-constants",
                1,
                ok,
                () if ok else (f"sup-inf={sup0 - inf0} vs {sminus_diameter_constant(s)}",),
            )
        )

    return VerificationReport(fam.label(), tuple(results), all(r.passed for r in results))
