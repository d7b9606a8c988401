"""Set families described as digit-restriction languages.

Each family is a set of real numbers whose expansion (s-adic, nega-s-adic or
gap-structured) uses only certain digit combinations.  A `FamilySpec` names
the family and its parameters; addresses select nested cylinders inside it.

Family kinds and their value maps (alphas are the restricted digits, A_k
their prefix sums):

* ``S``       x = sum a_n s^-(A_n),                digits a_n in {1..s-1}
* ``Su``      x = u/(s-1) + sum (a_n - u) s^-(A_n), digits != 0, != u
* ``NSu``     x = -u/(s+1) + sum (a_n - u)(-s)^-(A_n), digits != 0, != u
* ``Sminus``  x = sum (-1)^n a_n s^-(A_n),          digits in {1..s-1}
* ``Tilde``   s-adic numbers built from the union of all Su run blocks
* ``MD``      nega-s-adic series with free odd gaps >= 3, nonzero digits
* ``MDper``   nega-s-adic series with a fixed periodic odd gap sequence,
              digits ranging over all of {0..s-1}
* ``Blocks``  s-adic numbers built from an explicit finite block set
* ``Cantor``  Cantor series with per-level digit subsets I_j
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from math import gcd
from typing import Sequence

from .errors import (
    CapExceededError,
    FamilyConstraintError,
    FamilyParseError,
    InvalidDigitError,
    UnsupportedFamilyError,
)
from .radix import CantorBasis, DigitString

DEFAULT_CAP = 10**6

KINDS = ("S", "Su", "NSu", "Sminus", "Tilde", "MD", "MDper", "Blocks", "Cantor")

#: kinds whose addresses are run-length digits a with value terms at s^-(A_n)
RUN_KINDS = ("S", "Su", "NSu", "Sminus")
#: kinds whose addresses are indices into a finite block list
BLOCK_KINDS = ("Tilde", "Blocks")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    s: int
    u: int | None = None
    period: tuple[int, ...] | None = None
    blocks: tuple[tuple[int, ...], ...] | None = None
    basis: CantorBasis | None = None
    level_sets: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        kind, s = self.kind, self.s
        if kind not in KINDS:
            raise FamilyParseError(f"unknown family kind {kind!r}")
        if kind in ("S", "Su", "NSu", "Sminus", "Tilde"):
            if s <= 2:
                raise FamilyConstraintError(f"{kind} requires s > 2, got {s}")
        elif kind in ("MD", "MDper"):
            if s <= 1:
                raise FamilyConstraintError(f"{kind} requires s > 1, got {s}")
        elif kind == "Blocks":
            if s < 2:
                raise FamilyConstraintError(f"Blocks requires s >= 2, got {s}")
        if kind == "S":
            object.__setattr__(self, "u", 0)
        elif kind in ("Su", "NSu"):
            if self.u is None:
                raise FamilyConstraintError(f"{kind} needs a digit parameter u")
            if not 0 <= self.u < s:
                raise FamilyConstraintError(f"u={self.u} outside alphabet of base {s}")
        elif self.u is not None:
            raise FamilyConstraintError(f"{kind} takes no u parameter")
        if kind == "MDper":
            if not self.period:
                raise FamilyConstraintError("MDper needs a gap period m=[...]")
            object.__setattr__(self, "period", tuple(int(m) for m in self.period))
            for m in self.period:
                if m < 3 or m % 2 == 0:
                    raise FamilyConstraintError(f"MDper gaps must be odd and >= 3, got {m}")
        elif self.period is not None:
            raise FamilyConstraintError(f"{kind} takes no period")
        if kind == "Blocks":
            if not self.blocks:
                raise FamilyConstraintError("Blocks needs a nonempty block list B=[...]")
            blocks = tuple(tuple(int(d) for d in b) for b in self.blocks)
            if len(set(blocks)) != len(blocks):
                raise FamilyConstraintError("duplicate blocks")
            for b in blocks:
                if not b:
                    raise FamilyConstraintError("empty block")
                for d in b:
                    if not 0 <= d < s:
                        raise InvalidDigitError(f"block digit {d} outside base {s}")
            object.__setattr__(self, "blocks", tuple(sorted(blocks, key=lambda b: (len(b), b))))
        elif self.blocks is not None:
            raise FamilyConstraintError(f"{kind} takes no explicit block list")
        if kind == "Cantor":
            if self.basis is None or not self.level_sets:
                raise FamilyConstraintError("Cantor needs a basis and per-level digit sets")
            sets = tuple(tuple(sorted(set(int(d) for d in I))) for I in self.level_sets)
            for I in sets:
                if not I:
                    raise FamilyConstraintError("empty level digit set")
                if I[0] < 0:
                    raise InvalidDigitError("negative digit in level set")
            object.__setattr__(self, "level_sets", sets)
            self._check_cantor_alignment()
        elif self.basis is not None or self.level_sets is not None:
            raise FamilyConstraintError(f"{kind} takes no Cantor basis")

    def _check_cantor_alignment(self):
        basis, sets = self.basis, self.level_sets
        if basis.kind == "power":
            worst = basis.base  # d_1 is the smallest level
            for I in sets:
                if I[-1] >= worst:
                    raise InvalidDigitError(f"digit {I[-1]} not below every d_j >= {worst}")
            return
        p, q = len(basis.values), len(sets)
        span = p * q // gcd(p, q)
        for j in range(1, span + 1):
            I = sets[(j - 1) % q]
            if I[-1] >= basis.d(j):
                raise InvalidDigitError(f"digit {I[-1]} >= d_{j} = {basis.d(j)}")

    # -- structural helpers -------------------------------------------------

    @property
    def run_digits(self) -> tuple[int, ...]:
        """Admissible address digits for run-length kinds."""
        if self.kind in ("S", "Su", "NSu"):
            return tuple(a for a in range(1, self.s) if a != self.u)
        if self.kind == "Sminus":
            return tuple(range(1, self.s))
        if self.kind == "MDper":
            return tuple(range(self.s))
        raise UnsupportedFamilyError(f"{self.kind} has no flat digit alphabet")

    def branching(self, level: int = 1, phase: int = 0) -> int:
        """Number of admissible selectors at one address level."""
        if self.kind in RUN_KINDS or self.kind == "MDper":
            return len(self.run_digits)
        if self.kind in BLOCK_KINDS:
            return len(family_blocks(self))
        if self.kind == "Cantor":
            return len(self.level_sets[(phase + level - 1) % len(self.level_sets)])
        raise UnsupportedFamilyError(f"{self.kind} has unbounded branching")

    @property
    def degenerate(self) -> bool:
        """True when the family collapses to a single point (one choice per level)."""
        try:
            if self.kind == "Cantor":
                return all(len(I) == 1 for I in self.level_sets)
            return self.branching() <= 1
        except UnsupportedFamilyError:
            return False

    def core_key(self) -> tuple:
        """Canonical identity for caching; S(s) and Su(s, u=0) coincide."""
        if self.kind in ("S", "Su"):
            return ("run+", self.s, self.u)
        if self.kind == "NSu":
            return ("run-", self.s, self.u)
        if self.kind == "Sminus":
            return ("runalt", self.s)
        if self.kind in BLOCK_KINDS:
            return ("blocks", self.s, family_blocks(self))
        if self.kind == "MDper":
            return ("mdper", self.s, self.period)
        if self.kind == "MD":
            return ("md", self.s)
        return ("cantor", self.basis, self.level_sets)

    def label(self) -> str:
        """Canonical grammar form of this family."""
        if self.kind == "S":
            return f"S(s={self.s})"
        if self.kind in ("Su", "NSu"):
            return f"{self.kind}(s={self.s},u={self.u})"
        if self.kind in ("Sminus", "Tilde", "MD"):
            return f"{self.kind}(s={self.s})"
        if self.kind == "MDper":
            return f"MDper(s={self.s},m=[{','.join(map(str, self.period))}])"
        if self.kind == "Blocks":
            body = ";".join(" ".join(map(str, b)) for b in self.blocks)
            return f"Blocks(s={self.s},B=[{body}])"
        if self.basis.kind == "power":
            d = f"pow{self.basis.base}"
        else:
            d = ",".join(map(str, self.basis.values))
        sets = ",".join("{" + ",".join(map(str, I)) + "}" for I in self.level_sets)
        return f"Cantor(d=[{d}],I=[{sets}])"


# -- grammar -----------------------------------------------------------------

_HEAD = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$", re.S)


def _split_args(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch in "[{":
            depth += 1
        elif ch in "]}":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise FamilyParseError(f"{what} must look like [a,b,...]")
    items = [t for t in re.split(r"[,\s]+", text[1:-1].strip()) if t]
    try:
        return tuple(int(t) for t in items)
    except ValueError as exc:
        raise FamilyParseError(f"bad integer in {what}: {exc}") from None


def _parse_blocks(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise FamilyParseError("B must look like [d d ...;d ...]")
    out = []
    for chunk in text[1:-1].split(";"):
        digits = [t for t in chunk.split() if t]
        if not digits:
            raise FamilyParseError("empty block in B")
        try:
            out.append(tuple(int(d) for d in digits))
        except ValueError as exc:
            raise FamilyParseError(f"bad block digit: {exc}") from None
    return tuple(out)


def _parse_set_list(text: str) -> tuple[tuple[int, ...], ...]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise FamilyParseError("I must look like [{a,b},{c},...]")
    sets = re.findall(r"\{([^}]*)\}", text[1:-1])
    if not sets:
        raise FamilyParseError("I needs at least one digit set")
    out = []
    for body in sets:
        items = [t for t in re.split(r"[,\s]+", body.strip()) if t]
        if not items:
            raise FamilyParseError("empty digit set in I")
        out.append(tuple(int(t) for t in items))
    return tuple(out)


def parse_family(text: str) -> FamilySpec:
    """Parse the family grammar, e.g. ``Su(s=5,u=2)`` or ``Blocks(s=3,B=[0 2;1])``."""
    m = _HEAD.match(text)
    if not m:
        raise FamilyParseError(f"cannot parse family {text!r}")
    kind, body = m.group(1), m.group(2)
    if kind not in KINDS:
        raise FamilyParseError(f"unknown family kind {kind!r}")
    args: dict[str, str] = {}
    for part in _split_args(body):
        if "=" not in part:
            raise FamilyParseError(f"expected key=value, got {part!r}")
        key, val = part.split("=", 1)
        args[key.strip()] = val.strip()

    def take_int(key):
        if key not in args:
            raise FamilyParseError(f"{kind} needs {key}=...")
        try:
            return int(args.pop(key))
        except ValueError as exc:
            raise FamilyParseError(f"bad {key}: {exc}") from None

    try:
        if kind == "Cantor":
            dvals = _parse_int_list(args.pop("d", ""), "d") if "d" in args else None
            if dvals is None:
                raise FamilyParseError("Cantor needs d=[...]")
            sets = _parse_set_list(args.pop("I", "")) if "I" in args else None
            if sets is None:
                raise FamilyParseError("Cantor needs I=[...]")
            spec = FamilySpec(
                "Cantor", max(dvals), basis=CantorBasis.periodic(dvals), level_sets=sets
            )
        elif kind == "Blocks":
            s = take_int("s")
            spec = FamilySpec("Blocks", s, blocks=_parse_blocks(args.pop("B", "[]")))
        elif kind == "MDper":
            s = take_int("s")
            spec = FamilySpec("MDper", s, period=_parse_int_list(args.pop("m", "[]"), "m"))
        elif kind in ("Su", "NSu"):
            s = take_int("s")
            spec = FamilySpec(kind, s, u=take_int("u"))
        else:
            spec = FamilySpec(kind, take_int("s"))
    except (FamilyConstraintError, InvalidDigitError) as exc:
        raise FamilyParseError(str(exc)) from exc
    if args:
        raise FamilyParseError(f"unexpected arguments {sorted(args)} for {kind}")
    return spec


# -- block sets ---------------------------------------------------------------


@dataclass(frozen=True)
class BlockSet:
    """A finite digit-block language, or an analytic stand-in for an infinite one.

    ``histogram`` maps block length k to the count N_k.  The MD family has
    infinitely many blocks (a zero run of any odd length >= 3 capped by a
    nonzero digit); it is represented by the ``analytic`` tag and an empty
    block tuple, never materialised.
    """

    blocks: tuple[tuple[int, ...], ...] | None
    histogram: tuple[tuple[int, int], ...]
    analytic: str | None = None
    degenerate: bool = False

    @property
    def size(self) -> int:
        return sum(n for _, n in self.histogram)

    def counts(self) -> dict[int, int]:
        return dict(self.histogram)


def _histogram(blocks) -> tuple[tuple[int, int], ...]:
    h: dict[int, int] = {}
    for b in blocks:
        h[len(b)] = h.get(len(b), 0) + 1
    return tuple(sorted(h.items()))


def family_blocks(fam: FamilySpec) -> tuple[tuple[int, ...], ...]:
    """The raw block tuple of a family with finitely many blocks."""
    u = fam.u or 0
    if fam.kind in ("S", "Su", "NSu"):
        blocks = [(u,) * (p - 1) + (p,) for p in fam.run_digits]
    elif fam.kind == "Sminus":
        blocks = [(0,) * (p - 1) + (p,) for p in fam.run_digits]
    elif fam.kind == "Tilde":
        seen = {(1,)}
        for k in range(2, fam.s):
            for v in range(fam.s):
                if v != k:
                    seen.add((v,) * (k - 1) + (k,))
        blocks = list(seen)
    elif fam.kind == "Blocks":
        return fam.blocks
    elif fam.kind == "MDper":
        if fam.s ** len(fam.period) > DEFAULT_CAP:
            raise CapExceededError("MDper period blocks exceed the enumeration cap")
        blocks = []
        for eps in product(range(fam.s), repeat=len(fam.period)):
            blocks.append(
                reduce(lambda acc, me: acc + (0,) * (me[0] - 1) + (me[1],), zip(fam.period, eps), ())
            )
    else:
        raise UnsupportedFamilyError(f"{fam.kind} has no finite block list")
    return tuple(sorted(blocks, key=lambda b: (len(b), b)))


def blocks_of_family(fam: FamilySpec) -> BlockSet:
    """The digit-block language defining `fam`, with its length histogram."""
    if fam.kind == "Cantor":
        raise UnsupportedFamilyError("Cantor families restrict digits per level, not blocks")
    if fam.kind == "MD":
        # one block 0^(k-1) a per odd length k >= 3 and nonzero digit a:
        # N_k = s-1, generating function (s-1) t^3 / (1 - t^2)
        return BlockSet(blocks=None, histogram=(), analytic="odd-zero-runs")
    blocks = family_blocks(fam)
    return BlockSet(blocks=blocks, histogram=_histogram(blocks), degenerate=len(blocks) == 1)


# -- addresses ----------------------------------------------------------------


@dataclass(frozen=True)
class CylinderAddress:
    """An ordered tuple of restricted selectors naming a rank-n cylinder."""

    family: FamilySpec
    base: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        validate_selectors(self.family, self.base)

    @property
    def rank(self) -> int:
        return len(self.base)


def validate_selectors(fam: FamilySpec, sel: Sequence) -> None:
    kind = fam.kind
    if kind in RUN_KINDS:
        for a in sel:
            a = int(a)
            if not 1 <= a < fam.s:
                raise FamilyConstraintError(f"digit {a} outside {{1..{fam.s - 1}}}")
            if kind in ("Su", "NSu") and a == fam.u:
                raise FamilyConstraintError(f"digit {a} equals the excluded digit u")
    elif kind == "MDper":
        for e in sel:
            if not 0 <= int(e) < fam.s:
                raise FamilyConstraintError(f"digit {e} outside {{0..{fam.s - 1}}}")
    elif kind == "MD":
        for entry in sel:
            try:
                m, e = entry
            except (TypeError, ValueError):
                raise FamilyConstraintError("MD addresses are (gap, digit) pairs") from None
            if m < 3 or m % 2 == 0:
                raise FamilyConstraintError(f"MD gap {m} must be odd and >= 3")
            if not 1 <= e < fam.s:
                raise FamilyConstraintError(f"MD digit {e} must be nonzero and < {fam.s}")
    elif kind in BLOCK_KINDS:
        nb = len(family_blocks(fam))
        for i in sel:
            if not 0 <= int(i) < nb:
                raise FamilyConstraintError(f"block index {i} outside 0..{nb - 1}")
    else:  # Cantor
        for j, e in enumerate(sel, 1):
            I = fam.level_sets[(j - 1) % len(fam.level_sets)]
            if int(e) not in I:
                raise FamilyConstraintError(f"digit {e} not in level-{j} set {I}")


def as_address(fam: FamilySpec, addr) -> CylinderAddress:
    if isinstance(addr, CylinderAddress):
        if addr.family != fam:
            raise FamilyConstraintError("address belongs to a different family")
        return addr
    return CylinderAddress(fam, tuple(addr))


def level_choices(fam: FamilySpec, level: int) -> tuple[int, ...]:
    """Admissible selectors at one address level (1-indexed)."""
    if fam.kind == "Cantor":
        return fam.level_sets[(level - 1) % len(fam.level_sets)]
    if fam.kind in BLOCK_KINDS:
        return tuple(range(len(family_blocks(fam))))
    return fam.run_digits


def enumerate_addresses(fam: FamilySpec, depth: int, cap: int = DEFAULT_CAP) -> list[CylinderAddress]:
    """All admissible rank-`depth` addresses, lexicographically sorted."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if fam.kind == "MD":
        raise UnsupportedFamilyError("MD has unbounded branching; addresses cannot be enumerated")
    total = 1
    for level in range(1, depth + 1):
        total *= fam.branching(level)
        if total > cap:
            raise CapExceededError(f"{total}+ addresses at depth {depth} exceed cap {cap}")
    if fam.kind == "Cantor":
        pools = [fam.level_sets[(j - 1) % len(fam.level_sets)] for j in range(1, depth + 1)]
    elif fam.kind in BLOCK_KINDS:
        pools = [range(len(family_blocks(fam)))] * depth
    else:
        pools = [fam.run_digits] * depth
    return [CylinderAddress(fam, combo) for combo in product(*pools)]


# -- membership ----------------------------------------------------------------


def membership_prefix(fam: FamilySpec, digits) -> bool:
    """Whether `digits` is a prefix of some concatenation of the family's blocks.

    Dynamic programming over all parses; any parse counts, since the families
    are defined by digit appearance rather than unique decodability.
    """
    if isinstance(digits, DigitString):
        seq = digits.digits
    else:
        seq = tuple(int(d) for d in digits)
    for d in seq:
        if not 0 <= d < fam.s:
            raise InvalidDigitError(f"digit {d} outside alphabet of base {fam.s}")
    if fam.kind == "Cantor":
        raise UnsupportedFamilyError("Cantor families have per-level alphabets; check digits there")
    if fam.kind == "MD":
        return _md_prefix_ok(seq)
    if fam.kind == "MDper":
        # nonzero digits may only sit at the gap positions k_n
        positions = set()
        k, i = 0, 0
        while k < len(seq):
            k += fam.period[i % len(fam.period)]
            positions.add(k)
            i += 1
        return all(d == 0 or (j in positions) for j, d in enumerate(seq, 1))
    blocks = family_blocks(fam)
    n = len(seq)
    reachable = [False] * (n + 1)
    reachable[0] = True
    for pos in range(n):
        if not reachable[pos]:
            continue
        for b in blocks:
            tail = seq[pos : pos + len(b)]
            if tail == b[: len(tail)]:
                if pos + len(b) <= n:
                    reachable[pos + len(b)] = True
                else:
                    return True  # ends inside this block: extendable
    return reachable[n]


def _md_prefix_ok(seq: tuple[int, ...]) -> bool:
    """Prefix check for 0-run/odd-gap structure: each complete chunk 0^(m-1) a
    needs odd m >= 3; a trailing zero run is always extendable."""
    run = 0
    for d in seq:
        if d == 0:
            run += 1
        else:
            m = run + 1
            if m < 3 or m % 2 == 0:
                return False
            run = 0
    return True


# -- values --------------------------------------------------------------------


def _family_const(fam: FamilySpec) -> Fraction:
    if fam.kind in ("S", "Su"):
        return Fraction(fam.u, fam.s - 1)
    if fam.kind == "NSu":
        return Fraction(-fam.u, fam.s + 1)
    return Fraction(0)


def _local_value(fam: FamilySpec, sel: Sequence, phase: int = 0) -> tuple[Fraction, int, int]:
    """(P, sign, exp) with the partial local sum P of the selector sequence and
    the factor sign * s^-exp multiplying whatever continues after it."""
    s = fam.s
    kind = fam.kind
    u = fam.u or 0
    P = Fraction(0)
    e = 0
    if kind in ("S", "Su"):
        for a in sel:
            e += a
            P += Fraction(a - u, s**e)
        return P, 1, e
    if kind == "NSu":
        for a in sel:
            e += a
            P += Fraction((a - u) * (-1) ** e, s**e)
        return P, (-1) ** e, e
    if kind == "Sminus":
        for j, a in enumerate(sel, 1):
            e += a
            P += Fraction((-1) ** j * a, s**e)
        return P, (-1) ** len(sel), e
    if kind == "MDper":
        t = len(fam.period)
        for j, eps in enumerate(sel, 1):
            e += fam.period[(phase + j - 1) % t]
            P += Fraction((-1) ** j * eps, s**e)
        return P, (-1) ** len(sel), e
    if kind == "MD":
        for j, (m, eps) in enumerate(sel, 1):
            e += m
            P += Fraction((-1) ** j * eps, s**e)
        return P, (-1) ** len(sel), e
    if kind in BLOCK_KINDS:
        blocks = family_blocks(fam)
        for i in sel:
            for d in blocks[i]:
                e += 1
                P += Fraction(d, s**e)
        return P, 1, e
    raise UnsupportedFamilyError(f"{kind} values are not s-adic-framed")


def address_frame(fam: FamilySpec, addr) -> tuple[Fraction, int, int, int]:
    """(prefix_value, sign, exp, phase): the cylinder of `addr` is the image of
    the family's local tail set under x -> prefix_value + sign * s^-exp * x."""
    addr = as_address(fam, addr)
    P, sign, e = _local_value(fam, addr.base)
    phase = addr.rank % len(fam.period) if fam.kind == "MDper" else 0
    return _family_const(fam) + P, sign, e, phase


def eval_family_point(fam: FamilySpec, alphas, tail: Sequence = ()) -> Fraction:
    """Exact partial-sum value of the family's series for a finite selector
    prefix, optionally closed by a periodic selector tail."""
    if fam.kind == "Cantor":
        if tail:
            raise UnsupportedFamilyError("Cantor families take no periodic selector tail")
        addr = as_address(fam, alphas)
        from .radix import eval_cantor

        return eval_cantor(addr.base, fam.basis)
    addr = as_address(fam, alphas)
    value, sign, e, phase = address_frame(fam, addr)
    if tail:
        tail = tuple(tail)
        validate_selectors(fam, tail)
        if fam.kind == "MDper" and len(tail) % len(fam.period) != 0:
            raise FamilyConstraintError(
                "MDper tails must cover whole gap periods to repeat cleanly"
            )
        Pt, sign_t, e_t = _local_value(fam, tail, phase)
        k = Fraction(sign_t, fam.s**e_t)
        value += Fraction(sign, fam.s**e) * Pt / (1 - k)
    return value


def expand_address(fam: FamilySpec, addr) -> DigitString:
    """The full digit string an address fixes in the family's expansion."""
    addr = as_address(fam, addr)
    u = fam.u or 0
    out: list[int] = []
    if fam.kind in ("S", "Su", "NSu"):
        for a in addr.base:
            out.extend([u] * (a - 1))
            out.append(a)
    elif fam.kind == "Sminus":
        for a in addr.base:
            out.extend([0] * (a - 1))
            out.append(a)
    elif fam.kind == "MDper":
        for j, eps in enumerate(addr.base):
            out.extend([0] * (fam.period[j % len(fam.period)] - 1))
            out.append(eps)
    elif fam.kind == "MD":
        for m, eps in addr.base:
            out.extend([0] * (m - 1))
            out.append(eps)
    elif fam.kind in BLOCK_KINDS:
        blocks = family_blocks(fam)
        for i in addr.base:
            out.extend(blocks[i])
    else:
        raise UnsupportedFamilyError("Cantor addresses have no single-base digit form")
    return DigitString(fam.s, tuple(out))
