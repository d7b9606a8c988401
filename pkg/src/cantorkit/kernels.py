"""Backend selection for the exact enumeration kernel.

The only hot loop in the package is the brute-force walk over all digit
continuations of a cylinder (up to ~10^6 leaves per family), done in exact
integer arithmetic.  A Cython core (``_extrema``) handles it in 128-bit
integers when the leaf weights provably fit; otherwise, or when the compiled
module is unavailable, the pure-Python mirror (``_extrema_py``) runs the same
walk on arbitrary-precision ints.

Encoding shared by both backends: the continuation tree has ``depth``
levels; each level offers choices; each choice advances the running exponent
by ``exp_inc`` and adds terms ``coef * s^-(E + off)`` (sign-flipped by parity
of the absolute exponent when ``exp_parity``).  After the last level a
closure tail ``tnum/tden`` relative to the leaf exponent is added, so every
leaf is the exact value of an actual member of the set.  All leaf values are
scaled by ``s**emax * tden`` into integers and the min/max pair is returned.
"""

from __future__ import annotations

import math

from . import _extrema_py as _py_impl

try:
    from . import _extrema as _c_impl
except ImportError:  # extension not built
    _c_impl = None

HAVE_C = _c_impl is not None
BACKEND = "cython" if HAVE_C else "python"

#: levels: list (one entry per level) of choice lists; a choice is
#: (exp_inc, ((coef, off), ...)) with 1 <= off <= exp_inc and |coef| < s.
Levels = list


def flatten_levels(levels: Levels) -> tuple[list, list, list, list, list, int]:
    level_starts = [0]
    choice_exps: list[int] = []
    term_starts = [0]
    term_coefs: list[int] = []
    term_offs: list[int] = []
    emax = 0
    for choices in levels:
        if not choices:
            raise ValueError("a level with no choices has no continuations")
        for exp_inc, terms in choices:
            choice_exps.append(exp_inc)
            for coef, off in terms:
                term_coefs.append(coef)
                term_offs.append(off)
            term_starts.append(len(term_coefs))
        level_starts.append(len(choice_exps))
        emax += max(exp_inc for exp_inc, _ in choices)
    return level_starts, choice_exps, term_starts, term_coefs, term_offs, emax


def leaf_count(levels: Levels) -> int:
    n = 1
    for choices in levels:
        n *= len(choices)
    return n


def _fits_int128(s: int, emax: int, tnum: int, tden: int) -> bool:
    # |leaf| <= s^emax * (tden + |tnum|); keep a generous safety margin
    bits = emax * math.log2(s) + max(abs(tnum), tden, 1).bit_length() + 4
    return bits < 126


def local_extrema(
    s: int,
    levels: Levels,
    exp_parity: bool = False,
    tnum: int = 0,
    tden: int = 1,
    backend: str | None = None,
) -> tuple[int, int, int]:
    """Exact (wmin, wmax, emax) over all leaves of the continuation tree.

    The extreme local values are wmin / (s**emax * tden) and
    wmax / (s**emax * tden) as exact rationals.
    """
    if tden <= 0:
        raise ValueError("tden must be positive")
    flat = flatten_levels(levels)
    emax = flat[5]
    if backend is None:
        impl = _c_impl if (HAVE_C and _fits_int128(s, emax, tnum, tden)) else _py_impl
    elif backend == "cython":
        if not HAVE_C:
            raise RuntimeError("compiled kernel not available")
        if not _fits_int128(s, emax, tnum, tden):
            raise OverflowError("leaf weights exceed 128-bit range")
        impl = _c_impl
    elif backend == "python":
        impl = _py_impl
    else:
        raise ValueError(f"unknown backend {backend!r}")
    wmin, wmax = impl.extrema_scaled(
        s, len(levels), flat[0], flat[1], flat[2], flat[3], flat[4], exp_parity, tnum, tden, emax
    )
    return wmin, wmax, emax
