"""Pure-Python kernel for exact min/max over digit-continuation trees.

Mirror of the C accelerator in ``_extrema.pyx``; same flat call contract,
arbitrary-precision integers instead of 128-bit arithmetic.  See
``kernels.local_extrema`` for the meaning of the encoding.
"""

from __future__ import annotations


def extrema_scaled(
    s: int,
    depth: int,
    level_starts: list[int],
    choice_exps: list[int],
    term_starts: list[int],
    term_coefs: list[int],
    term_offs: list[int],
    exp_parity: bool,
    tnum: int,
    tden: int,
    emax: int,
) -> tuple[int, int]:
    pw = [1] * (emax + 1)
    for i in range(1, emax + 1):
        pw[i] = pw[i - 1] * s

    best: list = [None, None]

    def dfs(lvl: int, e: int, acc: int) -> None:
        if lvl == depth:
            w = acc * tden
            if tnum:
                closure = tnum * pw[emax - e]
                if exp_parity and (e & 1):
                    closure = -closure
                w += closure
            if best[0] is None:
                best[0] = best[1] = w
            else:
                if w < best[0]:
                    best[0] = w
                if w > best[1]:
                    best[1] = w
            return
        for k in range(level_starts[lvl], level_starts[lvl + 1]):
            acc2 = acc
            for t in range(term_starts[k], term_starts[k + 1]):
                eabs = e + term_offs[t]
                term = term_coefs[t] * pw[emax - eabs]
                if exp_parity and (eabs & 1):
                    term = -term
                acc2 += term
            dfs(lvl + 1, e + choice_exps[k], acc2)

    dfs(0, 0, 0)
    return best[0], best[1]
