# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""C kernel for exact min/max over digit-continuation trees.

Leaf weights are exact integers computed in 128-bit arithmetic; the Python
dispatcher (``kernels.local_extrema``) only routes calls here when the
weights provably fit.  Same call contract as ``_extrema_py.extrema_scaled``.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u128 "unsigned __int128"


cdef object _to_pyint(i128 v):
    cdef bint neg = v < 0
    cdef u128 a
    cdef unsigned long long hi, lo
    if neg:
        a = <u128>(-v)
    else:
        a = <u128>v
    hi = <unsigned long long>(a >> 64)
    lo = <unsigned long long>(a & <unsigned long long>0xFFFFFFFFFFFFFFFFULL)
    out = (int(hi) << 64) | int(lo)
    return -out if neg else out


ctypedef struct Ctx:
    int depth
    int* level_starts
    int* choice_exps
    int* term_starts
    long long* term_coefs
    int* term_offs
    bint exp_parity
    long long tnum
    long long tden
    int emax
    i128* pw
    i128 wmin
    i128 wmax
    bint seeded


cdef void _dfs(Ctx* c, int lvl, int e, i128 acc) noexcept nogil:
    cdef int k, t, eabs
    cdef i128 w, term, acc2
    if lvl == c.depth:
        w = acc * c.tden
        if c.tnum != 0:
            term = c.tnum * c.pw[c.emax - e]
            if c.exp_parity and (e & 1):
                term = -term
            w += term
        if not c.seeded:
            c.wmin = w
            c.wmax = w
            c.seeded = True
        else:
            if w < c.wmin:
                c.wmin = w
            if w > c.wmax:
                c.wmax = w
        return
    for k in range(c.level_starts[lvl], c.level_starts[lvl + 1]):
        acc2 = acc
        for t in range(c.term_starts[k], c.term_starts[k + 1]):
            eabs = e + c.term_offs[t]
            term = c.term_coefs[t] * c.pw[c.emax - eabs]
            if c.exp_parity and (eabs & 1):
                term = -term
            acc2 += term
        _dfs(c, lvl + 1, e + c.choice_exps[k], acc2)


def extrema_scaled(
    int s,
    int depth,
    level_starts,
    choice_exps,
    term_starts,
    term_coefs,
    term_offs,
    bint exp_parity,
    long long tnum,
    long long tden,
    int emax,
):
    cdef Ctx c
    cdef int i
    cdef int n_lv = len(level_starts)
    cdef int n_ch = len(choice_exps)
    cdef int n_ts = len(term_starts)
    cdef int n_tm = len(term_coefs)

    c.depth = depth
    c.exp_parity = exp_parity
    c.tnum = tnum
    c.tden = tden
    c.emax = emax
    c.seeded = False
    c.wmin = 0
    c.wmax = 0
    c.level_starts = NULL
    c.choice_exps = NULL
    c.term_starts = NULL
    c.term_coefs = NULL
    c.term_offs = NULL
    c.pw = NULL

    c.level_starts = <int*>malloc(n_lv * sizeof(int))
    c.choice_exps = <int*>malloc(max(n_ch, 1) * sizeof(int))
    c.term_starts = <int*>malloc(n_ts * sizeof(int))
    c.term_coefs = <long long*>malloc(max(n_tm, 1) * sizeof(long long))
    c.term_offs = <int*>malloc(max(n_tm, 1) * sizeof(int))
    c.pw = <i128*>malloc((emax + 1) * sizeof(i128))
    if (c.level_starts == NULL or c.choice_exps == NULL or c.term_starts == NULL
            or c.term_coefs == NULL or c.term_offs == NULL or c.pw == NULL):
        _free_ctx(&c)
        raise MemoryError()

    try:
        for i in range(n_lv):
            c.level_starts[i] = level_starts[i]
        for i in range(n_ch):
            c.choice_exps[i] = choice_exps[i]
        for i in range(n_ts):
            c.term_starts[i] = term_starts[i]
        for i in range(n_tm):
            c.term_coefs[i] = term_coefs[i]
            c.term_offs[i] = term_offs[i]
        c.pw[0] = 1
        for i in range(1, emax + 1):
            c.pw[i] = c.pw[i - 1] * s

        with nogil:
            _dfs(&c, 0, 0, <i128>0)

        return _to_pyint(c.wmin), _to_pyint(c.wmax)
    finally:
        _free_ctx(&c)


cdef void _free_ctx(Ctx* c):
    if c.level_starts != NULL:
        free(c.level_starts)
    if c.choice_exps != NULL:
        free(c.choice_exps)
    if c.term_starts != NULL:
        free(c.term_starts)
    if c.term_coefs != NULL:
        free(c.term_coefs)
    if c.term_offs != NULL:
        free(c.term_offs)
    if c.pw != NULL:
        free(c.pw)
