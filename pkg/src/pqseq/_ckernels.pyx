# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops for the exhaustive k-error search.

Semantics match :mod:`pqseq._pykernels` exactly; see that module for the
contract of each function.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


ctypedef struct F2Ctx:
    int T
    int nw
    int k
    int p           # > 0 selects the three-factor test, 0 the gcd engine
    int best
    uint64_t* s
    uint64_t* modpoly
    uint64_t* colmask   # p rows of nw words
    uint64_t* a
    uint64_t* b


cdef inline int _deg(const uint64_t* a, int nw) noexcept nogil:
    cdef int i
    for i in range(nw - 1, -1, -1):
        if a[i]:
            return i * 64 + 63 - __builtin_clzll(a[i])
    return -1


cdef inline void _shl_xor(uint64_t* a, const uint64_t* b, int shift, int nwb, int nw) noexcept nogil:
    cdef int ws = shift >> 6
    cdef int bs = shift & 63
    cdef int i
    if bs == 0:
        for i in range(nwb):
            a[i + ws] ^= b[i]
    else:
        for i in range(nwb):
            a[i + ws] ^= b[i] << bs
            if i + ws + 1 < nw:
                a[i + ws + 1] ^= b[i] >> (64 - bs)


cdef int _gcd_deg(F2Ctx* c) noexcept nogil:
    """Degree of gcd(X^T + 1, S) for the packed S in c.s."""
    cdef int nw = c.nw
    cdef uint64_t* a = c.a
    cdef uint64_t* b = c.b
    cdef uint64_t* t
    cdef int da, db
    memcpy(a, c.modpoly, nw * sizeof(uint64_t))
    memcpy(b, c.s, nw * sizeof(uint64_t))
    db = _deg(b, nw)
    if db < 0:
        return c.T
    while db >= 0:
        da = _deg(a, nw)
        while da >= db:
            _shl_xor(a, b, da - db, (db >> 6) + 1, nw)
            da = _deg(a, nw)
        t = a
        a = b
        b = t
        db = da
    return _deg(a, nw)


cdef int _structured_lc(F2Ctx* c) noexcept nogil:
    cdef int p = c.p, nw = c.nw, T = c.T
    cdef int v, i, cnt, total = 0
    cdef int first_bit = -1
    cdef bint q_div = True, phi_div = True
    cdef const uint64_t* m
    for v in range(p):
        m = c.colmask + v * nw
        cnt = 0
        for i in range(nw):
            cnt += __builtin_popcountll(c.s[i] & m[i])
        total += cnt
        if cnt != 0 and cnt != p:
            phi_div = False
        if first_bit < 0:
            first_bit = cnt & 1
        elif (cnt & 1) != first_bit:
            q_div = False
    cnt = T
    if (total & 1) == 0:
        cnt -= 1
    if q_div:
        cnt -= p - 1
    if phi_div:
        cnt -= T - p
    return cnt


cdef inline int _f2_eval(F2Ctx* c) noexcept nogil:
    if c.p > 0:
        return _structured_lc(c)
    return c.T - _gcd_deg(c)


cdef void _f2_dfs(F2Ctx* c, int depth, int start, int stop) noexcept nogil:
    cdef int pos, lc, w, sh
    cdef uint64_t bit
    for pos in range(start, stop):
        w = pos >> 6
        bit = (<uint64_t>1) << (pos & 63)
        c.s[w] ^= bit
        if depth + 1 == c.k:
            lc = _f2_eval(c)
            if lc < c.best:
                c.best = lc
        else:
            _f2_dfs(c, depth + 1, pos + 1, c.T - (c.k - depth - 2))
        c.s[w] ^= bit
        if c.best == 0:
            return


cdef F2Ctx* _f2_ctx(object bits, int T, int k, int p) except NULL:
    cdef int nw = (T + 1 + 63) // 64
    cdef int i, v, u
    cdef F2Ctx* c = <F2Ctx*>calloc(1, sizeof(F2Ctx))
    if c == NULL:
        raise MemoryError()
    c.T = T
    c.nw = nw
    c.k = k
    c.p = p
    c.best = T + 1
    c.s = <uint64_t*>calloc(nw, sizeof(uint64_t))
    c.modpoly = <uint64_t*>calloc(nw, sizeof(uint64_t))
    c.a = <uint64_t*>calloc(nw, sizeof(uint64_t))
    c.b = <uint64_t*>calloc(nw, sizeof(uint64_t))
    c.colmask = <uint64_t*>calloc(max(p, 1) * nw, sizeof(uint64_t))
    mask = (1 << 64) - 1
    for i in range(nw):
        c.s[i] = (bits >> (64 * i)) & mask
    c.modpoly[0] = 1
    c.modpoly[T >> 6] |= (<uint64_t>1) << (T & 63)
    if p > 0:
        for u in range(T):
            v = u % p
            c.colmask[v * nw + (u >> 6)] |= (<uint64_t>1) << (u & 63)
    return c


cdef void _f2_free(F2Ctx* c) noexcept:
    free(c.s)
    free(c.modpoly)
    free(c.a)
    free(c.b)
    free(c.colmask)
    free(c)


def f2_lc(bits, int T, int p=0):
    """Linear complexity of one period of a binary sequence."""
    cdef F2Ctx* c = _f2_ctx(bits, T, 0, p)
    cdef int r
    try:
        r = _f2_eval(c)
    finally:
        _f2_free(c)
    return r


def f2_min_lc(bits, int T, int k, int lo, int hi, int p=0):
    """Minimum LC over flips of exactly k positions whose smallest lies in [lo, hi)."""
    cdef F2Ctx* c = _f2_ctx(bits, T, k, p)
    cdef int r, stop
    try:
        if k == 0:
            r = _f2_eval(c) if lo <= 0 < hi else T + 1
        else:
            stop = min(hi, T - k + 1)
            with nogil:
                _f2_dfs(c, 0, max(lo, 0), stop)
            r = c.best
    finally:
        _f2_free(c)
    return r


ctypedef struct FpCtx:
    int T
    int q
    int k
    int best
    int* base
    int* binom      # binom[j * T + n] = C(n, j) mod q
    int* pos
    int* delta


cdef int _fp_eval(FpCtx* c) noexcept nogil:
    cdef int T = c.T, q = c.q, k = c.k
    cdef int j, i
    cdef long v
    cdef const int* row
    for j in range(T):
        v = c.base[j]
        row = c.binom + j * T
        for i in range(k):
            v += c.delta[i] * row[c.pos[i]]
        if v % q:
            return T - j
    return 0


cdef void _fp_dfs(FpCtx* c, int depth, int start, int stop) noexcept nogil:
    cdef int p, d, lc
    for p in range(start, stop):
        c.pos[depth] = p
        for d in range(1, c.q):
            c.delta[depth] = d
            if depth + 1 == c.k:
                lc = _fp_eval(c)
                if lc < c.best:
                    c.best = lc
                    if lc == 0:
                        return
            else:
                _fp_dfs(c, depth + 1, p + 1, c.T - (c.k - depth - 2))
                if c.best == 0:
                    return


def fp_min_lc(symbols, int q, int k, int lo, int hi, binom_table):
    """Minimum LC over changes at exactly k positions (smallest in [lo, hi)),
    each by a nonzero amount, for period T a power of q.

    ``binom_table`` is the flat list of C(n, j) mod q, row j major.
    """
    cdef int T = len(symbols)
    cdef FpCtx c
    cdef int j, n, stop, r
    c.T = T
    c.q = q
    c.k = k
    c.best = T + 1
    c.base = <int*>malloc(T * sizeof(int))
    c.binom = <int*>malloc(T * T * sizeof(int))
    c.pos = <int*>malloc((k + 1) * sizeof(int))
    c.delta = <int*>malloc((k + 1) * sizeof(int))
    try:
        for j in range(T * T):
            c.binom[j] = binom_table[j]
        for j in range(T):
            acc = 0
            for n in range(T):
                acc += c.binom[j * T + n] * symbols[n]
            c.base[j] = acc % q
        if k == 0:
            r = _fp_eval(&c) if lo <= 0 < hi else T + 1
        else:
            stop = min(hi, T - k + 1)
            with nogil:
                _fp_dfs(&c, 0, max(lo, 0), stop)
            r = c.best
    finally:
        free(c.base)
        free(c.binom)
        free(c.pos)
        free(c.delta)
    return r
