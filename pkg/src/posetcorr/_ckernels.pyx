# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``.

Inputs outside the fixed-width range raise ``OverflowError``; the dispatch
layer then reruns the call on the Python backend.
"""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset
from libc.stdint cimport int64_t, uint64_t, int32_t

cnp.import_array()

BACKEND = "compiled"

DEF MAX_CUBE_BITS = 22
DEF FRESH = -4611686018427387904


def count_linear_extensions(below):
    cdef int n = len(below)
    if n > 20:
        raise OverflowError("cube too large for the compiled counter")
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t *f = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef uint64_t bmask[64]
    cdef uint64_t mask, bit, result
    cdef int x
    if f == NULL:
        raise MemoryError()
    for x in range(n):
        bmask[x] = below[x]
    memset(f, 0, size * sizeof(uint64_t))
    f[0] = 1
    try:
        for mask in range(size):
            if f[mask] == 0:
                continue
            for x in range(n):
                bit = (<uint64_t>1) << x
                if not (mask & bit) and (bmask[x] & mask) == bmask[x]:
                    f[mask | bit] += f[mask]
        result = f[size - 1]
    finally:
        free(f)
    return int(result)


def count_pp_ideals(below, int t, lo, hi):
    cdef int n = len(below)
    if n > MAX_CUBE_BITS or (t + 1) ** n >= 2 ** 62:
        raise OverflowError("count may exceed 64 bits")
    cdef uint64_t size = (<uint64_t>1) << n
    cdef uint64_t *f = <uint64_t *>malloc(size * sizeof(uint64_t))
    cdef char *ideal = <char *>malloc(size)
    cdef uint64_t bmask[64]
    cdef int64_t lov[64]
    cdef int64_t hiv[64]
    cdef uint64_t m, bit, must_in, must_out
    cdef int x, b, v
    cdef uint64_t result
    if f == NULL or ideal == NULL:
        free(f)
        free(ideal)
        raise MemoryError()
    for x in range(n):
        bmask[x] = below[x]
        lov[x] = lo[x]
        hiv[x] = hi[x]
    try:
        for m in range(size):
            ideal[m] = 1
            for x in range(n):
                if (m >> x) & 1 and (bmask[x] & m) != bmask[x]:
                    ideal[m] = 0
                    break
        for v in range(t + 1):
            if v > 0:
                for b in range(n):
                    bit = (<uint64_t>1) << b
                    for m in range(size):
                        if m & bit:
                            f[m] += f[m ^ bit]
            must_in = 0
            must_out = 0
            for x in range(n):
                if hiv[x] <= v:
                    must_in |= (<uint64_t>1) << x
                if lov[x] > v:
                    must_out |= (<uint64_t>1) << x
            for m in range(size):
                if ideal[m] and (m & must_in) == must_in and not (m & must_out):
                    if v == 0:
                        f[m] = 1
                else:
                    f[m] = 0
        result = f[size - 1]
    finally:
        free(f)
        free(ideal)
    return int(result)


cdef struct Walk:
    int n
    int64_t *lo
    int64_t *hi
    int *pstart
    int *pidx
    int64_t *pstrict
    int64_t *vals
    int64_t *out
    int64_t rows
    int64_t cap
    bint store


cdef int _walk(Walk *w) except -1:
    cdef int n = w.n
    cdef int i = 0
    cdef int k
    cdef int64_t start, cand
    cdef int64_t *tmp
    if n == 0:
        w.rows = 1
        return 0
    # nextv[i]: next value to try at depth i, FRESH when the level is new
    cdef int64_t *nextv = <int64_t *>malloc(n * sizeof(int64_t))
    if nextv == NULL:
        raise MemoryError()
    nextv[0] = FRESH
    try:
        while i >= 0:
            if nextv[i] == FRESH:
                start = w.lo[i]
                for k in range(w.pstart[i], w.pstart[i + 1]):
                    cand = w.vals[w.pidx[k]] + w.pstrict[k]
                    if cand > start:
                        start = cand
                nextv[i] = start
            if nextv[i] > w.hi[i]:
                i -= 1
                continue
            w.vals[i] = nextv[i]
            nextv[i] += 1
            if i == n - 1:
                if w.store:
                    if w.rows == w.cap:
                        w.cap = w.cap * 2 + 16
                        tmp = <int64_t *>realloc(w.out, w.cap * n * sizeof(int64_t))
                        if tmp == NULL:
                            raise MemoryError()
                        w.out = tmp
                    for k in range(n):
                        w.out[w.rows * n + k] = w.vals[k]
                w.rows += 1
            else:
                i += 1
                nextv[i] = FRESH
    finally:
        free(nextv)
    return 0


cdef class _WalkBuffers:
    cdef Walk w

    def __cinit__(self, preds, lo, hi, bint store):
        cdef int n = len(lo)
        cdef int total = sum(len(p) for p in preds)
        cdef int i, k
        self.w.n = n
        self.w.lo = <int64_t *>malloc((n + 1) * sizeof(int64_t))
        self.w.hi = <int64_t *>malloc((n + 1) * sizeof(int64_t))
        self.w.vals = <int64_t *>malloc((n + 1) * sizeof(int64_t))
        self.w.pstart = <int *>malloc((n + 1) * sizeof(int))
        self.w.pidx = <int *>malloc((total + 1) * sizeof(int))
        self.w.pstrict = <int64_t *>malloc((total + 1) * sizeof(int64_t))
        self.w.out = NULL
        self.w.rows = 0
        self.w.cap = 0
        self.w.store = store
        k = 0
        for i in range(n):
            self.w.lo[i] = lo[i]
            self.w.hi[i] = hi[i]
            self.w.pstart[i] = k
            for j, s in preds[i]:
                self.w.pidx[k] = j
                self.w.pstrict[k] = s
                k += 1
        self.w.pstart[n] = k

    def __dealloc__(self):
        free(self.w.lo)
        free(self.w.hi)
        free(self.w.vals)
        free(self.w.pstart)
        free(self.w.pidx)
        free(self.w.pstrict)
        free(self.w.out)


def enumerate_pp(preds, lo, hi):
    cdef _WalkBuffers buf = _WalkBuffers(preds, lo, hi, True)
    cdef int n = len(lo)
    cdef int64_t r
    _walk(&buf.w)
    out = np.empty((buf.w.rows, n), dtype=np.int64)
    cdef int64_t[:, ::1] view = out
    cdef int k
    if n > 0:
        for r in range(buf.w.rows):
            for k in range(n):
                view[r, k] = buf.w.out[r * n + k]
    return out


def count_pp_enum(preds, lo, hi):
    cdef _WalkBuffers buf = _WalkBuffers(preds, lo, hi, False)
    _walk(&buf.w)
    return int(buf.w.rows)


def poly_mul_dense(const int64_t[::1] ka, const int64_t[::1] ca,
                   const int64_t[::1] kb, const int64_t[::1] cb, int64_t keyspace):
    if keyspace > (1 << 23):
        raise OverflowError("key space too large for dense accumulation")
    cdef int64_t *acc = <int64_t *>malloc(keyspace * sizeof(int64_t))
    cdef Py_ssize_t i, j, la = ka.shape[0], lb = kb.shape[0]
    cdef int64_t k, c, nz = 0
    if acc == NULL:
        raise MemoryError()
    memset(acc, 0, keyspace * sizeof(int64_t))
    try:
        for i in range(la):
            c = ca[i]
            k = ka[i]
            for j in range(lb):
                acc[k + kb[j]] += c * cb[j]
        for k in range(keyspace):
            if acc[k] != 0:
                nz += 1
        keys = np.empty(nz, dtype=np.int64)
        coefs = np.empty(nz, dtype=np.int64)
        _collect(acc, keyspace, keys, coefs)
    finally:
        free(acc)
    return keys, coefs


cdef void _collect(int64_t *acc, int64_t keyspace, int64_t[::1] keys, int64_t[::1] coefs):
    cdef int64_t k, pos = 0
    for k in range(keyspace):
        if acc[k] != 0:
            keys[pos] = k
            coefs[pos] = acc[k]
            pos += 1


cdef int32_t _locate(const int64_t[::1] codes, int64_t c):
    cdef Py_ssize_t lo = 0, hi = codes.shape[0] - 1, mid
    while lo <= hi:
        mid = (lo + hi) >> 1
        if codes[mid] == c:
            return <int32_t>mid
        if codes[mid] < c:
            lo = mid + 1
        else:
            hi = mid - 1
    return -1


def lattice_tables(states, int mode, int anchor):
    cdef const int64_t[:, ::1] st = np.ascontiguousarray(states, dtype=np.int64)
    cdef Py_ssize_t m = st.shape[0], n = st.shape[1]
    join = np.full((m, m), -1, dtype=np.int32)
    meet = np.full((m, m), -1, dtype=np.int32)
    if m == 0:
        return join, meet
    cdef int32_t[:, ::1] jv = join
    cdef int32_t[:, ::1] mv = meet
    cdef int64_t radix = int(np.asarray(st).max()) + 1 if n > 0 else 1
    if n > 0 and n * np.log2(float(radix)) > 62:
        raise OverflowError("state codes exceed 64 bits")
    cdef int64_t[::1] codes = np.zeros(m, dtype=np.int64)
    cdef Py_ssize_t x, y, w
    cdef int64_t cj, cm, a, b, sy, ty, lo_y, hi_y
    for x in range(m):
        cj = 0
        for w in range(n):
            cj = cj * radix + st[x, w]
        codes[x] = cj
    cdef int64_t vj, vm
    cdef bint okj, okm
    for x in range(m):
        for y in range(x, m):
            cj = 0
            cm = 0
            okj = True
            okm = True
            if mode == 1:
                sy = st[x, anchor]
                ty = st[y, anchor]
                lo_y = sy if sy < ty else ty
                hi_y = ty if sy < ty else sy
            for w in range(n):
                if mode == 0:
                    a = st[x, w]
                    b = st[y, w]
                    vj = a if a > b else b
                    vm = b if a > b else a
                else:
                    a = st[x, w] - sy
                    b = st[y, w] - ty
                    vj = (a if a > b else b) + lo_y
                    vm = (b if a > b else a) + hi_y
                okj = okj and 0 <= vj < radix
                okm = okm and 0 <= vm < radix
                cj = cj * radix + vj
                cm = cm * radix + vm
            jv[x, y] = _locate(codes, cj) if okj else -1
            jv[y, x] = jv[x, y]
            mv[x, y] = _locate(codes, cm) if okm else -1
            mv[y, x] = mv[x, y]
    return join, meet


def lattice_axioms(join, meet):
    cdef const int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef Py_ssize_t m = J.shape[0], x, y, z
    cdef int32_t jx, mx, yz, bad
    for x in range(m):
        for y in range(m):
            if J[x, y] < 0 or M[x, y] < 0:
                return "closure", (x, y)
    for x in range(m):
        for y in range(m):
            if J[x, y] != J[y, x] or M[x, y] != M[y, x]:
                return "commutativity", (x, y)
    for x in range(m):
        if J[x, x] != x or M[x, x] != x:
            return "idempotency", (x,)
    for x in range(m):
        for y in range(m):
            if J[x, M[x, y]] != x or M[x, J[x, y]] != x:
                return "absorption", (x, y)
    for x in range(m):
        for y in range(m):
            jx = J[x, y]
            mx = M[x, y]
            for z in range(m):
                yz = J[y, z]
                if J[jx, z] != J[x, yz]:
                    return "join-associativity", (x, y, z)
                if M[mx, z] != M[x, M[y, z]]:
                    return "meet-associativity", (x, y, z)
                if M[x, yz] != J[mx, M[x, z]]:
                    return "distributivity", (x, y, z)
    return None


def modular_violation(r, join, meet):
    vals = list(r)
    if any(not (-(1 << 40) < v < (1 << 40)) for v in vals):
        raise OverflowError("modular values too large")
    cdef const int64_t[::1] R = np.asarray(vals, dtype=np.int64)
    cdef const int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef Py_ssize_t m = J.shape[0], x, y
    for x in range(m):
        for y in range(m):
            if R[x] + R[y] != R[J[x, y]] + R[M[x, y]]:
                return x, y
    return None


def ad_violation(alpha, beta, gamma, delta, join, meet):
    ws = [list(w) for w in (alpha, beta, gamma, delta)]
    if any(not (0 <= v < (1 << 31)) for w in ws for v in w):
        raise OverflowError("weights exceed the compiled range")
    cdef const int64_t[::1] A = np.asarray(ws[0], dtype=np.int64)
    cdef const int64_t[::1] B = np.asarray(ws[1], dtype=np.int64)
    cdef const int64_t[::1] G = np.asarray(ws[2], dtype=np.int64)
    cdef const int64_t[::1] D = np.asarray(ws[3], dtype=np.int64)
    cdef const int32_t[:, ::1] J = np.ascontiguousarray(join, dtype=np.int32)
    cdef const int32_t[:, ::1] M = np.ascontiguousarray(meet, dtype=np.int32)
    cdef Py_ssize_t m = J.shape[0], x, y
    for x in range(m):
        if A[x] == 0:
            continue
        for y in range(m):
            if A[x] * B[y] > G[J[x, y]] * D[M[x, y]]:
                return x, y
    return None
