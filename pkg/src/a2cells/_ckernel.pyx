# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled reflection kernel; same API and state semantics as ``_pykernel``.

States are ``bytes`` holding ``4*n*n`` native int64 values.  Entries are kept
below 2**52 in magnitude so the exact sign test can square them in 128 bits;
exceeding that raises ``OverflowError``.
"""

from libc.stdint cimport int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy
from cpython.bytes cimport PyBytes_FromStringAndSize, PyBytes_AS_STRING, PyBytes_GET_SIZE

cdef extern from *:
    ctypedef long long i128 "__int128"

cdef int64_t LIMIT = (<int64_t>1) << 52


cdef inline void mulc(int code, int64_t a, int64_t b, int64_t* x, int64_t* y) noexcept nogil:
    if code == 1:
        x[0] = a; y[0] = b
    elif code == 2:
        x[0] = 2 * b; y[0] = a
    elif code == 3:
        x[0] = b; y[0] = a + b
    else:
        x[0] = 2 * a; y[0] = 2 * b


cdef inline int psign(int64_t a, int64_t b, int ring) noexcept nogil:
    cdef i128 lhs, rhs
    cdef int64_t rad = 2
    if ring == 0 or b == 0:
        return (a > 0) - (a < 0)
    if ring == 2:
        a = 2 * a + b
        rad = 5
    if a >= 0 and b >= 0:
        return 1
    if a <= 0 and b <= 0:
        return -1
    lhs = (<i128>a) * a
    rhs = (<i128>rad) * b * b
    if a > 0:
        return 1 if lhs > rhs else -1
    return -1 if lhs > rhs else 1


cdef class CKernel:
    cdef readonly int n
    cdef readonly int ring_code
    cdef readonly str name
    cdef Py_ssize_t half
    cdef Py_ssize_t total
    cdef int* codes
    cdef int* nb_start
    cdef int* nb_idx
    cdef int* nb_code
    cdef int64_t* rowbuf
    cdef int64_t* colbuf
    cdef int64_t* work

    def __cinit__(self, int n, int ring_code, codes):
        cdef int u, k, cnt
        self.n = n
        self.ring_code = ring_code
        self.name = "cython"
        self.half = 2 * n * n
        self.total = 4 * n * n
        self.codes = <int*>malloc(n * n * sizeof(int))
        self.nb_start = <int*>malloc((n + 1) * sizeof(int))
        self.nb_idx = <int*>malloc(n * n * sizeof(int))
        self.nb_code = <int*>malloc(n * n * sizeof(int))
        self.rowbuf = <int64_t*>malloc(2 * n * sizeof(int64_t))
        self.colbuf = <int64_t*>malloc(4 * n * sizeof(int64_t))
        self.work = <int64_t*>malloc(2 * n * n * sizeof(int64_t))
        if not (self.codes and self.nb_start and self.nb_idx and self.nb_code
                and self.rowbuf and self.colbuf and self.work):
            raise MemoryError()
        cnt = 0
        for u in range(n):
            self.nb_start[u] = cnt
            for k in range(n):
                self.codes[u * n + k] = codes[u][k]
                if k != u and codes[u][k]:
                    self.nb_idx[cnt] = k
                    self.nb_code[cnt] = codes[u][k]
                    cnt += 1
        self.nb_start[n] = cnt

    def __dealloc__(self):
        free(self.codes); free(self.nb_start); free(self.nb_idx); free(self.nb_code)
        free(self.rowbuf); free(self.colbuf); free(self.work)

    # -- raw operations ---------------------------------------------------------
    cdef int _colop(self, int64_t* st, int u) noexcept nogil:
        cdef int n = self.n
        cdef int q, k, c, i, bad = 0
        cdef int64_t a, b, x, y
        cdef Py_ssize_t pu, pk
        for q in range(self.nb_start[u], self.nb_start[u + 1]):
            k = self.nb_idx[q]
            c = self.nb_code[q]
            for i in range(n):
                pu = 2 * (i * n + u)
                a = st[pu]; b = st[pu + 1]
                if a or b:
                    mulc(c, a, b, &x, &y)
                    pk = 2 * (i * n + k)
                    st[pk] += x
                    st[pk + 1] += y
                    if st[pk] > LIMIT or st[pk] < -LIMIT or st[pk + 1] > LIMIT or st[pk + 1] < -LIMIT:
                        bad = 1
        for i in range(n):
            pu = 2 * (i * n + u)
            st[pu] = -st[pu]
            st[pu + 1] = -st[pu + 1]
        return bad

    cdef int _rowop(self, int64_t* st, int u) noexcept nogil:
        cdef int n = self.n
        cdef int q, k, c, j, bad = 0
        cdef int64_t a, b, x, y
        cdef int64_t* ru = st + 2 * u * n
        cdef int64_t* rk
        cdef int64_t* new = self.rowbuf
        for j in range(2 * n):
            new[j] = -ru[j]
        for q in range(self.nb_start[u], self.nb_start[u + 1]):
            k = self.nb_idx[q]
            c = self.nb_code[q]
            rk = st + 2 * k * n
            for j in range(n):
                a = rk[2 * j]; b = rk[2 * j + 1]
                if a or b:
                    mulc(c, a, b, &x, &y)
                    new[2 * j] += x
                    new[2 * j + 1] += y
        for j in range(2 * n):
            if new[j] > LIMIT or new[j] < -LIMIT:
                bad = 1
            ru[j] = new[j]
        return bad

    cdef inline int _colneg(self, const int64_t* st, int s) noexcept nogil:
        cdef int n = self.n
        cdef int i
        cdef int64_t a, b
        for i in range(n):
            a = st[2 * (i * n + s)]
            b = st[2 * (i * n + s) + 1]
            if a or b:
                return psign(a, b, self.ring_code) < 0
        return 0

    cdef bytes _new(self, bytes state):
        if PyBytes_GET_SIZE(state) != self.total * 8:
            raise ValueError("state size does not match this kernel")
        return PyBytes_FromStringAndSize(PyBytes_AS_STRING(state), self.total * 8)

    # -- public API ---------------------------------------------------------------
    def identity(self):
        cdef bytes out = PyBytes_FromStringAndSize(NULL, self.total * 8)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        cdef Py_ssize_t i
        cdef int n = self.n
        for i in range(self.total):
            st[i] = 0
        for i in range(n):
            st[2 * (i * n + i)] = 1
            st[self.half + 2 * (i * n + i)] = 1
        return out

    def rmul(self, bytes state, int u):
        cdef bytes out = self._new(state)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        if self._colop(st, u) | self._rowop(st + self.half, u):
            raise OverflowError("matrix entry exceeds the int64 kernel range")
        return out

    def lmul(self, bytes state, int u):
        cdef bytes out = self._new(state)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        if self._rowop(st, u) | self._colop(st + self.half, u):
            raise OverflowError("matrix entry exceeds the int64 kernel range")
        return out

    def rmul_word(self, bytes state, word):
        cdef bytes out = self._new(state)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        cdef int u
        for u in word:
            if self._colop(st, u) | self._rowop(st + self.half, u):
                raise OverflowError("matrix entry exceeds the int64 kernel range")
        return out

    def lmul_word(self, bytes state, word):
        cdef bytes out = self._new(state)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        cdef int u
        for u in reversed(word):
            if self._rowop(st, u) | self._colop(st + self.half, u):
                raise OverflowError("matrix entry exceeds the int64 kernel range")
        return out

    def inverse(self, bytes state):
        cdef bytes out = self._new(state)
        cdef int64_t* st = <int64_t*>PyBytes_AS_STRING(out)
        cdef const int64_t* src = <const int64_t*>PyBytes_AS_STRING(state)
        memcpy(st, src + self.half, self.half * 8)
        memcpy(st + self.half, src, self.half * 8)
        return out

    def is_rdes(self, bytes state, int s):
        return bool(self._colneg(<const int64_t*>PyBytes_AS_STRING(state), s))

    def is_ldes(self, bytes state, int s):
        return bool(self._colneg(<const int64_t*>PyBytes_AS_STRING(state) + self.half, s))

    def rdes(self, bytes state):
        cdef const int64_t* st = <const int64_t*>PyBytes_AS_STRING(state)
        cdef long mask = 0
        cdef int s
        for s in range(self.n):
            if self._colneg(st, s):
                mask |= (<long>1) << s
        return mask

    def ldes(self, bytes state):
        cdef const int64_t* st = <const int64_t*>PyBytes_AS_STRING(state) + self.half
        cdef long mask = 0
        cdef int s
        for s in range(self.n):
            if self._colneg(st, s):
                mask |= (<long>1) << s
        return mask

    cdef tuple _tail(self, const int64_t* st, int s, int t, int m):
        cdef int n = self.n
        cdef int ds = self._colneg(st, s)
        cdef int dt = self._colneg(st, t)
        cdef int c, i, r, e, neg
        cdef int64_t a, b, x, y
        cdef int64_t* cur
        cdef int64_t* oth
        cdef int64_t* tmp
        if ds and dt:
            return (m, -1)
        if not ds and not dt:
            return (0, -1)
        c = self.codes[s * n + t]
        cur = self.colbuf
        oth = self.colbuf + 2 * n
        e = s if ds else t
        for r in range(n):
            cur[2 * r] = st[2 * (r * n + e)]
            cur[2 * r + 1] = st[2 * (r * n + e) + 1]
            oth[2 * r] = st[2 * (r * n + (t if ds else s))]
            oth[2 * r + 1] = st[2 * (r * n + (t if ds else s)) + 1]
        i = 0
        while True:
            for r in range(n):
                a = cur[2 * r]; b = cur[2 * r + 1]
                if a or b:
                    mulc(c, a, b, &x, &y)
                    oth[2 * r] += x
                    oth[2 * r + 1] += y
                    cur[2 * r] = -a
                    cur[2 * r + 1] = -b
            i += 1
            if m and i >= m:
                break
            neg = 0
            for r in range(n):
                a = oth[2 * r]; b = oth[2 * r + 1]
                if a or b:
                    neg = psign(a, b, self.ring_code) < 0
                    break
            if not neg:
                break
            tmp = cur; cur = oth; oth = tmp
        return (i, e)

    def rtail(self, bytes state, int s, int t, int m):
        return self._tail(<const int64_t*>PyBytes_AS_STRING(state), s, t, m)

    def ltail(self, bytes state, int s, int t, int m):
        return self._tail(<const int64_t*>PyBytes_AS_STRING(state) + self.half, s, t, m)

    def reduce_left(self, bytes state):
        cdef int64_t* w = self.work
        cdef int n = self.n
        cdef int s
        cdef list out = []
        memcpy(w, <const int64_t*>PyBytes_AS_STRING(state) + self.half, self.half * 8)
        while True:
            for s in range(n):
                if self._colneg(w, s):
                    break
            else:
                return out
            out.append(s)
            self._colop(w, s)

    def length(self, bytes state):
        cdef int64_t* w = self.work
        cdef int n = self.n
        cdef int s, count = 0
        memcpy(w, <const int64_t*>PyBytes_AS_STRING(state) + self.half, self.half * 8)
        while True:
            for s in range(n):
                if self._colneg(w, s):
                    break
            else:
                return count
            count += 1
            self._colop(w, s)

    def matrix(self, bytes state):
        cdef const int64_t* st = <const int64_t*>PyBytes_AS_STRING(state)
        cdef int n = self.n
        return [[(st[2 * (i * n + j)], st[2 * (i * n + j) + 1]) for j in range(n)] for i in range(n)]
