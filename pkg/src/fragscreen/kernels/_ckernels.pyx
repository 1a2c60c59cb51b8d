# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled backend for the hot kernels.

Contract-identical to ``_pykernels``: same FNV mixing, same refinement
semantics, same similarity conventions.  The test suite cross-checks the two
backends value for value.
"""

from libc.stdlib cimport free, malloc, qsort

cdef extern from *:
    """
    #include <stdint.h>
    static inline int popcount64(uint64_t x) {
    #if defined(__GNUC__) || defined(__clang__)
        return __builtin_popcountll(x);
    #else
        int c = 0;
        while (x) { x &= x - 1; c++; }
        return c;
    #endif
    }
    """
    int popcount64(unsigned long long x) nogil

DEF FNV_OFFSET = 0xCBF29CE484222325
DEF FNV_PRIME = 0x100000001B3


def backend_name():
    return "c"


cdef unsigned long long _fnv_mix(unsigned long long h, unsigned long long v) nogil:
    cdef int k
    for k in range(8):
        h ^= v & <unsigned long long>0xFF
        h *= <unsigned long long>FNV_PRIME
        v >>= 8
    return h


def fnv1a_ints(values):
    """FNV-1a (64-bit) over a sequence of integers, 8 LE bytes each."""
    cdef unsigned long long h = <unsigned long long>FNV_OFFSET
    cdef unsigned long long v
    for value in values:
        v = <unsigned long long>(value & 0xFFFFFFFFFFFFFFFF)
        h = _fnv_mix(h, v)
    return h


ctypedef struct PairKey:
    long long rank
    unsigned long long sig
    long long idx


cdef int _cmp_pairkeys(const void* pa, const void* pb) noexcept nogil:
    cdef const PairKey* a = <const PairKey*>pa
    cdef const PairKey* b = <const PairKey*>pb
    if a.rank != b.rank:
        return -1 if a.rank < b.rank else 1
    if a.sig != b.sig:
        return -1 if a.sig < b.sig else 1
    return 0


def wl_refine(seeds, nbr_ptr, nbr_idx, nbr_bond):
    """Iterative neighbor-rank refinement to a stable partition."""
    cdef Py_ssize_t n = len(seeds)
    if n == 0:
        return []
    cdef Py_ssize_t m = len(nbr_idx)
    cdef long long* ranks = <long long*>malloc(n * sizeof(long long))
    cdef long long* ptr = <long long*>malloc((n + 1) * sizeof(long long))
    cdef long long* idxs = <long long*>malloc((m if m else 1) * sizeof(long long))
    cdef long long* bonds = <long long*>malloc((m if m else 1) * sizeof(long long))
    cdef long long* codes = <long long*>malloc((m if m else 1) * sizeof(long long))
    cdef PairKey* keys = <PairKey*>malloc(n * sizeof(PairKey))
    if (ranks == NULL or ptr == NULL or idxs == NULL or bonds == NULL
            or codes == NULL or keys == NULL):
        free(<void*>ranks)
        free(<void*>ptr)
        free(<void*>idxs)
        free(<void*>bonds)
        free(<void*>codes)
        free(<void*>keys)
        raise MemoryError()

    cdef Py_ssize_t i, j, k
    for i in range(n):
        ranks[i] = seeds[i]
    for i in range(n + 1):
        ptr[i] = nbr_ptr[i]
    for j in range(m):
        idxs[j] = nbr_idx[j]
        bonds[j] = nbr_bond[j]

    cdef long long n_classes = 0, new_count, code
    cdef unsigned long long h
    cdef Py_ssize_t start, end, span, pos
    cdef long long tmp

    # Count seed classes (seeds are dense, so max+1 is the class count).
    for i in range(n):
        if ranks[i] + 1 > n_classes:
            n_classes = ranks[i] + 1

    cdef Py_ssize_t rounds
    with nogil:
        for rounds in range(n + 1):
            if n_classes == n:
                break
            for i in range(n):
                start = ptr[i]
                end = ptr[i + 1]
                span = end - start
                for j in range(span):
                    codes[j] = ranks[idxs[start + j]] * 8 + bonds[start + j]
                # Insertion sort: neighbor lists are tiny.
                for j in range(1, span):
                    tmp = codes[j]
                    pos = j
                    while pos > 0 and codes[pos - 1] > tmp:
                        codes[pos] = codes[pos - 1]
                        pos -= 1
                    codes[pos] = tmp
                h = <unsigned long long>FNV_OFFSET
                for j in range(span):
                    h = _fnv_mix(h, <unsigned long long>codes[j])
                keys[i].rank = ranks[i]
                keys[i].sig = h
                keys[i].idx = i
            qsort(keys, n, sizeof(PairKey), _cmp_pairkeys)
            new_count = 0
            ranks[keys[0].idx] = 0
            for i in range(1, n):
                if keys[i].rank != keys[i - 1].rank or keys[i].sig != keys[i - 1].sig:
                    new_count += 1
                ranks[keys[i].idx] = new_count
            new_count += 1
            if new_count == n_classes:
                break
            n_classes = new_count

    out = [ranks[i] for i in range(n)]
    free(<void*>ranks)
    free(<void*>ptr)
    free(<void*>idxs)
    free(<void*>bonds)
    free(<void*>codes)
    free(<void*>keys)
    return out


cdef double _tanimoto_ptr(const unsigned long long* a,
                          const unsigned long long* b,
                          Py_ssize_t w) nogil:
    cdef long long inter = 0, union_ = 0
    cdef Py_ssize_t k
    for k in range(w):
        inter += popcount64(a[k] & b[k])
        union_ += popcount64(a[k] | b[k])
    if union_ == 0:
        return 1.0
    return <double>inter / <double>union_


cdef int _popcount_row(const unsigned long long* a, Py_ssize_t w) nogil:
    cdef int total = 0
    cdef Py_ssize_t k
    for k in range(w):
        total += popcount64(a[k])
    return total


def tanimoto_words(a, b):
    cdef const unsigned long long[::1] va = a
    cdef const unsigned long long[::1] vb = b
    if va.shape[0] != vb.shape[0]:
        raise ValueError("word-length mismatch")
    if va.shape[0] == 0:
        return 1.0
    return _tanimoto_ptr(&va[0], &vb[0], va.shape[0])


def sims_one_vs_many(query, mat):
    import numpy as np
    cdef const unsigned long long[::1] q = np.ascontiguousarray(query)
    cdef const unsigned long long[:, ::1] rows = np.ascontiguousarray(mat)
    cdef Py_ssize_t n = rows.shape[0], w = rows.shape[1]
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] vout = out
    cdef const unsigned long long* base
    cdef Py_ssize_t i
    if n == 0:
        return out
    base = &rows[0, 0]
    with nogil:
        for i in range(n):
            vout[i] = _tanimoto_ptr(base + i * w, &q[0], w)
    return out


def mean_pairwise_tanimoto(mat):
    import numpy as np
    cdef const unsigned long long[:, ::1] rows = np.ascontiguousarray(mat)
    cdef Py_ssize_t n = rows.shape[0], w = rows.shape[1]
    if n < 2:
        raise ValueError("need at least two fingerprints")
    cdef const unsigned long long* base = &rows[0, 0]
    cdef double total = 0.0
    cdef long long inter
    cdef int* pops = <int*>malloc(n * sizeof(int))
    if pops == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef const unsigned long long* ra
    cdef const unsigned long long* rb
    cdef long long union_
    with nogil:
        for i in range(n):
            pops[i] = _popcount_row(base + i * w, w)
        for i in range(n - 1):
            ra = base + i * w
            for j in range(i + 1, n):
                rb = base + j * w
                inter = 0
                for k in range(w):
                    inter += popcount64(ra[k] & rb[k])
                union_ = pops[i] + pops[j] - inter
                if union_ == 0:
                    total += 1.0
                else:
                    total += <double>inter / <double>union_
    free(<void*>pops)
    return total / (<double>n * (n - 1) / 2.0)


def snn_mean(gen, ref):
    import numpy as np
    cdef const unsigned long long[:, ::1] g = np.ascontiguousarray(gen)
    cdef const unsigned long long[:, ::1] r = np.ascontiguousarray(ref)
    cdef Py_ssize_t ng = g.shape[0], nr = r.shape[0], w = g.shape[1]
    if ng == 0 or nr == 0:
        raise ValueError("need non-empty fingerprint sets")
    cdef const unsigned long long* gbase = &g[0, 0]
    cdef const unsigned long long* rbase = &r[0, 0]
    cdef int* rpops = <int*>malloc(nr * sizeof(int))
    if rpops == NULL:
        raise MemoryError()
    cdef double total = 0.0, best, sim
    cdef long long inter, union_
    cdef int gpop
    cdef Py_ssize_t i, j, k
    cdef const unsigned long long* ra
    cdef const unsigned long long* rb
    with nogil:
        for j in range(nr):
            rpops[j] = _popcount_row(rbase + j * w, w)
        for i in range(ng):
            ra = gbase + i * w
            gpop = _popcount_row(ra, w)
            best = 0.0
            for j in range(nr):
                rb = rbase + j * w
                inter = 0
                for k in range(w):
                    inter += popcount64(ra[k] & rb[k])
                union_ = gpop + rpops[j] - inter
                sim = 1.0 if union_ == 0 else <double>inter / <double>union_
                if sim > best:
                    best = sim
            total += best
    free(<void*>rpops)
    return total / <double>ng
