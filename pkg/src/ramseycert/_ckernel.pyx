# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled clique kernels over uint64 word bitsets.

Same functions and semantics as ``_pykernel``. The search itself runs
without the GIL so verifier and search workers can use threads.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    int clz64 "__builtin_clzll"(unsigned long long) nogil

BACKEND = "cython"

cdef uint64_t ONE = 1


cdef struct Ctx:
    int n
    int W
    int use_bound
    uint64_t* rows      # n rows of W words: neighbourhood of each vertex
    uint64_t* cand      # one W-word candidate set per depth
    int* bound          # one n-int suffix-bound table per depth
    uint64_t* classes   # colour-class scratch, n rows of W words
    int* clique


cdef inline int set_count(const uint64_t* s, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += popcount64(s[i])
    return c


cdef inline int set_lowest(const uint64_t* s, int W) noexcept nogil:
    cdef int i
    for i in range(W):
        if s[i]:
            return i * 64 + ctz64(s[i])
    return -1


cdef inline void set_and(uint64_t* dst, const uint64_t* a, const uint64_t* b, int W) noexcept nogil:
    cdef int i
    for i in range(W):
        dst[i] = a[i] & b[i]


cdef inline int disjoint(const uint64_t* a, const uint64_t* b, int W) noexcept nogil:
    cdef int i
    for i in range(W):
        if a[i] & b[i]:
            return 0
    return 1


cdef void fill_rows(Ctx* ctx, const uint64_t* nbr0) noexcept nogil:
    cdef int n = ctx.n, W = ctx.W, v, u, w
    cdef uint64_t word
    for u in range(n):
        if (nbr0[u >> 6] >> (u & 63)) & ONE:
            for v in range(n):
                w = u + v
                if w >= n:
                    w -= n
                ctx.rows[v * W + (w >> 6)] |= ONE << (w & 63)


cdef void suffix_bounds(Ctx* ctx, const uint64_t* cand, int* bound) noexcept nogil:
    # Greedy colouring of cand in descending vertex order; bound[v] is the
    # number of classes used by the suffix {u in cand : u >= v}.
    cdef int W = ctx.W, ncls = 0, i, k, v
    cdef uint64_t word
    cdef const uint64_t* row
    cdef uint64_t* cls
    for i in range(W - 1, -1, -1):
        word = cand[i]
        while word:
            v = i * 64 + 63 - clz64(word)
            word &= ~(ONE << (v & 63))
            row = ctx.rows + v * W
            for k in range(ncls):
                cls = ctx.classes + k * W
                if disjoint(cls, row, W):
                    cls[v >> 6] |= ONE << (v & 63)
                    break
            else:
                cls = ctx.classes + ncls * W
                for k in range(W):
                    cls[k] = 0
                cls[v >> 6] = ONE << (v & 63)
                ncls += 1
            bound[v] = ncls


cdef int extend(Ctx* ctx, int depth, int need) noexcept nogil:
    cdef int W = ctx.W, v
    cdef uint64_t* cand = ctx.cand + depth * W
    cdef uint64_t* nxt = ctx.cand + (depth + 1) * W
    cdef int* bound = ctx.bound + depth * ctx.n if ctx.use_bound else NULL
    if need == 0:
        return 1
    if set_count(cand, W) < need:
        return 0
    if bound != NULL:
        suffix_bounds(ctx, cand, bound)
    while True:
        if set_count(cand, W) < need:
            return 0
        v = set_lowest(cand, W)
        if bound != NULL and bound[v] < need:
            return 0
        ctx.clique[depth + 1] = v
        set_and(nxt, cand, ctx.rows + v * W, W)
        if extend(ctx, depth + 1, need - 1):
            return 1
        cand[v >> 6] &= ~(ONE << (v & 63))


cdef unsigned long long count(Ctx* ctx, int depth, int need) noexcept nogil:
    cdef int W = ctx.W, v
    cdef uint64_t* cand = ctx.cand + depth * W
    cdef uint64_t* nxt = ctx.cand + (depth + 1) * W
    cdef unsigned long long total = 0
    if need == 1:
        return set_count(cand, W)
    while set_count(cand, W) >= need:
        v = set_lowest(cand, W)
        set_and(nxt, cand, ctx.rows + v * W, W)
        total += count(ctx, depth + 1, need - 1)
        cand[v >> 6] &= ~(ONE << (v & 63))
    return total


cdef int ctx_init(Ctx* ctx, object nbr0, int n, int t, int use_bound) except -1:
    cdef int W = (n + 63) // 64, i
    cdef uint64_t* start
    ctx.n = n
    ctx.W = W
    ctx.use_bound = use_bound
    ctx.rows = <uint64_t*> calloc(n * W, sizeof(uint64_t))
    ctx.cand = <uint64_t*> calloc((t + 1) * W, sizeof(uint64_t))
    ctx.bound = <int*> calloc((t + 1) * n, sizeof(int)) if use_bound else NULL
    ctx.classes = <uint64_t*> calloc(n * W, sizeof(uint64_t)) if use_bound else NULL
    ctx.clique = <int*> calloc(t + 1, sizeof(int))
    if ctx.rows == NULL or ctx.cand == NULL or ctx.clique == NULL or (
        use_bound and (ctx.bound == NULL or ctx.classes == NULL)
    ):
        ctx_free(ctx)
        raise MemoryError()
    for i in range(W):
        ctx.cand[i] = <uint64_t> ((nbr0 >> (64 * i)) & 0xFFFFFFFFFFFFFFFF)
    with nogil:
        fill_rows(ctx, ctx.cand)
    return 0


cdef void ctx_free(Ctx* ctx) noexcept:
    free(ctx.rows)
    free(ctx.cand)
    free(ctx.bound)
    free(ctx.classes)
    free(ctx.clique)


def find_clique_through_zero(nbr0, int n, int t, bint use_bound=False):
    """Return the first K_t containing vertex 0 in ascending branching order, or None."""
    cdef Ctx ctx
    cdef int found
    if t <= 1:
        return [0]
    ctx_init(&ctx, nbr0, n, t, use_bound)
    try:
        ctx.clique[0] = 0
        with nogil:
            found = extend(&ctx, 0, t - 1)
        if found:
            return [ctx.clique[i] for i in range(t)]
        return None
    finally:
        ctx_free(&ctx)


def count_cliques_through_zero(nbr0, int n, int t):
    """Number of K_t vertex sets that contain vertex 0."""
    cdef Ctx ctx
    cdef unsigned long long total
    if t <= 1:
        return 1
    ctx_init(&ctx, nbr0, n, t, 0)
    try:
        with nogil:
            total = count(&ctx, 0, t - 1)
        return total
    finally:
        ctx_free(&ctx)
