# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact-arithmetic sweep kernels over small prime fields.

Contracts match `_fpkernel_py`: candidate indices are base-p digit
strings (big-endian over row-major entries), tensors are flat int lists
of length n^3 indexed by ((i*n + j)*n + k), and all arithmetic is plain
integer arithmetic mod p with early exit on the first failed identity.
Dimensions are capped at 3, which keeps every scratch array a fixed-size
C array.
"""

NAME = "compiled"

cdef inline int _mod(long x, int p) noexcept:
    cdef long r = x % p
    if r < 0:
        r += p
    return <int> r


cdef int _check_args(int p, int n) except -1:
    if n < 1 or n > 3:
        raise ValueError("kernels support dimensions 1..3, got %d" % n)
    if p < 2 or p >= 1 << 16:
        raise ValueError("modulus out of range: %d" % p)
    return 0


cdef int _load(object flat, int n, int p, int *out) except -1:
    cdef int t, k
    k = n * n * n
    if len(flat) != k:
        raise ValueError("flat tensor must have length %d" % k)
    for t in range(k):
        out[t] = _mod(flat[t], p)
    return 0


cdef bint _jacobi(int p, int n, int *c) noexcept:
    cdef int i, j, k, r, t
    cdef long s
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                for r in range(n):
                    s = 0
                    for t in range(n):
                        s += c[(i * n + j) * n + t] * c[(t * n + k) * n + r]
                        s += c[(j * n + k) * n + t] * c[(t * n + i) * n + r]
                        s += c[(k * n + i) * n + t] * c[(t * n + j) * n + r]
                    if s % p:
                        return 0
    return 1


cdef bint _verify(int p, int n, int *cg, int *cn, int *pr) noexcept:
    cdef int i, j, k, r, t
    cdef long lhs, rhs, d
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                d = (pr[(i * n + j) * n + k] - pr[(j * n + i) * n + k]
                     - cg[(i * n + j) * n + k] + cn[(i * n + j) * n + k])
                if d % p:
                    return 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for r in range(n):
                    lhs = 0
                    rhs = 0
                    for t in range(n):
                        lhs += cg[(i * n + j) * n + t] * pr[(t * n + k) * n + r]
                        rhs += pr[(j * n + k) * n + t] * pr[(i * n + t) * n + r]
                        rhs -= pr[(i * n + k) * n + t] * pr[(j * n + t) * n + r]
                    if (lhs - rhs) % p:
                        return 0
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                for r in range(n):
                    lhs = 0
                    rhs = 0
                    for t in range(n):
                        lhs += cn[(j * n + k) * n + t] * pr[(i * n + t) * n + r]
                        rhs += pr[(i * n + j) * n + t] * cn[(t * n + k) * n + r]
                        rhs += pr[(i * n + k) * n + t] * cn[(j * n + t) * n + r]
                    if (lhs - rhs) % p:
                        return 0
    return 1


cdef void _init_digits(long long lo, int p, int k, int *dig) noexcept:
    cdef long long rem = lo
    cdef int t
    for t in range(k):
        dig[k - 1 - t] = <int> (rem % p)
        rem //= p


cdef inline void _step_digits(int p, int k, int *dig) noexcept:
    cdef int t = k - 1
    while t >= 0:
        dig[t] += 1
        if dig[t] == p:
            dig[t] = 0
            t -= 1
        else:
            break


def jacobi_ok(int p, int n, flat):
    """Plain Jacobi check of a flat bracket tensor."""
    cdef int c[27]
    _check_args(p, n)
    _load(flat, n, p, c)
    return bool(_jacobi(p, n, c))


def verify_structure(int p, int n, cg_flat, cn_flat, pr_flat):
    """Scan of the three pair identities on flat tensors."""
    cdef int cg[27]
    cdef int cn[27]
    cdef int pr[27]
    _check_args(p, n)
    _load(cg_flat, n, p, cg)
    _load(cn_flat, n, p, cn)
    _load(pr_flat, n, p, pr)
    return bool(_verify(p, n, cg, cn, pr))


def phi_sweep(int p, int n, cn_flat, long long lo, long long hi):
    """Indices in [lo, hi) whose endomorphism yields a structure product.

    The candidate with index m is the matrix phi with entries the base-p
    digits of m (row major); the product is x.y = {phi x, y}, the first
    bracket is the induced one x.y - y.x + {x, y}, and the hit test is
    that the induced bracket satisfies Jacobi and the pair identities
    hold.  Skew-part holds by construction.
    """
    cdef int cn[27]
    cdef int pr[27]
    cdef int br[27]
    cdef int dig[9]
    cdef int i, j, r, t, k
    cdef long s
    cdef long long idx
    _check_args(p, n)
    _load(cn_flat, n, p, cn)
    k = n * n
    _init_digits(lo, p, k, dig)
    hits = []
    idx = lo
    while idx < hi:
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    s = 0
                    for t in range(n):
                        s += dig[t * n + i] * cn[(t * n + j) * n + r]
                    pr[(i * n + j) * n + r] = _mod(s, p)
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    br[(i * n + j) * n + r] = _mod(
                        pr[(i * n + j) * n + r] - pr[(j * n + i) * n + r]
                        + cn[(i * n + j) * n + r], p)
        if _jacobi(p, n, br) and _verify(p, n, br, cn, pr):
            hits.append(idx)
        _step_digits(p, k, dig)
        idx += 1
    return hits


def product_sweep(int p, int n, cg_flat, cn_flat, bint symmetric,
                  long long lo, long long hi):
    """Indices in [lo, hi) whose product tensor satisfies the pair identities.

    In symmetric mode the digits parametrize the slots (i, j) with i <= j
    as the products e_j . e_i (pairs in lex order, n components each) and
    the opposite slot is forced to e_j . e_i + [e_i, e_j] - {e_i, e_j},
    which bakes the skew-part identity into every candidate; in full mode
    the digits are the whole tensor row-major.
    """
    cdef int cg[27]
    cdef int cn[27]
    cdef int pr[27]
    cdef int dig[27]
    cdef int i, j, r, q, k
    cdef long long idx
    _check_args(p, n)
    _load(cg_flat, n, p, cg)
    _load(cn_flat, n, p, cn)
    if symmetric:
        k = n * n * (n + 1) // 2
    else:
        k = n * n * n
    _init_digits(lo, p, k, dig)
    hits = []
    idx = lo
    while idx < hi:
        if symmetric:
            q = 0
            for i in range(n):
                for j in range(i, n):
                    for r in range(n):
                        pr[(j * n + i) * n + r] = dig[q * n + r]
                        if i != j:
                            pr[(i * n + j) * n + r] = _mod(
                                dig[q * n + r] + cg[(i * n + j) * n + r]
                                - cn[(i * n + j) * n + r], p)
                    q += 1
        else:
            for r in range(k):
                pr[r] = dig[r]
        if _verify(p, n, cg, cn, pr):
            hits.append(idx)
        _step_digits(p, k, dig)
        idx += 1
    return hits


def gl_invariance_sweep(int p, int n, tensors, long long lo, long long hi):
    """Indices of invertible matrices T preserving every flat tensor C in
    `tensors`: C(T x, T y) = T C(x, y) on all basis pairs."""
    cdef int cs[8][27]
    cdef int dig[9]
    cdef int i, j, r, s2, t, u, k, m, nt
    cdef long det, lhs, rhs, acc
    cdef long long idx
    cdef bint ok
    _check_args(p, n)
    nt = len(tensors)
    if nt > 8:
        raise ValueError("at most 8 tensors per sweep")
    for m in range(nt):
        _load(tensors[m], n, p, cs[m])
    k = n * n
    _init_digits(lo, p, k, dig)
    hits = []
    idx = lo
    while idx < hi:
        if n == 1:
            det = dig[0]
        elif n == 2:
            det = dig[0] * dig[3] - dig[1] * dig[2]
        else:
            det = (dig[0] * (dig[4] * dig[8] - dig[5] * dig[7])
                   - dig[1] * (dig[3] * dig[8] - dig[5] * dig[6])
                   + dig[2] * (dig[3] * dig[7] - dig[4] * dig[6]))
        ok = det % p != 0
        for m in range(nt):
            if not ok:
                break
            for i in range(n):
                if not ok:
                    break
                for j in range(n):
                    if not ok:
                        break
                    for r in range(n):
                        lhs = 0
                        for t in range(n):
                            acc = 0
                            for u in range(n):
                                acc += dig[u * n + j] * cs[m][(t * n + u) * n + r]
                            lhs += dig[t * n + i] * acc
                        rhs = 0
                        for s2 in range(n):
                            rhs += dig[r * n + s2] * cs[m][(i * n + j) * n + s2]
                        if (lhs - rhs) % p:
                            ok = 0
                            break
        if ok:
            hits.append(idx)
        _step_digits(p, k, dig)
        idx += 1
    return hits
