# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; same signatures and results as _pykernels.

Bitsets are 64-bit words, so hosts, patterns and families are limited to 64
elements and lattices to dimension 6.  The dispatcher in ``kernels`` routes
anything larger to the pure-Python versions.
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

cdef enum:
    MAXN = 64

cdef inline uint64_t _low(uint64_t x) nogil:
    return x & (~x + 1)

cdef inline int _ctz(uint64_t x) nogil:
    return __builtin_ctzll(x)


cdef uint64_t _copy_cands(int i, int* img, uint64_t* pu, uint64_t* pd,
                          uint64_t* hu, uint64_t* hd, uint64_t allowed,
                          uint64_t used) nogil:
    cdef uint64_t cand = allowed & ~used
    cdef int j, h
    for j in range(i):
        h = img[j]
        if (pd[i] >> j) & 1:
            cand &= hu[h]
        elif (pu[i] >> j) & 1:
            cand &= hd[h]
        else:
            cand &= ~(hu[h] | hd[h])
        if cand == 0:
            break
    return cand


cdef int _induced(int m, uint64_t* pu, uint64_t* pd, uint64_t* hu, uint64_t* hd,
                  uint64_t allowed, int* img) nogil:
    cdef uint64_t cand[MAXN]
    cdef uint64_t used = 0
    cdef uint64_t low
    cdef int i = 0
    if m == 0:
        return 1
    cand[0] = _copy_cands(0, img, pu, pd, hu, hd, allowed, used)
    while i >= 0:
        if cand[i] == 0:
            i -= 1
            if i >= 0:
                used &= ~((<uint64_t>1) << img[i])
            continue
        low = _low(cand[i])
        cand[i] ^= low
        img[i] = _ctz(low)
        if i + 1 == m:
            return 1
        used |= low
        i += 1
        cand[i] = _copy_cands(i, img, pu, pd, hu, hd, allowed, used)
    return 0


def induced_copy(pat_up, pat_down, host_up, host_down, allowed):
    cdef int m = len(pat_up)
    cdef int h = len(host_up)
    cdef uint64_t pu[MAXN]
    cdef uint64_t pd[MAXN]
    cdef uint64_t hu[MAXN]
    cdef uint64_t hd[MAXN]
    cdef int img[MAXN]
    cdef int i
    if m > MAXN or h > MAXN:
        raise ValueError("kernel capacity is 64 elements")
    for i in range(m):
        pu[i] = pat_up[i]
        pd[i] = pat_down[i]
    for i in range(h):
        hu[i] = host_up[i]
        hd[i] = host_down[i]
    cdef uint64_t al = allowed & ((<uint64_t>-1) if h == 64 else (((<uint64_t>1) << h) - 1))
    if _induced(m, pu, pd, hu, hd, al, img):
        return [img[i] for i in range(m)]
    return None


cdef inline uint64_t _lower(int i, uint64_t limit_mask, uint64_t* preds, uint64_t* phi) nogil:
    cdef uint64_t acc = 0
    cdef uint64_t p = preds[i] & limit_mask
    cdef uint64_t low
    while p:
        low = _low(p)
        acc |= phi[_ctz(low)]
        p ^= low
    return acc


cdef inline uint64_t _below(int i) nogil:
    # bitset of indices < i
    if i >= 64:
        return <uint64_t>-1
    return ((<uint64_t>1) << i) - 1


def avoiding_hom(verts, ymask, preds):
    cdef int m = len(verts)
    cdef uint64_t y = ymask
    cdef uint64_t vy[MAXN]
    cdef uint64_t pr[MAXN]
    cdef uint64_t watch[MAXN]
    cdef uint64_t phi[MAXN]
    cdef uint64_t lo[MAXN]
    cdef uint64_t fr[MAXN]
    cdef uint64_t s[MAXN]
    cdef char fresh[MAXN]
    cdef int i, w, ok
    cdef uint64_t t, wm, low
    if m > MAXN:
        raise ValueError("kernel capacity is 64 elements")
    for i in range(m):
        vy[i] = (<uint64_t>verts[i]) & y
        pr[i] = preds[i]
    for i in range(m):
        watch[i] = 0
        for w in range(i + 1, m):
            if vy[w] == y and (pr[w] >> i) & 1:
                watch[i] |= (<uint64_t>1) << w
    if m == 0:
        return []
    i = 0
    lo[0] = 0
    fr[0] = y
    fresh[0] = 1
    with nogil:
        while True:
            if i == m:
                break
            if fresh[i]:
                fresh[i] = 0
                s[i] = 0
            elif s[i] == fr[i]:
                i -= 1
                if i < 0:
                    break
                continue
            else:
                s[i] = (s[i] - fr[i]) & fr[i]
            t = lo[i] | s[i]
            if t == vy[i]:
                continue
            phi[i] = t
            ok = 1
            wm = watch[i]
            while wm:
                low = _low(wm)
                w = _ctz(low)
                if _lower(w, _below(i + 1), pr, phi) == y:
                    ok = 0
                    break
                wm ^= low
            if not ok:
                continue
            i += 1
            if i < m:
                lo[i] = _lower(i, _below(i), pr, phi)
                fr[i] = y & ~lo[i]
                fresh[i] = 1
    if i < 0:
        return None
    return [int(phi[i]) for i in range(m)]


def red_good_copy(red, xmask, ymask):
    cdef uint64_t rd = red
    cdef uint64_t y = ymask
    subs = sorted(_submasks(xmask), key=lambda v: (v.bit_count(), v))
    cdef int m = len(subs)
    if m > MAXN or (xmask | ymask) >= 64:
        raise ValueError("kernel capacity is dimension 6")
    pos = {sub: k for k, sub in enumerate(subs)}
    cdef uint64_t xs[MAXN]
    cdef uint64_t ip[MAXN]
    cdef uint64_t g[MAXN]
    cdef uint64_t lo[MAXN]
    cdef uint64_t fr[MAXN]
    cdef uint64_t s[MAXN]
    cdef char fresh[MAXN]
    cdef int k
    cdef uint64_t t
    for k in range(m):
        xs[k] = subs[k]
        ip[k] = 0
        b = subs[k]
        while b:
            low = b & -b
            ip[k] |= (<uint64_t>1) << pos[subs[k] ^ low]
            b ^= low
    k = 0
    lo[0] = 0
    fr[0] = y
    fresh[0] = 1
    with nogil:
        while True:
            if k == m:
                break
            if fresh[k]:
                fresh[k] = 0
                s[k] = 0
            elif s[k] == fr[k]:
                k -= 1
                if k < 0:
                    break
                continue
            else:
                s[k] = (s[k] - fr[k]) & fr[k]
            t = lo[k] | s[k]
            if not ((rd >> (xs[k] | t)) & 1):
                continue
            g[k] = t
            k += 1
            if k < m:
                lo[k] = _lower(k, <uint64_t>-1, ip, g)
                fr[k] = y & ~lo[k]
                fresh[k] = 1
    if k < 0:
        return None
    return [int(g[k]) for k in range(m)]


def _submasks(mask):
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            break
        sub = (sub - mask) & mask
    return out


cdef int _red_copy_c(uint64_t rd, uint64_t xmask, uint64_t y, int m,
                     uint64_t* xs, uint64_t* ip) nogil:
    cdef uint64_t g[MAXN]
    cdef uint64_t lo[MAXN]
    cdef uint64_t fr[MAXN]
    cdef uint64_t s[MAXN]
    cdef char fresh[MAXN]
    cdef int k = 0
    cdef uint64_t t
    lo[0] = 0
    fr[0] = y
    fresh[0] = 1
    while True:
        if k == m:
            return 1
        if fresh[k]:
            fresh[k] = 0
            s[k] = 0
        elif s[k] == fr[k]:
            k -= 1
            if k < 0:
                return 0
            continue
        else:
            s[k] = (s[k] - fr[k]) & fr[k]
        t = lo[k] | s[k]
        if not ((rd >> (xs[k] | t)) & 1):
            continue
        g[k] = t
        k += 1
        if k < m:
            lo[k] = _lower(k, <uint64_t>-1, ip, g)
            fr[k] = y & ~lo[k]
            fresh[k] = 1


def ramsey_scan(n_ground, pat_up, pat_down, n, start, stop, perm_maps):
    cdef int N = n_ground
    cdef int size = 1 << N
    if N > 5:
        raise ValueError("ramsey_scan kernel capacity is dimension 5")
    cdef int m = len(pat_up)
    if m > MAXN:
        raise ValueError("kernel capacity is 64 elements")
    cdef uint64_t full = size - 1
    cdef uint64_t full_col = (<uint64_t>-1) if size == 64 else (((<uint64_t>1) << size) - 1)
    cdef uint64_t pu[MAXN]
    cdef uint64_t pd[MAXN]
    cdef uint64_t hu[MAXN]
    cdef uint64_t hd[MAXN]
    cdef int img[MAXN]
    cdef int i, v, w, q, np_, nx, k
    for i in range(m):
        pu[i] = pat_up[i]
        pd[i] = pat_down[i]
    for v in range(size):
        hu[v] = 0
        hd[v] = 0
    for v in range(size):
        for w in range(size):
            if v != w and (v & ~w) == 0:
                hu[v] |= (<uint64_t>1) << w
                hd[w] |= (<uint64_t>1) << v
    # per X of size n: canonical subset list and immediate-predecessor bitsets
    xlist = [x for x in range(size) if x.bit_count() == n]
    nx = len(xlist)
    cdef int sub_count = 1 << n
    cdef uint64_t* xsubs = <uint64_t*> malloc(nx * sub_count * sizeof(uint64_t))
    cdef uint64_t* xips = <uint64_t*> malloc(nx * sub_count * sizeof(uint64_t))
    cdef uint64_t* xmasks = <uint64_t*> malloc(nx * sizeof(uint64_t))
    np_ = len(perm_maps)
    cdef int* pmaps = <int*> malloc((np_ * size + 1) * sizeof(int))
    try:
        for q in range(nx):
            x = xlist[q]
            xmasks[q] = x
            subs = sorted(_submasks(x), key=lambda u: (u.bit_count(), u))
            pos = {sub: kk for kk, sub in enumerate(subs)}
            for k in range(sub_count):
                xsubs[q * sub_count + k] = subs[k]
                ipk = 0
                b = subs[k]
                while b:
                    low = b & -b
                    ipk |= 1 << pos[subs[k] ^ low]
                    b ^= low
                xips[q * sub_count + k] = ipk
        for q in range(np_):
            vm = perm_maps[q]
            for v in range(size):
                pmaps[q * size + v] = vm[v]
        return _scan(N, m, pu, pd, hu, hd, img, nx, sub_count, xmasks, xsubs, xips,
                     np_, pmaps, full, full_col, start, stop)
    finally:
        free(xsubs)
        free(xips)
        free(xmasks)
        free(pmaps)


cdef tuple _scan(int N, int m, uint64_t* pu, uint64_t* pd, uint64_t* hu, uint64_t* hd,
                 int* img, int nx, int sub_count, uint64_t* xmasks, uint64_t* xsubs,
                 uint64_t* xips, int np_, int* pmaps, uint64_t full, uint64_t full_col,
                 uint64_t start, uint64_t stop):
    cdef uint64_t blue, red, img_bits, bits, low
    cdef long long examined = 0, skipped = 0
    cdef int q, size = 1 << N, found = -1
    cdef int reject, has_red
    cdef long long witness = -1
    with nogil:
        blue = start
        while blue < stop:
            reject = 0
            for q in range(np_):
                img_bits = 0
                bits = blue
                while bits:
                    low = _low(bits)
                    img_bits |= (<uint64_t>1) << pmaps[q * size + _ctz(low)]
                    bits ^= low
                if img_bits < blue:
                    reject = 1
                    break
            if reject:
                skipped += 1
                blue += 1
                continue
            examined += 1
            red = full_col & ~blue
            has_red = 0
            for q in range(nx):
                if _red_copy_c(red, xmasks[q], full ^ xmasks[q], sub_count,
                               xsubs + q * sub_count, xips + q * sub_count):
                    has_red = 1
                    break
            if has_red:
                blue += 1
                continue
            if _induced(m, pu, pd, hu, hd, blue, img):
                blue += 1
                continue
            witness = blue
            break
    return (witness, examined, skipped)
