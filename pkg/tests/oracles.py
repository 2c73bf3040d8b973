"""Brute-force reference implementations used only by the tests.

Nothing here calls the package's search code: relations are plain Python
sets, embeddings are found by naive extension search, and X-good copies are
found by trying every assignment of Y-parts.
"""
from itertools import combinations, permutations, product
from math import comb


def subsets(mask):
    return [s for s in range(mask + 1) if s & ~mask == 0]


def leq_pairs(elements, covers):
    """Reflexive-transitive closure of cover pairs as a set of (a, b)."""
    rel = {(a, a) for a in elements} | set(covers)
    changed = True
    while changed:
        changed = False
        for a, b in list(rel):
            for c, d in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return rel


def is_induced_embedding(n, rel, images):
    if len(set(images)) != n:
        return False
    for a in range(n):
        for b in range(n):
            if ((a, b) in rel) != (images[a] & ~images[b] == 0):
                return False
    return True


def has_induced_copy(n, rel, host):
    """Does the pattern (n elements, relation `rel`) embed into the vertex list `host`?

    Plain extension search: images are chosen one element at a time and
    checked against every earlier choice.
    """
    host = list(host)
    img = []

    def ok(v):
        k = len(img)
        for j, w in enumerate(img):
            if w == v:
                return False
            if ((j, k) in rel) != (w & ~v == 0) or ((k, j) in rel) != (v & ~w == 0):
                return False
        return True

    def rec():
        if len(img) == n:
            return True
        for v in host:
            if ok(v):
                img.append(v)
                if rec():
                    return True
                img.pop()
        return False

    return rec()


def antichains(n_ground):
    size = 1 << n_ground
    out = []
    for bits in range(1 << size):
        vs = [v for v in range(size) if bits >> v & 1]
        if all(a == b or (a & ~b and b & ~a) for a in vs for b in vs):
            out.append(bits)
    return out


def ramsey_q1_holds(n_elems, rel, N):
    """Red Q_1-free colorings are exactly those with an antichain of red vertices."""
    size = 1 << N
    for red in antichains(N):
        blue = [v for v in range(size) if not red >> v & 1]
        if not has_induced_copy(n_elems, rel, blue):
            return False
    return True


def x_good_copies(x, y):
    """All X-good copies as frozensets of vertices, found by raw search."""
    dom = subsets(x)
    out = set()
    for parts in product(subsets(y), repeat=len(dom)):
        img = [a | p for a, p in zip(dom, parts)]
        if len(set(img)) != len(img):
            continue
        ok = all(
            (a & ~b == 0) == (ia & ~ib == 0)
            for a, ia in zip(dom, img)
            for b, ib in zip(dom, img)
        )
        if ok:
            out.add(frozenset(img))
    return out


def copy_masks(n_ground, y):
    """X-good copies as bitsets over the 2^n_ground vertices."""
    full = (1 << n_ground) - 1
    return sorted({sum(1 << v for v in c) for c in x_good_copies(full & ~y, y)})


def is_blocker(family_bits, copies):
    return all(family_bits & c for c in copies)


def minimal_blockers(n_ground, y):
    """Every inclusion-minimal transversal of the X-good copies, as bitsets."""
    copies = copy_masks(n_ground, y)
    size = 1 << n_ground
    out = []
    for bits in range(1 << size):
        if not is_blocker(bits, copies):
            continue
        b = bits
        minimal = True
        while b:
            low = b & -b
            if is_blocker(bits ^ low, copies):
                minimal = False
                break
            b ^= low
        if minimal:
            out.append(bits)
    return out


def count_posets_brute(n):
    """Unlabelled posets on n points by canonical relation matrices."""
    seen = set()
    pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    for choice in product((0, 1), repeat=len(pairs)):
        rel = {p for p, c in zip(pairs, choice) if c}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c and a != d):
            continue
        key = min(
            tuple(sorted((perm[a], perm[b]) for a, b in rel))
            for perm in permutations(range(n))
        )
        seen.add(key)
    return len(seen)


def contains_n(n, rel):
    """Brute search for an induced N: a<c, b<d, b<c, rest incomparable."""
    def lt(a, b):
        return a != b and (a, b) in rel

    def inc(a, b):
        return not lt(a, b) and not lt(b, a)

    for a, b, c, d in permutations(range(n), 4):
        if lt(a, c) and lt(b, d) and lt(b, c) and inc(a, b) and inc(a, d) and inc(c, d):
            return True
    return False


def has_red_qn(n_ground, red_vertices, n):
    """Any induced copy of Q_n inside the red vertices (not only X-good ones)."""
    dom = list(range(1 << n))
    rel = {(a, b) for a in dom for b in dom if a & ~b == 0}
    return has_induced_copy(1 << n, rel, red_vertices)


def ramsey_brute(n_elems, rel, n, N):
    """Does every coloring of Q_N have a blue pattern or a red Q_n?  Returns (holds, first blue set)."""
    size = 1 << N
    for blue in range(1 << size):
        bv = [v for v in range(size) if blue >> v & 1]
        rv = [v for v in range(size) if not blue >> v & 1]
        if has_red_qn(N, rv, n):
            continue
        if has_induced_copy(n_elems, rel, bv):
            continue
        return False, blue
    return True, None


def sperner_direct(t):
    m = 0
    while comb(m, m // 2) < t:
        m += 1
    return m


def two_dim_brute(n_elems, rel, limit):
    for m in range(limit + 1):
        if has_induced_copy(n_elems, rel, range(1 << m)):
            return m
    return None


def connected(vertices):
    vs = list(vertices)
    if not vs:
        return True
    seen = {vs[0]}
    stack = [vs[0]]
    while stack:
        v = stack.pop()
        for w in vs:
            if w not in seen and (v & ~w == 0 or w & ~v == 0):
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def all_k_subsets(mask, k):
    bits = [i for i in range(mask.bit_length()) if mask >> i & 1]
    return [sum(1 << b for b in c) for c in combinations(bits, k)]
