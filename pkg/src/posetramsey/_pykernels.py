"""Pure-Python search kernels.

These are the reference implementations; ``_ckernels`` mirrors every
signature and result exactly.  All sets are int bitsets and every search
returns the first solution in its fixed enumeration order, so both backends
agree solution-for-solution.
"""


def _low_index(low):
    return low.bit_length() - 1


def induced_copy(pat_up, pat_down, host_up, host_down, allowed):
    """Strong embedding of a pattern into a host, or None.

    ``pat_up[i]`` / ``pat_down[i]``: pattern elements strictly above / below i.
    ``host_up`` / ``host_down``: the same for host elements.  Only host
    elements whose bit is set in `allowed` may be used.  Returns the host index
    of each pattern element.
    """
    m = len(pat_up)
    if m == 0:
        return []
    img = [0] * m

    def candidates(i, used):
        cand = allowed & ~used
        pu = pat_up[i]
        pd = pat_down[i]
        for j in range(i):
            h = img[j]
            if pd >> j & 1:
                cand &= host_up[h]
            elif pu >> j & 1:
                cand &= host_down[h]
            else:
                cand &= ~(host_up[h] | host_down[h])
            if not cand:
                break
        return cand

    def rec(i, used):
        cand = candidates(i, used)
        while cand:
            low = cand & -cand
            img[i] = _low_index(low)
            if i + 1 == m or rec(i + 1, used | low):
                return True
            cand ^= low
        return False

    return img if rec(0, 0) else None


def avoiding_hom(verts, ymask, preds):
    """Y-avoiding weak homomorphism of a family into Q(Y), or None.

    `verts` must be in a linear extension of inclusion and ``preds[i]`` is the
    bitset of indices strictly below vertex i (all smaller than i).  Values are
    tried in ascending order; a branch dies as soon as some unassigned vertex
    with full Y-part has its lower bound forced up to Y.
    """
    m = len(verts)
    vy = [v & ymask for v in verts]
    watch = [
        [w for w in range(i + 1, m) if vy[w] == ymask and preds[w] >> i & 1]
        for i in range(m)
    ]
    phi = [0] * m

    def lower(i, limit):
        acc = 0
        p = preds[i] & ((1 << limit) - 1)
        while p:
            low = p & -p
            acc |= phi[_low_index(low)]
            p ^= low
        return acc

    def rec(i):
        if i == m:
            return True
        lo = lower(i, i)
        free = ymask & ~lo
        s = 0
        while True:
            t = lo | s
            if t != vy[i]:
                phi[i] = t
                if all(lower(w, i + 1) != ymask for w in watch[i]) and rec(i + 1):
                    return True
            if s == free:
                return False
            s = (s - free) & free

    return phi if rec(0) else None


def _submasks_canonical(mask):
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == mask:
            break
        sub = (sub - mask) & mask
    out.sort(key=lambda v: (v.bit_count(), v))
    return out


def red_good_copy(red, xmask, ymask):
    """Monotone g: Q(X) -> Q(Y) with every X' | g(X') red, or None.

    `red` is a bitset over all vertices of Q(X | Y).  The result lists g over
    the subsets of X in canonical order.
    """
    subs = _submasks_canonical(xmask)
    pos = {s: k for k, s in enumerate(subs)}
    ipreds = []
    for s in subs:
        ps = []
        b = s
        while b:
            low = b & -b
            ps.append(pos[s ^ low])
            b ^= low
        ipreds.append(ps)
    g = [0] * len(subs)

    def rec(k):
        if k == len(subs):
            return True
        lo = 0
        for j in ipreds[k]:
            lo |= g[j]
        free = ymask & ~lo
        x = subs[k]
        s = 0
        while True:
            t = lo | s
            if red >> (x | t) & 1:
                g[k] = t
                if rec(k + 1):
                    return True
            if s == free:
                return False
            s = (s - free) & free

    return g if rec(0) else None


def lattice_relations(n_ground):
    """Strict up/down bitsets of Q_N indexed by vertex mask."""
    size = 1 << n_ground
    up = [0] * size
    down = [0] * size
    for v in range(size):
        for w in range(size):
            if v != w and v & ~w == 0:
                up[v] |= 1 << w
                down[w] |= 1 << v
    return up, down


def n_subsets(full, n):
    out = []
    for v in range(full + 1):
        if v & ~full == 0 and v.bit_count() == n:
            out.append(v)
    return out


def _permute_bits(bits, vmap):
    out = 0
    while bits:
        low = bits & -bits
        out |= 1 << vmap[_low_index(low)]
        bits ^= low
    return out


def ramsey_scan(n_ground, pat_up, pat_down, n, start, stop, perm_maps):
    """Scan blue sets ``start <= blue < stop`` of Q_N for a counterexample.

    A counterexample has no blue induced copy of the pattern and no red copy
    of Q_n.  When `perm_maps` (vertex maps of ground permutations) is given,
    only blue sets minimal in their orbit are examined.  Returns
    ``(blue or -1, examined, skipped)``.
    """
    size = 1 << n_ground
    full_col = (1 << size) - 1
    full = size - 1
    host_up, host_down = lattice_relations(n_ground)
    xs = n_subsets(full, n)
    examined = skipped = 0
    for blue in range(start, stop):
        if perm_maps and any(_permute_bits(blue, vm) < blue for vm in perm_maps):
            skipped += 1
            continue
        examined += 1
        red = full_col & ~blue
        if any(red_good_copy(red, x, full ^ x) is not None for x in xs):
            continue
        if induced_copy(pat_up, pat_down, host_up, host_down, blue) is not None:
            continue
        return blue, examined, skipped
    return -1, examined, skipped
