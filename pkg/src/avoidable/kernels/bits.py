"""Bitmask kernels for exhaustive sweeps over small graphs.

A graph on ``n <= 16`` vertices is an int64 array ``adj`` where bit ``u`` of
``adj[v]`` is set iff ``uv`` is an edge. Pair indices follow the graph6
column order: pair ``(i, j)``, ``i < j``, has index ``j*(j-1)//2 + i``.
"""

import numpy as np

from .._accel import njit


@njit
def popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit
def graph_from_code(code, n):
    """Adjacency masks of the labeled graph whose pair bits are ``code``."""
    adj = np.zeros(n, dtype=np.int64)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> k) & 1:
                adj[i] |= np.int64(1) << j
                adj[j] |= np.int64(1) << i
            k += 1
    return adj


@njit
def code_from_graph(adj, n):
    code = np.int64(0)
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (adj[i] >> j) & 1:
                code |= np.int64(1) << k
            k += 1
    return code


@njit
def reach(adj, n, src, allowed):
    """Vertices reachable from mask ``src`` using only vertices in ``allowed``."""
    seen = src
    frontier = src
    while frontier:
        nb = np.int64(0)
        for v in range(n):
            if (frontier >> v) & 1:
                nb |= adj[v]
        nb &= allowed & ~seen
        seen |= nb
        frontier = nb
    return seen


@njit
def closes(adj, n, internal, x, y):
    """Whether an induced path with ends ``x``, ``y`` and interior mask ``internal``
    closes to an induced cycle: ``x`` and ``y`` stay connected after deleting the
    closed neighborhoods of the interior (except ``x`` and ``y`` themselves)."""
    full = (np.int64(1) << n) - 1
    blocked = internal
    for v in range(n):
        if (internal >> v) & 1:
            blocked |= adj[v]
    bx = np.int64(1) << x
    by = np.int64(1) << y
    allowed = (full & ~blocked) | bx | by
    return (reach(adj, n, bx, allowed) & by) != 0


@njit
def is_avoidable_vertex(adj, n, v):
    nb = adj[v]
    for x in range(n):
        if not (nb >> x) & 1:
            continue
        for y in range(x + 1, n):
            if (nb >> y) & 1 and not (adj[x] >> y) & 1:
                if not closes(adj, n, np.int64(1) << v, x, y):
                    return False
    return True


@njit
def avoidable_vertex_mask(adj, n):
    out = np.int64(0)
    for v in range(n):
        if is_avoidable_vertex(adj, n, v):
            out |= np.int64(1) << v
    return out


@njit
def is_avoidable_path(adj, n, path, k):
    """Every extension ``x, path..., y`` of the induced path closes."""
    pmask = np.int64(0)
    for i in range(k):
        pmask |= np.int64(1) << path[i]
    first, last = path[0], path[k - 1]
    # vertices adjacent to the path anywhere other than its first / last vertex
    rest_first = np.int64(0)
    rest_last = np.int64(0)
    for i in range(1, k):
        rest_first |= adj[path[i]]
    for i in range(k - 1):
        rest_last |= adj[path[i]]
    xs = adj[first] & ~pmask & ~rest_first
    ys = adj[last] & ~pmask & ~rest_last
    for x in range(n):
        if not (xs >> x) & 1:
            continue
        for y in range(n):
            if not (ys >> y) & 1 or y == x:
                continue
            if k == 1 and y < x:
                continue
            if (adj[x] >> y) & 1:
                continue
            if not closes(adj, n, pmask, x, y):
                return False
    return True


@njit
def induced_paths(adj, n, k):
    """All induced ``P_k`` (one orientation each), packed 4 bits per vertex.

    Depth-first with an explicit stack of candidate masks.
    """
    out = [np.int64(0)]
    out.pop()
    path = np.zeros(max(k, 1), dtype=np.int64)
    cand = np.zeros(max(k, 1), dtype=np.int64)
    for s in range(n):
        path[0] = s
        if k == 1:
            out.append(np.int64(s))
            continue
        used = np.int64(1) << s
        cand[1] = adj[s] & ~used
        depth = 1
        while depth >= 1:
            if cand[depth] == 0:
                depth -= 1
                if depth >= 1:
                    used &= ~(np.int64(1) << path[depth])
                continue
            low = cand[depth] & -cand[depth]
            cand[depth] &= ~low
            u = popcount(low - 1)
            path[depth] = u
            if depth == k - 1:
                if path[0] < u:
                    code = np.int64(0)
                    for i in range(k):
                        code |= np.int64(path[i]) << (4 * i)
                    out.append(code)
                continue
            used |= low
            before = np.int64(0)
            for i in range(depth):
                before |= adj[path[i]]
            depth += 1
            cand[depth] = adj[u] & ~used & ~before
    res = np.empty(len(out), dtype=np.int64)
    for i in range(len(out)):
        res[i] = out[i]
    return res


@njit
def unpack_path(code, k):
    path = np.empty(k, dtype=np.int64)
    for i in range(k):
        path[i] = (code >> (4 * i)) & 15
    return path


@njit
def avoidable_path_status(adj, n, k):
    """``(number of induced P_k, number of avoidable ones)``."""
    paths = induced_paths(adj, n, k)
    good = 0
    for c in paths:
        if is_avoidable_path(adj, n, unpack_path(c, k), k):
            good += 1
    return paths.shape[0], good


@njit
def induced_cycle_masks(adj, n):
    """Vertex sets of all induced cycles of length at least 4 (subset scan)."""
    out = [np.int64(0)]
    out.pop()
    for s in range(1, 1 << n):
        s = np.int64(s)
        if popcount(s) < 4:
            continue
        ok = True
        low = -1
        for v in range(n):
            if (s >> v) & 1:
                if low < 0:
                    low = v
                if popcount(adj[v] & s) != 2:
                    ok = False
                    break
        if ok and reach(adj, n, np.int64(1) << low, s) == s:
            out.append(s)
    res = np.empty(len(out), dtype=np.int64)
    for i in range(len(out)):
        res[i] = out[i]
    return res


@njit
def brute_closes(cycles, vertex_mask):
    """Some induced cycle contains all the given vertices.

    For an induced path this is the same as lying on the cycle as a contiguous
    stretch, because the cycle's vertex set induces nothing but the cycle.
    """
    for c in cycles:
        if c & vertex_mask == vertex_mask:
            return True
    return False


@njit
def fill_adjacency(adj, n, order):
    """Adjacency of the filled graph for the elimination ordering ``order``."""
    cur = adj.copy()
    remaining = (np.int64(1) << n) - 1
    for v in order:
        nb = cur[v] & remaining & ~(np.int64(1) << v)
        for u in range(n):
            if (nb >> u) & 1:
                cur[u] |= nb & ~(np.int64(1) << u)
        remaining &= ~(np.int64(1) << v)
    return cur


@njit
def is_chordal(adj, n):
    """Repeatedly strip a simplicial vertex."""
    remaining = (np.int64(1) << n) - 1
    for _ in range(n):
        found = -1
        for v in range(n):
            if not (remaining >> v) & 1:
                continue
            nb = adj[v] & remaining
            simp = True
            for u in range(n):
                if (nb >> u) & 1 and (nb & ~adj[u] & ~(np.int64(1) << u)) != 0:
                    simp = False
                    break
            if simp:
                found = v
                break
        if found < 0:
            return False
        remaining &= ~(np.int64(1) << found)
    return True


@njit
def is_simplicial(adj, n, v):
    nb = adj[v]
    for u in range(n):
        if (nb >> u) & 1 and (nb & ~adj[u] & ~(np.int64(1) << u)) != 0:
            return False
    return True


@njit
def all_permutations(n):
    """Rows are the ``n!`` permutations of ``0..n-1`` (Heap's algorithm)."""
    total = 1
    for i in range(2, n + 1):
        total *= i
    out = np.empty((total, n), dtype=np.int64)
    a = np.arange(n)
    c = np.zeros(n, dtype=np.int64)
    out[0] = a
    row = 1
    i = 0
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                t = a[0]
                a[0] = a[i]
                a[i] = t
            else:
                t = a[c[i]]
                a[c[i]] = a[i]
                a[i] = t
            out[row] = a
            row += 1
            c[i] += 1
            i = 0
        else:
            c[i] = 0
            i += 1
    return out


@njit
def minimal_fill_codes(adj, n, perms):
    """Fill sets (pair-bit codes) of all minimal triangulations.

    Every minimal triangulation is the filled graph of one of its own perfect
    elimination orderings, so the inclusion-minimal fills over all orderings are
    exactly the minimal triangulations.
    """
    base = code_from_graph(adj, n)
    fills = np.empty(perms.shape[0], dtype=np.int64)
    for r in range(perms.shape[0]):
        fills[r] = code_from_graph(fill_adjacency(adj, n, perms[r]), n) & ~base
    fills = np.unique(fills)
    keep = np.ones(fills.shape[0], dtype=np.bool_)
    for a in range(fills.shape[0]):
        for b in range(fills.shape[0]):
            if a != b and (fills[b] & fills[a]) == fills[b] and fills[b] != fills[a]:
                keep[a] = False
                break
    return fills[keep]


@njit
def simplicial_in_some_minimal_mask(adj, n, perms):
    """Mask of vertices simplicial in at least one minimal triangulation."""
    base = code_from_graph(adj, n)
    out = np.int64(0)
    for f in minimal_fill_codes(adj, n, perms):
        h = graph_from_code(base | f, n)
        for v in range(n):
            if is_simplicial(h, n, v):
                out |= np.int64(1) << v
    return out


@njit
def canonical_code(adj, n, perms):
    """Smallest pair code over all relabellings (brute force, small ``n`` only)."""
    best = np.int64(-1)
    for r in range(perms.shape[0]):
        p = perms[r]
        code = np.int64(0)
        k = 0
        for j in range(1, n):
            for i in range(j):
                if (adj[p[i]] >> p[j]) & 1:
                    code |= np.int64(1) << k
                k += 1
        if best < 0 or code < best:
            best = code
    return best


@njit
def lbfs_bits(adj, n, start):
    """LBFS on bitmasks, smallest id on ties.

    A label is stored as an integer with bit ``n - i`` set when the vertex
    numbered ``i`` is a neighbor; numeric order on these integers is the
    lexicographic order on labels.
    """
    label = np.zeros(n, dtype=np.int64)
    done = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    for i in range(n):
        v = -1
        if i == 0 and start >= 0:
            v = start
        else:
            for u in range(n):
                if not done[u] and (v < 0 or label[u] > label[v]):
                    v = u
        order[i] = v
        done[v] = True
        for u in range(n):
            if (adj[v] >> u) & 1 and not done[u]:
                label[u] |= np.int64(1) << (n - i)
    return order


@njit
def lbfs_prefixes_avoidable(adj, n, order):
    """Each ``order[i]`` is avoidable in the subgraph induced by ``order[:i+1]``."""
    sub = np.zeros(n, dtype=np.int64)
    prefix = np.int64(0)
    for i in range(n):
        prefix |= np.int64(1) << order[i]
        for v in range(n):
            sub[v] = adj[v] & prefix if (prefix >> v) & 1 else 0
        if not is_avoidable_vertex(sub, n, order[i]):
            return False
    return True


@njit
def constructive_simplicial_mask(adj, n):
    """Vertices ``v`` made simplicial by shrinking ``G + clique(V - v)`` to a
    minimal triangulation, dropping removable fill pairs in pair order until
    none is left."""
    out = np.int64(0)
    full = (np.int64(1) << n) - 1
    for v in range(n):
        h = adj.copy()
        others = full & ~(np.int64(1) << v)
        for u in range(n):
            if u != v:
                h[u] |= others & ~(np.int64(1) << u)
        changed = True
        while changed:
            changed = False
            for j in range(1, n):
                for i in range(j):
                    if (adj[i] >> j) & 1 or not (h[i] >> j) & 1:
                        continue
                    h[i] &= ~(np.int64(1) << j)
                    h[j] &= ~(np.int64(1) << i)
                    if is_chordal(h, n):
                        changed = True
                    else:
                        h[i] |= np.int64(1) << j
                        h[j] |= np.int64(1) << i
        if is_simplicial(h, n, v):
            out |= np.int64(1) << v
    return out


@njit
def _extension_ends(adj, n, path, k):
    pmask = np.int64(0)
    rest_first = np.int64(0)
    rest_last = np.int64(0)
    for i in range(k):
        pmask |= np.int64(1) << path[i]
    for i in range(1, k):
        rest_first |= adj[path[i]]
    for i in range(k - 1):
        rest_last |= adj[path[i]]
    xs = adj[path[0]] & ~pmask & ~rest_first
    ys = adj[path[k - 1]] & ~pmask & ~rest_last
    return pmask, xs, ys


@njit
def closability_mismatches(adj, n, max_k):
    """Disagreements between deletion-connectivity and induced-cycle enumeration.

    For every induced path on ``k <= max_k`` vertices: each extension (and, for
    ``k >= 3``, the path itself) is judged closable both ways.
    Returns ``(paths checked, mismatches)``.
    """
    cycles = induced_cycle_masks(adj, n)
    checked = 0
    bad = 0
    for k in range(1, max_k + 1):
        paths = induced_paths(adj, n, k)
        for c in paths:
            path = unpack_path(c, k)
            checked += 1
            pmask, xs, ys = _extension_ends(adj, n, path, k)
            if k >= 3:
                inner = pmask & ~(np.int64(1) << path[0]) & ~(np.int64(1) << path[k - 1])
                if closes(adj, n, inner, path[0], path[k - 1]) != brute_closes(cycles, pmask):
                    bad += 1
            fast = True
            slow = True
            for x in range(n):
                if not (xs >> x) & 1:
                    continue
                for y in range(n):
                    if not (ys >> y) & 1 or y == x or (adj[x] >> y) & 1:
                        continue
                    if k == 1 and y < x:
                        continue
                    if not closes(adj, n, pmask, x, y):
                        fast = False
                    ext = pmask | (np.int64(1) << x) | (np.int64(1) << y)
                    if not brute_closes(cycles, ext):
                        slow = False
            if fast != slow or fast != is_avoidable_path(adj, n, path, k):
                bad += 1
    return checked, bad
