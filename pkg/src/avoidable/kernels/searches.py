"""Linear-time graph searches over CSR adjacency (neighbor lists sorted ascending).

Both kernels break ties by smallest vertex id and restart at the smallest
unvisited id when a component is exhausted.
"""

import numpy as np

from .._accel import njit


@njit
def lbfs_order(indptr, indices, n, start):
    """LBFS by partition refinement on linked cells.

    Every cell keeps its vertices in ascending id order, so the head of the
    first cell is the smallest vertex among those with the largest label.
    ``start < 0`` means "smallest id".
    """
    cap = indices.shape[0] + 2
    nxt = np.full(n, -1, dtype=np.int64)
    prv = np.full(n, -1, dtype=np.int64)
    cell_of = np.zeros(n, dtype=np.int64)
    head = np.full(cap, -1, dtype=np.int64)
    tail = np.full(cap, -1, dtype=np.int64)
    size = np.zeros(cap, dtype=np.int64)
    cnext = np.full(cap, -1, dtype=np.int64)
    cprev = np.full(cap, -1, dtype=np.int64)
    stamp = np.full(cap, -1, dtype=np.int64)
    split = np.full(cap, -1, dtype=np.int64)
    numbered = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)

    for v in range(n):
        prv[v] = v - 1
        nxt[v] = v + 1 if v + 1 < n else -1
    head[0] = 0
    tail[0] = n - 1
    size[0] = n
    first = 0
    ncells = 1

    for i in range(n):
        if i == 0 and start >= 0:
            v = start
        else:
            v = head[first]
        order[i] = v
        numbered[v] = True

        c = cell_of[v]
        p, q = prv[v], nxt[v]
        if p >= 0:
            nxt[p] = q
        else:
            head[c] = q
        if q >= 0:
            prv[q] = p
        else:
            tail[c] = p
        size[c] -= 1
        if size[c] == 0:
            a, b = cprev[c], cnext[c]
            if a >= 0:
                cnext[a] = b
            else:
                first = b
            if b >= 0:
                cprev[b] = a

        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if numbered[w]:
                continue
            c = cell_of[w]
            if stamp[c] != i:
                stamp[c] = i
                nc = ncells
                ncells += 1
                a = cprev[c]
                cprev[nc] = a
                cnext[nc] = c
                if a >= 0:
                    cnext[a] = nc
                else:
                    first = nc
                cprev[c] = nc
                split[c] = nc
            nc = split[c]
            # unlink w from c
            p, q = prv[w], nxt[w]
            if p >= 0:
                nxt[p] = q
            else:
                head[c] = q
            if q >= 0:
                prv[q] = p
            else:
                tail[c] = p
            size[c] -= 1
            # append w to nc
            t = tail[nc]
            prv[w] = t
            nxt[w] = -1
            if t >= 0:
                nxt[t] = w
            else:
                head[nc] = w
            tail[nc] = w
            size[nc] += 1
            cell_of[w] = nc
            if size[c] == 0:
                a, b = cprev[c], cnext[c]
                if a >= 0:
                    cnext[a] = b
                else:
                    first = b
                if b >= 0:
                    cprev[b] = a
    return order


@njit
def _heap_push(heap, hsize, key):
    j = hsize
    heap[j] = key
    while j > 0:
        parent = (j - 1) >> 1
        if heap[parent] <= heap[j]:
            break
        tmp = heap[parent]
        heap[parent] = heap[j]
        heap[j] = tmp
        j = parent
    return hsize + 1


@njit
def _heap_pop(heap, hsize):
    top = heap[0]
    hsize -= 1
    heap[0] = heap[hsize]
    j = 0
    while True:
        a = 2 * j + 1
        if a >= hsize:
            break
        b = a + 1
        s = b if b < hsize and heap[b] < heap[a] else a
        if heap[j] <= heap[s]:
            break
        tmp = heap[s]
        heap[s] = heap[j]
        heap[j] = tmp
        j = s
    return top, hsize


@njit
def mcs_order(indptr, indices, n, start):
    """Maximum cardinality search with a lazy binary heap.

    Heap key ``(n - count) * n + v`` orders by largest count, then smallest id.
    """
    count = np.zeros(n, dtype=np.int64)
    numbered = np.zeros(n, dtype=np.bool_)
    order = np.empty(n, dtype=np.int64)
    heap = np.empty(n + indices.shape[0] + 1, dtype=np.int64)
    hsize = 0
    for v in range(n):
        hsize = _heap_push(heap, hsize, n * n + v)
    for i in range(n):
        if i == 0 and start >= 0:
            v = start
        else:
            while True:
                key, hsize = _heap_pop(heap, hsize)
                v = key % n
                if not numbered[v] and key // n == n - count[v]:
                    break
        order[i] = v
        numbered[v] = True
        for k in range(indptr[v], indptr[v + 1]):
            w = indices[k]
            if not numbered[w]:
                count[w] += 1
                hsize = _heap_push(heap, hsize, (n - count[w]) * n + w)
    return order
