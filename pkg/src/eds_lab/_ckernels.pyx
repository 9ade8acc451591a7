# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled distance kernels (n BFS passes over a CSR copy of the tree)."""

from libc.stdlib cimport malloc, free


cdef int _to_csr(adjacency, int n, int* offsets, int** targets_out) except -1:
    cdef int i, k, m = 0
    for i in range(n):
        offsets[i] = m
        m += len(adjacency[i])
    offsets[n] = m
    cdef int* targets = <int*> malloc(max(m, 1) * sizeof(int))
    if targets == NULL:
        raise MemoryError()
    k = 0
    for i in range(n):
        for y in adjacency[i]:
            targets[k] = y
            k += 1
    targets_out[0] = targets
    return 0


cdef void _bfs(int n, int* offsets, int* targets, int source, int* dist, int* queue) noexcept nogil:
    cdef int i, head = 0, tail = 0, x, y, dx
    for i in range(n):
        dist[i] = -1
    dist[source] = 0
    queue[tail] = source
    tail += 1
    while head < tail:
        x = queue[head]
        head += 1
        dx = dist[x] + 1
        for i in range(offsets[x], offsets[x + 1]):
            y = targets[i]
            if dist[y] < 0:
                dist[y] = dx
                queue[tail] = y
                tail += 1


def bfs_row(adjacency, int source):
    cdef int n = len(adjacency)
    cdef int* offsets = <int*> malloc((n + 1) * sizeof(int))
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    cdef int* targets = NULL
    try:
        _to_csr(adjacency, n, offsets, &targets)
        _bfs(n, offsets, targets, source, dist, queue)
        return [dist[i] for i in range(n)]
    finally:
        free(offsets)
        free(dist)
        free(queue)
        free(targets)


def distance_profile(adjacency):
    """Return ``(eccentricities, transmissions)`` using one BFS per vertex."""
    cdef int n = len(adjacency)
    cdef int* offsets = <int*> malloc((n + 1) * sizeof(int))
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    cdef int* targets = NULL
    cdef int v, i, e
    cdef long long s
    ecc = [0] * n
    trans = [0] * n
    try:
        _to_csr(adjacency, n, offsets, &targets)
        for v in range(n):
            _bfs(n, offsets, targets, v, dist, queue)
            e = 0
            s = 0
            for i in range(n):
                s += dist[i]
                if dist[i] > e:
                    e = dist[i]
            ecc[v] = e
            trans[v] = s
        return ecc, trans
    finally:
        free(offsets)
        free(dist)
        free(queue)
        free(targets)


def distance_matrix(adjacency):
    cdef int n = len(adjacency)
    cdef int* offsets = <int*> malloc((n + 1) * sizeof(int))
    cdef int* dist = <int*> malloc(n * sizeof(int))
    cdef int* queue = <int*> malloc(n * sizeof(int))
    cdef int* targets = NULL
    cdef int v
    rows = []
    try:
        _to_csr(adjacency, n, offsets, &targets)
        for v in range(n):
            _bfs(n, offsets, targets, v, dist, queue)
            rows.append([dist[i] for i in range(n)])
        return rows
    finally:
        free(offsets)
        free(dist)
        free(queue)
        free(targets)
