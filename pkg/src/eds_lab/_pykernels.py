"""Pure-Python distance kernels.

Same contract as the compiled ``_ckernels`` module. Adjacency is a sequence of
neighbor sequences indexed by vertex id; the graph is assumed to be a
connected tree.
"""

from collections import deque


def bfs_row(adjacency, source):
    n = len(adjacency)
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adjacency[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def distance_profile(adjacency):
    """Return ``(eccentricities, transmissions)`` using one BFS per vertex."""
    n = len(adjacency)
    ecc = [0] * n
    trans = [0] * n
    for v in range(n):
        row = bfs_row(adjacency, v)
        ecc[v] = max(row)
        trans[v] = sum(row)
    return ecc, trans


def distance_matrix(adjacency):
    return [bfs_row(adjacency, v) for v in range(len(adjacency))]
