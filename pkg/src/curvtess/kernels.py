"""Integer-array kernels on dart structures.

Each kernel exists twice: a scalar loop compiled with numba, and a vectorized
numpy version. The public names dispatch on ``_accel.USE_NUMBA``; both
variants stay importable for the parity tests and the benchmark.

Dart arrays use the layout of :class:`curvtess.planar_map.PlanarMap`:
``rev`` is the edge involution, ``rnext``/``rprev`` step through the rotation
at the dart's origin.
"""
import numpy as np

from . import _accel

__all__ = ["trace_faces", "propagate", "bfs_within", "KERNELS"]


# -- face tracing ------------------------------------------------------------

def _trace_faces_loop(face_next):
    n = face_next.shape[0]
    face_of = np.full(n, -1, dtype=np.int64)
    nf = 0
    for d in range(n):
        if face_of[d] != -1:
            continue
        x = d
        while face_of[x] == -1:
            face_of[x] = nf
            x = face_next[x]
        nf += 1
    return face_of


def trace_faces_numpy(face_next):
    """Label the cycles of ``face_next``; cycle ids ordered by smallest dart."""
    n = face_next.shape[0]
    label = np.arange(n, dtype=np.int64)
    nxt = np.asarray(face_next, dtype=np.int64).copy()
    # pointer doubling: after r rounds label[d] = min over 2**r successors
    span = 1
    while span < n:
        label = np.minimum(label, label[nxt])
        nxt = nxt[nxt]
        span *= 2
    _, face_of = np.unique(label, return_inverse=True)
    return face_of.astype(np.int64)


trace_faces_numba = _accel.njit(_trace_faces_loop)


# -- flag propagation ---------------------------------------------------------

def _propagate_loop(rev, rnext, rev_b, rnext_b, rprev_b, d0, e0, reflect):
    n = rev.shape[0]
    if rev_b.shape[0] != n:
        return False, np.full(n, -1, dtype=np.int64)
    phi = np.full(n, -1, dtype=np.int64)
    inv = np.full(n, -1, dtype=np.int64)
    stack = np.empty(n, dtype=np.int64)
    phi[d0] = e0
    inv[e0] = d0
    stack[0] = d0
    top = 1
    seen = 1
    while top > 0:
        top -= 1
        d = stack[top]
        e = phi[d]
        for k in range(2):
            if k == 0:
                a = rev[d]
                b = rev_b[e]
            else:
                a = rnext[d]
                b = rprev_b[e] if reflect else rnext_b[e]
            if phi[a] == -1:
                if inv[b] != -1:
                    return False, phi
                phi[a] = b
                inv[b] = a
                stack[top] = a
                top += 1
                seen += 1
            elif phi[a] != b:
                return False, phi
    return seen == n, phi


def propagate_numpy(rev, rnext, rev_b, rnext_b, rprev_b, d0, e0, reflect):
    """Extend ``d0 -> e0`` to a dart bijection from map A onto map B.

    The bijection must commute with the edge involution and carry the rotation
    of A to the rotation of B (to its inverse when ``reflect``). Returns
    ``(ok, phi)``; ``ok`` is False when the forced extension is inconsistent or
    not a bijection. Pass the same arrays twice for automorphisms.
    """
    n = rev.shape[0]
    phi = np.full(n, -1, dtype=np.int64)
    if rev_b.shape[0] != n:
        return False, phi
    step = rprev_b if reflect else rnext_b
    phi[d0] = e0
    front = np.array([d0], dtype=np.int64)
    while front.size:
        img = phi[front]
        src = np.concatenate((rev[front], rnext[front]))
        dst = np.concatenate((rev_b[img], step[img]))
        src_u, first, inverse = np.unique(src, return_index=True, return_inverse=True)
        dst_u = dst[first]
        if np.any(dst != dst_u[inverse]):
            return False, phi
        cur = phi[src_u]
        known = cur != -1
        if np.any(cur[known] != dst_u[known]):
            return False, phi
        fresh = ~known
        phi[src_u[fresh]] = dst_u[fresh]
        front = src_u[fresh]
    if np.any(phi < 0):
        return False, phi
    if np.unique(phi).size != n:
        return False, phi
    return True, phi


propagate_numba = _accel.njit(_propagate_loop)


# -- bounded BFS --------------------------------------------------------------

def _bfs_loop(indptr, indices, src, radius):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    queue = np.empty(n, dtype=np.int64)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        if radius >= 0 and dist[u] >= radius:
            continue
        for p in range(indptr[u], indptr[u + 1]):
            w = indices[p]
            if dist[w] == -1:
                dist[w] = dist[u] + 1
                queue[tail] = w
                tail += 1
    return dist


def bfs_within_numpy(indptr, indices, src, radius):
    """Graph distances from ``src`` on a CSR adjacency; -1 beyond ``radius``.

    A negative radius means unbounded.
    """
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, dtype=np.int64)
    dist[src] = 0
    front = np.array([src], dtype=np.int64)
    level = 0
    while front.size and (radius < 0 or level < radius):
        starts = indptr[front]
        counts = indptr[front + 1] - starts
        total = int(counts.sum())
        if total == 0:
            break
        offs = np.repeat(starts - np.cumsum(counts) + counts, counts) + np.arange(total)
        nb = indices[offs]
        nb = np.unique(nb[dist[nb] == -1])
        level += 1
        dist[nb] = level
        front = nb
    return dist


bfs_within_numba = _accel.njit(_bfs_loop)


KERNELS = {
    "numba": {
        "trace_faces": trace_faces_numba,
        "propagate": propagate_numba,
        "bfs_within": bfs_within_numba,
    },
    "numpy": {
        "trace_faces": trace_faces_numpy,
        "propagate": propagate_numpy,
        "bfs_within": bfs_within_numpy,
    },
}

_active = KERNELS["numba" if _accel.USE_NUMBA else "numpy"]
trace_faces = _active["trace_faces"]
propagate = _active["propagate"]
bfs_within = _active["bfs_within"]
BACKEND = "numba" if _accel.USE_NUMBA else "numpy"
