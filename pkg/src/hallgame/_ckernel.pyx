# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled assignment kernel (lowest-index tie-breaking only).

Scans the adjacency row of the play's endpoint each iteration, as the
pure-Python kernel does; results are identical.
"""

import numpy as np
cimport numpy as cnp

from hallgame.errors import InternalInvariantError

cnp.import_array()

DEF INTRO = 0
DEF DEL = 1


def compute_lowest(const cnp.uint8_t[:, ::1] adjacency, Py_ssize_t v0, Py_ssize_t v1,
                   long long max_iterations, bint trace=False):
    cdef Py_ssize_t n = adjacency.shape[0]
    cdef cnp.ndarray[cnp.int64_t, ndim=1] sigma_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] tau_arr = np.full(n, -1, dtype=np.int64)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] reach_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] onp_arr = np.zeros(n, dtype=np.uint8)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] path_arr = np.zeros(n + 1, dtype=np.int64)
    cdef cnp.int64_t[::1] sigma = sigma_arr
    cdef cnp.int64_t[::1] tau = tau_arr
    cdef cnp.uint8_t[::1] reachable = reach_arr
    cdef cnp.uint8_t[::1] on_path = onp_arr
    cdef cnp.int64_t[::1] path = path_arr
    cdef Py_ssize_t plen = 2, u, vk, prev, z, w
    cdef long long iterations = 0, introductions = 0, deletions = 0
    cdef list steps = [] if trace else None

    path[0] = v0
    path[1] = v1
    reachable[v0] = 1
    reachable[v1] = 1
    on_path[v0] = 1
    on_path[v1] = 1

    while plen >= 2:
        iterations += 1
        if iterations > max_iterations:
            raise InternalInvariantError(
                f"iteration {iterations} exceeds the proved bound {max_iterations}")
        vk = path[plen - 1]
        z = -1
        for u in range(n):
            if adjacency[vk, u] and not on_path[u] and sigma[u] < 0:
                z = u
                break
        if z < 0:
            prev = path[plen - 2]
            sigma[prev] = vk
            sigma[vk] = -1
            tau[vk] = prev
            tau[prev] = -1
            plen -= 2
            on_path[vk] = 0
            on_path[prev] = 0
            deletions += 1
            if trace:
                steps.append((DEL, prev, vk))
        else:
            w = tau[z]
            path[plen] = z
            plen += 1
            on_path[z] = 1
            reachable[z] = 1
            if w >= 0:
                path[plen] = w
                plen += 1
                on_path[w] = 1
            introductions += 1
            if trace:
                steps.append((INTRO, z, w))

    return (reach_arr.astype(bool).tolist(), sigma_arr.tolist(), tau_arr.tolist(),
            iterations, introductions, deletions, steps)
