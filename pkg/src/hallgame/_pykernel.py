"""Pure-Python assignment kernel.

Fallback for the compiled kernel, and the only backend that supports custom
tie-breaking and per-step callbacks. ``-1`` stands for the undefined value in
``sigma`` and ``tau``; trace entries are ``(kind, x, y)`` with kind ``INTRO``
or ``DEL``.
"""

from .errors import InternalInvariantError

INTRO = 0
DEL = 1


def compute(neighbors, v0, v1, max_iterations, trace=False, choose=None, on_step=None):
    """Run the path-extension loop from the play ``v0 v1`` until the play is shorter than one edge.

    ``neighbors[v]`` lists the neighbors of ``v`` in increasing order. With
    ``choose=None`` the lowest-index candidate is taken, otherwise
    ``choose(candidates)`` picks one from the nonempty candidate list.
    ``on_step(iteration, path, reachable, sigma, tau)`` runs after every
    iteration and must not mutate its arguments.

    Returns ``(reachable, sigma, tau, iterations, introductions, deletions, steps)``.
    """
    n = len(neighbors)
    sigma = [-1] * n
    tau = [-1] * n
    reachable = [False] * n
    on_path = [False] * n
    path = [v0, v1]
    reachable[v0] = reachable[v1] = True
    on_path[v0] = on_path[v1] = True
    iterations = introductions = deletions = 0
    steps = [] if trace else None

    while len(path) >= 2:
        iterations += 1
        if iterations > max_iterations:
            raise InternalInvariantError(
                f"iteration {iterations} exceeds the proved bound {max_iterations}")
        vk = path[-1]
        z = -1
        if choose is None:
            for u in neighbors[vk]:
                if not on_path[u] and sigma[u] < 0:
                    z = u
                    break
        else:
            cands = [u for u in neighbors[vk] if not on_path[u] and sigma[u] < 0]
            if cands:
                z = choose(cands)
        if z < 0:
            prev = path[-2]
            sigma[prev] = vk
            sigma[vk] = -1
            tau[vk] = prev
            tau[prev] = -1
            path.pop()
            path.pop()
            on_path[vk] = on_path[prev] = False
            deletions += 1
            if steps is not None:
                steps.append((DEL, prev, vk))
        else:
            w = tau[z]
            path.append(z)
            on_path[z] = True
            reachable[z] = True
            if w >= 0:
                path.append(w)
                on_path[w] = True
            introductions += 1
            if steps is not None:
                steps.append((INTRO, z, w))
        if on_step is not None:
            on_step(iterations, path, reachable, sigma, tau)

    return reachable, sigma, tau, iterations, introductions, deletions, steps

