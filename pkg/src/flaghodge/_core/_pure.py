"""Pure-Python orbit enumeration kernels.

A weight is a tuple of its coordinates in the fundamental-weight basis. The
simple reflection ``s_i`` maps ``mu`` to ``mu - mu[i] * alpha_i``, and in
these coordinates ``alpha_i`` is column ``i`` of the Cartan matrix.

Starting from a dominant weight, applying ``s_i`` whenever ``mu[i] > 0``
raises the length of the minimal coset representative by exactly one, so a
breadth-first sweep yields the orbit one length at a time. Within a level,
weights are sorted lexicographically; the compiled kernel uses the same
order.
"""
from flaghodge.errors import EnumerationBudgetExceeded


def _columns(cartan):
    r = len(cartan)
    return [tuple(cartan[j][i] for j in range(r)) for i in range(r)]


def _successors(level, cols, r):
    out = set()
    for mu in level:
        for i in range(r):
            ci = mu[i]
            if ci > 0:
                col = cols[i]
                out.add(tuple([mu[j] - ci * col[j] for j in range(r)]))
    return sorted(out)


def orbit_level_sizes(cartan, start, budget):
    """Number of orbit elements at each length, without storing the orbit."""
    r = len(cartan)
    cols = _columns(cartan)
    level = [tuple(start)]
    sizes = []
    total = 0
    while level:
        total += len(level)
        if total > budget:
            raise EnumerationBudgetExceeded(total, budget)
        sizes.append(len(level))
        level = _successors(level, cols, r)
    return sizes


def orbit_levels(cartan, start, budget):
    """Full orbit, level by level, with a parent pointer for every element.

    Returns a list of ``(weights, parents, letters)`` triples. For an element
    of level ``k + 1``, ``letters`` holds the smallest ``i`` with
    ``mu[i] < 0`` and ``parents`` the index of ``s_i mu`` in level ``k``.
    Level 0 has parent and letter ``-1``.
    """
    r = len(cartan)
    cols = _columns(cartan)
    level = [tuple(start)]
    levels = [(level, [-1], [-1])]
    total = 1
    if total > budget:
        raise EnumerationBudgetExceeded(total, budget)
    while True:
        nxt = _successors(level, cols, r)
        if not nxt:
            break
        total += len(nxt)
        if total > budget:
            raise EnumerationBudgetExceeded(total, budget)
        index = {mu: k for k, mu in enumerate(level)}
        parents = []
        letters = []
        for nu in nxt:
            i = next(i for i in range(r) if nu[i] < 0)
            col = cols[i]
            ci = nu[i]
            parents.append(index[tuple([nu[j] - ci * col[j] for j in range(r)])])
            letters.append(i)
        levels.append((nxt, parents, letters))
        level = nxt
    return levels
