"""Pure-Python clique kernels over int bitsets.

Fallback for ``_ckernel``; both expose the same three functions with the
same semantics. A vertex set is a Python int whose bit ``v`` marks vertex
``v``. Only the neighbourhood of vertex 0 is passed in; the neighbourhood
of ``v`` is that mask rotated left by ``v`` within ``n`` bits.
"""

from __future__ import annotations

BACKEND = "python"


def _rotations(nbr0: int, n: int) -> list[int]:
    mask = (1 << n) - 1
    rows = [nbr0]
    for v in range(1, n):
        rows.append(((nbr0 << v) | (nbr0 >> (n - v))) & mask)
    return rows


def _suffix_bounds(cand: int, rows: list[int]) -> dict[int, int]:
    # Greedy colouring in descending vertex order; the number of colour
    # classes used by {u in cand : u >= v} bounds any clique drawn from it.
    classes: list[int] = []
    bounds = {}
    verts = []
    c = cand
    while c:
        v = c.bit_length() - 1
        verts.append(v)
        c ^= 1 << v
    for v in verts:
        nv = rows[v]
        for k, cls in enumerate(classes):
            if not cls & nv:
                classes[k] = cls | (1 << v)
                break
        else:
            classes.append(1 << v)
        bounds[v] = len(classes)
    return bounds


def _extend(cand: int, need: int, rows: list[int], clique: list[int], use_bound: bool) -> bool:
    if need == 0:
        return True
    if cand.bit_count() < need:
        return False
    bounds = _suffix_bounds(cand, rows) if use_bound else None
    while cand:
        if cand.bit_count() < need:
            return False
        low = cand & -cand
        v = low.bit_length() - 1
        if bounds is not None and bounds[v] < need:
            return False
        clique.append(v)
        if _extend(cand & rows[v], need - 1, rows, clique, use_bound):
            return True
        clique.pop()
        cand ^= low
    return False


def find_clique_through_zero(nbr0: int, n: int, t: int, use_bound: bool = False) -> list[int] | None:
    """Return the first K_t containing vertex 0 in ascending branching order, or None."""
    if t <= 1:
        return [0]
    rows = _rotations(nbr0, n)
    clique = [0]
    if _extend(nbr0, t - 1, rows, clique, use_bound):
        return clique
    return None


def _count(cand: int, need: int, rows: list[int]) -> int:
    if need == 1:
        return cand.bit_count()
    total = 0
    while cand.bit_count() >= need:
        low = cand & -cand
        v = low.bit_length() - 1
        total += _count(cand & rows[v], need - 1, rows)
        cand ^= low
    return total


def count_cliques_through_zero(nbr0: int, n: int, t: int) -> int:
    """Number of K_t vertex sets that contain vertex 0."""
    if t <= 1:
        return 1
    return _count(nbr0, t - 1, _rotations(nbr0, n))

