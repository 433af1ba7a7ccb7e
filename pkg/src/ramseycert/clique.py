"""Clique decisions on circulant graphs.

Circulant graphs are vertex-transitive, so a K_t exists iff one exists
through vertex 0, i.e. iff the neighbourhood of 0 holds a K_{t-1}.  The
fast routines only search there.  ``brute_force_has_clique`` and
``brute_force_count_cliques`` ignore that symmetry on purpose and serve as
the independent oracle in tests and ``--brute-force`` mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from types import ModuleType

from . import _kernel
from .certificate import ColoringCertificate
from .circulant import CirculantGraph, circular_distance, edge_color
from .errors import GuardError

BRUTE_FORCE_MAX_N = 32


@dataclass(frozen=True)
class CliqueWitness:
    vertices: tuple[int, ...]
    color: int | None = None

    @property
    def size(self) -> int:
        return len(self.vertices)

    def is_clique_in(self, g: CirculantGraph) -> bool:
        vs = self.vertices
        return len(set(vs)) == len(vs) and all(g.adjacent(a, b) for a, b in combinations(vs, 2))

    def is_monochromatic_in(self, cert: ColoringCertificate) -> bool:
        """True iff every pair of vertices has edge color ``self.color`` under ``cert``."""
        vs = self.vertices
        if self.color is None or len(set(vs)) != len(vs):
            return False
        if any(not 0 <= v < cert.n for v in vs):
            return False
        return all(edge_color(cert, a, b) == self.color for a, b in combinations(vs, 2))

    def rotated(self, k: int, n: int) -> CliqueWitness:
        return CliqueWitness(tuple(sorted((v + k) % n for v in self.vertices)), self.color)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.vertices)) + "}"


def _kern(kernel: ModuleType | None) -> ModuleType:
    return _kernel.kernel if kernel is None else kernel


def has_clique(
    g: CirculantGraph,
    t: int,
    *,
    color: int | None = None,
    use_bound: bool = False,
    kernel: ModuleType | None = None,
) -> CliqueWitness | None:
    """A K_t of ``g`` through vertex 0, or None if ``g`` has no K_t at all.

    Candidates are branched in ascending vertex order, so the witness is the
    lexicographically first K_t containing 0.  ``use_bound`` enables greedy
    colouring bounds; it prunes harder but never changes the answer.
    """
    if t < 1:
        raise ValueError("clique size must be >= 1")
    if t > g.n:
        return None
    found = _kern(kernel).find_clique_through_zero(g.neighborhood_of_zero.bits, g.n, t, use_bound)
    if found is None:
        return None
    return CliqueWitness(tuple(found), color)


def max_clique_bounded(
    g: CirculantGraph, cap: int, *, use_bound: bool = False, kernel: ModuleType | None = None
) -> int:
    """``min(omega(g), cap)``; stops as soon as a K_cap is found."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    best = 1
    for t in range(2, cap + 1):
        if has_clique(g, t, use_bound=use_bound, kernel=kernel) is None:
            break
        best = t
    return best


def count_cliques_through_zero(g: CirculantGraph, t: int, *, kernel: ModuleType | None = None) -> int:
    """Exact number of K_t vertex sets of ``g`` that contain vertex 0."""
    if t < 2:
        raise ValueError("clique size must be >= 2")
    if t > g.n:
        return 0
    return int(_kern(kernel).count_cliques_through_zero(g.neighborhood_of_zero.bits, g.n, t))


def _guard(g: CirculantGraph) -> None:
    if g.n > BRUTE_FORCE_MAX_N:
        raise GuardError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got n={g.n}")


def _adjacency(g: CirculantGraph) -> list[list[bool]]:
    ds = set(g.distances)
    return [[i != j and circular_distance(i, j, g.n) in ds for j in range(g.n)] for i in range(g.n)]


def _all_pairs(adj: list[list[bool]], vs: tuple[int, ...]) -> bool:
    for a, b in combinations(vs, 2):
        if not adj[a][b]:
            return False
    return True


def brute_force_has_clique(g: CirculantGraph, t: int, *, color: int | None = None) -> CliqueWitness | None:
    """First K_t among all t-subsets of ``range(n)`` in lexicographic order."""
    _guard(g)
    if t < 1:
        raise ValueError("clique size must be >= 1")
    adj = _adjacency(g)
    for vs in combinations(range(g.n), t):
        if _all_pairs(adj, vs):
            return CliqueWitness(vs, color)
    return None


def brute_force_count_cliques(g: CirculantGraph, t: int) -> int:
    """Total number of K_t in ``g`` by exhaustive enumeration."""
    _guard(g)
    adj = _adjacency(g)
    return sum(1 for vs in combinations(range(g.n), t) if _all_pairs(adj, vs))
