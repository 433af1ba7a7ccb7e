"""Circulant graphs on Z_n and the dense vertex sets they are built from.

Vertices are numbered ``0..n-1``.  Only the neighbourhood of vertex 0 is
stored; the neighbourhood of ``v`` is that set rotated by ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .certificate import ColoringCertificate


@dataclass(frozen=True)
class VertexSet:
    """A subset of ``range(n)`` stored as an int bitmask (bit v <=> vertex v)."""

    n: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitmask has members outside [0, {self.n})")

    @classmethod
    def of(cls, n: int, vertices: Iterable[int]) -> VertexSet:
        bits = 0
        for v in vertices:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v} outside [0, {n})")
            bits |= 1 << v
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> VertexSet:
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __bool__(self) -> bool:
        return self.bits != 0

    def _same_n(self, other: VertexSet) -> None:
        if self.n != other.n:
            raise ValueError(f"vertex sets over different n ({self.n} vs {other.n})")

    def __and__(self, other: VertexSet) -> VertexSet:
        self._same_n(other)
        return VertexSet(self.n, self.bits & other.bits)

    def __or__(self, other: VertexSet) -> VertexSet:
        self._same_n(other)
        return VertexSet(self.n, self.bits | other.bits)

    def __sub__(self, other: VertexSet) -> VertexSet:
        self._same_n(other)
        return VertexSet(self.n, self.bits & ~other.bits)

    def rotate(self, k: int) -> VertexSet:
        """The set ``{(u + k) mod n : u in self}``."""
        n = self.n
        k %= n
        if not k:
            return self
        mask = (1 << n) - 1
        return VertexSet(n, ((self.bits << k) | (self.bits >> (n - k))) & mask)

    def to_list(self) -> list[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {{{', '.join(map(str, self))}}})"


def circular_distance(i: int, j: int, n: int) -> int:
    """``min(|i-j|, n-|i-j|)`` for distinct vertices ``i, j`` of Z_n."""
    if i == j:
        raise ValueError("circular distance is undefined for i == j")
    if not (0 <= i < n and 0 <= j < n):
        raise ValueError(f"vertices must lie in [0, {n})")
    a = abs(i - j)
    return min(a, n - a)


@dataclass(frozen=True)
class CirculantGraph:
    n: int
    distances: tuple[int, ...]
    neighborhood_of_zero: VertexSet = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ds = tuple(sorted(set(self.distances)))
        half = self.n // 2
        for d in ds:
            if not 1 <= d <= half:
                raise ValueError(f"distance {d} outside 1..{half} for n={self.n}")
        object.__setattr__(self, "distances", ds)
        bits = 0
        for d in ds:
            bits |= (1 << d) | (1 << (self.n - d))
        object.__setattr__(self, "neighborhood_of_zero", VertexSet(self.n, bits))

    def neighborhood(self, v: int) -> VertexSet:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} outside [0, {self.n})")
        return self.neighborhood_of_zero.rotate(v)

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and circular_distance(i, j, self.n) in self.distances

    def induced_neighbors(self, v: int, within: VertexSet) -> VertexSet:
        return self.neighborhood(v) & within

    def degree(self) -> int:
        return len(self.neighborhood_of_zero)


def neighborhood(g: CirculantGraph, v: int) -> VertexSet:
    return g.neighborhood(v)


def induced_neighbors(g: CirculantGraph, v: int, within: VertexSet) -> VertexSet:
    return g.induced_neighbors(v, within)


def edge_color(cert: ColoringCertificate, i: int, j: int) -> int:
    """1-based color of edge ``{i, j}`` under ``cert``."""
    return cert.color_of_distance(circular_distance(i, j, cert.n)) + 1


def color_graph(cert: ColoringCertificate, color: int) -> CirculantGraph:
    """Circulant graph of the 1-based ``color`` of ``cert``."""
    if not 1 <= color <= cert.m:
        raise ValueError(f"color {color} outside 1..{cert.m}")
    return CirculantGraph(cert.n, cert.colors[color - 1])
