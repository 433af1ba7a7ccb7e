"""Check every color of a certificate and report the Ramsey bound it proves.

A coloring of K_n in which color c has no K_{t_c} shows
R(t_1, ..., t_m) >= n + 1.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from math import gcd
from types import ModuleType

from .certificate import ColoringCertificate, check_structure
from .circulant import color_graph
from .clique import BRUTE_FORCE_MAX_N, CliqueWitness, brute_force_has_clique, has_clique
from .errors import GuardError


class Verdict(Enum):
    CLEAN = "CLEAN"
    VIOLATED = "VIOLATED"
    UNCHECKED = "UNCHECKED"


@dataclass(frozen=True)
class ColorVerdict:
    color: int
    target: int
    verdict: Verdict
    witness: CliqueWitness | None = None
    elapsed_ms: float = 0.0

    @property
    def clean(self) -> bool:
        return self.verdict is Verdict.CLEAN

    def line(self) -> str:
        if self.verdict is Verdict.CLEAN:
            return f"color {self.color}: CLEAN (no K{self.target})"
        if self.verdict is Verdict.VIOLATED:
            return f"color {self.color}: VIOLATED K{self.target} = {self.witness}"
        return f"color {self.color}: UNCHECKED (fail-fast)"


@dataclass(frozen=True)
class VerificationReport:
    name: str | None
    n: int
    targets: tuple[int, ...]
    colors: tuple[ColorVerdict, ...]

    @property
    def valid(self) -> bool:
        return all(c.clean for c in self.colors)

    @property
    def proven_bound(self) -> str | None:
        if not self.valid:
            return None
        return "R({}) >= {}".format(",".join(map(str, self.targets)), self.n + 1)

    @property
    def elapsed_ms(self) -> float:
        return sum(c.elapsed_ms for c in self.colors)

    @property
    def witnesses(self) -> list[CliqueWitness]:
        return [c.witness for c in self.colors if c.witness is not None]

    def pattern(self) -> tuple[Verdict, ...]:
        return tuple(c.verdict for c in self.colors)

    def text(self) -> str:
        lines = [
            f"certificate: {self.name or '-'}",
            f"n: {self.n}",
            "targets: " + " ".join(map(str, self.targets)),
        ]
        lines += [c.line() for c in self.colors]
        if self.valid:
            lines.append(f"RESULT: VALID — proves {self.proven_bound}")
        else:
            lines.append("RESULT: INVALID")
        return "\n".join(lines) + "\n"

    def summary(self) -> str:
        """One ``key=value`` line: name, valid, bound, ms."""
        bound = self.proven_bound
        bound_field = '"' + bound.replace(" ", "") + '"' if bound else "none"
        return (
            f"name={self.name or '-'} valid={'true' if self.valid else 'false'} "
            f"bound={bound_field} ms={self.elapsed_ms:.0f}"
        )


def _check_color(cert: ColoringCertificate, color: int, oracle: bool, use_bound: bool, kernel: ModuleType | None) -> ColorVerdict:
    t = cert.targets[color - 1]
    g = color_graph(cert, color)
    start = time.perf_counter()
    if oracle:
        w = brute_force_has_clique(g, t, color=color)
    else:
        w = has_clique(g, t, color=color, use_bound=use_bound, kernel=kernel)
    ms = (time.perf_counter() - start) * 1000.0
    if w is None:
        return ColorVerdict(color, t, Verdict.CLEAN, None, ms)
    return ColorVerdict(color, t, Verdict.VIOLATED, w, ms)


def _run(
    cert: ColoringCertificate,
    *,
    oracle: bool,
    fail_fast: bool,
    use_bound: bool,
    workers: int,
    kernel: ModuleType | None,
) -> VerificationReport:
    check_structure(cert)
    # Smallest targets first: cheapest checks, earliest failures.
    order = sorted(range(1, cert.m + 1), key=lambda c: (cert.targets[c - 1], c))
    results: dict[int, ColorVerdict] = {}
    if workers > 1 and not fail_fast:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {c: pool.submit(_check_color, cert, c, oracle, use_bound, kernel) for c in order}
            results = {c: f.result() for c, f in futures.items()}
    else:
        for c in order:
            results[c] = _check_color(cert, c, oracle, use_bound, kernel)
            if fail_fast and not results[c].clean:
                break
    verdicts = tuple(
        results.get(c) or ColorVerdict(c, cert.targets[c - 1], Verdict.UNCHECKED)
        for c in range(1, cert.m + 1)
    )
    return VerificationReport(cert.name, cert.n, cert.targets, verdicts)


def verify(
    cert: ColoringCertificate,
    *,
    fail_fast: bool = False,
    use_bound: bool = False,
    workers: int = 1,
    kernel: ModuleType | None = None,
) -> VerificationReport:
    """Verify every color of ``cert`` with the symmetry-reduced clique search.

    Raises StructureError if ``cert`` is not a valid partition.  With
    ``workers > 1`` colors are checked on threads; the report is identical.
    """
    return _run(cert, oracle=False, fail_fast=fail_fast, use_bound=use_bound, workers=workers, kernel=kernel)


def verify_with_oracle(cert: ColoringCertificate, *, fail_fast: bool = False) -> VerificationReport:
    """Like ``verify`` but every clique decision is made by exhaustive enumeration."""
    if cert.n > BRUTE_FORCE_MAX_N:
        raise GuardError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}, got n={cert.n}")
    return _run(cert, oracle=True, fail_fast=fail_fast, use_bound=False, workers=1, kernel=None)


def apply_multiplier(cert: ColoringCertificate, u: int) -> ColoringCertificate:
    """Image of ``cert`` under ``x -> u*x``; ``u`` must be a unit mod n.

    The color graphs of the image are isomorphic to the originals, so the
    verdict pattern is unchanged.
    """
    n = cert.n
    if gcd(u, n) != 1:
        raise ValueError(f"{u} is not coprime to {n}")

    def reduce(d: int) -> int:
        r = (u * d) % n
        return min(r, n - r)

    colors = tuple(tuple(sorted(reduce(d) for d in ds)) for ds in cert.colors)
    return ColoringCertificate(n, colors, cert.targets, cert.name)
