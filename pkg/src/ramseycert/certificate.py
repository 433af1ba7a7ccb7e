"""Cyclic coloring certificates: data model, line format and built-in data.

A certificate on ``n`` vertices assigns every circular distance
``1..n//2`` to exactly one color, and binds color ``c`` to a clique size
``targets[c]`` that the color must avoid.  Colors and targets are paired
by position and numbered from 1 in text and reports, from 0 in code.

File format::

    # comment
    name r4_16
    n 163
    targets 4 16
    color 1 3 17 24 ...
    color 2 1 2 4 ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ParseError, StructureError, UnknownName

MIN_VERTICES = 3
MIN_COLORS = 2
MIN_TARGET = 2

DistanceSet = tuple[int, ...]


@dataclass(frozen=True)
class ColoringCertificate:
    n: int
    colors: tuple[DistanceSet, ...]
    targets: tuple[int, ...]
    name: str | None = field(default=None, compare=True)

    def __post_init__(self) -> None:
        # Normalise containers only; structural checks live in validate_structure.
        object.__setattr__(self, "colors", tuple(tuple(sorted(c)) for c in self.colors))
        object.__setattr__(self, "targets", tuple(self.targets))

    @property
    def m(self) -> int:
        return len(self.colors)

    @property
    def half(self) -> int:
        return self.n // 2

    def color_of_distance(self, d: int) -> int:
        """0-based color index of distance ``d``."""
        for c, ds in enumerate(self.colors):
            if d in ds:
                return c
        raise KeyError(d)

    def bound_text(self) -> str:
        return "R({}) >= {}".format(",".join(map(str, self.targets)), self.n + 1)

    def label(self) -> str:
        return self.name if self.name else "-"


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    value: int | None = None

    def __str__(self) -> str:
        return self.message


def validate_structure(cert: ColoringCertificate) -> list[Violation]:
    """Every way ``cert`` fails to be an m-color partition of ``1..n//2``.

    An empty list means the certificate is structurally valid.
    """
    out: list[Violation] = []
    n = cert.n
    if n < MIN_VERTICES:
        out.append(Violation("n_too_small", f"n={n} is below the minimum of {MIN_VERTICES}", n))
    if cert.m < MIN_COLORS:
        out.append(Violation("too_few_colors", f"{cert.m} color(s) given, need at least {MIN_COLORS}", cert.m))
    if len(cert.targets) != cert.m:
        out.append(
            Violation(
                "length_mismatch",
                f"{len(cert.targets)} targets for {cert.m} colors",
                len(cert.targets),
            )
        )
    for i, t in enumerate(cert.targets, 1):
        if t < MIN_TARGET:
            out.append(Violation("target_too_small", f"target {i} is {t}, must be >= {MIN_TARGET}", t))

    half = n // 2
    owner: dict[int, int] = {}
    for c, ds in enumerate(cert.colors, 1):
        prev = None
        for d in ds:
            if d == prev:
                out.append(Violation("duplicate", f"distance {d} repeated in color {c}", d))
                continue
            prev = d
            if not 1 <= d <= half:
                out.append(Violation("out_of_range", f"distance {d} in color {c} is outside 1..{half}", d))
                continue
            if d in owner:
                out.append(Violation("overlap", f"distance {d} is in both color {owner[d]} and color {c}", d))
                continue
            owner[d] = c
    for d in range(1, half + 1):
        if d not in owner:
            out.append(Violation("uncovered", f"distance {d} is not assigned to any color", d))
    return out


def check_structure(cert: ColoringCertificate) -> ColoringCertificate:
    """Return ``cert`` unchanged or raise StructureError listing every violation."""
    problems = validate_structure(cert)
    if problems:
        raise StructureError("; ".join(map(str, problems)))
    return cert


def _ints(tokens: Sequence[str], lineno: int) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        bad = next(t for t in tokens if not _is_int(t))
        raise ParseError(f"line {lineno}: non-integer token {bad!r}") from None


def _is_int(tok: str) -> bool:
    try:
        int(tok)
    except ValueError:
        return False
    return True


def parse_certificate(text: str) -> ColoringCertificate:
    """Parse certificate text and check that it is a valid partition.

    Raises ParseError for malformed lines and StructureError when the parsed
    color classes do not partition ``1..n//2`` or disagree with the targets.
    """
    name: str | None = None
    n: int | None = None
    targets: list[int] | None = None
    colors: list[list[int]] = []
    seen: set[str] = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        tokens = rest.split()
        if key == "color":
            if not tokens:
                raise ParseError(f"line {lineno}: color line without an index")
            idx = _ints(tokens[:1], lineno)[0]
            if idx != len(colors) + 1:
                if 1 <= idx <= len(colors):
                    raise ParseError(f"line {lineno}: duplicate color index {idx}")
                raise ParseError(f"line {lineno}: expected color {len(colors) + 1}, got color {idx}")
            ds = _ints(tokens[1:], lineno)
            seen_here: set[int] = set()
            for d in ds:
                if d in seen_here:
                    raise StructureError(f"line {lineno}: distance {d} repeated in color {idx}")
                seen_here.add(d)
            colors.append(ds)
            continue
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate {key!r} line")
        if key == "name":
            if not rest:
                raise ParseError(f"line {lineno}: empty name")
            name = rest
        elif key == "n":
            if len(tokens) != 1:
                raise ParseError(f"line {lineno}: 'n' takes exactly one integer")
            n = _ints(tokens, lineno)[0]
        elif key == "targets":
            if not tokens:
                raise ParseError(f"line {lineno}: 'targets' needs at least one integer")
            targets = _ints(tokens, lineno)
        else:
            raise ParseError(f"line {lineno}: unknown keyword {key!r}")
        seen.add(key)

    if n is None:
        raise ParseError("missing 'n' line")
    if targets is None:
        raise ParseError("missing 'targets' line")
    if not colors:
        raise ParseError("no 'color' lines")
    return check_structure(ColoringCertificate(n, tuple(map(tuple, colors)), tuple(targets), name))


def serialize_certificate(cert: ColoringCertificate) -> str:
    lines = []
    if cert.name:
        lines.append(f"name {cert.name}")
    lines.append(f"n {cert.n}")
    lines.append("targets " + " ".join(map(str, cert.targets)))
    for c, ds in enumerate(cert.colors, 1):
        lines.append(" ".join([f"color {c}", *map(str, sorted(ds))]))
    return "\n".join(lines) + "\n"


def from_assignment(n: int, assignment: Sequence[int], targets: Iterable[int], name: str | None = None) -> ColoringCertificate:
    """Build a certificate from ``assignment[d-1]`` = 0-based color of distance ``d``."""
    targets = tuple(targets)
    colors: list[list[int]] = [[] for _ in targets]
    for d, c in enumerate(assignment, 1):
        colors[c].append(d)
    return ColoringCertificate(n, tuple(map(tuple, colors)), targets, name)


def two_color(n: int, red: Iterable[int], targets: tuple[int, int], name: str | None = None) -> ColoringCertificate:
    """Certificate whose second color is the complement of ``red`` in ``1..n//2``."""
    red = tuple(sorted(red))
    reds = set(red)
    blue = tuple(d for d in range(1, n // 2 + 1) if d not in reds)
    return ColoringCertificate(n, (red, blue), targets, name)


# Two-color entries list the first color only; three-color entries list all.
_TWO_COLOR = {
    "r4_16": (163, (4, 16), (
        3, 17, 24, 25, 27, 37, 44, 45, 50, 53, 54, 55, 57, 63, 64, 65, 73, 78, 79, 80,
    )),
    "r5_11": (170, (5, 11), (
        4, 5, 6, 7, 12, 17, 18, 19, 25, 26, 27, 28, 33, 36, 41, 42, 43, 44, 49, 53, 54,
        55, 56, 57, 58, 59, 60, 65, 69, 73, 77, 81, 85,
    )),
    "r5_12": (190, (5, 12), (
        1, 2, 3, 5, 8, 11, 13, 18, 20, 22, 23, 27, 28, 33, 34, 37, 38, 41, 42, 43, 47,
        48, 49, 53, 54, 55, 58, 59, 62, 65, 71, 73, 74, 81, 83, 93, 95,
    )),
    "r5_13": (212, (5, 13), (
        2, 4, 5, 13, 15, 16, 17, 20, 22, 25, 28, 35, 36, 39, 42, 43, 46, 48, 49, 50,
        54, 58, 59, 60, 61, 64, 65, 68, 69, 73, 76, 79, 80, 86, 88, 89, 91, 95, 100, 106,
    )),
    "r5_14": (238, (5, 14), (
        3, 8, 9, 11, 12, 13, 15, 17, 20, 21, 25, 27, 32, 36, 37, 42, 45, 49, 52, 54,
        58, 59, 60, 61, 67, 68, 71, 72, 74, 76, 83, 88, 89, 92, 93, 98, 99, 100, 102, 107,
        108, 119,
    )),
}

_MULTI_COLOR = {
    "r3_3_9": (117, (3, 3, 9), (
        (1, 3, 7, 11, 16, 26, 36, 38, 44, 46, 48, 56),
        (19, 23, 24, 25, 28, 29, 30, 31, 32, 33, 34, 37, 45),
        (2, 4, 5, 6, 8, 9, 10, 12, 13, 14, 15, 17, 18, 20, 21, 22, 27, 35, 39,
         40, 41, 42, 43, 47, 49, 50, 51, 52, 53, 54, 55, 57, 58),
    )),
    "r3_3_10": (140, (3, 3, 10), (
        (4, 6, 17, 19, 22, 24, 31, 49, 51, 56, 64, 65, 67),
        (1, 3, 16, 18, 29, 35, 37, 42, 46, 48, 54, 59, 61, 63, 68),
        (2, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 20, 21, 23, 25, 26, 27, 28, 30,
         32, 33, 34, 36, 38, 39, 40, 41, 43, 44, 45, 47, 50, 52, 53, 55, 57, 58, 60, 62, 66,
         69, 70),
    )),
    "r3_3_11": (157, (3, 3, 11), (
        (3, 4, 16, 22, 24, 30, 36, 45, 51, 57, 62, 63, 68, 74),
        (6, 7, 9, 10, 23, 26, 28, 31, 39, 42, 50, 53, 58, 61, 66, 69, 77),
        (1, 2, 5, 8, 11, 12, 13, 14, 15, 17, 18, 19, 20, 21, 25, 27, 29, 32, 33,
         34, 35, 37, 38, 40, 41, 43, 44, 46, 47, 48, 49, 52, 54, 55, 56, 59, 60, 64, 65, 67,
         70, 71, 72, 73, 75, 76, 78),
    )),
}

# The r3_3_10 classes as printed on n=140 contain monochromatic triangles in
# colors 1 and 2 (e.g. {0,6,73}); on n=141 they are a valid certificate for
# R(3,3,10) >= 142.  Both readings are kept.
_MULTI_COLOR["r3_3_10_n141"] = (141,) + _MULTI_COLOR["r3_3_10"][1:]

BUILTIN_NAMES = ("r4_16", "r5_11", "r5_12", "r5_13", "r5_14", "r3_3_9", "r3_3_10", "r3_3_11")
EXTRA_BUILTIN_NAMES = ("r3_3_10_n141",)


def builtin_certificate(name: str) -> ColoringCertificate:
    """A built-in certificate by name (BUILTIN_NAMES or EXTRA_BUILTIN_NAMES)."""
    if name in _TWO_COLOR:
        n, targets, red = _TWO_COLOR[name]
        return two_color(n, red, targets, name)
    if name in _MULTI_COLOR:
        n, targets, colors = _MULTI_COLOR[name]
        return ColoringCertificate(n, colors, targets, name)
    raise UnknownName(f"unknown built-in certificate {name!r}; choose from {', '.join(BUILTIN_NAMES + EXTRA_BUILTIN_NAMES)}")
