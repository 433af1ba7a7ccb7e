"""Seeded tabu search for cyclic colorings with no forbidden cliques.

The state assigns every distance ``1..n//2`` a color.  Its score is the
number of monochromatic forbidden cliques through vertex 0, summed over
colors; by vertex-transitivity score 0 means the coloring is good.  A move
recolors one distance.
"""

from __future__ import annotations

import logging
import random
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from types import ModuleType
from typing import Callable, Sequence

from . import _kernel
from .certificate import ColoringCertificate, from_assignment
from .verifier import verify

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    targets: tuple[int, ...]
    seed: int = 0
    max_iters: int = 10_000
    restarts: int = 1
    tabu_tenure: int | None = None  # None: max(1, (n // 2) // 4)
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "targets", tuple(self.targets))
        if self.n < 3:
            raise ValueError("n must be >= 3")
        if len(self.targets) < 2:
            raise ValueError("need at least two targets")
        if any(t < 2 for t in self.targets):
            raise ValueError("all targets must be >= 2")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.tabu_tenure is not None and self.tabu_tenure < 0:
            raise ValueError("tabu_tenure must be >= 0")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")

    @property
    def tenure(self) -> int:
        if self.tabu_tenure is not None:
            return self.tabu_tenure
        return max(1, (self.n // 2) // 4)


@dataclass(frozen=True)
class Move:
    distance: int
    old_color: int
    new_color: int
    score_before: int
    score_after: int
    aspirated: bool = False


def _dmask(n: int, d: int) -> int:
    return (1 << d) | (1 << (n - d))


class SearchState:
    """Assignment, per-color clique counts and tabu list for one restart.

    ``assignment[d - 1]`` is the 0-based color of distance ``d``.
    """

    def __init__(
        self,
        n: int,
        targets: Sequence[int],
        assignment: Sequence[int],
        *,
        tenure: int = 1,
        rng: random.Random | None = None,
        kernel: ModuleType | None = None,
    ) -> None:
        self.n = n
        self.targets = tuple(targets)
        self.m = len(self.targets)
        if len(assignment) != n // 2:
            raise ValueError(f"assignment must color all {n // 2} distances")
        if any(not 0 <= c < self.m for c in assignment):
            raise ValueError("assignment uses a color outside 0..m-1")
        self.assignment = list(assignment)
        self.tenure = tenure
        self.rng = rng
        self.kernel = _kernel.kernel if kernel is None else kernel
        self.masks = [0] * self.m
        for d, c in enumerate(self.assignment, 1):
            self.masks[c] |= _dmask(n, d)
        self.counts = [self._count(c, self.masks[c]) for c in range(self.m)]
        self.score = sum(self.counts)
        self.best_score = self.score
        self.best_assignment = list(self.assignment)
        # (distance, color) -> iteration until which moving distance back to color is forbidden
        self.tabu: dict[tuple[int, int], int] = {}
        self.iteration = 0

    @classmethod
    def random(
        cls,
        n: int,
        targets: Sequence[int],
        rng: random.Random,
        *,
        tenure: int = 1,
        kernel: ModuleType | None = None,
    ) -> SearchState:
        m = len(targets)
        assignment = [rng.randrange(m) for _ in range(n // 2)]
        return cls(n, targets, assignment, tenure=tenure, rng=rng, kernel=kernel)

    def _count(self, color: int, mask: int) -> int:
        return int(self.kernel.count_cliques_through_zero(mask, self.n, self.targets[color]))

    def certificate(self, name: str | None = None) -> ColoringCertificate:
        return from_assignment(self.n, self.assignment, self.targets, name)

    def _candidates(self) -> list[tuple[int, int, int, int, int]]:
        """Every recoloring as (new score, d, new color, count after on old, count after on new)."""
        out = []
        n = self.n
        for d in range(1, n // 2 + 1):
            old = self.assignment[d - 1]
            dm = _dmask(n, d)
            removed = self._count(old, self.masks[old] & ~dm)
            for new in range(self.m):
                if new == old:
                    continue
                added = self._count(new, self.masks[new] | dm)
                score = self.score - self.counts[old] - self.counts[new] + removed + added
                out.append((score, d, new, removed, added))
        return out

    def propose_and_apply_move(self) -> Move:
        """Apply the best admissible recoloring and make its reverse tabu.

        Ties go to the smallest distance, then the smallest new color.  A
        tabu move is admissible when it beats the best score of this state.
        If nothing is admissible the oldest tabu entry is dropped and the
        choice is repeated.
        """
        if self.m < 2:
            raise ValueError("need at least two colors to move")
        it = self.iteration
        for key in [k for k, until in self.tabu.items() if until <= it]:
            del self.tabu[key]
        candidates = sorted(self._candidates())
        while True:
            for score, d, new, removed, added in candidates:
                tabu = self.tabu.get((d, new), -1) > it
                if not tabu or score < self.best_score:
                    return self._apply(d, new, score, removed, added, aspirated=tabu)
            # everything tabu and nothing aspirates
            oldest = next(iter(self.tabu))
            del self.tabu[oldest]

    def recolor(self, d: int, new: int) -> Move:
        """Apply one recoloring unconditionally, ignoring the tabu list's verdict."""
        old = self.assignment[d - 1]
        if new == old or not 0 <= new < self.m:
            raise ValueError(f"cannot recolor distance {d} from {old} to {new}")
        dm = _dmask(self.n, d)
        removed = self._count(old, self.masks[old] & ~dm)
        added = self._count(new, self.masks[new] | dm)
        score = self.score - self.counts[old] - self.counts[new] + removed + added
        return self._apply(d, new, score, removed, added, aspirated=False)

    def _apply(self, d: int, new: int, score: int, removed: int, added: int, *, aspirated: bool) -> Move:
        old = self.assignment[d - 1]
        dm = _dmask(self.n, d)
        before = self.score
        self.assignment[d - 1] = new
        self.masks[old] &= ~dm
        self.masks[new] |= dm
        self.counts[old] = removed
        self.counts[new] = added
        self.score = score
        self.iteration += 1
        if self.tenure > 0:
            self.tabu.pop((d, old), None)
            self.tabu[(d, old)] = self.iteration + self.tenure
        if score < self.best_score:
            self.best_score = score
            self.best_assignment = list(self.assignment)
        return Move(d, old, new, before, score, aspirated)


def objective(state: SearchState) -> int:
    """Violation count of ``state`` recomputed from scratch."""
    return sum(state._count(c, state.masks[c]) for c in range(state.m))


def objective_of(n: int, assignment: Sequence[int], targets: Sequence[int], kernel: ModuleType | None = None) -> int:
    return objective(SearchState(n, targets, assignment, kernel=kernel))


@dataclass
class SearchResult:
    certificate: ColoringCertificate | None
    log: list[str] = field(default_factory=list)
    iterations: int = 0

    @property
    def found(self) -> bool:
        return self.certificate is not None


class _Stop:
    """Stop signal plus a single-slot result cell; the first writer wins."""

    def __init__(self) -> None:
        self.event = threading.Event()
        self._lock = threading.Lock()
        self.winner: tuple[int, ColoringCertificate] | None = None

    def offer(self, worker: int, cert: ColoringCertificate) -> None:
        with self._lock:
            if self.winner is None:
                self.winner = (worker, cert)
                self.event.set()


def _worker(
    config: SearchConfig,
    worker: int,
    restarts: Sequence[int],
    stop: _Stop,
    emit: Callable[[str], None],
    kernel: ModuleType | None,
) -> int:
    rng = random.Random(config.seed + worker)
    best = None
    iterations = 0
    for r in restarts:
        if stop.event.is_set():
            break
        state = SearchState.random(config.n, config.targets, rng, tenure=config.tenure, kernel=kernel)
        if best is None or state.score < best:
            best = state.score
        emit(f"iter=0 restart={r} score={state.score} best={best}")
        restart_best = state.score
        while state.score > 0 and state.iteration < config.max_iters:
            if stop.event.is_set():
                return iterations
            state.propose_and_apply_move()
            iterations += 1
            if state.score < restart_best:
                restart_best = state.score
                best = min(best, restart_best)
                emit(f"iter={state.iteration} restart={r} score={state.score} best={best}")
        if state.score == 0:
            stop.offer(worker, state.certificate())
            return iterations
    return iterations


def search(
    config: SearchConfig,
    *,
    on_log: Callable[[str], None] | None = None,
    kernel: ModuleType | None = None,
) -> SearchResult:
    """Run ``config.restarts`` tabu runs of up to ``config.max_iters`` moves each.

    Returns the first coloring reaching score 0, re-verified before it is
    returned, or no certificate once the budget is spent.  With one worker
    the log and result depend only on ``config``.  With several, worker ``w``
    seeds its RNG with ``seed + w`` and takes every ``workers``-th restart;
    which certificate wins is then timing dependent.
    """
    lines: list[str] = []
    lock = threading.Lock()

    def emit(line: str) -> None:
        with lock:
            lines.append(line)
            if on_log is not None:
                on_log(line)

    stop = _Stop()
    W = min(config.workers, config.restarts)
    if W == 1:
        total = _worker(config, 0, range(config.restarts), stop, emit, kernel)
    else:
        with ThreadPoolExecutor(max_workers=W) as pool:
            futures = [
                pool.submit(_worker, config, w, range(w, config.restarts, W), stop, emit, kernel)
                for w in range(W)
            ]
            total = sum(f.result() for f in futures)

    cert = None
    if stop.winner is not None:
        cert = stop.winner[1]
        report = verify(cert)
        if not report.valid:
            raise RuntimeError("search produced a certificate that fails verification")
    emit("result=found" if cert is not None else "result=exhausted")
    log.debug("search finished after %d moves: %s", total, lines[-1])
    return SearchResult(cert, lines, total)
