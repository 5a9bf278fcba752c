"""Search-space primitives: bounds, populations, seeded RNG streams, and the
instrumentation metrics (diversity, convergence rate, stagnation detection).

All container types are treated as immutable after construction; position
arrays are marked read-only so they can be shared between runs and threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np


class ConfigurationError(ValueError):
    """Invalid algorithm or experiment configuration."""


class BoundsError(ConfigurationError):
    """Malformed search-space bounds."""


class UnknownFunctionError(KeyError):
    """Lookup of a name that is not in the benchmark registry."""


def rng_stream(seed: int, run_index: int = 0) -> np.random.Generator:
    """Independent generator for the pair (seed, run_index).

    The same pair always yields the same draw sequence, independent of host,
    thread schedule, or how many other streams exist.  Streams for different
    run indices are statistically independent (SeedSequence spawn keys).
    """
    return np.random.default_rng(
        np.random.SeedSequence(int(seed) & 0xFFFFFFFFFFFFFFFF, spawn_key=(int(run_index),))
    )


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class Bounds:
    """Per-dimension box constraints (low < high in every dimension)."""

    low: np.ndarray
    high: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "low", _readonly(np.atleast_1d(self.low)))
        object.__setattr__(self, "high", _readonly(np.atleast_1d(self.high)))
        if self.low.ndim != 1 or self.low.shape != self.high.shape or self.low.size == 0:
            raise BoundsError("bounds must be two 1-d arrays of equal, nonzero length")
        if not (np.isfinite(self.low).all() and np.isfinite(self.high).all()):
            raise BoundsError("bounds must be finite")
        if not (self.low < self.high).all():
            raise BoundsError("every dimension needs low < high")

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[float, float]]) -> "Bounds":
        pairs = list(pairs)
        return cls(np.array([p[0] for p in pairs], float),
                   np.array([p[1] for p in pairs], float))

    @property
    def dimension(self) -> int:
        return self.low.size

    def pairs(self) -> list[tuple[float, float]]:
        return list(zip(self.low.tolist(), self.high.tolist()))

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x, float)
        return bool((x >= self.low).all() and (x <= self.high).all())

    def sample(self, rng: np.random.Generator) -> np.ndarray:
        return rng.uniform(self.low, self.high)


@dataclass(frozen=True)
class Individual:
    """A candidate solution with its cached objective value (lower is better)."""

    position: np.ndarray
    fitness: float

    def __post_init__(self):
        object.__setattr__(self, "position", _readonly(self.position))
        object.__setattr__(self, "fitness", float(self.fitness))


@dataclass
class Population:
    members: list[Individual]
    bounds: Bounds
    generation: int = 0

    def __post_init__(self):
        if not self.members:
            raise ValueError("population must be nonempty")
        dim = self.members[0].position.size
        if any(m.position.size != dim for m in self.members):
            raise ValueError("all members must share one dimension")
        if dim != self.bounds.dimension:
            raise ValueError("member dimension does not match bounds")

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def dimension(self) -> int:
        return self.members[0].position.size

    def positions(self) -> np.ndarray:
        return np.array([m.position for m in self.members])

    def fitnesses(self) -> np.ndarray:
        return np.array([m.fitness for m in self.members])

    def best(self) -> Individual:
        return min(self.members, key=lambda m: m.fitness)


def initialize_population(size: int, bounds: Bounds, rng: np.random.Generator,
                          objective: Callable[[np.ndarray], float]) -> Population:
    """Draw `size` uniform individuals inside `bounds` and evaluate each once."""
    if size < 4:
        raise ConfigurationError(
            f"population size must be at least 4, got {size}")
    if not isinstance(bounds, Bounds):
        raise BoundsError("bounds must be a Bounds instance")
    members = []
    for _ in range(size):
        x = bounds.sample(rng)
        members.append(Individual(x, objective(x)))
    return Population(members, bounds, generation=0)


def diversity(population: Population) -> float:
    """Mean pairwise Euclidean distance over all unordered member pairs."""
    if isinstance(population, Population):
        x = population.positions()
    else:
        x = np.asarray(population, float)
    n = x.shape[0]
    if n == 0:
        raise ValueError("diversity of an empty population is undefined")
    if n == 1:
        return 0.0
    diff = x[:, None, :] - x[None, :, :]
    d = np.sqrt((diff * diff).sum(axis=-1))
    iu = np.triu_indices(n, k=1)
    return float(d[iu].mean())


def convergence_rate(history: Sequence[float], generation: int) -> float:
    """Change in best fitness at `generation`: history[g] - history[g-1].

    Nonpositive whenever the history is nonincreasing (greedy selection).
    """
    if generation < 1 or generation >= len(history):
        raise ValueError(
            f"generation {generation} out of range for history of length {len(history)}")
    return float(history[generation]) - float(history[generation - 1])


def has_converged(history: Sequence[float], stagnation_limit: int,
                  tol: float = 0.0) -> bool:
    """True iff the last `stagnation_limit` history entries all equal the final one.

    Equality is exact by default; `tol` adds an optional absolute tolerance.
    Returns False while the history is still shorter than the limit.
    """
    if stagnation_limit < 1:
        raise ValueError("stagnation_limit must be a positive integer")
    if len(history) < stagnation_limit:
        return False
    tail = history[-stagnation_limit:]
    last = tail[-1]
    if tol == 0.0:
        return all(v == last for v in tail)
    return all(abs(v - last) <= tol for v in tail)


def clamp_to_bounds(x: np.ndarray, bounds: Bounds) -> np.ndarray:
    """Project `x` componentwise into the box; interior points pass unchanged."""
    x = np.asarray(x, float)
    if x.shape != bounds.low.shape:
        raise ValueError(
            f"dimension mismatch: point has {x.size}, bounds have {bounds.dimension}")
    return np.clip(x, bounds.low, bounds.high)
