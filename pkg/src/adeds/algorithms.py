"""The two optimizers.

`run_de` is the classic DE/rand/1/bin baseline with fixed F and CR.  `run_adeds`
is the adaptive variant: F decays linearly to zero, CR ramps linearly from
zero, trial vectors pull the target toward two random neighbors, the
generation-best member is refined by a bounded local descent each generation,
and runs stop early once the best fitness has stagnated.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .core import (Bounds, ConfigurationError, Individual, Population,
                   clamp_to_bounds, diversity, has_converged,
                   initialize_population)

TERMINATED_MAX_GENERATIONS = "max_generations"
TERMINATED_STAGNATION = "stagnation"

# default stagnation window; a run stops once the best fitness is bit-identical
# for this many consecutive generations
DEFAULT_STAGNATION_LIMIT = 25
DEFAULT_LOCAL_SEARCH_BUDGET = 150


@dataclass
class DeParams:
    """Classic DE configuration; F and CR stay fixed for the whole run."""

    population_size: int = 50
    max_generations: int = 100
    F: float = 0.5
    CR: float = 0.9

    def __post_init__(self):
        if self.population_size < 4:
            raise ConfigurationError("DE needs a population of at least 4")
        if self.max_generations < 1:
            raise ConfigurationError("max_generations must be positive")
        if not 0.0 < self.F <= 2.0:
            raise ConfigurationError(f"F must lie in (0, 2], got {self.F}")
        if not 0.0 <= self.CR <= 1.0:
            raise ConfigurationError(f"CR must lie in [0, 1], got {self.CR}")


@dataclass
class AdedsParams:
    """Adaptive-variant configuration.

    `stagnation_limit=None` resolves to min(25, max_generations).  Crossover
    defaults to off, matching the trial-generation loop that evaluates the
    pulled vector directly; enabling it mixes trial and parent componentwise
    under the ramping CR schedule.  Local search refines the generation-best
    member; `local_search_per_trial` instead refines every trial before
    selection (much slower, kept for fidelity experiments).
    """

    population_size: int = 50
    max_generations: int = 100
    initial_mutation_rate: float = 1.0
    initial_crossover_rate: float = 0.9
    stagnation_limit: int | None = None
    local_search_enabled: bool = True
    crossover_enabled: bool = False
    local_search_budget: int = DEFAULT_LOCAL_SEARCH_BUDGET
    local_search_per_trial: bool = False

    def __post_init__(self):
        if self.population_size < 4:
            raise ConfigurationError("ADEDS needs a population of at least 4")
        if self.max_generations < 1:
            raise ConfigurationError("max_generations must be positive")
        if not 0.0 < self.initial_mutation_rate <= 2.0:
            raise ConfigurationError(
                f"initial_mutation_rate must lie in (0, 2], got {self.initial_mutation_rate}")
        if not 0.0 <= self.initial_crossover_rate <= 1.0:
            raise ConfigurationError(
                f"initial_crossover_rate must lie in [0, 1], got {self.initial_crossover_rate}")
        if self.stagnation_limit is None:
            self.stagnation_limit = min(DEFAULT_STAGNATION_LIMIT, self.max_generations)
        if not 1 <= self.stagnation_limit <= self.max_generations:
            raise ConfigurationError(
                "stagnation_limit must lie in [1, max_generations], "
                f"got {self.stagnation_limit}")
        if self.local_search_budget < 1:
            raise ConfigurationError("local_search_budget must be positive")


@dataclass
class RunResult:
    """Outcome of one optimization run, with per-generation instrumentation."""

    best_position: np.ndarray
    best_fitness: float
    history: list[float]
    diversity_history: list[float]
    generations_executed: int
    evaluations_used: int
    terminated_by: str

    def final_convergence_rate(self) -> float:
        if len(self.history) < 2:
            return 0.0
        return self.history[-1] - self.history[-2]


def adaptive_mutation_rate(generation: int, max_generations: int,
                           initial_mutation_rate: float) -> float:
    """Linearly decaying mutation factor: F0 * (1 - g/G)."""
    if not 0 <= generation <= max_generations:
        raise ValueError(
            f"generation {generation} outside [0, {max_generations}]")
    return initial_mutation_rate * (1.0 - generation / max_generations)


def adaptive_crossover_rate(generation: int, max_generations: int,
                            initial_crossover_rate: float) -> float:
    """Linearly ramping crossover rate: CR0 * (g/G)."""
    if not 0 <= generation <= max_generations:
        raise ValueError(
            f"generation {generation} outside [0, {max_generations}]")
    return initial_crossover_rate * (generation / max_generations)


def de_mutation(population: Population, target_index: int, F: float,
                rng: np.random.Generator) -> np.ndarray:
    """rand/1 donor vector: x_r1 + F * (x_r2 - x_r3), clamped to bounds.

    r1, r2, r3 are distinct from each other and from the target index.
    """
    n = population.size
    if n < 4:
        raise ConfigurationError("rand/1 mutation needs a population of at least 4")
    if not 0 <= target_index < n:
        raise ValueError(f"target index {target_index} out of range")
    candidates = [j for j in range(n) if j != target_index]
    r1, r2, r3 = rng.choice(candidates, size=3, replace=False)
    m = population.members
    v = m[r1].position + F * (m[r2].position - m[r3].position)
    return clamp_to_bounds(v, population.bounds)


def binomial_crossover(target: np.ndarray, trial: np.ndarray, cr: float,
                       rng: np.random.Generator) -> np.ndarray:
    """Independent per-component Bernoulli(CR) mix of trial and target.

    No forced trial component: with CR = 0 the target is returned unchanged.
    """
    target = np.asarray(target, float)
    trial = np.asarray(trial, float)
    if target.shape != trial.shape:
        raise ValueError("target and trial must share a dimension")
    if not 0.0 <= cr <= 1.0:
        raise ValueError(f"CR must lie in [0, 1], got {cr}")
    mask = rng.random(target.size) < cr
    return np.where(mask, trial, target)


def adeds_trial(population: Population, index: int, F: float,
                rng: np.random.Generator) -> np.ndarray:
    """Neighbor-attraction trial: x_i + F*(n1 - x_i) + F*(n2 - x_i), clamped.

    The two neighbors are distinct from each other; either may coincide with
    the target, in which case that pull term vanishes.
    """
    n = population.size
    if n < 3:
        raise ConfigurationError("trial generation needs a population of at least 3")
    if not 0 <= index < n:
        raise ValueError(f"index {index} out of range")
    n1 = int(rng.integers(0, n))
    n2 = int(rng.integers(0, n - 1))
    if n2 >= n1:
        n2 += 1
    m = population.members
    x = m[index].position
    v = x + F * (m[n1].position - x) + F * (m[n2].position - x)
    return clamp_to_bounds(v, population.bounds)


class _BudgetExhausted(Exception):
    pass


def _refine(x0, objective, bounds: Bounds, budget: int):
    """Bounded descent from x0; returns (point, fitness, evaluations).

    Stage 1 is L-BFGS-B with finite-difference gradients.  Whatever budget it
    leaves is spent on a deterministic pattern search that probes steps along
    each axis while re-minimizing the remaining axes at every probe, which
    lets the descent track curved valleys that defeat straight-line searches.
    The best point seen is tracked across both stages, so the result never
    has worse fitness than x0 and always lies inside the bounds.
    """
    x0 = clamp_to_bounds(np.asarray(x0, float), bounds)
    low, high = bounds.low, bounds.high
    best_x = x0.copy()
    best_f = float(objective(x0))
    count = 1

    def wrapped(z):
        nonlocal best_x, best_f, count
        if count >= budget:
            raise _BudgetExhausted
        count += 1
        z = np.clip(z, low, high)
        f = float(objective(z))
        if f < best_f:
            best_x = np.array(z, float)
            best_f = f
        return f

    try:
        minimize(wrapped, best_x, method="L-BFGS-B", bounds=bounds.pairs(),
                 options={"maxfun": min(60, budget), "ftol": 1e-17, "gtol": 1e-14})
    except _BudgetExhausted:
        return best_x, best_f, count
    except (ValueError, FloatingPointError, OverflowError):
        pass

    dim = x0.size
    width = high - low
    try:
        for _ in range(4):
            any_move = False
            for j in range(dim):
                step = width[j] / 8.0
                while step > 1e-10 * width[j]:
                    moved = False
                    for sign in (1.0, -1.0):
                        zj = min(max(best_x[j] + sign * step, low[j]), high[j])
                        if zj == best_x[j]:
                            continue
                        z = best_x.copy()
                        z[j] = zj
                        for k in range(dim):
                            if k == j:
                                continue

                            def along_k(t, z=z, k=k):
                                zz = z.copy()
                                zz[k] = t
                                return wrapped(zz)

                            r = minimize_scalar(
                                along_k, bounds=(low[k], high[k]), method="bounded",
                                options={"xatol": 1e-13, "maxiter": 60})
                            z[k] = min(max(float(r.x), low[k]), high[k])
                        before = best_f
                        wrapped(z)
                        if best_f < before:
                            moved = any_move = True
                            break
                    if not moved:
                        step /= 2.0
            if not any_move:
                break
    except _BudgetExhausted:
        pass
    return best_x, best_f, count


def local_refine(x, objective, bounds: Bounds,
                 budget: int = DEFAULT_LOCAL_SEARCH_BUDGET) -> np.ndarray:
    """Refine `x` by bounded descent; never worsens, uses at most `budget` evals."""
    if budget < 1:
        raise ConfigurationError("budget must be a positive integer")
    refined, _, _ = _refine(x, objective, bounds, budget)
    return refined


def _result(population: Population, history, diversity_history, evaluations,
            terminated_by) -> RunResult:
    best = population.best()
    return RunResult(
        best_position=np.array(best.position), best_fitness=best.fitness,
        history=list(history), diversity_history=list(diversity_history),
        generations_executed=population.generation,
        evaluations_used=evaluations, terminated_by=terminated_by)


def run_de(objective, params: DeParams, rng: np.random.Generator,
           bounds: Bounds | None = None) -> RunResult:
    """Classic DE/rand/1/bin; terminates only at max_generations."""
    if bounds is None:
        bounds = objective.default_bounds
    pop = initialize_population(params.population_size, bounds, rng, objective)
    evaluations = params.population_size
    history = [pop.best().fitness]
    div_history = [diversity(pop)]
    for _ in range(params.max_generations):
        for i in range(pop.size):
            donor = de_mutation(pop, i, params.F, rng)
            trial = binomial_crossover(pop.members[i].position, donor, params.CR, rng)
            f_trial = float(objective(trial))
            evaluations += 1
            if f_trial < pop.members[i].fitness:
                pop.members[i] = Individual(trial, f_trial)
        pop.generation += 1
        history.append(pop.best().fitness)
        div_history.append(diversity(pop))
    return _result(pop, history, div_history, evaluations,
                   TERMINATED_MAX_GENERATIONS)


def run_adeds(objective, params: AdedsParams, rng: np.random.Generator,
              bounds: Bounds | None = None) -> RunResult:
    """Adaptive DE with per-generation schedules, local refinement of the
    generation best, and stagnation-based early stopping.

    The stagnation test applies to the per-generation best-fitness entries, so
    a run whose best never changes stops after exactly `stagnation_limit`
    generations.
    """
    if bounds is None:
        bounds = objective.default_bounds
    pop = initialize_population(params.population_size, bounds, rng, objective)
    evaluations = params.population_size
    history = [pop.best().fitness]
    div_history = [diversity(pop)]
    terminated_by = TERMINATED_MAX_GENERATIONS
    refine_fixed_point = None  # last input proven unimprovable within budget

    for g in range(params.max_generations):
        F = adaptive_mutation_rate(g, params.max_generations,
                                   params.initial_mutation_rate)
        CR = adaptive_crossover_rate(g, params.max_generations,
                                     params.initial_crossover_rate)
        for i in range(pop.size):
            trial = adeds_trial(pop, i, F, rng)
            if params.crossover_enabled:
                trial = binomial_crossover(pop.members[i].position, trial, CR, rng)
            if params.local_search_enabled and params.local_search_per_trial:
                trial, f_trial, used = _refine(trial, objective, bounds,
                                               params.local_search_budget)
                evaluations += used
            else:
                f_trial = float(objective(trial))
                evaluations += 1
            if f_trial < pop.members[i].fitness:
                pop.members[i] = Individual(trial, f_trial)

        if params.local_search_enabled and not params.local_search_per_trial:
            b = int(np.argmin(pop.fitnesses()))
            x_best = pop.members[b].position
            if refine_fixed_point is None or not np.array_equal(x_best, refine_fixed_point):
                refined, f_refined, used = _refine(x_best, objective, bounds,
                                                   params.local_search_budget)
                evaluations += used
                if f_refined < pop.members[b].fitness:
                    pop.members[b] = Individual(refined, f_refined)
                    refine_fixed_point = None
                else:
                    refine_fixed_point = np.array(x_best)

        pop.generation += 1
        history.append(pop.best().fitness)
        div_history.append(diversity(pop))
        if has_converged(history[1:], params.stagnation_limit):
            terminated_by = TERMINATED_STAGNATION
            break
    return _result(pop, history, div_history, evaluations, terminated_by)
