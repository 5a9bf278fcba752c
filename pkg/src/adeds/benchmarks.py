"""Registry of benchmark objectives: formula, domain box, known global minimum,
and known optimizer locations for each function.

All functions are minimized.  Every entry is 2-D except devilliers_glasser_02
(5-D).  Where published variants of a formula disagree, the canonical form
whose stated optimum checks out by direct substitution is the one implemented;
see the README for the registered optima.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .core import Bounds, UnknownFunctionError

CATEGORIES = ("many_local_optima", "plate_shaped", "valley_shaped", "other", "demo")


@dataclass(frozen=True)
class BenchmarkFunction:
    """A named objective with its domain and known global minimum."""

    name: str
    dimension: int
    default_bounds: Bounds
    known_optimum_value: float
    known_optimizers: tuple
    category: str
    evaluator: Callable[[np.ndarray], float]
    optimum_tolerance: float = 1e-4
    nd_fill: float | None = None  # extension value per extra coordinate, if resizable
    note: str = ""

    def __call__(self, x) -> float:
        x = np.asarray(x, dtype=float)
        if x.ndim != 1 or x.size != self.dimension:
            raise ValueError(
                f"{self.name} expects a vector of dimension {self.dimension}, "
                f"got shape {x.shape}")
        return float(self.evaluator(x))

    def resized(self, dimension: int) -> "BenchmarkFunction":
        """Same objective over `dimension` coordinates (resizable entries only).

        Extra coordinates either enter a separable sum (sphere, rastrigin, ...)
        or are inert (the sinusoidal pair reads only the first two).
        """
        if self.nd_fill is None:
            raise ValueError(f"{self.name} is fixed at dimension {self.dimension}")
        if dimension < self.dimension:
            raise ValueError("resized dimension must not shrink the function")
        if dimension == self.dimension:
            return self
        lo, hi = self.default_bounds.low[0], self.default_bounds.high[0]
        pad = dimension - self.dimension
        optimizers = tuple(
            np.concatenate([opt, np.full(pad, self.nd_fill)])
            for opt in self.known_optimizers)
        return BenchmarkFunction(
            name=self.name, dimension=dimension,
            default_bounds=Bounds(np.full(dimension, lo), np.full(dimension, hi)),
            known_optimum_value=self.known_optimum_value,
            known_optimizers=optimizers, category=self.category,
            evaluator=self.evaluator, optimum_tolerance=self.optimum_tolerance,
            nd_fill=self.nd_fill, note=self.note)


# ---------------------------------------------------------------------------
# evaluators
# ---------------------------------------------------------------------------

def _ackley(x):
    n = x.size
    s1 = np.sum(x * x)
    s2 = np.sum(np.cos(2.0 * np.pi * x))
    return (-20.0 * np.exp(-0.2 * np.sqrt(s1 / n))
            - np.exp(s2 / n) + 20.0 + np.e)


def _bukin_n6(x):
    a, b = x
    return 100.0 * np.sqrt(abs(b - 0.01 * a * a)) + 0.01 * abs(a + 10.0)


def _rastrigin(x):
    return 10.0 * x.size + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x))


def _cross_in_tray(x):
    a, b = x
    e = abs(100.0 - np.sqrt(a * a + b * b) / np.pi)
    return -0.0001 * (abs(np.sin(a) * np.sin(b) * np.exp(e)) + 1.0) ** 0.1


def _levy_n13(x):
    a, b = x
    return (np.sin(3.0 * np.pi * a) ** 2
            + (a - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * b) ** 2)
            + (b - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * b) ** 2))


def _eggholder(x):
    a, b = x
    return (-(b + 47.0) * np.sin(np.sqrt(abs(b + a / 2.0 + 47.0)))
            - a * np.sin(np.sqrt(abs(a - (b + 47.0)))))


def _schaffer_n2(x):
    a, b = x
    return 0.5 + (np.sin(a * a - b * b) ** 2 - 0.5) / (1.0 + 0.001 * (a * a + b * b)) ** 2


def _schwefel_2d(x):
    a, b = x
    return (418.9829 * 2.0
            - a * np.sin(np.sqrt(abs(a)))
            - b * np.sin(np.sqrt(abs(b))))


def _shubert(x):
    a, b = x
    i = np.arange(1.0, 6.0)
    return np.sum(i * np.cos((i + 1.0) * a + i)) * np.sum(i * np.cos((i + 1.0) * b + i))


def _drop_wave(x):
    a, b = x
    r2 = a * a + b * b
    return -(1.0 + np.cos(12.0 * np.sqrt(r2))) / (0.5 * r2 + 2.0)


def _himmelblau(x):
    a, b = x
    return (a * a + b - 11.0) ** 2 + (a + b * b - 7.0) ** 2


def _booth(x):
    a, b = x
    return (a + 2.0 * b - 7.0) ** 2 + (2.0 * a + b - 5.0) ** 2


def _matyas(x):
    a, b = x
    return 0.26 * (a * a + b * b) - 0.48 * a * b


def _mccormick(x):
    a, b = x
    return np.sin(a + b) + (a - b) ** 2 - 1.5 * a + 2.5 * b + 1.0


def _three_hump_camel(x):
    a, b = x
    return 2.0 * a * a - 1.05 * a ** 4 + a ** 6 / 6.0 + a * b + b * b


def _six_hump_camel(x):
    a, b = x
    return ((4.0 - 2.1 * a * a + a ** 4 / 3.0) * a * a
            + a * b + (-4.0 + 4.0 * b * b) * b * b)


def _rosenbrock(x):
    return np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2)


def _dixon_price(x):
    i = np.arange(2.0, x.size + 1.0)
    return (x[0] - 1.0) ** 2 + np.sum(i * (2.0 * x[1:] ** 2 - x[:-1]) ** 2)


def _beale(x):
    a, b = x
    return ((1.5 - a + a * b) ** 2
            + (2.25 - a + a * b * b) ** 2
            + (2.625 - a + a * b ** 3) ** 2)


def _goldstein_price(x):
    a, b = x
    t1 = 1.0 + (a + b + 1.0) ** 2 * (19.0 - 14.0 * a + 3.0 * a * a
                                     - 14.0 * b + 6.0 * a * b + 3.0 * b * b)
    t2 = 30.0 + (2.0 * a - 3.0 * b) ** 2 * (18.0 - 32.0 * a + 12.0 * a * a
                                            + 48.0 * b - 36.0 * a * b + 27.0 * b * b)
    return t1 * t2


def _forrester_1d(t):
    return (6.0 * t - 2.0) ** 2 * np.sin(12.0 * t - 4.0)


def _forrester_2d(x):
    return _forrester_1d(x[0]) + _forrester_1d(x[1])


_DVG_T = 0.1 * np.arange(24.0)


def _dvg_model(p, t):
    return p[0] * p[1] ** t * np.tanh(p[2] * t + np.sin(p[3] * t)) * np.cos(t * np.exp(p[4]))


_DVG_PARAMS = np.array([53.81, 1.27, 3.012, 2.13, 0.507])
_DVG_Y = _dvg_model(_DVG_PARAMS, _DVG_T)


def _devilliers_glasser_02(x):
    r = _dvg_model(x, _DVG_T) - _DVG_Y
    return np.sum(r * r)


def _sinusoidal(x):
    # reads only the first two coordinates; extra dimensions are inert
    return np.sin(x[0]) + np.cos(x[1])


def _sinusoidal_alt(x):
    return np.sin(x[0]) + np.sin(x[1])


def _sphere(x):
    return np.sum(x * x)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

def _square(lo: float, hi: float, dim: int = 2) -> Bounds:
    return Bounds(np.full(dim, lo), np.full(dim, hi))


def _pts(*points) -> tuple:
    out = []
    for p in points:
        a = np.array(p, float)
        a.flags.writeable = False
        out.append(a)
    return tuple(out)


_HALF_PI = math.pi / 2.0

_SPEC = [
    # name, evaluator, bounds, optimum value, optimizers, category, extras
    ("ackley", _ackley, _square(-32.768, 32.768), 0.0,
     _pts([0.0, 0.0]), "many_local_optima", dict(nd_fill=0.0)),
    ("bukin_n6", _bukin_n6, Bounds(np.array([-15.0, -3.0]), np.array([-5.0, 3.0])), 0.0,
     _pts([-10.0, 1.0]), "many_local_optima", {}),
    ("rastrigin", _rastrigin, _square(-5.12, 5.12), 0.0,
     _pts([0.0, 0.0]), "many_local_optima", dict(nd_fill=0.0)),
    ("cross_in_tray", _cross_in_tray, _square(-10.0, 10.0), -2.06262,
     _pts([1.3491, 1.3491], [1.3491, -1.3491], [-1.3491, 1.3491], [-1.3491, -1.3491]),
     "many_local_optima", {}),
    ("levy_n13", _levy_n13, _square(-10.0, 10.0), 0.0,
     _pts([1.0, 1.0]), "many_local_optima", {}),
    ("eggholder", _eggholder, _square(-512.0, 512.0), -959.6407,
     _pts([512.0, 404.2319]), "many_local_optima", {}),
    ("schaffer_n2", _schaffer_n2, _square(-100.0, 100.0), 0.0,
     _pts([0.0, 0.0]), "many_local_optima", {}),
    ("schwefel_2d", _schwefel_2d, _square(-500.0, 500.0), 0.0,
     _pts([420.9687, 420.9687]), "many_local_optima", dict(optimum_tolerance=3e-3)),
    ("shubert", _shubert, _square(-10.0, 10.0), -186.7309,
     _pts([-7.708313735, -0.800321100]), "many_local_optima", {}),
    ("drop_wave", _drop_wave, _square(-5.12, 5.12), -1.0,
     _pts([0.0, 0.0]), "many_local_optima", {}),
    ("himmelblau", _himmelblau, _square(-5.0, 5.0), 0.0,
     _pts([3.0, 2.0], [-2.805118, 3.131312], [-3.779310, -3.283186],
          [3.584428, -1.848126]), "many_local_optima", {}),
    ("booth", _booth, _square(-10.0, 10.0), 0.0,
     _pts([1.0, 3.0]), "plate_shaped", {}),
    ("matyas", _matyas, _square(-10.0, 10.0), 0.0,
     _pts([0.0, 0.0]), "plate_shaped", {}),
    ("mccormick", _mccormick, Bounds(np.array([-1.5, -3.0]), np.array([4.0, 4.0])), -1.9133,
     _pts([-0.54719, -1.54719]), "plate_shaped", {}),
    ("three_hump_camel", _three_hump_camel, _square(-5.0, 5.0), 0.0,
     _pts([0.0, 0.0]), "valley_shaped", {}),
    ("six_hump_camel", _six_hump_camel,
     Bounds(np.array([-3.0, -2.0]), np.array([3.0, 2.0])), -1.0316,
     _pts([0.0898, -0.7126], [-0.0898, 0.7126]), "valley_shaped", {}),
    ("rosenbrock", _rosenbrock, _square(-5.0, 10.0), 0.0,
     _pts([1.0, 1.0]), "valley_shaped", dict(nd_fill=1.0)),
    ("dixon_price", _dixon_price, _square(-10.0, 10.0), 0.0,
     _pts([1.0, 2.0 ** -0.5]), "valley_shaped", {}),
    ("beale", _beale, _square(-4.5, 4.5), 0.0,
     _pts([3.0, 0.5]), "other", {}),
    ("goldstein_price", _goldstein_price, _square(-2.0, 2.0), 3.0,
     _pts([0.0, -1.0]), "other", {}),
    ("forrester_2d", _forrester_2d, _square(0.0, 1.0), -12.0415,
     _pts([0.7572487578370577, 0.7572487578370577]), "other",
     dict(optimum_tolerance=1e-4)),
    ("devilliers_glasser_02", _devilliers_glasser_02, _square(1.0, 60.0, dim=5), 0.0,
     _pts(_DVG_PARAMS), "other", {}),
    ("sinusoidal", _sinusoidal, _square(-10.0, 10.0), -2.0,
     _pts([-_HALF_PI, math.pi]), "demo",
     dict(nd_fill=0.0, note="sin(x0) + cos(x1); extra dimensions are inert")),
    ("sinusoidal_alt", _sinusoidal_alt, _square(-10.0, 10.0), -2.0,
     _pts([-_HALF_PI, -_HALF_PI]), "demo",
     dict(nd_fill=0.0, note="sin(x0) + sin(x1); extra dimensions are inert")),
    ("sphere", _sphere, _square(-10.0, 10.0), 0.0,
     _pts([0.0, 0.0]), "demo", dict(nd_fill=0.0)),
]

_REGISTRY: dict[str, BenchmarkFunction] = {}
for _name, _fn, _bounds, _opt, _optimizers, _cat, _extra in _SPEC:
    _REGISTRY[_name] = BenchmarkFunction(
        name=_name, dimension=_bounds.dimension, default_bounds=_bounds,
        known_optimum_value=_opt, known_optimizers=_optimizers,
        category=_cat, evaluator=_fn, **_extra)

# lookup-only aliases for names that appear under shorter spellings
_ALIASES = {
    "levy": "levy_n13",
    "schwefel": "schwefel_2d",
    "forrester": "forrester_2d",
}


def lookup(name: str) -> BenchmarkFunction:
    """Return the registry entry for `name` (aliases allowed)."""
    key = _ALIASES.get(name, name)
    try:
        return _REGISTRY[key]
    except KeyError:
        raise UnknownFunctionError(
            f"unknown benchmark function {name!r}; see list_functions()") from None


def evaluate(name: str, x) -> float:
    """Evaluate the registered function `name` at point `x`."""
    return lookup(name)(x)


def list_functions(category: str | None = None) -> list[str]:
    """Sorted canonical names, optionally restricted to one category."""
    if category is None:
        return sorted(_REGISTRY)
    if category not in CATEGORIES:
        raise ValueError(
            f"unknown category {category!r}; choose one of {CATEGORIES}")
    return sorted(n for n, f in _REGISTRY.items() if f.category == category)
