"""Closed-form bounds on L_k(G) and related domination numbers.

Values that are rational in (n, Δ, δ, k) are kept as ``Fraction``; values involving
a k-th root, e or a logarithm are floats. Binomial coefficients are computed as exact
integers before any conversion, and k-th roots are taken through logarithms so that
large binomials do not overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from fractions import Fraction

from limpack.errors import InputError
from limpack.graph_core import Graph, connected_components, degree_stats
from limpack.shared import config

Number = Fraction | float


@dataclass(frozen=True)
class BoundSheet:
    n: int
    max_degree: int
    min_degree: int
    k: int
    average_degree: float | None = None
    exact: int | None = None
    # lower bounds on L_k
    greedy: Fraction | None = None
    random_sampling: float | None = None
    large_degree: float | None = None
    large_degree_simplified: float | None = None
    cubic_two: Fraction | None = None
    cubic_claim_lower: Fraction | None = None
    cubic_three: Fraction | None = None
    # upper bounds on L_k
    double_counting: Fraction | None = None
    cubic_claim_upper: Fraction | None = None
    # bounds on domination numbers
    harant_henning: float | None = None
    harant_henning_useful: bool | None = None
    cockayne_thomason: float | None = None
    cockayne_thomason_useful: bool | None = None
    two_tuple_domination: Fraction | None = None
    domination_reference: Fraction | None = None

    def lower_bounds(self) -> dict[str, Number]:
        names = ('exact', 'greedy', 'random_sampling', 'large_degree', 'large_degree_simplified',
                 'cubic_two', 'cubic_claim_lower', 'cubic_three')
        found = {name: getattr(self, name) for name in names if getattr(self, name) is not None}
        # the e·Δ^{1+1/k} form only follows from the sampling bound when it is smaller
        # (it is larger for k = 1 and Δ ≤ 2)
        simplified = found.get('large_degree_simplified')
        if simplified is not None and simplified > found['random_sampling']:
            del found['large_degree_simplified']
        return found

    def upper_bounds(self) -> dict[str, Number]:
        names = ('exact', 'double_counting', 'cubic_claim_upper')
        return {name: getattr(self, name) for name in names if getattr(self, name) is not None}

    def best_lower(self) -> Number:
        return max(self.lower_bounds().values(), default=Fraction(0))

    def best_upper(self) -> Number:
        values = list(self.upper_bounds().values())
        return min(values) if values else Fraction(self.n)

    def brackets(self, value: int, tolerance: float | None = None) -> bool:
        """True when every applicable lower bound ≤ value ≤ every applicable upper bound."""
        tol = config.BOUND_TOLERANCE if tolerance is None else tolerance
        return (all(float(b) <= value + tol for b in self.lower_bounds().values())
                and all(value <= float(b) + tol for b in self.upper_bounds().values()))

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            value = getattr(self, f.name)
            if value is None:
                continue
            lines.append(f"{f.name}: {_format(value)}")
        return '\n'.join(lines) + '\n'


def _format(value) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{float(value):.12g} ({value})"
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def _kth_root(value: int, k: int) -> float:
    return math.exp(math.log(value) / k)


def random_sampling_bound(n: int, max_degree: int, k: int) -> float:
    """n·k / ((k+1)·(C(Δ,k)(Δ+1))^{1/k}) for 1 ≤ k ≤ Δ."""
    return n * k / ((k + 1) * _kth_root(math.comb(max_degree, k) * (max_degree + 1), k))


def bound_sheet(n: int, max_degree: int, min_degree: int, k: int,
                average_degree: float | None = None, smallest_component: int | None = None) -> BoundSheet:
    """Every bound that applies to a graph with these parameters.

    ``smallest_component`` is the order of the smallest connected component; without
    it the graph is taken to be connected. The 9n/14 bound for k = 3 needs every
    component of a cubic graph to have more than 8 vertices.
    """
    if k <= 0:
        raise InputError(f"k must be a positive integer, got {k}")
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    if not 0 <= min_degree <= max_degree:
        raise InputError(f"degrees must satisfy 0 <= mindeg <= maxdeg, got {min_degree} and {max_degree}")
    if n > 0 and max_degree >= n:
        raise InputError(f"a simple graph on {n} vertices has maximum degree below {n}")
    if average_degree is None and max_degree == min_degree:
        average_degree = float(max_degree)

    values: dict[str, object] = {'average_degree': average_degree}
    delta, low = max_degree, min_degree

    if k > delta:
        values['exact'] = n
    else:
        values['random_sampling'] = random_sampling_bound(n, delta, k)
        # the first form is the same quantity written through C(Δ+1, k+1)
        values['large_degree'] = (n * k / (k + 1)) / _kth_root((k + 1) * math.comb(delta + 1, k + 1), k)
        values['large_degree_simplified'] = n * k / (math.e * delta ** (1 + 1 / k))
    if k == 1:
        values['greedy'] = Fraction(n, delta * delta + 1)
    values['double_counting'] = Fraction(k * n, low + 1)

    cubic = delta == low == 3
    if k == 2 and delta <= 3:
        values['cubic_two'] = Fraction(n, 3)
    if k == 2 and cubic:
        values['cubic_claim_lower'] = Fraction(n, 4)
        values['cubic_claim_upper'] = Fraction(n, 2)
    if k == 3 and cubic and (n if smallest_component is None else smallest_component) > 8:
        values['cubic_three'] = Fraction(9 * n, 14)
    if cubic:
        values['two_tuple_domination'] = Fraction(2 * n, 3)
        values['domination_reference'] = Fraction(5 * n, 14)

    if low >= 1:
        if average_degree is not None:
            hh = (math.log(1 + average_degree) + math.log(low) + 1) * n / low
            values['harant_henning'] = hh
            values['harant_henning_useful'] = hh < n
        ct = (math.log(1 + low) + math.log(low) + 1) * n / low
        values['cockayne_thomason'] = ct
        values['cockayne_thomason_useful'] = ct < n

    return BoundSheet(n=n, max_degree=delta, min_degree=low, k=k, **values)


def graph_bound_sheet(g: Graph, k: int) -> BoundSheet:
    stats = degree_stats(g)
    average = 2 * stats.m / stats.n if stats.n else 0.0
    return bound_sheet(stats.n, stats.max_degree, stats.min_degree, k, average_degree=average,
                       smallest_component=min((len(c) for c in connected_components(g)), default=0))
