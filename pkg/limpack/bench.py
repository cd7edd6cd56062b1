"""Benchmark table over the extremal graph families for limited packings.

Each row runs one method on one graph and records its packing size beside the exact
optimum and the best closed-form bounds. Rows are computed independently (optionally
in parallel with joblib) and always reported in suite order.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass

import pandas as pd
from joblib import Parallel, delayed

from limpack.bounds import graph_bound_sheet
from limpack.cubic import construct_two_limited
from limpack.errors import InputError
from limpack.exact import max_k_limited
from limpack.generators import copies, gen_cycle, gen_named, gen_projective, gen_random_regular
from limpack.graph_core import Graph, degree_stats
from limpack.greedy import greedy_packing
from limpack.random_packing import lll_resample, sample_and_repair
from limpack.shared import config
from limpack.typed import TypedMultigraph
from limpack.verify import verify_k_limited

logger = logging.getLogger(__name__)

SUITES = ('paper',)
COLUMNS = ['family', 'n', 'k', 'method', 'size', 'exact', 'lower', 'upper', 'valid', 'seconds']


@dataclass(frozen=True)
class BenchCase:
    family: str
    graph: Graph
    k: int


def paper_suite(seed: int = 0) -> list[BenchCase]:
    h6 = gen_named('h6')
    petersen = gen_named('petersen')
    return [
        BenchCase('cycle-5', gen_cycle(5), 1),
        BenchCase('cycle-6', gen_cycle(6), 2),
        BenchCase('cycle-7', gen_cycle(7), 2),
        *(BenchCase(f"h6x{m}", copies(h6, m), 2) for m in (1, 2, 3)),
        *(BenchCase('petersen', petersen, k) for k in (1, 2, 3)),
        BenchCase('k4', gen_named('k4'), 2),
        BenchCase('projective-2-1', gen_projective(2, 1), 1),
        BenchCase('projective-3-1', gen_projective(3, 1), 1),
        BenchCase('projective-2-2', gen_projective(2, 2), 2),
        BenchCase('random-3-regular-14', gen_random_regular(14, 3, seed), 2),
    ]


def _methods_for(case: BenchCase) -> list[str]:
    methods = ['exact', 'greedy', 'sample-repair', 'lll']
    if case.k == 2 and degree_stats(case.graph).max_degree <= 3:
        methods.append('cubic2')
    return methods


def _run_method(method: str, case: BenchCase, seed: int, optimum: tuple[int, ...]) -> frozenset[int]:
    g, k = case.graph, case.k
    if method == 'exact':
        return frozenset(optimum)
    if method == 'greedy':
        return greedy_packing(g, k).vertices
    if method == 'sample-repair':
        return sample_and_repair(g, k, seed=seed).packing.vertices
    if method == 'lll':
        report = lll_resample(g, k, seed=seed)
        return report.packing.vertices if report.success else frozenset()
    if method == 'cubic2':
        chosen, _ = construct_two_limited(TypedMultigraph.from_graph(g))
        return chosen
    raise InputError(f"unknown method {method!r}")


def run_case(case: BenchCase, seed: int = 0) -> list[dict]:
    solved = max_k_limited(case.graph, case.k)
    sheet = graph_bound_sheet(case.graph, case.k)
    rows = []
    for method in _methods_for(case):
        started = time.perf_counter()
        chosen = _run_method(method, case, seed, solved.witness)
        elapsed = time.perf_counter() - started
        rows.append({
            'family': case.family,
            'n': case.graph.vertex_count,
            'k': case.k,
            'method': method,
            'size': len(chosen),
            'exact': solved.optimum,
            'lower': round(float(sheet.best_lower()), 6),
            'upper': round(float(sheet.best_upper()), 6),
            'valid': verify_k_limited(case.graph, chosen, case.k).valid,
            'seconds': round(elapsed, 4),
        })
    logger.debug("bench case %s k=%d done", case.family, case.k)
    return rows


def run_bench(suite: str = 'paper', seed: int | None = None, timing: bool = True,
              n_jobs: int | None = None) -> pd.DataFrame:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)}")
    seed = config.DEFAULT_SEED if seed is None else seed
    n_jobs = config.N_JOBS if n_jobs is None else n_jobs
    cases = paper_suite(seed)
    batches = Parallel(n_jobs=n_jobs)(delayed(run_case)(case, seed) for case in cases)
    table = pd.DataFrame([row for batch in batches for row in batch], columns=COLUMNS)
    if not timing:
        table = table.drop(columns=['seconds'])
    return table


def format_table(table: pd.DataFrame) -> str:
    return table.to_string(index=False) + '\n'
