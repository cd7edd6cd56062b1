import pytest

from limpack.bench import COLUMNS, BenchCase, paper_suite, run_bench, run_case
from limpack.errors import InputError
from limpack.generators import gen_cycle


@pytest.fixture(scope='module')
def table():
    return run_bench('paper', seed=0, timing=False)


def test_columns_and_order(table):
    assert list(table.columns) == [c for c in COLUMNS if c != 'seconds']
    families = list(dict.fromkeys(table['family']))
    assert families == list(dict.fromkeys(case.family for case in paper_suite(0)))


def test_rows_are_sandwiched(table):
    """Constructed sizes ≤ exact optimum ≤ kn/(δ+1) and every packing verifies"""
    assert table['valid'].all()
    assert (table['size'] <= table['exact']).all()
    assert (table['exact'] <= table['upper'] + 1e-9).all()
    assert (table['lower'] <= table['exact'] + 1e-9).all()


def test_cubic_rows_meet_a_third(table):
    cubic = table[table['method'] == 'cubic2']
    assert len(cubic) > 0
    assert (3 * cubic['size'] >= cubic['n']).all()
    h6 = cubic[cubic['family'].str.startswith('h6x')]
    assert list(h6['size']) == [2, 4, 6]


def test_exact_rows_match_known_values(table):
    exact = table[table['method'] == 'exact'].set_index(['family', 'k'])['size']
    assert exact[('cycle-7', 2)] == 4
    assert exact[('petersen', 1)] == 1
    assert exact[('petersen', 3)] == 7
    assert exact[('projective-2-2', 2)] == 2


def test_parallel_rows_keep_suite_order(table):
    assert run_bench('paper', seed=0, timing=False, n_jobs=2).equals(table)


def test_run_case_without_cubic_method():
    rows = run_case(BenchCase('cycle-9', gen_cycle(9), 1))
    assert [row['method'] for row in rows] == ['exact', 'greedy', 'sample-repair', 'lll']
    assert rows[0]['size'] == 3


def test_unknown_suite():
    with pytest.raises(InputError, match='paper'):
        run_bench('dimacs')
