import py_compile
from pathlib import Path

import pytest

SCRIPTS = sorted((Path(__file__).resolve().parent.parent / 'scripts').glob('*.py'))


@pytest.mark.parametrize('script', SCRIPTS, ids=lambda path: path.name)
def test_experiment_scripts_compile(script, tmp_path):
    py_compile.compile(str(script), cfile=str(tmp_path / f"{script.stem}.pyc"), doraise=True)


def test_both_experiment_scripts_present():
    assert [path.name for path in SCRIPTS] == ['monte_carlo.py', 'paper_suite.py']
