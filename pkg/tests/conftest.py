import pytest

from limpack.generators import gen_cycle, gen_named


@pytest.fixture
def c6():
    return gen_cycle(6)


@pytest.fixture
def h6():
    return gen_named('h6')


@pytest.fixture
def petersen():
    return gen_named('petersen')


@pytest.fixture
def k4():
    return gen_named('k4')


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write
