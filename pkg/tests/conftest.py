# tests/conftest.py

import pytest

from apps.algebras.models import Algebra
from apps.center.drinfeld import drinfeld_center
from apps.center.full_center import full_center
from apps.core.category import FusionCategory
from apps.relatorios.formats import load_category, resolve_category_path


def bundled(name: str) -> FusionCategory:
    return FusionCategory(load_category(resolve_category_path(name)))


@pytest.fixture(scope='session')
def vec():
    return bundled('vec')


@pytest.fixture(scope='session')
def vecz2():
    return bundled('vecz2')


@pytest.fixture(scope='session')
def fib():
    return bundled('fib')


@pytest.fixture(scope='session')
def ising():
    return bundled('ising')


@pytest.fixture(scope='session')
def vecz2_center(vecz2):
    return drinfeld_center(vecz2)


@pytest.fixture(scope='session')
def fib_center(fib):
    return drinfeld_center(fib)


@pytest.fixture(scope='session')
def ising_center(ising):
    return drinfeld_center(ising)


@pytest.fixture(scope='session')
def vecz2_unit_center(vecz2, vecz2_center):
    return full_center(Algebra.trivial(vecz2), vecz2_center)


@pytest.fixture(scope='session')
def ising_unit_center(ising, ising_center):
    return full_center(Algebra.trivial(ising), ising_center)


@pytest.fixture
def data_copy(tmp_path):
    """Cópia gravável de uma categoria embutida"""

    def _copy(name: str):
        target = tmp_path / f"{name}.json"
        target.write_text(resolve_category_path(name).read_text(encoding='utf-8'), encoding='utf-8')
        return target

    return _copy
