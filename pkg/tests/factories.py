# tests/factories.py

"""
Factories para os testes.

PointedCategoryFactory gera Vec_{Z/n} com símbolos F e R triviais; os
demais montam configurações e relatórios dos comandos.
"""

import factory

from apps.core.models import CategoryData
from apps.relatorios.reports import Report, RunConfig


def _label(k: int) -> str:
    return '1' if k == 0 else f"g{k}"


def _cyclic_fusion(n: int):
    return {(a, b, (a + b) % n): 1 for a in range(n) for b in range(n)}


def _cyclic_f_symbols(n: int):
    """Somente as pernas não unitárias; as demais são identidades implícitas"""
    symbols = {}
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                e, f, d = (a + b) % n, (b + c) % n, (a + b + c) % n
                symbols[(a, b, c, d, e, f, 0, 0, 0, 0)] = 1.0 + 0j
    return symbols


class PointedCategoryFactory(factory.Factory):
    """Vec_{Z/n} com associador e trança triviais"""

    class Meta:
        model = CategoryData

    class Params:
        order = 2
        braided = True

    name = factory.LazyAttribute(lambda o: f"vecz{o.order}")
    simples = factory.LazyAttribute(lambda o: tuple(_label(k) for k in range(o.order)))
    unit = 0
    dual = factory.LazyAttribute(lambda o: tuple((-k) % o.order for k in range(o.order)))
    fusion = factory.LazyAttribute(lambda o: _cyclic_fusion(o.order))
    f_symbols = factory.LazyAttribute(lambda o: _cyclic_f_symbols(o.order))
    r_symbols = factory.LazyAttribute(
        lambda o: {(a, b, (a + b) % o.order, 0, 0): 1.0 + 0j for a in range(o.order) for b in range(o.order)}
        if o.braided else None
    )
    pivotal = None
    tolerance = 1e-9


class RunConfigFactory(factory.Factory):
    class Meta:
        model = RunConfig

    command = 'validate'
    categories = factory.LazyFunction(lambda: ['vecz2'])
    algebras = factory.LazyFunction(list)
    selectors = factory.LazyFunction(list)
    tolerance = 1e-9
    seed = 20240917
    output_format = 'text'
    out = None


class ReportFactory(factory.Factory):
    class Meta:
        model = Report

    command = 'validate'
    argv = factory.LazyFunction(lambda: ['validate', 'vecz2'])
    seed = 20240917
    tolerance = 1e-9
