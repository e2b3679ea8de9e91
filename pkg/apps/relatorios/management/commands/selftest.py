# apps/relatorios/management/commands/selftest.py

"""
Bateria de aceitação sobre os dados embutidos.

Cada item devolve registros (nome, resíduo, aprovado, detalhe); os itens são
independentes e podem rodar em paralelo (VORTEX_CENTER WORKERS), mas o
relatório é montado na ordem fixa da lista.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Tuple

import numpy as np

from apps.algebras.models import Algebra
from apps.braided.formula import verify_exactalg, verify_formula_grid
from apps.braided.picard import morita_test, pic_to_aut
from apps.center.drinfeld import drinfeld_center
from apps.center.export import export_dual_category
from apps.center.full_center import center_sum_map, full_center
from apps.center.induction import adjunction_audit
from apps.center.local import coequ_lambda_rho, lambda_equals_rho
from apps.core.category import FusionCategory
from apps.core.conf import get_config
from apps.core.exceptions import StructuralError, TensorCategoryError
from apps.core.validation import validate_category

from ...base import VortexCommand
from ...formats import load_category, resolve_algebra, resolve_category_path

logger = logging.getLogger(__name__)

Record = Tuple[str, float, bool, str]
SHIPPED = ('vec', 'vecz2', 'fib', 'ising')


def _category(name: str) -> FusionCategory:
    return FusionCategory(load_category(resolve_category_path(name)))


def _coherence() -> List[Record]:
    records = []
    for name in SHIPPED:
        data = load_category(resolve_category_path(name))
        result = validate_category(data)
        worst = max(result.residuals.values(), default=0.0)
        records.append((f"coherence[{name}]", worst, result.passed and worst < 1e-9, ''))
    corrupted = validate_category(load_category(resolve_category_path('fib_corrupted')))
    gap = corrupted.residuals['pentagon']
    records.append(('coherence[fib_corrupted] falha', gap, gap > 1e-2, 'pentágono deve falhar'))
    return records


def _centers() -> List[Record]:
    records = []
    for name in SHIPPED:
        cat = _category(name)
        center = drinfeld_center(cat)
        gap = abs(center.global_dim - cat.global_dim() ** 2)
        records.append((f"center_dim[{name}]", gap, gap < 1e-6, f"{center.rank} simples"))
    z2 = drinfeld_center(_category('vecz2'))
    twists = sorted(round(float(np.real(t)), 6) for t in z2.twists)
    records.append(('center[vecz2] T = {1,1,1,-1}', None, z2.rank == 4 and twists == [-1.0, 1.0, 1.0, 1.0],
                    str(twists)))
    ising = drinfeld_center(_category('ising'))
    records.append(('center[ising] 9 simples', None, ising.rank == 9, f"{ising.rank} simples"))
    return records


def _full_centers() -> List[Record]:
    records = []
    for name in SHIPPED:
        cat = _category(name)
        Z1 = full_center(Algebra.trivial(cat))
        gap = abs(cat.fpdim(Z1.obj) - cat.global_dim())
        worst = max(Z1.commutativity, Z1.audits['davydov'])
        records.append((f"full_center[{name}]", max(gap, worst), gap < 1e-6 and worst < 1e-8,
                        cat.describe(Z1.obj)))
    ising = _category('ising')
    carrier = full_center(Algebra.trivial(ising)).obj
    records.append(('full_center[ising] = 3·1 ⊕ psi', None, carrier == ising.obj({'1': 3, 'psi': 1}),
                    ising.describe(carrier)))
    z2 = _category('vecz2')
    summed = center_sum_map(Algebra.trivial(z2), resolve_algebra(z2, 'group'))
    records.append(('center_sum[vecz2, 1 ⊕ (1⊕g)]', summed['homomorphism_residual'], summed['passed'], ''))
    return records


def _coequalizers() -> List[Record]:
    records = []
    for name in SHIPPED:
        cat = _category(name)
        Z1 = full_center(Algebra.trivial(cat), cross_check=False)
        objects = [cat.simple(a) for a in range(cat.rank)]
        if name == 'vecz2':
            objects.append(cat.obj({'1': 1, 'g': 1}))
        for x in objects:
            expected = x[cat.unit] * cat.unit_obj()
            quotient = coequ_lambda_rho(x, Z1)
            equal = lambda_equals_rho(Z1, x)
            unit_multiple = x == expected
            ok = quotient == expected and equal == unit_multiple
            records.append((f"coequ[{name}, {cat.describe(x)}]", None, ok, cat.describe(quotient)))
    return records


ADJUNCTION_PAIRS = (('vec', 'trivial'), ('vecz2', 'trivial'), ('vecz2', 'group'), ('fib', 'trivial'),
                    ('ising', 'trivial'), ('ising', 'fermion'))


def _adjunction() -> List[Record]:
    records = []
    for name, selector in ADJUNCTION_PAIRS:
        cat = _category(name)
        A = resolve_algebra(cat, selector)
        rows = adjunction_audit(A, drinfeld_center(cat), count=20, seed=int(get_config('SEED')))
        mismatches = [(b, w) for b, w, left, right in rows if left != right]
        somas = sum(1 for _, w, _, _ in rows if '⊕' in w)
        records.append((f"adjunction[{name}, {A.name}]", float(len(mismatches)), not mismatches,
                        f"{len(rows)} pares, {somas} com w não simples"))
    return records


def _formula() -> List[Record]:
    records = []
    for name in ('vecz2', 'fib'):
        results = verify_formula_grid(_category(name))
        diagonal = [r for r in results if r['algebra_iso'] is not None]
        records.append((f"formula[{name}] objetos", None, all(r['object_iso'] for r in results),
                        f"{len(results)} quádruplas"))
        records.append((f"formula[{name}] álgebras", None, all(r['algebra_iso'] for r in diagonal),
                        f"{len(diagonal)} diagonais"))
    return records


def _exactalg() -> List[Record]:
    records = []
    for name, selector in (('vecz2', 'trivial'), ('fib', 'trivial'), ('ising', 'trivial'), ('vecz2', 'group')):
        cat = _category(name)
        result = verify_exactalg(resolve_algebra(cat, selector))
        records.append((f"exactalg[{name}, {result['algebra']}]", None, result['passed'], ''))
    return records


def _pic_aut() -> List[Record]:
    records = []
    for name, group in (('vecz2', 'Z/2'), ('fib', 'trivial'), ('ising', 'Z/2')):
        result = pic_to_aut(Algebra.trivial(_category(name)))
        pic, aut = result['pic'], result['aut']
        ok = result['passed'] and pic.identify() == aut.identify() == group
        records.append((f"pic=aut[{name}]", result['automorphism_residual'], ok,
                        f"Pic {pic.identify()}, Aut {aut.identify()}"))
    return records


def _morita() -> List[Record]:
    z2 = _category('vecz2')
    first = morita_test(Algebra.trivial(z2), resolve_algebra(z2, 'group'))
    ising = _category('ising')
    second = morita_test(Algebra.trivial(ising), resolve_algebra(ising, 'ihom:sigma'))
    return [
        ('morita[vecz2, 1 ≁ 1⊕g]', None, not first['equivalent'], first['iso'].reason),
        ('morita[ising, 1 ~ [sigma,sigma]]', second['iso'].residual,
         second['equivalent'] and second['witness'] is not None, second['iso'].method),
    ]


def _export() -> List[Record]:
    ising = _category('ising')
    data = export_dual_category(resolve_algebra(ising, 'fermion'))
    validation = validate_category(data)
    original = drinfeld_center(ising).modular_pairs()
    dual = drinfeld_center(FusionCategory(data)).modular_pairs()
    same = len(original) == len(dual) and all(
        max(abs(x - y) for x, y in zip(p, q)) < 1e-6 for p, q in zip(original, dual))
    worst = max(validation.residuals.values(), default=0.0)
    return [
        ('export[ising, 1⊕psi] valida', worst, worst < 1e-8, f"{len(data.simples)} simples"),
        ('export[ising, 1⊕psi] centros', None, same, ''),
    ]


BATTERY: List[Tuple[str, Callable[[], List[Record]]]] = [
    ('coherence', _coherence),
    ('centers', _centers),
    ('full_centers', _full_centers),
    ('coequalizers', _coequalizers),
    ('adjunction', _adjunction),
    ('formula', _formula),
    ('exactalg', _exactalg),
    ('pic_aut', _pic_aut),
    ('morita', _morita),
    ('export', _export),
]


def _run(item: Tuple[str, Callable[[], List[Record]]]) -> List[Record]:
    name, fn = item
    try:
        return fn()
    except TensorCategoryError as e:
        logger.error(f"selftest {name}: {type(e).__name__}: {e}")
        return [(name, None, False, f"{type(e).__name__}: {e}")]


class Command(VortexCommand):
    help = 'Roda a bateria de aceitação nos dados embutidos e imprime um quadro de status'
    uses_category = False

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--only', default=None,
                            help=f"Itens separados por vírgula: {', '.join(n for n, _ in BATTERY)}")

    def selectors(self, options):
        return options['only'].split(',') if options['only'] else []

    def run(self, config, report, options):
        wanted = set(self.selectors(options))
        unknown = wanted - {n for n, _ in BATTERY}
        if unknown:
            raise StructuralError(f"itens desconhecidos: {sorted(unknown)}", path='--only')
        items = [item for item in BATTERY if not wanted or item[0] in wanted]
        for name in ('vec', 'vecz2', 'fib', 'ising', 'fib_corrupted'):
            report.add_input(resolve_category_path(name))

        workers = max(1, int(get_config('WORKERS')))
        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                outcomes = list(pool.map(_run, items))
        else:
            outcomes = [_run(item) for item in items]

        board = []
        for (name, _), records in zip(items, outcomes):
            passed = all(r[2] for r in records)
            board.append([name, len(records), 'ok' if passed else 'FALHOU'])
            for record in records:
                report.check(*record)
        report.table('quadro', ['item', 'verificações', 'status'], board)
