# apps/relatorios/base.py

"""
Base dos comandos de gerenciamento.

Cada comando é um invólucro fino: lê as entradas, chama as operações dos
apps de domínio e preenche um Report. Códigos de saída:
0 quando todas as verificações passam, 1 quando alguma falha (o relatório
é gravado antes), 2 para erros de esquema, de dados ou de opções.
"""

import logging
from pathlib import Path
from typing import List, Optional

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.test.utils import override_settings

from apps.core.category import FusionCategory
from apps.core.conf import get_config
from apps.core.exceptions import (
    SingularityError,
    SplittingError,
    StructuralError,
    UnsupportedError,
    VerificationError,
)

from .formats import load_category, resolve_algebra, resolve_category_path
from .reports import FORMATS, Report, RunConfig

logger = logging.getLogger(__name__)

FLAG_NAMES = {'output_format': 'format'}


class VortexCommand(BaseCommand):
    """Opções comuns, tradução de erros e emissão do relatório"""

    requires_system_checks = []
    uses_category = True
    uses_algebra = False
    uses_second_algebra = False

    def add_arguments(self, parser):
        if self.uses_category:
            parser.add_argument('category', help='Arquivo JSON da categoria ou nome embutido (vec, vecz2, fib, ising)')
        if self.uses_algebra:
            parser.add_argument('--algebra', default='trivial',
                                help="Álgebra: 'trivial', 'ihom:OBJ', nome embutido ou caminho")
        if self.uses_second_algebra:
            parser.add_argument('--algebra-b', dest='algebra_b', required=True,
                                help='Segunda álgebra, mesmos formatos de --algebra')
        parser.add_argument('--seed', type=int, default=None, help='Semente (padrão: VORTEX_CENTER SEED)')
        parser.add_argument('--tol', type=float, default=None, help='Tolerância (padrão: VORTEX_TOLERANCE)')
        parser.add_argument('--format', dest='output_format', choices=FORMATS, default=None,
                            help='Formato do relatório')
        parser.add_argument('--out', default=None, help='Arquivo de saída do relatório')

    # === GANCHOS ===

    def selectors(self, options) -> List[str]:
        return []

    def run(self, config: RunConfig, report: Report, options):
        raise NotImplementedError

    # === CARGA ===

    def load_category(self, value: str):
        path = resolve_category_path(value)
        self.report.add_input(path)
        data = load_category(path)
        return data, FusionCategory(data)

    def load_algebra(self, cat: FusionCategory, selector: Optional[str]):
        if selector and Path(selector).is_file():
            self.report.add_input(selector)
        return resolve_algebra(cat, selector)

    # === EXECUÇÃO ===

    def handle(self, *args, **options):
        argv = self._argv(options)
        try:
            config = RunConfig(
                command=self.name,
                categories=[options['category']] if options.get('category') else [],
                algebras=[options[k] for k in ('algebra', 'algebra_b') if options.get(k)],
                selectors=self.selectors(options),
                tolerance=options['tol'] if options['tol'] is not None else float(get_config('TOLERANCE')),
                seed=options['seed'] if options['seed'] is not None else int(get_config('SEED')),
                output_format=options['output_format'] or get_config('REPORT_FORMAT'),
                out=options['out'],
            )
        except StructuralError as e:
            raise CommandError(str(e), returncode=2)

        self.report = Report.start(config, argv)
        overrides = dict(getattr(settings, 'VORTEX_CENTER', {}), TOLERANCE=config.tolerance, SEED=config.seed)
        try:
            with override_settings(VORTEX_CENTER=overrides):
                self.run(config, self.report, options)
        except (StructuralError, SingularityError, UnsupportedError, SplittingError) as e:
            logger.error(f"[{self.name}] {type(e).__name__}: {e}")
            raise CommandError(f"{type(e).__name__}: {e}", returncode=2)
        except VerificationError as e:
            self.report.check(type(e).__name__, e.residual, False, str(e))

        target = self.report.emit(config, self.stdout)
        if target is not None:
            self.stdout.write(self.style.SUCCESS(f"Relatório gravado em {target}"))
        if not self.report.passed:
            raise CommandError(f"verificações reprovadas: {', '.join(self.report.failures)}", returncode=1)

    def _argv(self, options) -> List[str]:
        """Eco estável do comando; o caminho de --out fica de fora"""
        argv = [self.name.replace('_', '-')] + ([str(options['category'])] if options.get('category') else [])
        skip = {'category', 'out', 'verbosity', 'settings', 'pythonpath', 'traceback', 'no_color',
                'force_color', 'skip_checks'}
        for key in sorted(options):
            value = options[key]
            if key in skip or value is None or value is False:
                continue
            flag = '--' + FLAG_NAMES.get(key, key.replace('_', '-'))
            if value is True:
                argv.append(flag)
            elif isinstance(value, (list, tuple)):
                argv.extend([flag] + [str(v) for v in value])
            else:
                argv.extend([flag, str(value)])
        return argv

    @property
    def name(self) -> str:
        return self.__module__.rsplit('.', 1)[-1]

