# apps/relatorios/management/commands/modules.py

from apps.algebras.laws import regular_bimodule
from apps.algebras.modules import (
    completeness_residual,
    hom_mod,
    module_category_dim,
    simple_bimodules,
    simple_modules,
)

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Módulos à direita e bimódulos simples de uma álgebra separável, com checagem de completude'
    uses_algebra = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--no-bimodules', dest='no_bimodules', action='store_true',
                            help='Lista apenas os módulos à direita')

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        right = simple_modules(A, 'right', config.seed)

        report.artifact('algebra', A.name)
        report.artifact('right_modules', len(right))
        report.artifact('module_category_dim', module_category_dim(A, right))
        report.table('C_A', ['módulo', 'portador', 'fpdim'],
                     [[M.name, cat.describe(M.obj), cat.fpdim(M.obj)] for M in right])
        report.check_below('completeness', completeness_residual(A, right), 1e-6,
                           'Σ fpdim(m)·mult(m, x⊗A) = fpdim(A)·fpdim(x)')

        if not options['no_bimodules']:
            bimodules = simple_bimodules(A, seed=config.seed)
            report.artifact('bimodules', len(bimodules))
            report.table('_A C_A', ['bimódulo', 'portador', 'fpdim'],
                         [[X.name, cat.describe(X.obj), cat.fpdim(X.obj)] for X in bimodules])
            if len(hom_mod(regular_bimodule(A), regular_bimodule(A))) != 1:
                report.notes.append('A não é simples: dimensão de _A C_A não comparada')
                return
            dim = sum((cat.fpdim(X.obj) / cat.fpdim(A.obj)) ** 2 for X in bimodules)
            report.check_below('dual_dimension', abs(dim - cat.fp_global_dim()), 1e-6,
                               f"dim _A C_A = {dim:.6f}")
