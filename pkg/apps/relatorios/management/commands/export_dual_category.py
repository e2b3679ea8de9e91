# apps/relatorios/management/commands/export_dual_category.py

from apps.center.drinfeld import drinfeld_center
from apps.center.export import export_dual_category
from apps.core.category import FusionCategory
from apps.core.validation import validate_category

from ...base import VortexCommand
from ...formats import save_category


class Command(VortexCommand):
    help = 'Exporta _A C_A como arquivo de categoria, valida e opcionalmente compara Z(_A C_A) com Z(C)'
    uses_algebra = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--emit', required=True, help='Arquivo JSON da categoria exportada')
        parser.add_argument('--name', default=None, help='Nome da categoria exportada')
        parser.add_argument('--compare-centers', dest='compare_centers', action='store_true',
                            help='Compara o multiconjunto (qdim, T) de Z(_A C_A) com o de Z(C)')

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        data = export_dual_category(A, options['name'], config.seed)
        path = save_category(data, options['emit'])

        exported = FusionCategory(data)
        validation = validate_category(data, exported)
        report.artifact('exported', data.name)
        report.artifact('simples', list(data.simples))
        report.artifact('global_dim', exported.global_dim())
        report.artifact('file', path.name)
        for family, residual in validation.residuals.items():
            report.check_below(family, residual, max(config.tolerance * 1e3, 1e-8))
        report.check_below('global_dim_preserved', abs(exported.global_dim() - cat.global_dim()), 1e-6)

        if options['compare_centers']:
            original = drinfeld_center(cat, config.seed).modular_pairs()
            dual = drinfeld_center(exported, config.seed).modular_pairs()
            report.table('(qdim, Re θ, Im θ)', ['Z(C)', 'Z(_A C_A)'],
                         [[list(p), list(q)] for p, q in zip(original, dual)])
            gap = max((max(abs(x - y) for x, y in zip(p, q)) for p, q in zip(original, dual)), default=0.0)
            same = len(original) == len(dual) and gap < 1e-6
            report.check('centers_match', gap if len(original) == len(dual) else None, same,
                         f"{len(original)} contra {len(dual)} simples")
