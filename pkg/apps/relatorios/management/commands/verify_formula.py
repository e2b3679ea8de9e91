# apps/relatorios/management/commands/verify_formula.py

from apps.braided.formula import verify_formula_grid, verify_main_formula

from ...base import VortexCommand
from ...formats import parse_tuple


class Command(VortexCommand):
    help = "Confere [x,x']⊗_{Z(1)}[y,y'] ≅ [x⊗y, x'⊗y'] numa quádrupla ou em todas as quádruplas de simples"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--tuple', dest='tuple', default=None, help="x,x',y,y' (objetos)")
        parser.add_argument('--labels', default=None, help='Restringe a grade a estes simples, ex: 1,tau')

    def selectors(self, options):
        return [options[k] for k in ('tuple', 'labels') if options[k]]

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        if options['tuple']:
            results = [verify_main_formula(cat, *parse_tuple(cat, options['tuple'], 4))]
        else:
            labels = options['labels'].split(',') if options['labels'] else None
            if labels:
                for label in labels:
                    cat.data.index(label)
            results = verify_formula_grid(cat, labels)

        rows = []
        for r in results:
            residuals = r['residuals']
            rows.append([r['tuple'], list(r['lhs_multiplicities']), list(r['rhs_multiplicities']),
                         r['object_iso'], '-' if r['algebra_iso'] is None else r['algebra_iso'],
                         residuals.get('coequalizes', 0.0), r['passed']])
        report.table('fórmula de fusão', ['tupla', 'lhs', 'rhs', 'objetos', 'álgebras', 'coequaliza', 'ok'], rows)

        diagonal = [r for r in results if r['algebra_iso'] is not None]
        report.artifact('tuples', len(results))
        report.artifact('diagonal_tuples', len(diagonal))
        report.check('object_iso', None, all(r['object_iso'] for r in results),
                     f"{sum(r['object_iso'] for r in results)}/{len(results)}")
        report.check('inhom_dims', None, all(r['inhom_dims'][0] == r['inhom_dims'][1] for r in results))
        report.check_below('coequalizes', max(r['residuals']['coequalizes'] for r in results),
                           max(config.tolerance * 1e3, 1e-8))
        if diagonal:
            report.check('algebra_iso', None, all(r['algebra_iso'] for r in diagonal),
                         f"{sum(bool(r['algebra_iso']) for r in diagonal)}/{len(diagonal)}")
