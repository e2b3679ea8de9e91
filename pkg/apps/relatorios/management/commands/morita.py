# apps/relatorios/management/commands/morita.py

from apps.braided.picard import morita_test
from apps.center.drinfeld import drinfeld_center

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Teste de Morita: A e B são Morita equivalentes sse Z(A) ≅ Z(B) como álgebras em Z(C)'
    uses_algebra = True
    uses_second_algebra = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--expect', choices=('equivalent', 'inequivalent'), default=None,
                            help='Transforma o veredito em verificação')

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        B = self.load_algebra(cat, options['algebra_b'])
        center = drinfeld_center(cat, config.seed)
        verdict = morita_test(A, B, center, config.seed)
        iso = verdict['iso']

        report.artifact('algebras', [A.name, B.name])
        report.artifact('full_centers', [cat.describe(ZX.obj) for ZX in verdict['full_centers']])
        report.artifact('equivalent', verdict['equivalent'])
        report.artifact('method', iso.method)
        report.artifact('exhaustive', iso.exhaustive)
        if iso.reason:
            report.artifact('reason', iso.reason)
        if iso:
            report.artifact('witness', [list(s) for s in iso.scalars] if iso.scalars else 'numérica')
            report.check_below('witness_homomorphism', iso.residual, max(config.tolerance * 1e3, 1e-7))
            report.check('witness_invertible', None, iso.map.is_invertible(1e-8))
        if options['expect']:
            expected = options['expect'] == 'equivalent'
            report.check('expected_verdict', None, verdict['equivalent'] == expected,
                         f"esperado {options['expect']}")
