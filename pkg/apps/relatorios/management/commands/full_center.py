# apps/relatorios/management/commands/full_center.py

from apps.center.drinfeld import drinfeld_center
from apps.center.full_center import center_sum_map, full_center, is_full_center_lagrangian

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Centro pleno Z(A) em Z(C): portador, decomposição, comutatividade, Davydov e teste lagrangiano'
    uses_algebra = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--sum-with', dest='sum_with', default=None,
                            help='Também confere Z(A⊕B) ≅ Z(A)⊕Z(B) para esta álgebra B')

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        center = drinfeld_center(cat, config.seed)
        ZA = full_center(A, center, config.seed)
        strict = max(config.tolerance * 1e3, 1e-8)

        decomposition = center.decompose(ZA.carrier)
        parts = [name if m == 1 else f"{m}·{name}" for name, m in zip(center.names, decomposition) if m]
        lagrangian = is_full_center_lagrangian(ZA) if ZA.connected else False

        report.artifact('algebra', A.name)
        report.artifact('carrier', cat.describe(ZA.obj))
        report.artifact('decomposition', ' ⊕ '.join(parts))
        report.artifact('connected', ZA.connected)
        report.artifact('separable', ZA.separable)
        report.artifact('lagrangian', 'yes' if lagrangian else 'no')
        report.artifact('fpdim', cat.fpdim(ZA.obj))
        report.table(
            'terminalidade',
            ['simples', 'dim Hom_Z(b, Z(A))', 'dim V_b', 'posto'],
            [[name] + list(dims) for name, dims in ZA.audits['terminality'].items()],
        )

        report.check_below('commutativity', ZA.commutativity, strict)
        report.check_below('davydov', ZA.audits['davydov'], strict)
        report.check_below('terminal_map', ZA.audits['terminal'], strict)
        report.check_below('associativity', ZA.audits['associativity'], strict)
        report.check_below('unit', ZA.audits['unit'], strict)
        report.check('end_carrier', None, ZA.audits.get('end_carrier', False), 'portador igual ao fim ∫[x,x]')
        if ZA.connected:
            gap = abs(cat.fpdim(ZA.obj) - cat.global_dim())
            report.check_below('fpdim_equals_global_dim', gap, 1e-6)

        if options['sum_with']:
            B = self.load_algebra(cat, options['sum_with'])
            summed = center_sum_map(A, B, center)
            report.artifact('sum', f"Z({A.name}⊕{B.name}) = {cat.describe(summed['full_center'].obj)}")
            report.check('center_sum_invertible', None, summed['invertible'])
            report.check_below('center_sum_homomorphism', summed['homomorphism_residual'], strict)
