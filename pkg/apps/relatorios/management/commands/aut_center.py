# apps/relatorios/management/commands/aut_center.py

from apps.braided.isomorphism import automorphism_group
from apps.braided.picard import pic_to_aut
from apps.center.drinfeld import drinfeld_center
from apps.center.full_center import full_center

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Aut(Z(A)) e a comparação M ↦ σ_M de Pic(A) em Aut(Z(A))'
    uses_algebra = True

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--no-compare', dest='no_compare', action='store_true',
                            help='Não compara com Pic(A)')

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        center = drinfeld_center(cat, config.seed)
        ZA = full_center(A, center, config.seed, cross_check=False)
        aut = automorphism_group(ZA.algebra, config.seed)

        report.artifact('full_center', center.category.describe(ZA.obj))
        report.artifact('aut_order', aut.order)
        report.artifact('aut_group', aut.identify())
        report.artifact('exhaustive', aut.exhaustive)
        report.table('Aut(Z(A))', [''] + aut.elements,
                     [[aut.elements[i]] + [aut.elements[k] if k >= 0 else '?' for k in row]
                      for i, row in enumerate(aut.table)])
        report.check('aut_group_axioms', None, aut.is_group(), '; '.join(aut.notes))
        if not aut.exhaustive:
            report.notes.append('non-exhaustive')

        if options['no_compare']:
            return
        comparison = pic_to_aut(A, center, config.seed, aut=aut)
        pic = comparison['pic']
        report.artifact('pic_order', pic.order)
        report.artifact('pic_group', pic.identify())
        report.table('Pic(A) → Aut(Z(A))', ['bimódulo', 'σ_M'],
                     [[pic.elements[k], aut.elements[j] if j >= 0 else '?']
                      for k, j in enumerate(comparison['images'])])
        strict = max(config.tolerance * 1e3, 1e-7)
        report.check_below('sigma_automorphism', comparison['automorphism_residual'], strict)
        report.check('same_order', None, pic.order == aut.order, f"|Pic| = {pic.order}, |Aut| = {aut.order}")
        report.check('homomorphism', None, comparison['homomorphism'],
                     'convenção σ_{M⊗N} = σ_M∘σ_N; anti-homomorfismo: '
                     + ('sim' if comparison['anti_homomorphism'] else 'não'))
        report.check('bijective', None, comparison['bijective'])
