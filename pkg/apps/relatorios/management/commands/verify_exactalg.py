# apps/relatorios/management/commands/verify_exactalg.py

from apps.braided.formula import verify_exactalg

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Coequalizador de Z(L)⊗(L⊗x⊗L) ⇉ L⊗x⊗L contra dim Hom(x, L)·L para cada simples x'
    uses_algebra = True

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        L = self.load_algebra(cat, options['algebra'])
        result = verify_exactalg(L)

        report.artifact('algebra', result['algebra'])
        report.artifact('full_center', result['full_center'])
        report.table(
            'por simples',
            ['simples', 'quociente', 'esperado', 'confere'],
            [[label, cat.describe(cat.obj(dict(zip(cat.data.simples, entry['quotient'])))),
              cat.describe(cat.obj(dict(zip(cat.data.simples, entry['expected'])))), entry['match']]
             for label, entry in result['per_simple'].items()],
        )
        for label, entry in result['per_simple'].items():
            report.check(f"carrier[{label}]", None, entry['match'])
        unit_entry = result['per_simple'][cat.data.simples[cat.unit]]
        report.check_below('multiplication_coequalizes', unit_entry['coequalizes'], max(config.tolerance * 1e3, 1e-8))
        report.check('induced_iso', None, unit_entry['induced_iso'], 'm: L⊗L → L induz quociente ≅ L')
