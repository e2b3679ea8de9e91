# apps/relatorios/management/commands/algebra_check.py

from apps.algebras.laws import check_algebra

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Confere associatividade, unidade, separabilidade, conexidade e simplicidade de uma álgebra em C'
    uses_algebra = True

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        result = check_algebra(A, config.tolerance)

        report.artifact('algebra', A.name)
        report.artifact('carrier', cat.describe(A.obj))
        report.artifact('connected', result.connected)
        report.artifact('simple', result.simple)
        for name, residual, passed in result.checks():
            report.check(name, residual, passed)
        report.notes.extend(result.notes)
