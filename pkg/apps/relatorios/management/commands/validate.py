# apps/relatorios/management/commands/validate.py

from apps.core.validation import validate_category

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Valida os dados de uma categoria de fusão: pentágono, hexágonos, unidade, rigidez e F invertíveis'

    def run(self, config, report, options):
        data, cat = self.load_category(options['category'])
        result = validate_category(data, cat)
        tolerance = config.tolerance

        report.artifact('category', data.name)
        report.artifact('simples', list(data.simples))
        report.artifact('braided', cat.braided)
        report.artifact('global_dim', cat.global_dim())
        report.table(
            'simples',
            ['simples', 'dual', 'qdim', 'fpdim'],
            [[label, data.simples[data.dual[a]], cat.qdim(cat.simple(a)), cat.fpdim(cat.simple(a))]
             for a, label in enumerate(data.simples)],
        )
        for family, residual in result.residuals.items():
            worst = result.worst.get(family)
            detail = f"pior em {tuple(data.simples[k] for k in worst)}" if worst else ''
            report.check_below(family, residual, tolerance, detail)
        report.notes.extend(result.notes)
