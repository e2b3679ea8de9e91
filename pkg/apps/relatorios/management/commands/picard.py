# apps/relatorios/management/commands/picard.py

from apps.braided.picard import picard_group

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Grupo de Picard Pic(A): bimódulos invertíveis e a tabela de ⊗_A'
    uses_algebra = True

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        A = self.load_algebra(cat, options['algebra'])
        pic = picard_group(A, config.seed)

        report.artifact('algebra', A.name)
        report.artifact('order', pic.order)
        report.artifact('group', pic.identify())
        report.table('Pic', ['elemento', 'portador'],
                     [[label, cat.describe(X.obj)] for label, X in zip(pic.elements, pic.maps)])
        report.table('⊗_A', [''] + pic.elements,
                     [[pic.elements[i]] + [pic.elements[k] if k >= 0 else '?' for k in row]
                      for i, row in enumerate(pic.table)])
        report.check('group_axioms', None, pic.is_group(), '; '.join(pic.notes))
