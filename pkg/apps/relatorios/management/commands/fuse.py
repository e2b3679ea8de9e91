# apps/relatorios/management/commands/fuse.py

from ...base import VortexCommand
from ...formats import parse_object


class Command(VortexCommand):
    help = "Produto de fusão de dois objetos, ex: fuse fib tau tau ou fuse vecz2 '1+g' g"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('objects', nargs=2, metavar='OBJ', help="Objetos como '2*1+tau'")

    def selectors(self, options):
        return list(options['objects'])

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        x, y = (parse_object(cat, text) for text in options['objects'])
        product = cat.fuse(x, y)

        report.artifact('x', cat.describe(x))
        report.artifact('y', cat.describe(y))
        report.artifact('product', cat.describe(product))
        report.artifact('multiplicities', list(product.mult))
        gap = abs(cat.fpdim(product) - cat.fpdim(x) * cat.fpdim(y))
        report.check_below('fpdim_multiplicative', gap, 1e-6, f"fpdim = {cat.fpdim(product):.6f}")
