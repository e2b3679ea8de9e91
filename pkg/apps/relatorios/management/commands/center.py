# apps/relatorios/management/commands/center.py

import numpy as np

from apps.center.drinfeld import drinfeld_center

from ...base import VortexCommand


class Command(VortexCommand):
    help = 'Simples do centro de Drinfeld Z(C) com qdim, twist, matriz S e checagens modulares'

    def run(self, config, report, options):
        _, cat = self.load_category(options['category'])
        center = drinfeld_center(cat, config.seed)

        report.artifact('rank', center.rank)
        report.artifact('global_dim', center.global_dim)
        report.artifact('twists', list(center.twists))
        report.table(
            f"Z({cat.name})",
            ['simples', 'portador', 'qdim', 'twist', 'hexágono'],
            [[z.name, cat.describe(z.carrier), center.qdims[k], center.twists[k], z.hexagon_residual()]
             for k, z in enumerate(center.simples)],
        )
        report.table('S', [''] + center.names,
                      [[name] + list(row) for name, row in zip(center.names, center.S)])

        expected = cat.global_dim() ** 2
        report.check_below('dimension', abs(center.global_dim - expected), 1e-6,
                           f"Σd² = {center.global_dim:.6f}, dim(C)² = {expected:.6f}")
        report.check_below('half_braiding_hexagon', max(z.hexagon_residual() for z in center.simples), 1e-8)
        report.check_below('verlinde', center.verlinde_residual(), 1e-6)
        unitary = np.max(np.abs(center.S @ np.conj(center.S.T) - np.eye(center.rank)))
        report.check_below('s_unitary', float(unitary), 1e-6)
        transparent = center.transparent()
        report.check('nondegenerate', None, center.is_nondegenerate(),
                     f"transparentes: {[center.names[k] for k in transparent]}")
