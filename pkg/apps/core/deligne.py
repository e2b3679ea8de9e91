# apps/core/deligne.py

"""
Produto de Deligne C ⊠ D de duas categorias de fusão esqueléticas.

Simples são pares (i, j) com índice i·posto(D) + j; fusão, símbolos F e R
multiplicam componente a componente e os índices de multiplicidade são
achatados como μ = μ_C·N_D + μ_D.
"""

import itertools
import logging

from .category import FusionCategory
from .models import CategoryData

logger = logging.getLogger(__name__)


def _pair_label(left: str, right: str, left_rank: int, right_rank: int) -> str:
    if right_rank == 1:
        return left
    if left_rank == 1:
        return right
    return f"{left}⊠{right}"


def deligne_product(c: CategoryData, d: CategoryData) -> CategoryData:
    """C ⊠ D; se um dos fatores tem posto 1 os rótulos do outro são preservados"""
    cc = FusionCategory(c)
    dd = FusionCategory(d)
    r1, r2 = cc.rank, dd.rank

    def idx(i: int, j: int) -> int:
        return i * r2 + j

    simples = tuple(
        _pair_label(a, b, r1, r2) for a, b in itertools.product(c.simples, d.simples)
    )
    dual = tuple(idx(int(cc.dual[i]), int(dd.dual[j])) for i in range(r1) for j in range(r2))

    fusion = {}
    for (a1, b1, c1), n1 in c.fusion.items():
        for (a2, b2, c2), n2 in d.fusion.items():
            fusion[(idx(a1, a2), idx(b1, b2), idx(c1, c2))] = n1 * n2

    f_symbols = {}
    blocks_d = dd.f_blocks()
    for (a1, b1, c1, d1), blk1 in cc.f_blocks().items():
        for (a2, b2, c2, d2), blk2 in blocks_d.items():
            key4 = (idx(a1, a2), idx(b1, b2), idx(c1, c2), idx(d1, d2))
            for i1, (e1, mu1, nu1) in enumerate(blk1.rows):
                for j1, (f1, rho1, sg1) in enumerate(blk1.cols):
                    v1 = blk1.matrix[i1, j1]
                    if v1 == 0:
                        continue
                    for i2, (e2, mu2, nu2) in enumerate(blk2.rows):
                        for j2, (f2, rho2, sg2) in enumerate(blk2.cols):
                            v2 = blk2.matrix[i2, j2]
                            if v2 == 0:
                                continue
                            mu = mu1 * dd.N[a2, b2, e2] + mu2
                            nu = nu1 * dd.N[e2, c2, d2] + nu2
                            rho = rho1 * dd.N[b2, c2, f2] + rho2
                            sigma = sg1 * dd.N[a2, f2, d2] + sg2
                            key = key4 + (idx(e1, e2), idx(f1, f2), mu, nu, rho, sigma)
                            f_symbols[key] = complex(v1 * v2)

    r_symbols = None
    if cc.braided and dd.braided:
        r_symbols = {}
        for (a1, b1, c1), n1 in c.fusion.items():
            R1 = cc.r_matrix(a1, b1, c1)
            for (a2, b2, c2), n2 in d.fusion.items():
                R2 = dd.r_matrix(a2, b2, c2)
                for mu1, nu1 in itertools.product(range(n1), repeat=2):
                    for mu2, nu2 in itertools.product(range(n2), repeat=2):
                        value = R1[mu1, nu1] * R2[mu2, nu2]
                        if value != 0:
                            key = (idx(a1, a2), idx(b1, b2), idx(c1, c2), mu1 * n2 + mu2, nu1 * n2 + nu2)
                            r_symbols[key] = complex(value)

    pivotal = None
    if c.pivotal is not None or d.pivotal is not None:
        pivotal = tuple(c.pivotal_of(i) * d.pivotal_of(j) for i in range(r1) for j in range(r2))

    logger.info(f"Produto de Deligne {c.name} ⊠ {d.name}: {len(simples)} simples")
    return CategoryData(
        name=f"{c.name}⊠{d.name}",
        simples=simples,
        unit=idx(c.unit, d.unit),
        dual=dual,
        fusion=fusion,
        f_symbols=f_symbols,
        r_symbols=r_symbols,
        pivotal=pivotal,
        tolerance=max(c.tolerance, d.tolerance),
    )
