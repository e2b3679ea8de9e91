# apps/homs/ends.py

"""
Fins ∫_x F(x,x) sobre categorias semissimples apresentadas.

O fim é sempre calculado como o equalizador das restrições de naturalidade
dentro de ⊕_k F(o_k, o_k), mesmo quando a teoria prevê a soma sobre os
simples; a divergência é erro.
"""

import logging
from typing import List, Optional

from apps.algebras.laws import require_separable
from apps.algebras.models import Algebra, Module
from apps.algebras.modules import direct_sum_modules, simple_modules
from apps.core.exceptions import VerificationError
from apps.core.models import Mor

from .internal import internal_hom, ihom_map
from .models import EndDiagram, EndResult

logger = logging.getLogger(__name__)


def end_over(diagram: EndDiagram, check_sum: bool = True) -> EndResult:
    """Equalizador das restrições de naturalidade"""
    amb = diagram.ambient
    total, injections, projections = amb.direct_sum(list(diagram.diagonal))
    if diagram.constraints:
        targets = [left.dst for _, _, left, _ in diagram.constraints]
        stacked, target_inj, _ = amb.base.direct_sum(targets)
        D = Mor.zero(amb.carrier(total), stacked)
        for (i, j, left, right), inj in zip(diagram.constraints, target_inj):
            D = D + inj @ (left @ projections[i] - right @ projections[j])
    else:
        D = Mor.zero(amb.carrier(total), amb.carrier(total))
    carrier, iota, _ = amb.kernel(D, total)
    wedges = [p @ iota for p in projections]

    expected = amb.carrier(diagram.diagonal[0])
    for obj in diagram.diagonal[1:diagram.simple_count]:
        expected = expected + amb.carrier(obj)
    result = EndResult(carrier=carrier, iota=iota, wedges=wedges, expected=expected)
    result.naturality = max(((left @ wedges[i]) - (right @ wedges[j])).max_abs()
                            for i, j, left, right in diagram.constraints) if diagram.constraints else 0.0
    logger.debug(f"Fim: {len(diagram.diagonal)} objetos, {len(diagram.constraints)} restrições, "
                 f"portador {result.obj.mult}")
    if check_sum and result.obj != expected:
        raise VerificationError(f"fim {result.obj.mult} difere da soma sobre simples {expected.mult}",
                                residual=float(sum(abs(p - q) for p, q in zip(result.obj.mult, expected.mult))))
    return result


def ihom_end_diagram(A: Algebra, simples: Optional[List[Module]] = None) -> EndDiagram:
    """
    F(x,y) = [x,y]_C sobre C_A: simples e as somas x_i⊕x_j, com restrições
    pelas inclusões e projeções canônicas.
    """
    require_separable(A)
    simples = simples or simple_modules(A, 'right')
    objects: List[Module] = list(simples)
    arrows = []
    n = len(simples)
    for i in range(n):
        for j in range(i + 1, n):
            summed, injections, projections = direct_sum_modules([simples[i], simples[j]])
            k = len(objects)
            objects.append(summed)
            for pos, s in ((0, i), (1, j)):
                arrows.append((s, k, injections[pos]))
                arrows.append((k, s, projections[pos]))

    homs = {}

    def H(p: int, q: int):
        if (p, q) not in homs:
            homs[(p, q)] = internal_hom(A, objects[p], objects[q])
        return homs[(p, q)]

    diagram = EndDiagram(ambient=A.ambient, diagonal=[H(k, k).carrier for k in range(len(objects))],
                         simple_count=n, labels=[M.name for M in objects])
    for src, dst, f in arrows:
        # f: o_src → o_dst; F(o_src, f) e F(f, o_dst) chegam em F(o_src, o_dst)
        left = ihom_map(H(src, src), H(src, dst), post=f)
        right = ihom_map(H(dst, dst), H(src, dst), pre=f)
        diagram.constraints.append((src, dst, left, right))
    return diagram


def full_center_end(A: Algebra) -> EndResult:
    """∫_{x∈C_A}[x,x]_C, portador do centro pleno"""
    return end_over(ihom_end_diagram(A))
