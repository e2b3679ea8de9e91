# apps/core/validation.py

"""
Validação de coerência de uma categoria de fusão.

Calcula resíduos máximos para: leis de unidade e dualidade do anel de
fusão, associatividade do anel, invertibilidade das F-matrizes, pentágono,
restrições de unidade, hexágonos (se houver R) e rigidez (zigue-zague).
"""

import itertools
import logging
from typing import Optional

import numpy as np

from .category import FusionCategory
from .exceptions import SingularityError
from .models import CategoryData, Mor, ValidationReport

logger = logging.getLogger(__name__)


def _fusion_ring_residuals(cat: FusionCategory, report: ValidationReport):
    N = cat.N
    r = cat.rank
    u = cat.unit
    eye = np.eye(r, dtype=int)

    unit_gap = max(np.abs(N[u] - eye).max(), np.abs(N[:, u, :] - eye).max())
    report.residuals['fusion_unit'] = float(unit_gap)

    dual_gap = 0
    for a in range(r):
        for b in range(r):
            dual_gap = max(dual_gap, abs(int(N[a, b, u]) - int(b == cat.dual[a])))
    report.residuals['fusion_duality'] = float(dual_gap)

    left = np.einsum('abe,ecd->abcd', N, N)
    right = np.einsum('bcf,afd->abcd', N, N)
    report.residuals['fusion_associativity'] = float(np.abs(left - right).max())


def _f_invertibility(cat: FusionCategory, report: ValidationReport):
    worst = 0.0
    for key, block in cat.f_blocks().items():
        s = np.linalg.svd(block.matrix, compute_uv=False)
        if s.size and s.min() < 1e-12:
            raise SingularityError(f"F-matrix {key} não é invertível (σ_min={s.min():.2e})")
        if s.size:
            worst = max(worst, float(s.max() / s.min()))
    report.notes.append(f"maior número de condição das F-matrizes: {worst:.4g}")
    report.residuals['f_invertibility'] = 0.0


def _unit_residual(cat: FusionCategory, report: ValidationReport):
    worst = 0.0
    worst_key = ()
    for (a, b, c, d), block in cat.f_blocks().items():
        if cat.unit in (a, b, c):
            gap = float(np.abs(block.matrix - np.eye(block.matrix.shape[0])).max())
            if gap > worst:
                worst, worst_key = gap, (a, b, c, d)
    report.residuals['unit'] = worst
    if worst_key:
        report.worst['unit'] = worst_key


def pentagon_residual(cat: FusionCategory, a: int, b: int, c: int, d: int) -> float:
    A, B, C, D = (cat.simple(i) for i in (a, b, c, d))
    AB = cat.fuse(A, B)
    BC = cat.fuse(B, C)
    CD = cat.fuse(C, D)
    lhs = cat.associator(A, B, CD) @ cat.associator(AB, C, D)
    rhs = (cat.tensor_mor(Mor.identity(A), cat.associator(B, C, D))
           @ cat.associator(A, BC, D)
           @ cat.tensor_mor(cat.associator(A, B, C), Mor.identity(D)))
    return lhs.distance(rhs)


def hexagon_residuals(cat: FusionCategory, a: int, b: int, c: int):
    A, B, C = (cat.simple(i) for i in (a, b, c))
    residuals = []
    for braid in (cat.braiding, cat.braiding_inverse):
        lhs = (cat.associator(B, C, A)
               @ braid(A, cat.fuse(B, C))
               @ cat.associator(A, B, C))
        rhs = (cat.tensor_mor(Mor.identity(B), braid(A, C))
               @ cat.associator(B, A, C)
               @ cat.tensor_mor(braid(A, B), Mor.identity(C)))
        residuals.append(lhs.distance(rhs))
    return residuals


def validate_category(data: CategoryData, cat: Optional[FusionCategory] = None) -> ValidationReport:
    """
    Valida os dados de uma categoria de fusão.

    Erros estruturais (tupla F ausente) surgem ao construir o motor;
    F-matrizes singulares levantam SingularityError.
    """
    cat = cat or FusionCategory(data)
    report = ValidationReport(category=data.name, tolerance=data.tolerance)
    logger.info(f"Validando categoria {data.name} (posto {cat.rank})")

    _fusion_ring_residuals(cat, report)
    _f_invertibility(cat, report)
    _unit_residual(cat, report)

    worst = 0.0
    worst_key = ()
    for quad in itertools.product(range(cat.rank), repeat=4):
        gap = pentagon_residual(cat, *quad)
        if gap > worst:
            worst, worst_key = gap, quad
    report.residuals['pentagon'] = worst
    if worst_key:
        report.worst['pentagon'] = worst_key
    logger.debug(f"Pentágono de {data.name}: resíduo {worst:.3e}")

    if cat.braided:
        worst1 = worst2 = 0.0
        for triple in itertools.product(range(cat.rank), repeat=3):
            h1, h2 = hexagon_residuals(cat, *triple)
            if h1 > worst1:
                worst1 = h1
                report.worst['hexagon'] = triple
            if h2 > worst2:
                worst2 = h2
                report.worst['hexagon_inverse'] = triple
        report.residuals['hexagon'] = worst1
        report.residuals['hexagon_inverse'] = worst2

    rigidity = 0.0
    for a in range(cat.rank):
        rigidity = max(rigidity, *cat.zigzag_residuals(cat.simple(a)))
    report.residuals['rigidity'] = rigidity

    gap = cat.sphericality_residual()
    report.notes.append('esférica' if gap < 1e-6 else f'não esférica (gap {gap:.3e})')

    nivel = logging.INFO if report.passed else logging.WARNING
    logger.log(nivel, f"Categoria {data.name}: {'aprovada' if report.passed else 'reprovada'}")
    return report
