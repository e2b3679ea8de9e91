# apps/algebras/laws.py

"""
Leis de álgebra: associatividade, unidade (e sua unicidade),
conexidade, separabilidade e simplicidade.
"""

import logging
from typing import Optional, Tuple

import numpy as np

from apps.core.conf import default_tolerance
from apps.core.exceptions import UnsupportedError
from apps.core.utils import solve_affine

from .models import Algebra, AlgebraReport, Bimodule, SeparabilityWitness

logger = logging.getLogger(__name__)


def associativity_residual(A: Algebra) -> Tuple[float, Optional[int]]:
    """max |m(m⊗id) - m(id⊗m)α| e o bloco (simples) onde ocorre"""
    amb = A.ambient
    ident = A.identity
    lhs = A.mult @ amb.tensor_mor(A.mult, ident)
    rhs = A.mult @ amb.tensor_mor(ident, A.mult) @ amb.associator(A.carrier, A.carrier, A.carrier)
    diff = lhs - rhs
    worst, worst_block = 0.0, None
    for c, block in enumerate(diff.blocks):
        if block.size and float(np.max(np.abs(block))) > worst:
            worst, worst_block = float(np.max(np.abs(block))), c
    return worst, worst_block


def unit_residuals(A: Algebra) -> Tuple[float, float]:
    amb = A.ambient
    ident = A.identity
    left = A.mult @ amb.tensor_mor(A.unit, ident)
    right = A.mult @ amb.tensor_mor(ident, A.unit)
    return left.distance(ident), right.distance(ident)


def unit_solutions(A: Algebra, tol: float) -> int:
    """
    Número de unidades compatíveis com m: 0 se o sistema não tem solução,
    1 se a solução é única, e 1 + dim do núcleo caso contrário.
    """
    amb = A.ambient
    ident = A.identity
    basis = amb.hom_basis(amb.unit_object(), A.carrier)
    if not basis:
        return 0

    def operator(u):
        return [A.mult @ amb.tensor_mor(u, ident), A.mult @ amb.tensor_mor(ident, u)]

    _, residual, kernel_dim = solve_affine(operator, basis, [ident, ident], tol)
    if residual > tol:
        return 0
    return 1 + kernel_dim


def separability_witness(A: Algebra, tol: Optional[float] = None) -> SeparabilityWitness:
    """
    Seção de norma mínima e: A → A⊗A com m∘e = id e
    e∘m = (m⊗id)α⁻¹(id⊗e) = (id⊗m)α(e⊗id).
    """
    tol = tol or default_tolerance()
    amb = A.ambient
    AA = amb.tensor(A.carrier, A.carrier)
    ident = A.identity
    basis = amb.hom_basis(A.carrier, AA)
    if not basis:
        return SeparabilityWitness(section=None, residual=float('inf'))
    zero = (basis[0] @ A.mult) * 0
    assoc = amb.associator(A.carrier, A.carrier, A.carrier)
    assoc_inv = amb.associator_inv(A.carrier, A.carrier, A.carrier)

    def operator(e):
        return [
            A.mult @ e,
            e @ A.mult - amb.tensor_mor(A.mult, ident) @ assoc_inv @ amb.tensor_mor(ident, e),
            e @ A.mult - amb.tensor_mor(ident, A.mult) @ assoc @ amb.tensor_mor(e, ident),
        ]

    section, residual, kernel_dim = solve_affine(operator, basis, [ident, zero, zero], tol)
    logger.debug(f"Separabilidade de {A.name}: resíduo {residual:.3e}, núcleo {kernel_dim}")
    return SeparabilityWitness(section=section, residual=residual, kernel_dim=kernel_dim)


def require_separable(A: Algebra) -> SeparabilityWitness:
    witness = separability_witness(A)
    if witness.section is None or witness.residual > default_tolerance():
        raise UnsupportedError(f"álgebra {A.name or '?'} não é separável; categoria de módulos não semissimples")
    return witness


def regular_bimodule(A: Algebra) -> Bimodule:
    return Bimodule(A, A, A.carrier, A.mult, A.mult, name=A.name)


def check_algebra(A: Algebra, tol: Optional[float] = None) -> AlgebraReport:
    """Relatório completo das leis de uma álgebra"""
    from .modules import hom_mod

    tol = tol or default_tolerance()
    amb = A.ambient
    report = AlgebraReport(name=A.name, tolerance=tol)
    report.associativity, report.worst_block = associativity_residual(A)
    report.left_unit, report.right_unit = unit_residuals(A)
    report.unit_solutions = unit_solutions(A, tol)
    report.connected_dim = len(amb.hom_basis(amb.unit_object(), A.carrier))

    witness = separability_witness(A, tol)
    report.witness = witness
    report.separable = witness.section is not None and witness.residual < tol

    if report.associative and report.unital:
        report.simple_dim = len(hom_mod(regular_bimodule(A), regular_bimodule(A)))
    else:
        report.notes.append("simplicidade não avaliada: leis de álgebra falharam")

    if report.worst_block is not None and not report.associative:
        report.notes.append(f"pior resíduo de associatividade no bloco {report.worst_block}")
    nivel = logging.INFO if report.passed else logging.WARNING
    logger.log(nivel, f"Álgebra {A.name}: associativa={report.associative} unital={report.unital} "
                      f"separável={report.separable} simples={report.simple}")
    return report
