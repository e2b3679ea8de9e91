# apps/center/full_center.py

"""
Centro pleno Z(A) de uma álgebra A em C.

Z(A) é o par terminal (Z, e: Z → A) com m(e⊗id) = m(id⊗e)β_{Z,A}. Para cada
simples Z_k do centro o espaço V_k dos f: Z_k → A que satisfazem o diagrama
fornece a multiplicidade de Z_k; a multiplicação e a unidade são os únicos
morfismos do centro compatíveis com e.
"""

import logging
from typing import Dict, List, Optional, Tuple

from apps.algebras.laws import associativity_residual, separability_witness, unit_residuals
from apps.algebras.models import Algebra
from apps.core.conf import default_tolerance
from apps.core.exceptions import UnsupportedError, VerificationError
from apps.core.models import Mor
from apps.core.utils import matrix_rank, matrix_units, operator_matrix, solve_affine, solve_kernel

from .drinfeld import drinfeld_center
from .models import CenterCategory, CenterObject, CommAlgebraInCenter

logger = logging.getLogger(__name__)


def davydov_space(A: Algebra, z: CenterObject, tol: Optional[float] = None) -> List[Mor]:
    """Base de {f: z → A em C : m(f⊗id) = m(id⊗f)β^z_A}"""
    tol = tol or default_tolerance()
    cat = A.ambient
    ia = A.identity
    beta = z.braid_over(A.obj)

    def operator(f: Mor) -> Mor:
        return A.mult @ cat.tensor_mor(f, ia) - A.mult @ cat.tensor_mor(ia, f) @ beta

    return solve_kernel(operator, matrix_units(z.carrier, A.obj), tol)


def davydov_residual(A: Algebra, z: CenterObject, e: Mor) -> float:
    cat = A.ambient
    ia = A.identity
    lhs = A.mult @ cat.tensor_mor(e, ia)
    rhs = A.mult @ cat.tensor_mor(ia, e) @ z.braid_over(A.obj)
    return lhs.distance(rhs)


def _solve_unique(label: str, operator, basis: List[Mor], target: Mor, tol: float) -> Mor:
    if not basis:
        raise VerificationError(f"{label}: espaço de morfismos do centro vazio", residual=target.max_abs())
    solution, residual, kernel_dim = solve_affine(operator, basis, target, tol)
    if residual > tol * 1e3 or kernel_dim:
        raise VerificationError(f"{label}: solução ausente ou não única (núcleo {kernel_dim})", residual=residual)
    return solution


def full_center(A: Algebra, center: Optional[CenterCategory] = None, seed: Optional[int] = None,
                cross_check: bool = True) -> CommAlgebraInCenter:
    """Z(A) com e: Z(A) → A, flags e auditorias"""
    cat = A.ambient
    if getattr(cat, 'kind', None) != 'plain':
        raise UnsupportedError("centro pleno só é calculado para álgebras em C")
    tol = default_tolerance()
    center = center or drinfeld_center(cat, seed)
    amb = center.ambient

    parts, maps = [], []
    for z in center.simples:
        space = davydov_space(A, z, tol)
        parts.extend([z] * len(space))
        maps.extend(space)
    if not parts:
        raise VerificationError(f"Z({A.name}) vazio: nenhum par de Davydov", residual=float('inf'))
    logger.info(f"Z({A.name}): {len(parts)} somandos simples do centro")

    Z, injections, projections = amb.direct_sum(parts, name=f"Z({A.name})")
    e = maps[0] @ projections[0]
    for v, p in zip(maps[1:], projections[1:]):
        e = e + v @ p

    ZZ = amb.tensor(Z, Z)
    mult = _solve_unique("multiplicação de Z(A)", lambda g: e @ g, amb.hom_basis(ZZ, Z),
                         A.mult @ cat.tensor_mor(e, e), tol)
    unit = _solve_unique("unidade de Z(A)", lambda g: e @ g, amb.hom_basis(amb.unit_object(), Z),
                         A.unit, tol)
    algebra = Algebra(amb, Z, unit, mult, name=f"Z({A.name})")

    commutativity = (mult @ amb.half_braiding(Z, Z)).distance(mult)
    if commutativity > max(tol * 1e3, 1e-8):
        raise VerificationError(f"Z({A.name}) não é comutativa", residual=commutativity)

    witness = separability_witness(algebra, tol)
    result = CommAlgebraInCenter(
        algebra=algebra,
        commutativity=commutativity,
        connected=len(amb.hom_basis(amb.unit_object(), Z)) == 1,
        separable=witness.section is not None and witness.residual < tol * 1e3,
        counit=e,
        source=A,
    )
    result.audits['davydov'] = davydov_residual(A, Z, e)
    result.audits['terminal'] = max((e @ mult).distance(A.mult @ cat.tensor_mor(e, e)),
                                    (e @ unit).distance(A.unit))
    result.audits['associativity'] = associativity_residual(algebra)[0]
    result.audits['unit'] = max(unit_residuals(algebra))
    result.audits['terminality'] = davydov_audit(A, result, center)
    if cross_check:
        result.audits['end_carrier'] = end_cross_check(A, result)
    logger.info(f"Z({A.name}) = {cat.describe(Z.carrier)}; comutatividade {commutativity:.2e}, "
                f"Davydov {result.audits['davydov']:.2e}")
    return result


def davydov_audit(A: Algebra, ZA: CommAlgebraInCenter, center: CenterCategory) -> Dict[str, Tuple[int, int, int]]:
    """
    Para cada simples b do centro: (dim Hom_Z(b, Z(A)), dim V_b, posto de g ↦ e∘g).

    Terminalidade exige os três iguais.
    """
    amb = center.ambient
    e = ZA.counit
    audit = {}
    for z in center.simples:
        homs = amb.hom_basis(z, ZA.carrier)
        space = davydov_space(A, z)
        rank = matrix_rank(operator_matrix(lambda g: e @ g, homs)) if homs else 0
        audit[z.name] = (len(homs), len(space), rank)
        if not len(homs) == len(space) == rank:
            raise VerificationError(f"terminalidade de Z({A.name}) falhou em {z.name}: {audit[z.name]}",
                                    residual=float(abs(len(homs) - len(space))))
    return audit


def end_cross_check(A: Algebra, ZA: CommAlgebraInCenter) -> bool:
    """Portador de Z(A) contra o fim ∫_{x∈C_A}[x,x]_C"""
    from apps.homs.ends import full_center_end

    end = full_center_end(A)
    if end.obj != ZA.obj:
        raise VerificationError(f"Z({A.name}): portador {ZA.obj.mult} difere do fim {end.obj.mult}",
                                residual=float(sum(abs(p - q) for p, q in zip(end.obj.mult, ZA.obj.mult))))
    return True


def is_full_center_lagrangian(ZA: CommAlgebraInCenter) -> bool:
    from .local import is_lagrangian

    ZA.lagrangian = is_lagrangian(ZA)
    return ZA.lagrangian


def center_sum_map(A: Algebra, B: Algebra, center: Optional[CenterCategory] = None) -> Dict:
    """
    Z(A⊕B) ≅ Z(A)⊕Z(B): o par (Z(A)⊕Z(B), e_A ⊕ e_B) é de Davydov para A⊕B, e o
    morfismo canônico g até Z(A⊕B) vem da terminalidade.
    """
    cat = A.ambient
    center = center or drinfeld_center(cat)
    amb = center.ambient
    tol = default_tolerance()
    AB = A.direct_sum(B)
    _, (ia, ib), _ = cat.direct_sum([A.carrier, B.carrier])
    ZA, ZB, ZAB = full_center(A, center), full_center(B, center), full_center(AB, center)

    summed = ZA.algebra.direct_sum(ZB.algebra, name=f"{ZA.name}⊕{ZB.name}")
    _, _, (qa, qb) = amb.direct_sum([ZA.carrier, ZB.carrier])
    e_sum = ia @ ZA.counit @ qa + ib @ ZB.counit @ qb
    g = _solve_unique("morfismo canônico Z(A)⊕Z(B) → Z(A⊕B)", lambda h: ZAB.counit @ h,
                      amb.hom_basis(summed.carrier, ZAB.carrier), e_sum, tol)
    invertible = g.is_square() and g.is_invertible(1e-8)
    hom_residual = max(
        (g @ summed.mult).distance(ZAB.algebra.mult @ amb.tensor_mor(g, g)),
        (g @ summed.unit).distance(ZAB.algebra.unit),
    )
    logger.info(f"Z({AB.name}) vs Z({A.name})⊕Z({B.name}): invertível={invertible}, resíduo {hom_residual:.2e}")
    return {
        'map': g,
        'invertible': invertible,
        'homomorphism_residual': hom_residual,
        'sum': summed,
        'full_center': ZAB,
        'passed': invertible and hom_residual < max(tol * 1e3, 1e-8),
    }
