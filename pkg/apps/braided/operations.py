# apps/braided/operations.py

"""
Operações com álgebras num ambiente trançado (Z(C) ou C com símbolos R).

A trança do ambiente é `half_braiding(x, y): x⊗y → y⊗x`; no centro é a
meia-trança do primeiro fator.
"""

import logging
from typing import Dict, Optional, Tuple

import numpy as np

from apps.algebras.laws import associativity_residual, unit_residuals
from apps.algebras.models import Algebra
from apps.algebras.modules import module_residuals
from apps.algebras.relative import RelativeTensor, tensor_over
from apps.core.conf import default_tolerance
from apps.core.exceptions import UnsupportedError, VerificationError
from apps.core.models import Mor
from apps.core.utils import solve_kernel

from .models import AlgebraOverCommutative

logger = logging.getLogger(__name__)


def _require_braided(amb):
    if amb.kind == 'plain' and not amb.braided:
        raise UnsupportedError(f"{amb.name} não tem trança: forneça símbolos R ou use o centro")


# === PRODUTO DE ÁLGEBRAS ===

def tensor_algebras(X: Algebra, Y: Algebra, name: str = '') -> Algebra:
    """X⊗Y com m = (m_X⊗m_Y)∘(id⊗c_{Y,X}⊗id) e unidade u_X⊗u_Y"""
    amb = X.ambient
    _require_braided(amb)
    x, y = X.carrier, Y.carrier
    ix, iy = X.identity, Y.identity
    carrier = amb.tensor(x, y)
    middle = amb.tensor_mor(ix, amb.tensor_mor(amb.half_braiding(y, x), iy))
    mult = (amb.tensor_mor(X.mult, Y.mult)
            @ amb.rebracket((x, ((x, y), y)), ((x, x), (y, y)))
            @ middle
            @ amb.rebracket(((x, y), (x, y)), (x, ((y, x), y))))
    unit = amb.tensor_mor(X.unit, Y.unit)
    return Algebra(amb, carrier, unit, mult, name=name or f"{X.name}⊗{Y.name}")


def commutativity_residual(A: Algebra) -> float:
    """|m∘c_{A,A} - m|"""
    amb = A.ambient
    _require_braided(amb)
    return (A.mult @ amb.half_braiding(A.carrier, A.carrier)).distance(A.mult)


def law_residuals(A: Algebra) -> Dict[str, float]:
    left, right = unit_residuals(A)
    return {'associativity': associativity_residual(A)[0], 'left_unit': left, 'right_unit': right}


# === CENTROS À ESQUERDA E À DIREITA ===

def _one_sided_center(A: Algebra, side: str) -> Tuple[Algebra, Mor]:
    amb = A.ambient
    _require_braided(amb)
    tol = default_tolerance()
    ia = A.identity
    parts, maps = [], []
    for b in amb.simple_objects():
        if side == 'left':
            braid = amb.half_braiding(b, A.carrier)

            def operator(f, braid=braid):
                return A.mult @ amb.tensor_mor(f, ia) - A.mult @ amb.tensor_mor(ia, f) @ braid
        else:
            braid = amb.half_braiding(A.carrier, b)

            def operator(f, braid=braid):
                return A.mult @ amb.tensor_mor(ia, f) - A.mult @ amb.tensor_mor(f, ia) @ braid

        space = solve_kernel(operator, amb.hom_basis(b, A.carrier), tol)
        parts.extend([b] * len(space))
        maps.extend(space)
    if not parts:
        raise VerificationError(f"centro {side} de {A.name} vazio", residual=float('inf'))

    sub, _, projections = amb.direct_sum(parts)
    iota = maps[0] @ projections[0]
    for v, p in zip(maps[1:], projections[1:]):
        iota = iota + v @ p
    # ι é mono; qualquer inversa à esquerda restringe m e u
    left_inverse = Mor(iota.dst, iota.src, tuple(_pinv(block) for block in iota.blocks))
    mult = left_inverse @ A.mult @ amb.tensor_mor(iota, iota)
    unit = left_inverse @ A.unit
    closure = (iota @ mult).distance(A.mult @ amb.tensor_mor(iota, iota))
    if closure > max(tol * 1e3, 1e-8):
        raise VerificationError(f"centro {side} de {A.name} não é subálgebra", residual=closure)
    label = 'Z_l' if side == 'left' else 'Z_r'
    center = Algebra(amb, sub, unit, mult, name=f"{label}({A.name})")
    logger.info(f"{center.name}: portador {amb.carrier(sub).mult}")
    return center, iota


def _pinv(block):
    return np.linalg.pinv(block) if block.size else block.T.copy()


def left_center(A: Algebra) -> Tuple[Algebra, Mor]:
    """Maior f: X → A com m(f⊗id) = m(id⊗f)c_{X,A}; retorna (álgebra, inclusão)"""
    return _one_sided_center(A, 'left')


def right_center(A: Algebra) -> Tuple[Algebra, Mor]:
    """Maior f: X → A com m(id⊗f) = m(f⊗id)c_{A,X}"""
    return _one_sided_center(A, 'right')


# === PRODUTO RELATIVO SOBRE ÁLGEBRA COMUTATIVA ===

def over_commutative(U, Z, left: Optional[Mor] = None, right: Optional[Mor] = None,
                     name: str = '') -> AlgebraOverCommutative:
    """Empacota U (álgebra ou objeto) com ações de Z; Z age por m quando U = Z"""
    algebra = U if isinstance(U, Algebra) else None
    carrier = U.carrier if algebra is not None else U
    return AlgebraOverCommutative(Z=Z, carrier=carrier, left=left, right=right, algebra=algebra,
                                  name=name or (algebra.name if algebra is not None else getattr(U, 'name', '')))


def action_residuals(U: AlgebraOverCommutative) -> Dict[str, float]:
    """Leis de módulo, e para U álgebra: φ_λ, φ_ρ homomorfismos unitais"""
    residuals = dict(module_residuals(U.as_module()))
    if U.algebra is not None:
        amb = U.ambient
        Za = U.Z.algebra
        for side, phi in U.associated_homs().items():
            residuals[f"{side}_hom"] = max(
                (phi @ Za.mult).distance(U.algebra.mult @ amb.tensor_mor(phi, phi)),
                (phi @ Za.unit).distance(U.algebra.unit),
            )
    return residuals


def tensor_over_commutative(U: AlgebraOverCommutative, V: AlgebraOverCommutative,
                            Z=None) -> Tuple[RelativeTensor, Optional[Algebra], Dict[str, float]]:
    """
    U⊗_Z V como imagem do projetor de separabilidade.

    Quando U e V são álgebras a multiplicação é π∘m_{U⊗V}∘(ι⊗ι) e a unidade
    π∘(u_U⊗u_V); o resíduo 'projection' mede se π é homomorfismo.
    """
    Z = Z or U.Z
    tol = default_tolerance()
    for W in (U, V):
        worst = max(action_residuals(W).values(), default=0.0)
        if worst > max(tol * 1e3, 1e-8):
            raise VerificationError(f"ação de {Z.name} sobre {W.name} viola as leis", residual=worst)
    relative = tensor_over(Z.algebra, U.as_module(), V.as_module())
    residuals = {'idempotence': relative.idempotence}
    algebra = None
    if U.algebra is not None and V.algebra is not None:
        amb = Z.algebra.ambient
        product = tensor_algebras(U.algebra, V.algebra)
        iota, pi = relative.iota, relative.pi
        mult = pi @ product.mult @ amb.tensor_mor(iota, iota)
        unit = pi @ product.unit
        algebra = Algebra(amb, relative.obj, unit, mult, name=f"{U.name}⊗_{Z.name}{V.name}")
        residuals['projection'] = max(
            (pi @ product.mult).distance(mult @ amb.tensor_mor(pi, pi)),
            (pi @ product.unit).distance(unit),
        )
        residuals.update(law_residuals(algebra))
    logger.debug(f"{U.name}⊗_{Z.name}{V.name}: portador {Z.algebra.ambient.carrier(relative.obj).mult}")
    return relative, algebra, residuals
