# apps/algebras/relative.py

"""
Produto tensorial relativo x ⊗_A y e módulos duais.

O coequalizador de ρ_x⊗id e (id⊗λ_y)α é realizado como imagem do
idempotente P = (ρ_x⊗λ_y)∘α'∘(id⊗ẽ⊗id), com ẽ = e∘u vindo da testemunha
de separabilidade. O conúcleo da diferença serve de oráculo independente.
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Union

from apps.core.exceptions import StructuralError, UnsupportedError
from apps.core.models import Mor

from .laws import require_separable
from .models import Algebra, Bimodule, Module, SeparabilityWitness

logger = logging.getLogger(__name__)

AnyModule = Union[Module, Bimodule]


@dataclass(eq=False)
class RelativeTensor:
    """x ⊗_A y com inclusão ι e projeção π em x⊗y"""

    obj: Any
    iota: Mor
    pi: Mor
    projector: Mor
    structure: Optional[AnyModule] = None
    idempotence: float = 0.0


def _right(x: AnyModule, A: Algebra) -> Mor:
    if x.right_action is None or x.right_algebra is not A:
        raise StructuralError("primeiro fator precisa ser módulo à direita sobre A")
    return x.right_action


def _left(y: AnyModule, A: Algebra) -> Mor:
    if y.left_action is None or y.left_algebra is not A:
        raise StructuralError("segundo fator precisa ser módulo à esquerda sobre A")
    return y.left_action


def separability_idempotent(A: Algebra, x: AnyModule, y: AnyModule,
                            witness: Optional[SeparabilityWitness] = None) -> Mor:
    amb = A.ambient
    witness = witness or require_separable(A)
    rho, lam = _right(x, A), _left(y, A)
    e_tilde = witness.section @ A.unit
    ix, iy = Mor.identity(x.obj), Mor.identity(y.obj)
    lift = amb.tensor_mor(ix, amb.tensor_mor(e_tilde, iy))
    move = amb.rebracket((x.carrier, ((A.carrier, A.carrier), y.carrier)),
                         ((x.carrier, A.carrier), (A.carrier, y.carrier)))
    return amb.tensor_mor(rho, lam) @ move @ lift


def tensor_over(A: Algebra, x: AnyModule, y: AnyModule,
                witness: Optional[SeparabilityWitness] = None) -> RelativeTensor:
    """x ⊗_A y com as ações residuais (x bimódulo B-A e/ou y bimódulo A-D)"""
    amb = A.ambient
    P = separability_idempotent(A, x, y, witness)
    obj, iota, pi = amb.image(P, amb.tensor(x.carrier, y.carrier))
    result = RelativeTensor(obj=obj, iota=iota, pi=pi, projector=P,
                            idempotence=(P @ P).distance(P))

    left_alg = x.left_algebra if x.left_action is not None else None
    right_alg = y.right_algebra if y.right_action is not None else None
    ix, iy = Mor.identity(x.obj), Mor.identity(y.obj)
    left = right = None
    if left_alg is not None:
        lam = amb.tensor_mor(x.left_action, iy) @ amb.associator_inv(left_alg.carrier, x.carrier, y.carrier)
        left = pi @ lam @ amb.tensor_mor(left_alg.identity, iota)
    if right_alg is not None:
        rho = amb.tensor_mor(ix, y.right_action) @ amb.associator(x.carrier, y.carrier, right_alg.carrier)
        right = pi @ rho @ amb.tensor_mor(iota, right_alg.identity)

    if left is not None and right is not None:
        result.structure = Bimodule(left_alg, right_alg, obj, left, right)
    elif left is not None:
        result.structure = Module(left_alg, obj, left, side='left')
    elif right is not None:
        result.structure = Module(right_alg, obj, right, side='right')
    logger.debug(f"x⊗_A y: portador {amb.carrier(obj).mult}, idempotência {result.idempotence:.2e}")
    return result


def coequalizer_difference(A: Algebra, x: AnyModule, y: AnyModule) -> Mor:
    """ρ_x⊗id - (id⊗λ_y)α: (x⊗A)⊗y → x⊗y"""
    amb = A.ambient
    rho, lam = _right(x, A), _left(y, A)
    ix, iy = Mor.identity(x.obj), Mor.identity(y.obj)
    return (amb.tensor_mor(rho, iy)
            - amb.tensor_mor(ix, lam) @ amb.associator(x.carrier, A.carrier, y.carrier))


def tensor_over_cokernel(A: Algebra, x: AnyModule, y: AnyModule):
    """Oráculo: x ⊗_A y como conúcleo da diferença das duas ações"""
    amb = A.ambient
    obj, _, _ = amb.cokernel(coequalizer_difference(A, x, y), amb.tensor(x.carrier, y.carrier))
    return obj


def dual_module(M: Module) -> Module:
    """
    Módulo dual em C.

    Um módulo à direita x dá um módulo à esquerda no dual à direita x^R
    (modelado por x* com ev_{x*}, coev_{x*}); um módulo à esquerda y dá um
    módulo à direita no dual à esquerda y^L = y* com ev_y, coev_y.
    """
    cat = M.ambient
    if getattr(cat, 'kind', None) != 'plain':
        raise UnsupportedError("dual_module só é suportado em C")
    A = M.algebra
    x = M.carrier
    xd = cat.dual_obj(x)
    if M.side == 'right':
        coev = cat.coev(xd)
        ev = cat.ev(xd)
        Axd = cat.fuse(A.obj, xd)
        action = (cat.tensor_mor(Mor.identity(xd), ev)
                  @ cat.tensor_mor(Mor.identity(xd), cat.tensor_mor(M.action, Mor.identity(xd)))
                  @ cat.rebracket(((xd, x), (A.obj, xd)), (xd, ((x, A.obj), xd)))
                  @ cat.tensor_mor(coev, Mor.identity(Axd)))
        return Module(A, xd, action, side='left', name=f"{M.name}^R")
    coev = cat.coev(x)
    ev = cat.ev(x)
    xdA = cat.fuse(xd, A.obj)
    action = (cat.tensor_mor(ev, Mor.identity(xd))
              @ cat.tensor_mor(cat.tensor_mor(Mor.identity(xd), M.action), Mor.identity(xd))
              @ cat.rebracket(((xd, A.obj), (x, xd)), ((xd, (A.obj, x)), xd))
              @ cat.tensor_mor(Mor.identity(xdA), coev))
    return Module(A, xd, action, side='right', name=f"{M.name}^L")


def dual_zigzag_residual(M: Module) -> float:
    """Zigue-zague da dualidade usada por dual_module"""
    cat = M.ambient
    target = cat.dual_obj(M.carrier) if M.side == 'right' else M.carrier
    return max(cat.zigzag_residuals(target))
