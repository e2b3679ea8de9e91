# apps/algebras/modules.py

"""
Módulos livres, morfismos de módulos e enumeração de simples.

A decomposição de um módulo usa um elemento aleatório (semente fixa) de
End_A(M): seus projetores espectrais são idempotentes primitivos
genericamente, e cada um é cindido no ambiente.
"""

import logging
from typing import Callable, List, Optional, Union

import numpy as np

from apps.core.conf import default_seed, default_tolerance, get_config
from apps.core.exceptions import SplittingError
from apps.core.models import Mor
from apps.core.utils import random_combination, solve_kernel, spectral_projectors

from .laws import require_separable
from .models import Algebra, Bimodule, Module

logger = logging.getLogger(__name__)

AnyModule = Union[Module, Bimodule]


# === CONSTRUÇÕES ===

def regular_module(A: Algebra, side: str = 'right') -> Module:
    return Module(A, A.carrier, A.mult, side=side, name=A.name)


def free_module(A: Algebra, x, side: str = 'right') -> Module:
    """x⊗A (direita) ou A⊗x (esquerda) com a ação induzida por m"""
    amb = A.ambient
    ix = Mor.identity(amb.carrier(x))
    if side == 'right':
        carrier = amb.tensor(x, A.carrier)
        action = amb.tensor_mor(ix, A.mult) @ amb.associator(x, A.carrier, A.carrier)
    else:
        carrier = amb.tensor(A.carrier, x)
        action = amb.tensor_mor(A.mult, ix) @ amb.associator_inv(A.carrier, A.carrier, x)
    return Module(A, carrier, action, side=side)


def free_bimodule(A: Algebra, x, B: Algebra) -> Bimodule:
    """(A⊗x)⊗B com ação à esquerda por A e à direita por B"""
    amb = A.ambient
    ix = Mor.identity(amb.carrier(x))
    Ax = amb.tensor(A.carrier, x)
    carrier = amb.tensor(Ax, B.carrier)
    left = (amb.tensor_mor(amb.tensor_mor(A.mult, ix), B.identity)
            @ amb.rebracket((A.carrier, ((A.carrier, x), B.carrier)),
                            (((A.carrier, A.carrier), x), B.carrier)))
    right = (amb.tensor_mor(Mor.identity(amb.carrier(Ax)), B.mult)
             @ amb.associator(Ax, B.carrier, B.carrier))
    return Bimodule(A, B, carrier, left, right)


def act(z, M: AnyModule) -> AnyModule:
    """
    Ação de um objeto z (de C, ou do centro) sobre um módulo: z⊗M.

    A ação à direita passa por α; a ação à esquerda, quando existe, usa a
    inversa da meia-trança de z sobre A, logo exige z no centro.
    """
    amb = M.ambient
    lifted = amb.kind == 'plain' and hasattr(z, 'braid_over')
    zc = z.carrier if lifted else z
    iz = Mor.identity(amb.carrier(zc))
    carrier = amb.tensor(zc, M.carrier)
    right = left = None
    if M.right_action is not None:
        B = M.right_algebra
        right = amb.tensor_mor(iz, M.right_action) @ amb.associator(zc, M.carrier, B.carrier)
    if M.left_action is not None:
        A = M.left_algebra
        if lifted:
            beta_inv = z.braid_over_inverse(A.obj)
        else:
            beta_inv = amb.half_braiding_inverse(z, A.carrier)
        im = Mor.identity(M.obj)
        left = (amb.tensor_mor(iz, M.left_action)
                @ amb.associator(zc, A.carrier, M.carrier)
                @ amb.tensor_mor(beta_inv, im)
                @ amb.associator_inv(A.carrier, zc, M.carrier))
    if isinstance(M, Bimodule):
        return Bimodule(M.left_algebra, M.right_algebra, carrier, left, right)
    return Module(M.algebra, carrier, right if M.side == 'right' else left, side=M.side)


# === LEIS ===

def module_residuals(M: AnyModule) -> dict:
    amb = M.ambient
    im = Mor.identity(M.obj)
    residuals = {}
    if M.right_action is not None:
        B, rho = M.right_algebra, M.right_action
        residuals['right_assoc'] = (rho @ amb.tensor_mor(rho, B.identity)).distance(
            rho @ amb.tensor_mor(im, B.mult) @ amb.associator(M.carrier, B.carrier, B.carrier))
        residuals['right_unit'] = (rho @ amb.tensor_mor(im, B.unit)).distance(im)
    if M.left_action is not None:
        A, lam = M.left_algebra, M.left_action
        residuals['left_assoc'] = (lam @ amb.tensor_mor(A.identity, lam)
                                   @ amb.associator(A.carrier, A.carrier, M.carrier)).distance(
            lam @ amb.tensor_mor(A.mult, im))
        residuals['left_unit'] = (lam @ amb.tensor_mor(A.unit, im)).distance(im)
    if M.left_action is not None and M.right_action is not None:
        A, B = M.left_algebra, M.right_algebra
        lhs = M.left_action @ amb.tensor_mor(A.identity, M.right_action) @ amb.associator(
            A.carrier, M.carrier, B.carrier)
        rhs = M.right_action @ amb.tensor_mor(M.left_action, B.identity)
        residuals['bimodule'] = lhs.distance(rhs)
    return residuals


def _intertwining(M: AnyModule, N: AnyModule) -> Callable[[Mor], List[Mor]]:
    amb = M.ambient

    def operator(f: Mor) -> List[Mor]:
        eqs = []
        if M.right_action is not None:
            B = M.right_algebra
            eqs.append(N.right_action @ amb.tensor_mor(f, B.identity) - f @ M.right_action)
        if M.left_action is not None:
            A = M.left_algebra
            eqs.append(N.left_action @ amb.tensor_mor(A.identity, f) - f @ M.left_action)
        return eqs

    return operator


def hom_mod(M: AnyModule, N: AnyModule, tol: Optional[float] = None) -> List[Mor]:
    """Base de Hom de módulos (ou bimódulos) M → N"""
    tol = tol or default_tolerance()
    basis = M.ambient.hom_basis(M.carrier, N.carrier)
    return solve_kernel(_intertwining(M, N), basis, tol)


def restrict_module(M: AnyModule, sub, iota: Mor, pi: Mor) -> AnyModule:
    """Estrutura induzida num somando (ι, π) de M"""
    amb = M.ambient
    right = left = None
    if M.right_action is not None:
        right = pi @ M.right_action @ amb.tensor_mor(iota, M.right_algebra.identity)
    if M.left_action is not None:
        left = pi @ M.left_action @ amb.tensor_mor(M.left_algebra.identity, iota)
    if isinstance(M, Bimodule):
        return Bimodule(M.left_algebra, M.right_algebra, sub, left, right)
    return Module(M.algebra, sub, right if M.side == 'right' else left, side=M.side)


# === DECOMPOSIÇÃO ===

def decompose(M: AnyModule, rng: Optional[np.random.Generator] = None, depth: int = 0) -> List[AnyModule]:
    """Lista de somandos simples de M"""
    rng = rng or np.random.default_rng(default_seed())
    if M.obj.is_zero():
        return []
    end = hom_mod(M, M)
    if len(end) <= 1:
        return [M]
    if depth > 4:
        raise SplittingError("decomposição não convergiu: elemento aleatório degenerado")
    element = random_combination(end, rng)
    pieces = []
    for projector in spectral_projectors(element):
        sub, iota, pi = M.ambient.image(projector, M.carrier)
        if sub is None or M.ambient.carrier(sub).is_zero():
            continue
        pieces.extend(decompose(restrict_module(M, sub, iota, pi), rng, depth + 1))
    return pieces


def is_isomorphic(M: AnyModule, N: AnyModule) -> bool:
    """Para simples: existe morfismo não nulo"""
    if M.obj != N.obj:
        return False
    return len(hom_mod(M, N)) > 0


def find_module_iso(M: AnyModule, N: AnyModule, seed: Optional[int] = None) -> Optional[Mor]:
    """Intertwiner invertível por combinação aleatória da base (≤ ISO_RETRIES sementes)"""
    if M.obj != N.obj:
        return None
    basis = hom_mod(M, N)
    if not basis:
        return None
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    for _ in range(int(get_config('ISO_RETRIES'))):
        candidate = random_combination(basis, rng)
        if candidate.is_invertible(1e-8):
            return candidate
    return None


def multiplicity(simple: AnyModule, M: AnyModule) -> int:
    return len(hom_mod(simple, M))


def _collect(free_modules, regular: Optional[AnyModule], rng) -> List[AnyModule]:
    found: List[AnyModule] = []
    if regular is not None:
        found.extend(decompose(regular, rng))
    for F in free_modules:
        for piece in decompose(F, rng):
            if not any(is_isomorphic(piece, known) for known in found):
                found.append(piece)
    return found


def simple_modules(A: Algebra, side: str = 'right', seed: Optional[int] = None) -> List[Module]:
    """Módulos simples de A, um por classe de isomorfismo; somandos de A vêm primeiro"""
    require_separable(A)
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    amb = A.ambient
    free = (free_module(A, x, side) for x in amb.simple_objects())
    found = _collect(free, regular_module(A, side), rng)
    for i, M in enumerate(found):
        M.name = M.name or f"M{i}"
    logger.info(f"Álgebra {A.name}: {len(found)} módulos simples ({side})")
    return found


def simple_bimodules(A: Algebra, B: Optional[Algebra] = None, seed: Optional[int] = None) -> List[Bimodule]:
    """Bimódulos simples A-B; se A = B o bimódulo regular tem índice 0"""
    B = B or A
    require_separable(A)
    if B is not A:
        require_separable(B)
    rng = np.random.default_rng(default_seed() if seed is None else seed)
    amb = A.ambient
    from .laws import regular_bimodule

    regular = regular_bimodule(A) if B is A else None
    free = (free_bimodule(A, x, B) for x in amb.simple_objects())
    found = _collect(free, regular, rng)
    for i, M in enumerate(found):
        M.name = M.name if (i == 0 and regular is not None) else f"X{i}"
    logger.info(f"Bimódulos simples {A.name}-{B.name}: {len(found)}")
    return found


def completeness_residual(A: Algebra, simples: List[Module]) -> float:
    """max_i |Σ_m fpdim(m)·mult(m, x_i⊗A) - fpdim(A)·fpdim(x_i)|"""
    amb = A.ambient
    base = amb.base
    worst = 0.0
    for x in amb.simple_objects():
        F = free_module(A, x, simples[0].side if simples else 'right')
        total = sum(base.fpdim(m.obj) * multiplicity(m, F) for m in simples)
        worst = max(worst, abs(total - base.fpdim(A.obj) * base.fpdim(amb.carrier(x))))
    return worst


def module_category_dim(A: Algebra, simples: List[AnyModule]) -> float:
    """Σ_m fpdim(m)² / fpdim(A)²: dimensão de FP de C_A normalizada"""
    base = A.ambient.base
    return sum(base.fpdim(m.obj) ** 2 for m in simples) / base.fpdim(A.obj) ** 2


def direct_sum_modules(parts: List[AnyModule], name: str = ''):
    """M_1 ⊕ ... ⊕ M_n com as injeções e projeções, que são morfismos de módulos"""
    first = parts[0]
    amb = first.ambient
    total, injections, projections = amb.direct_sum([M.carrier for M in parts])
    right = left = None
    if first.right_action is not None:
        B = first.right_algebra
        right = sum((inj @ M.right_action @ amb.tensor_mor(proj, B.identity)
                     for M, inj, proj in zip(parts[1:], injections[1:], projections[1:])),
                    injections[0] @ first.right_action @ amb.tensor_mor(projections[0], B.identity))
    if first.left_action is not None:
        A = first.left_algebra
        left = sum((inj @ M.left_action @ amb.tensor_mor(A.identity, proj)
                    for M, inj, proj in zip(parts[1:], injections[1:], projections[1:])),
                   injections[0] @ first.left_action @ amb.tensor_mor(A.identity, projections[0]))
    name = name or '⊕'.join(M.name or '?' for M in parts)
    if isinstance(first, Bimodule):
        bimodule = Bimodule(first.left_algebra, first.right_algebra, total, left, right, name=name)
        return bimodule, injections, projections
    action = right if first.side == 'right' else left
    return Module(first.algebra, total, action, side=first.side, name=name), injections, projections


def intertwining_residual(M: AnyModule, N: AnyModule, f: Mor) -> float:
    """Quanto f: M → N deixa de comutar com as ações"""
    return max((eq.max_abs() for eq in _intertwining(M, N)(f)), default=0.0)
