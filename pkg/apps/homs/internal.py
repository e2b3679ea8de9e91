# apps/homs/internal.py

"""
Homs internos de módulos sobre uma álgebra separável.

[x,y] representa Hom_{C_A}(−⊙x, y): é montado como ⊕_b b^{dim W_b}, com
W_b = Hom_{C_A}(b⊙x, y) e b percorrendo os simples do ambiente (C ou Z(C)).
A avaliação soma as cópias, e todo morfismo f: a⊙x → y tem um único mate
f̄: a → [x,y] com ev∘(f̄⊗id) = f.
"""

import logging
from typing import Dict, List, Optional, Tuple, Union

from apps.algebras.laws import require_separable
from apps.algebras.models import Algebra, Bimodule, Module
from apps.algebras.modules import act, hom_mod
from apps.algebras.relative import dual_module, tensor_over
from apps.core.conf import default_tolerance
from apps.core.exceptions import VerificationError
from apps.core.models import Mor, Obj
from apps.core.utils import solve_affine

from .models import InternalHom

logger = logging.getLogger(__name__)

AnyModule = Union[Module, Bimodule]


def _base_algebra(x: AnyModule) -> Algebra:
    return x.right_algebra if x.right_action is not None else x.left_algebra


def _zero_object(ambient):
    """Objeto nulo do ambiente"""
    cat = ambient.base
    zero = Obj.zero(cat.rank)
    if ambient.kind == 'plain':
        return zero
    from apps.center.models import CenterObject

    betas = tuple(Mor.zero(cat.fuse(zero, cat.simple(a)), cat.fuse(cat.simple(a), zero)) for a in range(cat.rank))
    return CenterObject(cat, zero, betas, name='0')


def _assemble(ambient, x: AnyModule, y: AnyModule, name: str) -> InternalHom:
    cat = x.ambient
    require_separable(_base_algebra(x))
    parts: List[Tuple[object, Mor]] = []
    for b in ambient.simple_objects():
        for w in hom_mod(act(b, x), y):
            parts.append((b, w))
    ix = Mor.identity(x.obj)
    if not parts:
        zero = _zero_object(ambient)
        carrier_obj = ambient.carrier(zero)
        ev = Mor.zero(cat.fuse(carrier_obj, x.obj), y.obj)
        return InternalHom(ambient, zero, ev, x, y, name=name)
    carrier, injections, projections = ambient.direct_sum([b for b, _ in parts])
    ev = parts[0][1] @ cat.tensor_mor(projections[0], ix)
    for (_, w), p in zip(parts[1:], projections[1:]):
        ev = ev + w @ cat.tensor_mor(p, ix)
    H = InternalHom(ambient, carrier, ev, x, y, parts, injections, projections, name=name)
    logger.debug(f"[{x.name},{y.name}] em {ambient.kind}: {ambient.carrier(carrier).mult}")
    return H


def internal_hom(A: Algebra, x: AnyModule, y: AnyModule) -> InternalHom:
    """[x,y]_C para módulos à direita x, y sobre A"""
    return _assemble(A.ambient, x, y, name=f"[{x.name},{y.name}]")


def ihom_center(x: AnyModule, y: AnyModule, ambient=None) -> InternalHom:
    """[x,y]_{Z(C)}: Z(C) age por z⊙x = z⊗x, com a ação à esquerda torcida por β"""
    if ambient is None:
        from apps.center.drinfeld import center_ambient

        ambient = center_ambient(x.ambient)
    return _assemble(ambient, x, y, name=f"[{x.name},{y.name}]_Z")


# === MATES ===

def hom_into(H: InternalHom, a) -> List[Mor]:
    """
    Base de Hom(a, [x,y]) pela decomposição de [x,y] em simples:
    ⊕_i ι_i∘Hom(a, b_i), sem resolver o sistema no portador inteiro.
    """
    amb = H.ambient
    if not H.parts:
        return amb.hom_basis(a, H.carrier)
    por_simples: Dict[int, List[Mor]] = {}
    basis = []
    for (b, _), inj in zip(H.parts, H.injections):
        if id(b) not in por_simples:
            por_simples[id(b)] = amb.hom_basis(a, b)
        basis.extend(inj @ g for g in por_simples[id(b)])
    return basis


def mate(H: InternalHom, f: Mor, a, tol: Optional[float] = None) -> Mor:
    """Único f̄: a → [x,y] (no ambiente de H) com ev∘(f̄⊗id_x) = f"""
    tol = tol or default_tolerance()
    amb = H.ambient
    cat = H.source.ambient
    ix = Mor.identity(H.source.obj)
    basis = hom_into(H, a)
    if not basis:
        if f.max_abs() > tol:
            raise VerificationError(f"mate inexistente em {H.name}: espaço vazio", residual=f.max_abs())
        return Mor.zero(amb.carrier(a), H.obj)
    solution, residual, kernel_dim = solve_affine(lambda g: H.ev @ cat.tensor_mor(g, ix), basis, f, tol)
    if residual > tol * 1e3:
        raise VerificationError(f"mate inexistente em {H.name}", residual=residual)
    if kernel_dim:
        raise VerificationError(f"mate não único em {H.name} (núcleo {kernel_dim})", residual=residual)
    return solution


def mate_audit(H: InternalHom) -> Dict[str, float]:
    """Mate de cada vetor de base de Hom_{C_A}(a⊙x, y), a simples: resíduo e unicidade"""
    amb = H.ambient
    cat = H.source.ambient
    ix = Mor.identity(H.source.obj)
    worst, unique = 0.0, True
    for a in amb.simple_objects():
        basis = hom_into(H, a)
        for f in hom_mod(act(a, H.source), H.target):
            _, residual, kernel_dim = solve_affine(lambda g: H.ev @ cat.tensor_mor(g, ix), basis, f)
            worst = max(worst, residual)
            unique = unique and kernel_dim == 0
    return {'residual': worst, 'unique': float(unique)}


def adjunction_dims(H: InternalHom) -> List[Tuple[int, int]]:
    """(dim Hom(a, [x,y]), dim Hom_{C_A}(a⊙x, y)) para cada simples a do ambiente"""
    amb = H.ambient
    return [(len(hom_into(H, a)), len(hom_mod(act(a, H.source), H.target)))
            for a in amb.simple_objects()]


def ihom_map(H_src: InternalHom, H_dst: InternalHom, pre: Optional[Mor] = None,
             post: Optional[Mor] = None) -> Mor:
    """[f, g]: [x,y] → [x',y'] para f: x' → x e g: y → y', mate de g∘ev∘(id⊗f)"""
    cat = H_src.source.ambient
    ev = H_src.ev
    if pre is not None:
        ev = ev @ cat.tensor_mor(Mor.identity(H_src.obj), pre)
    if post is not None:
        ev = post @ ev
    return mate(H_dst, ev, H_src.carrier)


# === COMPOSIÇÃO ===

def composition(H_yz: InternalHom, H_xy: InternalHom, H_xz: InternalHom) -> Mor:
    """[y,z]⊗[x,y] → [x,z], mate de ev∘(id⊗ev)∘α"""
    amb = H_xz.ambient
    cat = H_xz.source.ambient
    x = H_xy.source
    pair = amb.tensor(H_yz.carrier, H_xy.carrier)
    f = (H_yz.ev
         @ cat.tensor_mor(Mor.identity(H_yz.obj), H_xy.ev)
         @ cat.associator(H_yz.obj, H_xy.obj, x.obj))
    return mate(H_xz, f, pair)


def ihom_algebra(H: InternalHom) -> Algebra:
    """[x,x] com unidade mate de id_x e multiplicação mate de ev∘(id⊗ev)∘α"""
    amb = H.ambient
    unit = mate(H, Mor.identity(H.source.obj), amb.unit_object())
    mult = composition(H, H, H)
    return Algebra(amb, H.carrier, unit, mult, name=f"[{H.source.name},{H.source.name}]")


def endomorphism_algebra(cat, x: Obj, name: str = '') -> Algebra:
    """[x,x]_C sobre a álgebra trivial; em C equivale a x⊗x*"""
    label = name or cat.describe(x)
    M = Module(Algebra.trivial(cat), x, Mor.identity(x), side='right', name=label)
    A = ihom_algebra(internal_hom(M.algebra, M, M))
    A.name = f"[{label},{label}]"
    return A


def ihom_bimodule(H_xy: InternalHom, H_xx: InternalHom, H_yy: InternalHom,
                  left: Optional[Algebra] = None, right: Optional[Algebra] = None) -> Bimodule:
    """[x,y] como bimódulo [y,y]-[x,x] pelas composições"""
    left = left or ihom_algebra(H_yy)
    right = right or ihom_algebra(H_xx)
    return Bimodule(left, right, H_xy.carrier,
                    composition(H_yy, H_xy, H_xy), composition(H_xy, H_xx, H_xy),
                    name=H_xy.name)


def composition_associativity(H_zw: InternalHom, H_yz: InternalHom, H_xy: InternalHom,
                              H_yw: InternalHom, H_xz: InternalHom, H_xw: InternalHom) -> float:
    """|c∘(c⊗id) - c∘(id⊗c)∘α| para [z,w]⊗[y,z]⊗[x,y] → [x,w]"""
    amb = H_xw.ambient
    left = composition(H_yw, H_xy, H_xw) @ amb.tensor_mor(composition(H_zw, H_yz, H_yw), Mor.identity(H_xy.obj))
    right = (composition(H_zw, H_xz, H_xw)
             @ amb.tensor_mor(Mor.identity(H_zw.obj), composition(H_yz, H_xy, H_xz))
             @ amb.associator(H_zw.carrier, H_yz.carrier, H_xy.carrier))
    return left.distance(right)


# === AUDITORIAS ===

def convention_check(A: Algebra, x: Module, y: Module) -> Tuple[Obj, Obj, bool]:
    """Portador de [x,y]_C contra (x⊗_A y^R)^L"""
    cat = A.ambient
    H = internal_hom(A, x, y)
    relative = tensor_over(A, x, dual_module(y))
    expected = cat.dual_obj(relative.obj)
    return H.obj, expected, H.obj == expected


def inhom_audit(x: AnyModule, y: AnyModule, ambient=None) -> Tuple[int, int]:
    """(dim Hom_Z(1, [x,y]_Z), dim Hom_{C_A}(x, y))"""
    H = ihom_center(x, y, ambient)
    amb = H.ambient
    return len(hom_into(H, amb.unit_object())), len(hom_mod(x, y))
