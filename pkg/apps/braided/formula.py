# apps/braided/formula.py

"""
Funtor centro pontuado no caso L = N = 1, X = Y = C.

Z¹(x) = [x,x]_{Z(C)} com as ações de Z(1) à esquerda e à direita:
  ρ_H = mate de ev∘(id_H⊗ρ_x)∘α,  ρ_x = (id_x⊗ε)β^{Z(1)}_x
  λ_H = mate de λ_{x'}∘(id⊗ev)∘α, λ_{x'} = ε⊗id
A fórmula de fusão compara [x,x']⊗_{Z(1)}[y,y'] com [x⊗y, x'⊗y'] pelo
morfismo canônico Ψ, mate de (ev⊗ev)∘(id⊗β^{[y,y']}_x⊗id) rearranjado.
"""

import logging
import weakref
from typing import Dict, List, Optional

from apps.algebras.models import Algebra, Module
from apps.algebras.relative import coequalizer_difference
from apps.center.full_center import full_center
from apps.center.local import lambda_rho
from apps.center.models import CommAlgebraInCenter
from apps.core.conf import default_tolerance
from apps.core.exceptions import VerificationError
from apps.core.models import Mor, Obj
from apps.homs.internal import ihom_algebra, ihom_center, mate
from apps.homs.models import InternalHom

from .isomorphism import homomorphism_residual, simple_multiplicities
from .models import AlgebraOverCommutative
from .operations import over_commutative, tensor_over_commutative

logger = logging.getLogger(__name__)

_UNIT_CENTERS: 'weakref.WeakKeyDictionary' = weakref.WeakKeyDictionary()


def unit_full_center(cat) -> CommAlgebraInCenter:
    """Z(1) com a counidade ε: Z(1) → 1, em cache por categoria"""
    cached = _UNIT_CENTERS.get(cat)
    if cached is None:
        cached = full_center(Algebra.trivial(cat), cross_check=False)
        _UNIT_CENTERS[cat] = cached
    return cached


def object_module(x: Obj, Z1: CommAlgebraInCenter, name: str = '') -> Module:
    """x como módulo à direita livre sobre a álgebra trivial"""
    cat = Z1.algebra.ambient.base
    trivial = Z1.source
    return Module(trivial, x, Mor.identity(x), side='right', name=name or cat.describe(x))


def _tolerance() -> float:
    return max(default_tolerance() * 1e3, 1e-8)


# === AÇÕES DE Z(1) ===

def center_actions(H: InternalHom, Z1: CommAlgebraInCenter, algebra: Optional[Algebra] = None,
                   name: str = '') -> AlgebraOverCommutative:
    """[x,x']_Z como bimódulo Z(1)-Z(1)"""
    amb = H.ambient
    cat = amb.base
    x, y = H.source.obj, H.target.obj
    Zc = Z1.carrier
    iH = Mor.identity(H.obj)

    _, rho_x = lambda_rho(Z1, x)
    lam_y, _ = lambda_rho(Z1, y)
    right = mate(H, H.ev @ cat.tensor_mor(iH, rho_x) @ cat.associator(H.obj, Z1.obj, x), amb.tensor(H.carrier, Zc))
    left = mate(H, lam_y @ cat.tensor_mor(Z1.algebra.identity, H.ev) @ cat.associator(Z1.obj, H.obj, x),
                amb.tensor(Zc, H.carrier))
    return over_commutative(algebra if algebra is not None else H.carrier, Z1, left=left, right=right,
                            name=name or H.name)


def pointed_center_morphism(cat, x: Obj, x2: Optional[Obj] = None) -> Dict:
    """
    Z¹(x) = [x,x]_Z com álgebra e ações; com x2, o bimódulo [x,x2]_Z.

    `twist` = φ_λ⁻¹∘φ_ρ ∈ Aut(Z(1)) quando ambas as ações associadas são
    invertíveis; é a identidade para x = 1.
    """
    Z1 = unit_full_center(cat)
    amb = Z1.algebra.ambient
    target = x if x2 is None else x2
    H = ihom_center(object_module(x, Z1), object_module(target, Z1), amb)
    algebra = ihom_algebra(H) if x2 is None or x2 == x else None
    U = center_actions(H, Z1, algebra)
    result = {'ihom': H, 'object': U, 'algebra': algebra, 'twist': None,
              'carrier': amb.carrier(H.carrier).mult,
              'multiplicities': simple_multiplicities(amb, H.carrier)}
    if algebra is not None:
        homs = U.associated_homs()
        phi_l, phi_r = homs['left'], homs['right']
        if phi_l.is_square() and phi_l.is_invertible(1e-8) and phi_r.is_square():
            result['twist'] = phi_l.inverse() @ phi_r
    logger.info(f"Z¹({cat.describe(x)}{'' if x2 is None else ',' + cat.describe(x2)}): "
                f"portador {result['carrier']}")
    return result


def offdiagonal_audit(cat, x1: Obj, x2: Obj) -> Dict:
    """
    Multiplicidades de [x1⊕x2, x1⊕x2]_Z contra a soma dos quatro blocos [xi, xj]_Z
    """
    Z1 = unit_full_center(cat)
    amb = Z1.algebra.ambient
    parts = (x1, x2)
    total = simple_multiplicities(amb, ihom_center(object_module(x1 + x2, Z1), object_module(x1 + x2, Z1), amb).carrier)
    blocks = {}
    for i, a in enumerate(parts):
        for j, b in enumerate(parts):
            H = ihom_center(object_module(a, Z1), object_module(b, Z1), amb)
            blocks[(i, j)] = simple_multiplicities(amb, H.carrier)
    summed = [sum(block[k] for block in blocks.values()) for k in range(len(total))]
    return {'total': total, 'blocks': blocks, 'offdiagonal': blocks[(0, 1)], 'passed': total == summed}


# === FECHAMENTO ===

def closedness_check(U: AlgebraOverCommutative) -> Dict[str, bool]:
    """Fechado sse cada homomorfismo associado Z → U é isomorfismo"""
    homs = U.associated_homs()
    flags = {side: phi.is_square() and phi.is_invertible(1e-8) for side, phi in homs.items()}
    flags['closed'] = bool(homs) and all(flags.values())
    logger.debug(f"fechamento de {U.name}: {flags}")
    return flags


# === FÓRMULA DE FUSÃO ===

def fusion_map(Hx: InternalHom, Hy: InternalHom, rhs: InternalHom) -> Mor:
    """Ψ: [x,x']⊗[y,y'] → [x⊗y, x'⊗y']"""
    amb = rhs.ambient
    cat = amb.base
    hx, hy = Hx.obj, Hy.obj
    x, y = Hx.source.obj, Hy.source.obj
    braid = Hy.carrier.braid_over(x)
    f = (cat.tensor_mor(Hx.ev, Hy.ev)
         @ cat.rebracket((hx, ((x, hy), y)), ((hx, x), (hy, y)))
         @ cat.tensor_mor(Mor.identity(hx), cat.tensor_mor(braid, Mor.identity(y)))
         @ cat.rebracket(((hx, hy), (x, y)), (hx, ((hy, x), y))))
    return mate(rhs, f, amb.tensor(Hx.carrier, Hy.carrier))


def verify_main_formula(cat, x: Obj, x2: Obj, y: Obj, y2: Obj) -> Dict:
    """
    [x,x2]_Z ⊗_{Z(1)} [y,y2]_Z ≅ [x⊗y, x2⊗y2]_Z.

    Confere sempre o isomorfismo de objetos via Ψ; nas diagonais (x = x2,
    y = y2) também que Ψ é homomorfismo de álgebras.
    """
    tol = _tolerance()
    Z1 = unit_full_center(cat)
    amb = Z1.algebra.ambient
    diagonal = x == x2 and y == y2
    label = f"[{cat.describe(x)},{cat.describe(x2)}]⊗[{cat.describe(y)},{cat.describe(y2)}]"

    Hx = ihom_center(object_module(x, Z1), object_module(x2, Z1), amb)
    Hy = ihom_center(object_module(y, Z1), object_module(y2, Z1), amb)
    rhs = ihom_center(object_module(cat.fuse(x, y), Z1), object_module(cat.fuse(x2, y2), Z1), amb)
    Ux = center_actions(Hx, Z1, ihom_algebra(Hx) if diagonal else None)
    Uy = center_actions(Hy, Z1, ihom_algebra(Hy) if diagonal else None)
    relative, lhs_algebra, residuals = tensor_over_commutative(Ux, Uy, Z1)
    projection = residuals.get('projection')
    if projection is not None and projection > tol:
        raise VerificationError(f"projeção de {label} não é homomorfismo de álgebras", residual=projection)

    psi = fusion_map(Hx, Hy, rhs)
    restricted = psi @ relative.iota
    diff = coequalizer_difference(Z1.algebra, Ux.as_module(), Uy.as_module())
    residuals['coequalizes'] = (psi @ diff).max_abs()

    lhs_mult = simple_multiplicities(amb, relative.obj)
    rhs_mult = simple_multiplicities(amb, rhs.carrier)
    invertible = restricted.is_square() and restricted.is_invertible(1e-8)
    report = {
        'tuple': label,
        'lhs_carrier': amb.carrier(relative.obj).mult,
        'rhs_carrier': amb.carrier(rhs.carrier).mult,
        'lhs_multiplicities': lhs_mult,
        'rhs_multiplicities': rhs_mult,
        'object_iso': lhs_mult == rhs_mult and invertible,
        'psi_invertible': invertible,
        'inhom_dims': (len(amb.hom_basis(amb.unit_object(), relative.obj)),
                       cat.hom_dim(cat.fuse(x, y), cat.fuse(x2, y2))),
        'algebra_iso': None,
        'residuals': residuals,
    }
    if diagonal:
        rhs_algebra = ihom_algebra(rhs)
        residuals['psi_homomorphism'] = homomorphism_residual(restricted, lhs_algebra, rhs_algebra)
        report['algebra_iso'] = invertible and residuals['psi_homomorphism'] < tol
    checks = [report['object_iso'], residuals['coequalizes'] < tol,
              report['inhom_dims'][0] == report['inhom_dims'][1]]
    if diagonal:
        checks.append(report['algebra_iso'])
    report['passed'] = all(checks)
    if not report['passed']:
        logger.warning(f"fórmula de fusão falhou em {label}: {report['lhs_carrier']} vs {report['rhs_carrier']}")
    else:
        logger.info(f"fórmula de fusão em {label}: ok, portador {report['rhs_carrier']}")
    return report


def verify_formula_grid(cat, labels: Optional[List[str]] = None) -> List[Dict]:
    """Todas as quádruplas de simples (ou dos rótulos dados)"""
    labels = labels or list(cat.data.simples)
    objs = [cat.simple(label) for label in labels]
    return [verify_main_formula(cat, a, b, c, d) for a in objs for b in objs for c in objs for d in objs]


# === COEQUALIZADOR EXATO ===

def verify_exactalg(L: Algebra, simples: Optional[List[int]] = None) -> Dict:
    """
    Para cada simples x: coequalizador de Z(L)⊗(L⊗x⊗L) ⇉ L⊗x⊗L contra
    dim Hom_C(x, L)·L; para x = 1, m induz o isomorfismo do quociente em L.
    """
    cat = L.ambient
    tol = _tolerance()
    ZL = full_center(L, cross_check=False)
    e = ZL.counit
    Zc = ZL.obj
    Lo = L.obj
    iL = L.identity
    left_mult = L.mult @ cat.tensor_mor(e, iL)
    per_simple = {}
    passed = True
    for k in (simples if simples is not None else range(cat.rank)):
        x = cat.simple(k)
        ix = Mor.identity(x)
        Lx = cat.fuse(Lo, x)
        W = cat.fuse(Lx, Lo)
        f1 = (cat.tensor_mor(cat.tensor_mor(left_mult, ix), iL)
              @ cat.rebracket((Zc, ((Lo, x), Lo)), (((Zc, Lo), x), Lo)))
        f2 = (cat.tensor_mor(Mor.identity(Lx), left_mult)
              @ cat.associator(Lx, Zc, Lo)
              @ cat.tensor_mor(ZL.carrier.braid_over(Lx), iL)
              @ cat.associator_inv(Zc, Lx, Lo))
        quotient, q_iota, q_pi = cat.cokernel(f1 - f2, W)
        expected = cat.hom_dim(x, Lo) * Lo
        entry = {'quotient': quotient.mult, 'expected': expected.mult, 'match': quotient == expected}
        if k == cat.unit:
            # L⊗1⊗L = L⊗L e m: L⊗L → L
            coequalizes = (L.mult @ f1).distance(L.mult @ f2)
            induced = L.mult @ q_iota
            entry['coequalizes'] = coequalizes
            entry['induced_iso'] = induced.is_square() and induced.is_invertible(1e-8)
            entry['match'] = entry['match'] and coequalizes < tol and entry['induced_iso']
        per_simple[cat.data.simples[k]] = entry
        passed = passed and entry['match']
        logger.debug(f"coequalizador em {cat.data.simples[k]}: {quotient.mult} vs {expected.mult}")
    if not passed:
        bad = [name for name, entry in per_simple.items() if not entry['match']]
        logger.warning(f"{L.name}: coequalizador difere em {bad}")
    return {'algebra': L.name, 'full_center': ZL.name, 'per_simple': per_simple, 'passed': passed}


def require_formula(report: Dict):
    if not report['passed']:
        raise VerificationError(f"fórmula de fusão falhou em {report['tuple']}: "
                                f"{report['lhs_carrier']} vs {report['rhs_carrier']}",
                                residual=max(report['residuals'].values(), default=float('nan')))
