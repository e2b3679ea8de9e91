# apps/braided/picard.py

"""
Pic(A), comparação Pic(A) → Aut(Z(A)) e teste de Morita.

Cada bimódulo invertível M define σ_M ∈ End_Z(Z(A)) como a única solução de
λ_M(e∘σ_M⊗id_M) = ρ_M(id_M⊗e)β^{Z(A)}_M. A convenção fixada é
σ_{M⊗_A N} = σ_M∘σ_N; a contrária é apenas registrada no relatório.
"""

import logging
from typing import Dict, List, Optional

from apps.algebras.laws import require_separable
from apps.algebras.models import Algebra, Bimodule
from apps.algebras.modules import is_isomorphic, simple_bimodules
from apps.algebras.relative import tensor_over
from apps.center.full_center import full_center
from apps.center.models import CenterCategory, CommAlgebraInCenter
from apps.core.conf import default_tolerance
from apps.core.exceptions import VerificationError
from apps.core.models import Mor
from apps.core.utils import solve_affine

from .isomorphism import automorphism_group, find_algebra_iso, homomorphism_residual
from .models import GroupTable

logger = logging.getLogger(__name__)


def invertible_bimodules(A: Algebra, seed: Optional[int] = None) -> List[Bimodule]:
    """Bimódulos simples X com X⊗_A Y ≅ A para algum Y; A vem primeiro"""
    cat = A.ambient
    witness = require_separable(A)
    simples = simple_bimodules(A, seed=seed)
    regular = simples[0]
    fp = cat.fpdim(A.obj)
    candidates = [X for X in simples if abs(cat.fpdim(X.obj) - fp) < 1e-6]
    found = []
    for X in candidates:
        for Y in candidates:
            T = tensor_over(A, X, Y, witness)
            if is_isomorphic(T.structure, regular):
                found.append(X)
                break
    logger.info(f"Pic({A.name}): {len(found)} de {len(simples)} bimódulos simples são invertíveis")
    return found


def picard_group(A: Algebra, seed: Optional[int] = None) -> GroupTable:
    """Classes de bimódulos invertíveis com a tabela de ⊗_A"""
    witness = require_separable(A)
    elements = invertible_bimodules(A, seed)
    n = len(elements)
    table = []
    for X in elements:
        row = []
        for Y in elements:
            T = tensor_over(A, X, Y, witness).structure
            row.append(next((k for k, W in enumerate(elements) if is_isomorphic(T, W)), -1))
        table.append(row)
    labels = [A.name if k == 0 else (X.name or f"X{k}") for k, X in enumerate(elements)]
    group = GroupTable(elements=labels, table=table, identity=0, maps=elements)
    if any(-1 in row for row in table):
        group.notes.append('produto fora das classes invertíveis')
    logger.info(f"Pic({A.name}): ordem {n} ({group.identify()})")
    return group


# === COMPARAÇÃO COM Aut(Z(A)) ===

def twist_automorphism(ZA: CommAlgebraInCenter, M: Bimodule) -> Mor:
    """σ_M: Z(A) → Z(A)"""
    A = ZA.source
    cat = A.ambient
    amb = ZA.algebra.ambient
    e = ZA.counit
    im = Mor.identity(M.obj)
    left = M.left_action @ cat.tensor_mor(e, im)
    right = M.right_action @ cat.tensor_mor(im, e) @ ZA.carrier.braid_over(M.obj)
    basis = amb.hom_basis(ZA.carrier, ZA.carrier)
    tol = max(default_tolerance() * 1e3, 1e-7)
    sigma, residual, kernel_dim = solve_affine(lambda s: left @ cat.tensor_mor(s, im), basis, right)
    logger.debug(f"σ_{M.name}: resíduo {residual:.2e}, núcleo {kernel_dim}")
    if residual > tol:
        raise VerificationError(f"σ_{M.name} inexistente: ações não se relacionam por Z({A.name})",
                                residual=residual)
    if kernel_dim:
        raise VerificationError(f"σ_{M.name} não é único (núcleo {kernel_dim})", residual=residual)
    return sigma


def pic_to_aut(A: Algebra, center: Optional[CenterCategory] = None, seed: Optional[int] = None,
               pic: Optional[GroupTable] = None, aut: Optional[GroupTable] = None) -> Dict:
    """Constrói M ↦ σ_M e confere que é homomorfismo bijetor"""
    ZA = full_center(A, center, seed, cross_check=False)
    pic = pic or picard_group(A, seed)
    aut = aut or automorphism_group(ZA.algebra, seed)
    tol = max(default_tolerance() * 1e3, 1e-7)

    sigmas = [twist_automorphism(ZA, M) for M in pic.maps]
    images = []
    worst = 0.0
    for sigma in sigmas:
        worst = max(worst, homomorphism_residual(sigma, ZA.algebra, ZA.algebra))
        images.append(next((k for k, phi in enumerate(aut.maps) if sigma.distance(phi) < 1e-6), -1))

    n = pic.order
    pairs = [(i, j) for i in range(n) for j in range(n)]
    covariant = all(images[pic.table[i][j]] == aut.table[images[i]][images[j]] for i, j in pairs)
    contravariant = all(images[pic.table[i][j]] == aut.table[images[j]][images[i]] for i, j in pairs)
    bijective = -1 not in images and sorted(images) == list(range(aut.order))
    result = {
        'pic': pic,
        'aut': aut,
        'images': images,
        'automorphism_residual': worst,
        'homomorphism': covariant,
        'anti_homomorphism': contravariant,
        'bijective': bijective,
        'passed': covariant and bijective and worst < tol,
    }
    logger.info(f"Pic({A.name}) → Aut(Z({A.name})): imagens {images}, "
                f"homomorfismo={covariant}, bijetor={bijective}")
    return result


# === MORITA ===

def morita_test(A: Algebra, B: Algebra, center: Optional[CenterCategory] = None,
                seed: Optional[int] = None) -> Dict:
    """A ~ B sse Z(A) ≅ Z(B) como álgebras em Z(C); o iso é a testemunha"""
    ZA = full_center(A, center, seed, cross_check=False)
    ZB = full_center(B, center, seed, cross_check=False)
    iso = find_algebra_iso(ZA.algebra, ZB.algebra, seed)
    amb = ZA.algebra.ambient
    verdict = {
        'equivalent': bool(iso),
        'witness': iso.map,
        'iso': iso,
        'full_centers': (ZA, ZB),
        'carriers': (amb.carrier(ZA.carrier).mult, amb.carrier(ZB.carrier).mult),
        'seed': seed,
    }
    logger.info(f"Morita {A.name} ~ {B.name}: {verdict['equivalent']} ({iso.method})")
    return verdict
