# apps/center/induction.py

"""
α-indução φ: Z(C) → _A C_A, z ↦ z⊗A com a ação à esquerda torcida por β⁻¹.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from apps.algebras.laws import regular_bimodule
from apps.algebras.models import Algebra, Bimodule
from apps.algebras.modules import act, direct_sum_modules, hom_mod, intertwining_residual, simple_bimodules
from apps.algebras.relative import tensor_over
from apps.core.conf import default_seed
from apps.core.models import Mor

from .drinfeld import drinfeld_center
from .models import CenterCategory, CenterObject

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class AlphaInduction:
    """Dados do funtor monoidal φ sobre os simples do centro"""

    algebra: Algebra
    center: CenterCategory
    images: Dict[str, Bimodule] = field(default_factory=dict)

    def __call__(self, z: CenterObject) -> Bimodule:
        return induce(self.algebra, z)

    def unit_residual(self) -> float:
        """φ(1) = A: compara as ações com a multiplicação"""
        phi = self(self.center.ambient.unit_object())
        A = self.algebra
        return max(phi.left_action.distance(A.mult), phi.right_action.distance(A.mult))

    def coherence(self, z: CenterObject, w: CenterObject) -> Tuple[Mor, bool, float]:
        return coherence_iso(self.algebra, z, w, self.center.ambient)


def induce(A: Algebra, z: CenterObject) -> Bimodule:
    phi = act(z, regular_bimodule(A))
    phi.name = f"φ({z.name})"
    return phi


def alpha_induction(A: Algebra, center: Optional[CenterCategory] = None) -> AlphaInduction:
    center = center or drinfeld_center(A.ambient)
    functor = AlphaInduction(algebra=A, center=center)
    for z in center.simples:
        functor.images[z.name] = induce(A, z)
    logger.info(f"α-indução para {A.name}: {len(functor.images)} imagens")
    return functor


def coherence_iso(A: Algebra, z: CenterObject, w: CenterObject, ambient) -> Tuple[Mor, bool, float]:
    """
    J: φ(z⊗w) → φ(z)⊗_A φ(w), inserindo a unidade entre z e w.

    Retorna (J, invertível, resíduo de compatibilidade com as ações).
    """
    cat = A.ambient
    zw = ambient.tensor(z, w)
    source = induce(A, zw)
    relative = tensor_over(A, induce(A, z), induce(A, w))
    Z, W = z.carrier, w.carrier
    WA = cat.fuse(W, A.obj)
    J = (relative.pi
         @ cat.rebracket((Z, (A.obj, (W, A.obj))), ((Z, A.obj), (W, A.obj)))
         @ cat.tensor_mor(Mor.identity(Z), cat.tensor_mor(A.unit, Mor.identity(WA)))
         @ cat.associator(Z, W, A.obj))
    invertible = J.is_square() and J.is_invertible(1e-8)
    residual = intertwining_residual(source, relative.structure, J)
    return J, invertible, residual


def adjunction_dims(A: Algebra, b: CenterObject, w: Bimodule, ambient, H=None) -> Tuple[int, int]:
    """(dim Hom_{_A C_A}(φ(b), w), dim Hom_Z(b, [A, w]_Z))"""
    from apps.homs.internal import hom_into, ihom_center

    H = H or ihom_center(regular_bimodule(A), w, ambient)
    return len(hom_mod(induce(A, b), w)), len(hom_into(H, b))


def adjunction_audit(A: Algebra, center: CenterCategory, count: int = 20,
                     seed: Optional[int] = None) -> List[Tuple[str, str, int, int]]:
    """
    Sorteia `count` pares (b, w), b simples do centro e w soma de um a três
    bimódulos simples, e devolve (b, w, dim à esquerda, dim à direita).
    """
    from apps.homs.internal import ihom_center

    seed = default_seed() if seed is None else seed
    rng = np.random.default_rng(seed)
    simples = simple_bimodules(A, seed=seed)
    ambient = center.ambient
    somas: Dict[Tuple[int, ...], Tuple[Bimodule, object]] = {}
    rows = []
    for i in range(count):
        b = center.simples[int(rng.integers(len(center.simples)))]
        key = tuple(sorted(int(k) for k in rng.integers(len(simples), size=1 + i % 3)))
        if key not in somas:
            w = direct_sum_modules([simples[k] for k in key])[0] if len(key) > 1 else simples[key[0]]
            somas[key] = (w, ihom_center(regular_bimodule(A), w, ambient))
        w, H = somas[key]
        left, right = adjunction_dims(A, b, w, ambient, H)
        rows.append((b.name, w.name, left, right))
    mismatches = sum(1 for row in rows if row[2] != row[3])
    logger.info(f"adjunção φ ⊣ [A,-]_Z para {A.name}: {len(rows)} pares, {mismatches} divergências")
    return rows
