# apps/center/ambient.py

"""
Z(C) como ambiente das construções genéricas de apps.algebras.

Objetos são CenterObject; morfismos continuam sendo Mor entre portadores
em C, restritos aos que entrelaçam as meias-tranças.
"""

import logging
from typing import List, Optional

from apps.core.category import FusionCategory
from apps.core.conf import default_tolerance
from apps.core.models import Mor, Obj
from apps.core.utils import (BoundedCache, cokernel_blocks, direct_sum_maps, kernel_blocks, matrix_units,
                             solve_kernel, split_idempotent)

from .models import CenterObject

logger = logging.getLogger(__name__)


class CenterAmbient:
    """Interface de ambiente para o centro de Drinfeld de uma categoria de fusão"""

    kind = 'center'

    def __init__(self, category: FusionCategory):
        self.category = category
        self.tolerance = category.tolerance
        self.simples: List[CenterObject] = []
        self._tensors = BoundedCache()
        self._unit: Optional[CenterObject] = None

    @property
    def base(self) -> FusionCategory:
        return self.category

    # === OBJETOS ===

    def unit_object(self) -> CenterObject:
        if self._unit is None:
            cat = self.category
            one = cat.unit_obj()
            betas = tuple(Mor.identity(cat.simple(a)) for a in range(cat.rank))
            self._unit = CenterObject(cat, one, betas, name='1')
        return self._unit

    def carrier(self, z: CenterObject) -> Obj:
        return z.carrier

    def simple_objects(self) -> List[CenterObject]:
        return list(self.simples)

    def tensor(self, z: CenterObject, w: CenterObject) -> CenterObject:
        """Z⊗W com β_a = α(β^Z_a⊗id)α⁻¹(id⊗β^W_a)α"""
        # CenterObject tem hash por identidade; a chave mantém z e w vivos
        key = (z, w)
        cached = self._tensors.get(key)
        if cached is not None:
            return cached
        cat = self.category
        Z, W = z.carrier, w.carrier
        iz, iw = Mor.identity(Z), Mor.identity(W)
        betas = []
        for a in range(cat.rank):
            A = cat.simple(a)
            betas.append(cat.associator(A, Z, W)
                         @ cat.tensor_mor(z.beta(a), iw)
                         @ cat.associator_inv(Z, A, W)
                         @ cat.tensor_mor(iz, w.beta(a))
                         @ cat.associator(Z, W, A))
        result = CenterObject(cat, cat.fuse(Z, W), tuple(betas), name=f"{z.name}⊗{w.name}")
        self._tensors[key] = result
        return result

    # === MORFISMOS ===

    def identity(self, z: CenterObject) -> Mor:
        return Mor.identity(z.carrier)

    def hom_basis(self, z: CenterObject, w: CenterObject) -> List[Mor]:
        """Base de Hom_Z(z, w): morfismos de C que entrelaçam β"""
        cat = self.category
        basis = matrix_units(z.carrier, w.carrier)
        if not basis:
            return []
        nontrivial = [a for a in range(cat.rank) if a != cat.unit]

        def operator(f: Mor) -> List[Mor]:
            eqs = []
            for a in nontrivial:
                ia = Mor.identity(cat.simple(a))
                eqs.append(w.beta(a) @ cat.tensor_mor(f, ia) - cat.tensor_mor(ia, f) @ z.beta(a))
            return eqs

        return solve_kernel(operator, basis, default_tolerance())

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        return self.category.tensor_mor(f, g)

    def associator(self, x: CenterObject, y: CenterObject, z: CenterObject) -> Mor:
        return self.category.associator(x.carrier, y.carrier, z.carrier)

    def associator_inv(self, x: CenterObject, y: CenterObject, z: CenterObject) -> Mor:
        return self.category.associator_inv(x.carrier, y.carrier, z.carrier)

    def _carrier_tree(self, tree):
        if isinstance(tree, tuple):
            return tuple(self._carrier_tree(t) for t in tree)
        return tree.carrier if isinstance(tree, CenterObject) else tree

    def rebracket(self, src, dst) -> Mor:
        return self.category.rebracket(self._carrier_tree(src), self._carrier_tree(dst))

    def half_braiding(self, z: CenterObject, w: CenterObject) -> Mor:
        """c_{Z,W}: Z⊗W → W⊗Z"""
        return z.braid_over(w.carrier)

    def half_braiding_inverse(self, z: CenterObject, w: CenterObject) -> Mor:
        return z.braid_over_inverse(w.carrier)

    # === SUBOBJETOS E SOMAS ===

    def restrict(self, z: CenterObject, iota: Mor, pi: Mor, name: str = '') -> CenterObject:
        """Subobjeto (ι, π) de z: β_sub = (id⊗π)β(ι⊗id)"""
        cat = self.category
        betas = []
        for a in range(cat.rank):
            ia = Mor.identity(cat.simple(a))
            betas.append(cat.tensor_mor(ia, pi) @ z.beta(a) @ cat.tensor_mor(iota, ia))
        return CenterObject(cat, iota.src, tuple(betas), name=name)

    def image(self, projector: Mor, z: Optional[CenterObject] = None):
        """Cinde um idempotente de Z(C); exige o objeto de origem"""
        if z is None:
            raise ValueError("image no centro precisa do objeto de origem")
        sub, iota, pi = split_idempotent(projector)
        return self.restrict(z, iota, pi), iota, pi

    def kernel(self, f: Mor, z: CenterObject):
        sub, iota, pi = kernel_blocks(f, self.tolerance)
        return self.restrict(z, iota, pi), iota, pi

    def cokernel(self, f: Mor, w: CenterObject):
        quo, iota, pi = cokernel_blocks(f, self.tolerance)
        return self.restrict(w, iota, pi), iota, pi

    def direct_sum(self, parts: List[CenterObject], name: str = ''):
        """Soma direta com β = Σ (id⊗ι_i)β^i(π_i⊗id)"""
        cat = self.category
        total, injections, projections = direct_sum_maps([p.carrier for p in parts])
        betas = []
        for a in range(cat.rank):
            ia = Mor.identity(cat.simple(a))
            beta = Mor.zero(cat.fuse(total, cat.simple(a)), cat.fuse(cat.simple(a), total))
            for part, inj, proj in zip(parts, injections, projections):
                beta = beta + cat.tensor_mor(ia, inj) @ part.beta(a) @ cat.tensor_mor(proj, ia)
            betas.append(beta)
        obj = CenterObject(cat, total, tuple(betas), name=name or '⊕'.join(p.name for p in parts))
        return obj, injections, projections
