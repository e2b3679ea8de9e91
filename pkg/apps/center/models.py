# apps/center/models.py

"""
Objetos do centro de Drinfeld e a categoria trançada Z(C).

Convenção de meia-trança: β_a: Z⊗a → a⊗Z para cada simples a de C, e a
trança de Z(C) é c_{Z,W} = β^Z estendida ao portador de W.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from apps.core.category import FusionCategory
from apps.core.models import Mor, Obj
from apps.core.utils import copy_maps

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class CenterObject:
    """Portador em C mais a família β_a, uma por simples a"""

    category: FusionCategory
    carrier: Obj
    betas: Tuple[Mor, ...]
    name: str = ''
    _cache: Dict = field(default_factory=dict, repr=False)

    def beta(self, a: int) -> Mor:
        return self.betas[a]

    def braid_over(self, x: Obj) -> Mor:
        """β estendida a um objeto qualquer: Z⊗x → x⊗Z"""
        key = ('b', x.mult)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        cat = self.category
        iz = Mor.identity(self.carrier)
        total = Mor.zero(cat.fuse(self.carrier, x), cat.fuse(x, self.carrier))
        for c in x.support():
            for copy in range(x[c]):
                inc, proj = copy_maps(x, c, copy)
                total = total + cat.tensor_mor(inc, iz) @ self.betas[c] @ cat.tensor_mor(iz, proj)
        self._cache[key] = total
        return total

    def braid_over_inverse(self, x: Obj) -> Mor:
        key = ('i', x.mult)
        cached = self._cache.get(key)
        if cached is None:
            cached = self.braid_over(x).inverse()
            self._cache[key] = cached
        return cached

    def hexagon_residual(self) -> float:
        """max sobre a, b de |β_{a⊗b} - α⁻¹(id⊗β_b)α(β_a⊗id)α⁻¹|"""
        cat = self.category
        Z = self.carrier
        worst = 0.0
        for a in range(cat.rank):
            A = cat.simple(a)
            for b in range(cat.rank):
                B = cat.simple(b)
                lhs = self.braid_over(cat.fuse(A, B))
                rhs = (cat.associator_inv(A, B, Z)
                       @ cat.tensor_mor(Mor.identity(A), self.betas[b])
                       @ cat.associator(A, Z, B)
                       @ cat.tensor_mor(self.betas[a], Mor.identity(B))
                       @ cat.associator_inv(Z, A, B))
                worst = max(worst, lhs.distance(rhs))
        return worst

    def unit_residual(self) -> float:
        return self.betas[self.category.unit].distance(Mor.identity(self.carrier))

    def is_invertible(self) -> bool:
        return all(b.is_invertible(1e-10) for b in self.betas if b.src.total())


@dataclass(eq=False)
class CenterCategory:
    """Simples de Z(C) com dimensões, twists e matriz S"""

    category: FusionCategory
    ambient: Any
    simples: List[CenterObject]
    qdims: np.ndarray
    twists: np.ndarray
    S: np.ndarray
    seed: int = 0
    _fusion: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def names(self) -> List[str]:
        return [z.name for z in self.simples]

    @property
    def T(self) -> np.ndarray:
        return np.diag(self.twists)

    @property
    def global_dim(self) -> float:
        return float(np.sum(np.abs(self.qdims) ** 2))

    @property
    def unit(self) -> CenterObject:
        return self.simples[0]

    def forgetful(self) -> List[Tuple[int, ...]]:
        return [z.carrier.mult for z in self.simples]

    def describe(self, k: int) -> str:
        return self.category.describe(self.simples[k].carrier)

    def decompose(self, z: CenterObject) -> List[int]:
        """Multiplicidade de cada simples do centro em z"""
        return [len(self.ambient.hom_basis(s, z)) if s.carrier.hom_dim(z.carrier) else 0
                for s in self.simples]

    def index_of(self, z: CenterObject) -> int:
        """Índice do simples isomorfo a z (z simples)"""
        mult = self.decompose(z)
        if sum(mult) != 1:
            raise ValueError("objeto não é simples no centro")
        return mult.index(1)

    def fusion(self) -> np.ndarray:
        """N_ij^k = dim Hom_Z(Z_k, Z_i⊗Z_j)"""
        if self._fusion is None:
            n = self.rank
            N = np.zeros((n, n, n), dtype=int)
            for i in range(n):
                for j in range(n):
                    N[i, j] = self.decompose(self.ambient.tensor(self.simples[i], self.simples[j]))
            self._fusion = N
            logger.debug(f"Fusão de Z({self.category.name}) calculada por dimensões de Hom")
        return self._fusion

    def verlinde_fusion(self) -> np.ndarray:
        S = self.S
        n = self.rank
        N = np.zeros((n, n, n), dtype=complex)
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    N[i, j, k] = np.sum(S[i] * S[j] * np.conj(S[k]) / S[0])
        return N

    def verlinde_residual(self) -> float:
        return float(np.max(np.abs(self.verlinde_fusion() - self.fusion())))

    def transparent(self, tol: float = 1e-6) -> List[int]:
        """Índices de simples transparentes a todos: o centro de Müger"""
        D = np.sqrt(self.global_dim)
        expected = np.outer(self.qdims, self.qdims) / D
        return [j for j in range(self.rank) if np.max(np.abs(self.S[:, j] - expected[:, j])) < tol]

    def is_nondegenerate(self) -> bool:
        return self.transparent() == [0]

    def modular_pairs(self, digits: int = 6) -> List[Tuple[float, float, float]]:
        """Multiconjunto ordenado de (qdim, Re θ, Im θ)"""
        pairs = [(round(float(np.real(d)), digits), round(float(np.real(t)), digits) + 0.0,
                  round(float(np.imag(t)), digits) + 0.0)
                 for d, t in zip(self.qdims, self.twists)]
        return sorted(pairs)


@dataclass(eq=False)
class CommAlgebraInCenter:
    """Álgebra comutativa em Z(C) com testemunhas e flags"""

    algebra: Any
    commutativity: float
    connected: bool
    separable: bool
    lagrangian: Optional[bool] = None
    counit: Optional[Mor] = None
    source: Any = None
    audits: Dict[str, Any] = field(default_factory=dict)

    @property
    def carrier(self) -> CenterObject:
        return self.algebra.carrier

    @property
    def obj(self) -> Obj:
        return self.algebra.obj

    @property
    def name(self) -> str:
        return self.algebra.name
