# apps/braided/models.py

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from apps.algebras.models import Algebra, Bimodule, Module
from apps.core.models import Mor

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class AlgebraOverCommutative:
    """
    Objeto U do centro com ações unitais de uma álgebra comutativa Z.

    `algebra` é opcional: [x,x']_Z com x ≠ x' só tem as ações. As ações
    seguem a convenção dos módulos: left: Z⊗U → U e right: U⊗Z → U.
    """

    Z: Any
    carrier: Any
    left: Optional[Mor] = None
    right: Optional[Mor] = None
    algebra: Optional[Algebra] = None
    name: str = ''

    @property
    def ambient(self):
        return self.Z.algebra.ambient

    @property
    def obj(self):
        return self.ambient.carrier(self.carrier)

    def as_bimodule(self) -> Bimodule:
        Za = self.Z.algebra
        return Bimodule(Za, Za, self.carrier, self.left, self.right, name=self.name)

    def as_right_module(self) -> Module:
        return Module(self.Z.algebra, self.carrier, self.right, side='right', name=self.name)

    def as_left_module(self) -> Module:
        return Module(self.Z.algebra, self.carrier, self.left, side='left', name=self.name)

    def as_module(self):
        if self.left is not None and self.right is not None:
            return self.as_bimodule()
        return self.as_right_module() if self.right is not None else self.as_left_module()

    def associated_homs(self) -> Dict[str, Mor]:
        """φ_λ = λ∘(id⊗u_U) e φ_ρ = ρ∘(u_U⊗id), ambos Z → U"""
        if self.algebra is None:
            return {}
        amb = self.ambient
        iz = self.Z.algebra.identity
        homs = {}
        if self.left is not None:
            homs['left'] = self.left @ amb.tensor_mor(iz, self.algebra.unit)
        if self.right is not None:
            homs['right'] = self.right @ amb.tensor_mor(self.algebra.unit, iz)
        return homs


@dataclass(eq=False)
class GroupTable:
    """Grupo finito por tabela de multiplicação; table[i][j] = índice de g_i·g_j"""

    elements: List[str]
    table: List[List[int]]
    identity: int = 0
    exhaustive: bool = True
    maps: List[Any] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def order(self) -> int:
        return len(self.elements)

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(self.identity)

    def is_associative(self) -> bool:
        n = self.order
        return all(self.table[self.table[i][j]][k] == self.table[i][self.table[j][k]]
                   for i in range(n) for j in range(n) for k in range(n))

    def is_unital(self) -> bool:
        e = self.identity
        return all(self.table[e][i] == i and self.table[i][e] == i for i in range(self.order))

    def is_latin(self) -> bool:
        """Linhas e colunas são permutações: inversos existem"""
        full = set(range(self.order))
        rows = all(set(row) == full for row in self.table)
        cols = all({self.table[i][j] for i in range(self.order)} == full for j in range(self.order))
        return rows and cols

    def is_group(self) -> bool:
        return self.order > 0 and self.is_unital() and self.is_latin() and self.is_associative()

    def element_order(self, i: int) -> int:
        k, power = 1, i
        while power != self.identity:
            power = self.table[power][i]
            k += 1
            if k > self.order:
                return 0
        return k

    def order_profile(self) -> Tuple[Tuple[int, int], ...]:
        """Multiconjunto das ordens dos elementos"""
        return tuple(sorted(Counter(self.element_order(i) for i in range(self.order)).items()))

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(n))

    def identify(self) -> str:
        """Nome pelo par (ordem, perfil de ordens); '?' quando ambíguo"""
        n = self.order
        profile = dict(self.order_profile())
        if n == 1:
            return 'trivial'
        if profile.get(n) and self.is_abelian():
            return f"Z/{n}"
        if n == 4 and profile == {1: 1, 2: 3}:
            return 'Z/2×Z/2'
        if n == 6 and not self.is_abelian():
            return 'S3'
        return '?'

    def as_dict(self) -> Dict:
        return {
            'order': self.order,
            'elements': list(self.elements),
            'table': [list(row) for row in self.table],
            'identity': self.identity,
            'exhaustive': self.exhaustive,
            'group': self.identify(),
            'notes': list(self.notes),
        }


@dataclass(eq=False)
class IsoResult:
    """Resultado de uma busca de isomorfismo de álgebras"""

    found: bool
    map: Optional[Mor] = None
    method: str = 'object'
    exhaustive: bool = True
    residual: float = 0.0
    solutions: List[Mor] = field(default_factory=list)
    scalars: List[Tuple[complex, ...]] = field(default_factory=list)
    reason: str = ''

    def __bool__(self) -> bool:
        return self.found

    def as_dict(self) -> Dict:
        return {
            'found': self.found,
            'method': self.method,
            'exhaustive': self.exhaustive,
            'residual': self.residual,
            'solutions': len(self.solutions),
            'reason': self.reason,
        }
