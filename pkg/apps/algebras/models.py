# apps/algebras/models.py

"""
Modelos de álgebras, módulos e bimódulos.

Todos são genéricos no "ambiente": uma FusionCategory (objetos Obj) ou o
ambiente do centro de Drinfeld (objetos CenterObject). Os morfismos são
sempre Mor entre os portadores em C.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from apps.core.models import Mor, Obj


@dataclass(eq=False)
class Algebra:
    """Álgebra (A, u: 1 → A, m: A⊗A → A) num ambiente"""

    ambient: Any
    carrier: Any
    unit: Mor
    mult: Mor
    name: str = ''

    @classmethod
    def trivial(cls, ambient) -> 'Algebra':
        one = ambient.unit_object()
        ident = Mor.identity(ambient.carrier(one))
        return cls(ambient, one, ident, ident, name='1')

    @property
    def obj(self) -> Obj:
        return self.ambient.carrier(self.carrier)

    @property
    def identity(self) -> Mor:
        return Mor.identity(self.obj)

    def direct_sum(self, other: 'Algebra', name: str = '') -> 'Algebra':
        """A ⊕ B com multiplicação em blocos"""
        amb = self.ambient
        total, (ia, ib), (pa, pb) = amb.direct_sum([self.carrier, other.carrier])
        mult = (ia @ self.mult @ amb.tensor_mor(pa, pa)
                + ib @ other.mult @ amb.tensor_mor(pb, pb))
        unit = ia @ self.unit + ib @ other.unit
        return Algebra(amb, total, unit, mult, name=name or f"{self.name}⊕{other.name}")


@dataclass(eq=False)
class Module:
    """Módulo de um lado: ação x⊗A → x (right) ou A⊗x → x (left)"""

    algebra: Algebra
    carrier: Any
    action: Mor
    side: str = 'right'
    name: str = ''

    @property
    def ambient(self):
        return self.algebra.ambient

    @property
    def obj(self) -> Obj:
        return self.ambient.carrier(self.carrier)

    @property
    def right_action(self) -> Optional[Mor]:
        return self.action if self.side == 'right' else None

    @property
    def left_action(self) -> Optional[Mor]:
        return self.action if self.side == 'left' else None

    @property
    def right_algebra(self) -> Optional[Algebra]:
        return self.algebra if self.side == 'right' else None

    @property
    def left_algebra(self) -> Optional[Algebra]:
        return self.algebra if self.side == 'left' else None


@dataclass(eq=False)
class Bimodule:
    """Bimódulo A-B: ações A⊗x → x e x⊗B → x que comutam"""

    left_algebra: Algebra
    right_algebra: Algebra
    carrier: Any
    left_action: Mor
    right_action: Mor
    name: str = ''

    @property
    def ambient(self):
        return self.left_algebra.ambient

    @property
    def obj(self) -> Obj:
        return self.ambient.carrier(self.carrier)


@dataclass
class SeparabilityWitness:
    """Seção e: A → A⊗A de m, morfismo de bimódulos"""

    section: Mor
    residual: float
    kernel_dim: int = 0


@dataclass
class AlgebraReport:
    """Resultado de check_algebra"""

    name: str
    tolerance: float
    associativity: float = 0.0
    worst_block: Optional[int] = None
    left_unit: float = 0.0
    right_unit: float = 0.0
    unit_solutions: int = 1
    connected_dim: int = 0
    separable: bool = False
    witness: Optional[SeparabilityWitness] = None
    simple_dim: int = 0
    notes: List[str] = field(default_factory=list)

    @property
    def associative(self) -> bool:
        return self.associativity < self.tolerance

    @property
    def unital(self) -> bool:
        return max(self.left_unit, self.right_unit) < self.tolerance and self.unit_solutions == 1

    @property
    def connected(self) -> bool:
        return self.connected_dim == 1

    @property
    def simple(self) -> bool:
        return self.simple_dim == 1

    @property
    def passed(self) -> bool:
        return self.associative and self.unital and self.separable

    def checks(self) -> List[Tuple[str, float, bool]]:
        """Registros (nome, resíduo, veredito) para o relatório"""
        sep_residual = self.witness.residual if self.witness else float('inf')
        return [
            ('associativity', self.associativity, self.associative),
            ('left_unit', self.left_unit, self.left_unit < self.tolerance),
            ('right_unit', self.right_unit, self.right_unit < self.tolerance),
            ('unit_unique', float(self.unit_solutions), self.unit_solutions == 1),
            ('separable', sep_residual, self.separable),
        ]

    def as_dict(self) -> Dict:
        return {
            'name': self.name,
            'associative': self.associative,
            'associativity_residual': self.associativity,
            'worst_block': self.worst_block,
            'unital': self.unital,
            'unit_solutions': self.unit_solutions,
            'connected': self.connected,
            'separable': self.separable,
            'simple': self.simple,
            'notes': list(self.notes),
        }
