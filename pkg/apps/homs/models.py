# apps/homs/models.py

"""
Modelos de homs internos e diagramas de fim.
"""

from dataclasses import dataclass, field
from typing import Any, List, Optional, Tuple

from apps.core.models import Mor


@dataclass(eq=False)
class InternalHom:
    """
    [x,y] = ⊕_b b^{dim W_b} com ev: [x,y]⊗x → y.

    parts guarda, para cada cópia, o simples b e o morfismo de módulos
    w: b⊗x → y correspondente; injections e projections são as da soma.
    """

    ambient: Any
    carrier: Any
    ev: Mor
    source: Any
    target: Any
    parts: List[Tuple[Any, Mor]] = field(default_factory=list)
    injections: List[Mor] = field(default_factory=list)
    projections: List[Mor] = field(default_factory=list)
    name: str = ''

    @property
    def obj(self):
        return self.ambient.carrier(self.carrier)

    def multiplicities(self) -> List[int]:
        """Multiplicidade de cada simples do ambiente em [x,y]"""
        simples = self.ambient.simple_objects()
        return [sum(1 for b, _ in self.parts if b is s or b == s) for s in simples]


@dataclass(eq=False)
class EndDiagram:
    """
    Dados de um fim ∫_x F(x,x) sobre uma categoria apresentada.

    diagonal[k] = F(o_k, o_k) para cada objeto o_k listado (simples primeiro);
    cada restrição (i, j, left, right) pede left∘w_i = right∘w_j, com
    left: F(o_i,o_i) → T e right: F(o_j,o_j) → T.
    """

    ambient: Any
    diagonal: List[Any]
    simple_count: int
    constraints: List[Tuple[int, int, Mor, Mor]] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)


@dataclass(eq=False)
class EndResult:
    """Fim calculado como equalizador, com as cunhas w_k: E → F(o_k, o_k)"""

    carrier: Any
    iota: Mor
    wedges: List[Mor]
    naturality: float = 0.0
    expected: Optional[Any] = None

    @property
    def obj(self):
        return self.iota.src
