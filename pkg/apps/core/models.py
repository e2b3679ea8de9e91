# apps/core/models.py

"""
Modelos de dados do núcleo categórico.

Nada aqui é model do Django: são dataclasses imutáveis que descrevem uma
categoria de fusão esquelética (CategoryData), objetos semissimples (Obj),
morfismos em blocos por simples (Mor) e bases de árvores de fusão.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .exceptions import SingularityError, StructuralError

FKey = Tuple[int, int, int, int, int, int, int, int, int, int]
RKey = Tuple[int, int, int, int, int]


@dataclass(frozen=True, eq=False)
class CategoryData:
    """
    Categoria de fusão esquelética.

    fusion[(a, b, c)] = N_{ab}^c, somente entradas não nulas.
    f_symbols[(a, b, c, d, e, f, mu, nu, rho, sigma)] = F^{abc}_d[(e,mu,nu),(f,rho,sigma)].
    r_symbols[(a, b, c, mu, nu)] = R^{ab}_c[mu, nu].
    pivotal[a] guarda o registro de Frobenius-Schur / pivotal (padrão 1).
    """

    name: str
    simples: Tuple[str, ...]
    unit: int
    dual: Tuple[int, ...]
    fusion: Dict[Tuple[int, int, int], int]
    f_symbols: Dict[FKey, complex]
    r_symbols: Optional[Dict[RKey, complex]] = None
    pivotal: Optional[Tuple[complex, ...]] = None
    tolerance: float = 1e-9

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def braided(self) -> bool:
        return self.r_symbols is not None

    def index(self, label) -> int:
        """Aceita índice inteiro ou rótulo textual"""
        if isinstance(label, (int, np.integer)):
            if not 0 <= int(label) < self.rank:
                raise StructuralError(f"índice de simples fora do intervalo: {label}", path='simples')
            return int(label)
        try:
            return self.simples.index(str(label))
        except ValueError:
            raise StructuralError(f"simples desconhecido: {label!r}", path='simples')

    def pivotal_of(self, a: int) -> complex:
        if self.pivotal is None:
            return 1.0 + 0j
        return complex(self.pivotal[a])


@dataclass(frozen=True)
class Obj:
    """Objeto semissimples: vetor de multiplicidades indexado pelos simples"""

    mult: Tuple[int, ...]

    @classmethod
    def simple(cls, rank: int, index: int, copies: int = 1) -> 'Obj':
        mult = [0] * rank
        mult[index] = copies
        return cls(tuple(mult))

    @classmethod
    def zero(cls, rank: int) -> 'Obj':
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.mult)

    def __getitem__(self, index: int) -> int:
        return self.mult[index]

    def __add__(self, other: 'Obj') -> 'Obj':
        if self.rank != other.rank:
            raise StructuralError("soma direta entre categorias diferentes")
        return Obj(tuple(x + y for x, y in zip(self.mult, other.mult)))

    def __rmul__(self, k: int) -> 'Obj':
        return Obj(tuple(int(k) * x for x in self.mult))

    def is_zero(self) -> bool:
        return not any(self.mult)

    def total(self) -> int:
        return sum(self.mult)

    def hom_dim(self, other: 'Obj') -> int:
        """dim Hom(self, other) = soma dos produtos das multiplicidades"""
        return sum(x * y for x, y in zip(self.mult, other.mult))

    def support(self) -> List[int]:
        return [i for i, m in enumerate(self.mult) if m]


@dataclass(frozen=True, eq=False)
class Mor:
    """
    Morfismo entre objetos semissimples.

    blocks[c] tem forma (dst[c], src[c]); composição é produto de blocos.
    """

    src: Obj
    dst: Obj
    blocks: Tuple[np.ndarray, ...]

    def __post_init__(self):
        if len(self.blocks) != self.src.rank or self.src.rank != self.dst.rank:
            raise StructuralError("número de blocos difere do posto da categoria")
        for c, block in enumerate(self.blocks):
            if block.shape != (self.dst[c], self.src[c]):
                raise StructuralError(
                    f"bloco {c} com forma {block.shape}, esperado {(self.dst[c], self.src[c])}"
                )

    # --- construtores ---

    @classmethod
    def zero(cls, src: Obj, dst: Obj) -> 'Mor':
        return cls(src, dst, tuple(np.zeros((dst[c], src[c]), dtype=complex) for c in range(src.rank)))

    @classmethod
    def identity(cls, x: Obj) -> 'Mor':
        return cls(x, x, tuple(np.eye(x[c], dtype=complex) for c in range(x.rank)))

    @classmethod
    def from_vector(cls, src: Obj, dst: Obj, vector: np.ndarray) -> 'Mor':
        blocks = []
        offset = 0
        for c in range(src.rank):
            size = dst[c] * src[c]
            blocks.append(np.asarray(vector[offset:offset + size], dtype=complex).reshape(dst[c], src[c]))
            offset += size
        return cls(src, dst, tuple(blocks))

    # --- álgebra ---

    def __matmul__(self, other: 'Mor') -> 'Mor':
        if other.dst != self.src:
            raise StructuralError(f"composição incompatível: {other.dst.mult} -> {self.src.mult}")
        return Mor(other.src, self.dst, tuple(f @ g for f, g in zip(self.blocks, other.blocks)))

    def __add__(self, other: 'Mor') -> 'Mor':
        self._check_parallel(other)
        return Mor(self.src, self.dst, tuple(f + g for f, g in zip(self.blocks, other.blocks)))

    def __sub__(self, other: 'Mor') -> 'Mor':
        self._check_parallel(other)
        return Mor(self.src, self.dst, tuple(f - g for f, g in zip(self.blocks, other.blocks)))

    def __mul__(self, scalar) -> 'Mor':
        return Mor(self.src, self.dst, tuple(scalar * f for f in self.blocks))

    __rmul__ = __mul__

    def __neg__(self) -> 'Mor':
        return self * -1

    def _check_parallel(self, other: 'Mor'):
        if self.src != other.src or self.dst != other.dst:
            raise StructuralError("morfismos não paralelos")

    # --- inspeção ---

    def vector(self) -> np.ndarray:
        if not self.blocks:
            return np.zeros(0, dtype=complex)
        return np.concatenate([b.ravel() for b in self.blocks])

    def max_abs(self) -> float:
        return max((float(np.max(np.abs(b))) for b in self.blocks if b.size), default=0.0)

    def distance(self, other: 'Mor') -> float:
        return (self - other).max_abs()

    def is_square(self) -> bool:
        return self.src == self.dst

    def inverse(self) -> 'Mor':
        if self.src != self.dst:
            raise SingularityError("morfismo entre objetos distintos não é invertível")
        blocks = []
        for c, block in enumerate(self.blocks):
            if block.size == 0:
                blocks.append(block.copy())
                continue
            if np.linalg.cond(block) > 1e12:
                raise SingularityError(f"bloco {c} singular (cond={np.linalg.cond(block):.2e})")
            blocks.append(np.linalg.inv(block))
        return Mor(self.dst, self.src, tuple(blocks))

    def is_invertible(self, tol: float = 1e-9) -> bool:
        if self.src != self.dst:
            return False
        for block in self.blocks:
            if block.size and np.min(np.linalg.svd(block, compute_uv=False)) < tol:
                return False
        return True

    def trace_blocks(self) -> np.ndarray:
        return np.array([np.trace(b) for b in self.blocks], dtype=complex)

    def scalar(self) -> complex:
        """Valor escalar de um endomorfismo de um objeto simples"""
        for block in self.blocks:
            if block.size:
                return complex(np.trace(block) / block.shape[0])
        return 0j


@dataclass(frozen=True)
class FusionTreeBasis:
    """
    Base de Hom(w_0 ⊗ ... ⊗ w_{n-1}, t) em árvores aninhadas à esquerda.

    Cada rótulo é (intermediários, multiplicidades); a ordem dos rótulos é a
    ordem das cópias de t no objeto ((w_0 ⊗ w_1) ⊗ w_2) ... do motor.
    """

    word: Tuple[int, ...]
    target: int
    labels: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...] = field(default_factory=tuple)

    @property
    def size(self) -> int:
        return len(self.labels)


@dataclass
class ValidationReport:
    """Resíduos máximos por família de restrições"""

    category: str
    tolerance: float
    residuals: Dict[str, float] = field(default_factory=dict)
    worst: Dict[str, Sequence] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r < self.tolerance for r in self.residuals.values())

    def as_dict(self) -> Dict:
        return {
            'category': self.category,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'residuals': dict(self.residuals),
            'worst': {k: list(v) for k, v in self.worst.items()},
            'notes': list(self.notes),
        }
