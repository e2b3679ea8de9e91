# apps/core/utils.py

"""
Substrato de álgebra linear usado por todos os módulos.

Espaços Hom são parametrizados por vetores (blocos concatenados); condições
lineares sobre morfismos viram matrizes avaliando o operador numa base.
"""

import logging
from collections import OrderedDict
from typing import Any, Callable, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from .conf import get_config
from .exceptions import SplittingError
from .models import Mor, Obj

logger = logging.getLogger(__name__)

MorOrList = Union[Mor, Sequence[Mor]]


def matrix_units(src: Obj, dst: Obj) -> List[Mor]:
    """Base canônica de Hom_C(src, dst): uma unidade matricial por entrada de bloco"""
    dim = src.hom_dim(dst)
    units = []
    for k in range(dim):
        vector = np.zeros(dim, dtype=complex)
        vector[k] = 1.0
        units.append(Mor.from_vector(src, dst, vector))
    return units


def null_space(matrix: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Base ortonormal do núcleo; limiar absoluto escalado pela maior singular"""
    if matrix.shape[1] == 0:
        return np.zeros((0, 0), dtype=complex)
    if matrix.shape[0] == 0:
        return np.eye(matrix.shape[1], dtype=complex)
    if matrix.shape[0] > matrix.shape[1]:
        # R da QR tem o mesmo espectro singular e o mesmo vh, sem o U alto
        matrix = scipy.linalg.qr(matrix, mode='r', check_finite=False)[0][:matrix.shape[1]]
    _, s, vh = scipy.linalg.svd(matrix, full_matrices=True)
    escala = max(1.0, float(s[0]) if s.size else 1.0)
    rank = int(np.sum(s > tol * escala * 10))
    return vh[rank:].conj().T


def matrix_rank(matrix: np.ndarray, tol: float = 1e-9) -> int:
    if matrix.size == 0:
        return 0
    s = scipy.linalg.svd(matrix, compute_uv=False)
    escala = max(1.0, float(s[0]))
    return int(np.sum(s > tol * escala * 10))


def _flatten(value: MorOrList) -> np.ndarray:
    if isinstance(value, Mor):
        return value.vector()
    partes = [m.vector() for m in value]
    return np.concatenate(partes) if partes else np.zeros(0, dtype=complex)


def operator_matrix(fn: Callable[[Mor], MorOrList], basis: Sequence[Mor]) -> np.ndarray:
    """Matriz do operador linear fn na base dada (colunas = imagens)"""
    colunas = [_flatten(fn(b)) for b in basis]
    if not colunas:
        return np.zeros((0, 0), dtype=complex)
    return np.stack(colunas, axis=1)


def combine(basis: Sequence[Mor], coefficients: Iterable[complex]) -> Mor:
    coefficients = list(coefficients)
    total = basis[0] * coefficients[0]
    for b, c in zip(basis[1:], coefficients[1:]):
        if c != 0:
            total = total + b * c
    return total


def solve_kernel(fn: Callable[[Mor], MorOrList], basis: Sequence[Mor], tol: float = 1e-9) -> List[Mor]:
    """Base (ortonormal nos coeficientes) de {f no span(basis) : fn(f) = 0}"""
    if not basis:
        return []
    matrix = operator_matrix(fn, basis)
    kernel = null_space(matrix, tol) if matrix.shape[0] else np.eye(len(basis), dtype=complex)
    return [combine(basis, kernel[:, k]) for k in range(kernel.shape[1])]


def solve_affine(fn: Callable[[Mor], MorOrList], basis: Sequence[Mor], target: MorOrList,
                 tol: float = 1e-9) -> Tuple[Mor, float, int]:
    """
    Solução de norma mínima de fn(f) = target com f no span(basis).

    Retorna (f, resíduo, dimensão do núcleo).
    """
    matrix = operator_matrix(fn, basis)
    rhs = _flatten(target)
    coef, *_ = scipy.linalg.lstsq(matrix, rhs, lapack_driver='gelsd')
    residual = float(np.max(np.abs(matrix @ coef - rhs))) if rhs.size else 0.0
    kernel_dim = len(basis) - matrix_rank(matrix, tol)
    return combine(basis, coef), residual, kernel_dim


def spectral_projectors(element: Mor, tol: float = 1e-6) -> List[Mor]:
    """
    Projetores espectrais de um endomorfismo, agrupando autovalores iguais
    em todos os blocos.
    """
    x = element.src
    autovalores = []
    decomposicoes = {}
    for c in range(x.rank):
        block = element.blocks[c]
        if block.size == 0:
            continue
        vals, vecs = scipy.linalg.eig(block)
        decomposicoes[c] = (vals, vecs, scipy.linalg.inv(vecs))
        autovalores.extend(vals.tolist())

    grupos: List[complex] = []
    for v in sorted(autovalores, key=lambda z: (round(z.real, 6), round(z.imag, 6))):
        if not any(abs(v - g) < tol * max(1.0, abs(g)) for g in grupos):
            grupos.append(v)

    projetores = []
    for g in grupos:
        blocks = []
        for c in range(x.rank):
            if c not in decomposicoes:
                blocks.append(np.zeros((x[c], x[c]), dtype=complex))
                continue
            vals, vecs, inv = decomposicoes[c]
            sel = np.abs(vals - g) < tol * max(1.0, abs(g))
            blocks.append(vecs[:, sel] @ inv[sel, :])
        projetores.append(Mor(x, x, tuple(blocks)))
    return projetores


def split_idempotent(projector: Mor, snap: float = None) -> Tuple[Obj, Mor, Mor]:
    """
    Cinde um idempotente P = ι∘π.

    Autovalores são arredondados para {0, 1} quando a distância é menor que
    `snap`; caso contrário levanta SplittingError. A base da imagem vem da SVD
    de P, então ι tem colunas ortonormais mesmo com P ruidoso ou não hermitiano,
    e π = ι^H∘P.
    """
    snap = snap if snap is not None else float(get_config('SNAP'))
    x = projector.src
    mult = []
    iotas = []
    pis = []
    for c in range(x.rank):
        block = projector.blocks[c]
        if block.size == 0:
            mult.append(0)
            iotas.append(np.zeros((x[c], 0), dtype=complex))
            pis.append(np.zeros((0, x[c]), dtype=complex))
            continue
        vals = scipy.linalg.eigvals(block)
        uns = np.abs(vals - 1) < snap
        zeros = np.abs(vals) < snap
        if not np.all(uns | zeros):
            ruins = vals[~(uns | zeros)]
            raise SplittingError(f"espectro não idempotente no bloco {c}: {np.round(ruins, 6).tolist()}")
        rank = int(np.sum(uns))
        u, _, _ = scipy.linalg.svd(block)
        iota = u[:, :rank]
        iotas.append(iota)
        pis.append(iota.conj().T @ block)
        mult.append(rank)
    sub = Obj(tuple(mult))
    iota = Mor(sub, x, tuple(iotas))
    pi = Mor(x, sub, tuple(pis))
    return sub, iota, pi


class BoundedCache:
    """Dicionário LRU com capacidade fixa (CACHE_SIZE por padrão)"""

    def __init__(self, capacity: Optional[int] = None):
        self.capacity = int(capacity if capacity is not None else get_config('CACHE_SIZE'))
        self._data: 'OrderedDict[Hashable, Any]' = OrderedDict()

    def get(self, key: Hashable) -> Any:
        value = self._data.get(key)
        if value is not None:
            self._data.move_to_end(key)
        return value

    def __setitem__(self, key: Hashable, value: Any) -> None:
        self._data[key] = value
        self._data.move_to_end(key)
        while len(self._data) > self.capacity:
            self._data.popitem(last=False)

    def __len__(self) -> int:
        return len(self._data)

    def clear(self) -> None:
        self._data.clear()


def random_combination(basis: Sequence[Mor], rng: np.random.Generator) -> Mor:
    coef = rng.normal(size=len(basis)) + 1j * rng.normal(size=len(basis))
    return combine(basis, coef)


def kernel_blocks(f: Mor, tol: float = 1e-9) -> Tuple[Obj, Mor, Mor]:
    """Núcleo de f bloco a bloco: (K, ι: K → src, π: src → K) com π∘ι = id"""
    mult, iotas, pis = [], [], []
    for c, block in enumerate(f.blocks):
        size = f.src[c]
        base = null_space(block, tol) if size else np.zeros((0, 0), dtype=complex)
        if size == 0:
            base = np.zeros((0, 0), dtype=complex)
        iotas.append(base)
        pis.append(base.conj().T)
        mult.append(base.shape[1])
    sub = Obj(tuple(mult))
    return sub, Mor(sub, f.src, tuple(iotas)), Mor(f.src, sub, tuple(pis))


def cokernel_blocks(f: Mor, tol: float = 1e-9) -> Tuple[Obj, Mor, Mor]:
    """Conúcleo de f: (Q, ι: Q → dst, π: dst → Q), π anulando a imagem de f"""
    mult, iotas, pis = [], [], []
    for c, block in enumerate(f.blocks):
        size = f.dst[c]
        base = null_space(block.conj().T, tol) if size else np.zeros((0, 0), dtype=complex)
        if size == 0:
            base = np.zeros((0, 0), dtype=complex)
        iotas.append(base)
        pis.append(base.conj().T)
        mult.append(base.shape[1])
    quo = Obj(tuple(mult))
    return quo, Mor(quo, f.dst, tuple(iotas)), Mor(f.dst, quo, tuple(pis))


def direct_sum_maps(parts: Sequence[Obj]) -> Tuple[Obj, List[Mor], List[Mor]]:
    """Soma direta com injeções e projeções; cópias de cada parte em sequência"""
    total = parts[0]
    for p in parts[1:]:
        total = total + p
    rank = total.rank
    injections, projections = [], []
    offsets = [0] * rank
    for p in parts:
        blocks = []
        for c in range(rank):
            block = np.zeros((total[c], p[c]), dtype=complex)
            block[offsets[c]:offsets[c] + p[c], :] = np.eye(p[c])
            blocks.append(block)
            offsets[c] += p[c]
        inj = Mor(p, total, tuple(blocks))
        injections.append(inj)
        projections.append(Mor(total, p, tuple(b.T.copy() for b in blocks)))
    return total, injections, projections


def copy_maps(x: Obj, c: int, copy: int) -> Tuple[Mor, Mor]:
    """Inclusão e projeção da cópia `copy` do simples c dentro de x"""
    simple = Obj.simple(x.rank, c)
    inc = Mor.zero(simple, x)
    blocks = list(inc.blocks)
    blocks[c] = np.zeros((x[c], 1), dtype=complex)
    blocks[c][copy, 0] = 1.0
    inc = Mor(simple, x, tuple(blocks))
    proj = Mor(x, simple, tuple(b.T.copy() for b in blocks))
    return inc, proj
