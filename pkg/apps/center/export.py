# apps/center/export.py

"""
Exporta _A C_A como uma CategoryData independente.

Simples são os bimódulos simples (A no índice 0); vértices de separação
ψ: X_c → X_a⊗_A X_b vêm de bases de Hom de bimódulos, com os unitores nas
pernas unitárias; os símbolos F saem de mínimos quadrados de α^B aplicado
às árvores à esquerda contra as árvores à direita.
"""

import logging
from typing import Dict, List, Optional

import numpy as np
import scipy.linalg

from apps.algebras.laws import require_separable
from apps.algebras.models import Algebra, Bimodule
from apps.algebras.modules import hom_mod, simple_bimodules
from apps.algebras.relative import RelativeTensor, tensor_over
from apps.core.exceptions import StructuralError, VerificationError
from apps.core.models import CategoryData, Mor

logger = logging.getLogger(__name__)


def _clean(value: complex, digits: int = 12) -> complex:
    value = complex(round(value.real, digits), round(value.imag, digits))
    return complex(value.real + 0.0, value.imag + 0.0)


class _DualBuilder:
    """Cache de produtos relativos e vértices para a exportação"""

    def __init__(self, A: Algebra, simples: List[Bimodule]):
        self.A = A
        self.cat = A.ambient
        self.simples = simples
        self.witness = require_separable(A)
        self._pairs: Dict = {}
        self._vertices: Dict = {}

    def product(self, x: Bimodule, y: Bimodule, key) -> RelativeTensor:
        if key not in self._pairs:
            self._pairs[key] = tensor_over(self.A, x, y, self.witness)
        return self._pairs[key]

    def pair(self, a: int, b: int) -> RelativeTensor:
        return self.product(self.simples[a], self.simples[b], (a, b))

    def vertices(self, a: int, b: int, c: int) -> List[Mor]:
        """Base de ψ: X_c → X_a⊗_A X_b"""
        key = (a, b, c)
        if key in self._vertices:
            return self._vertices[key]
        cat, A = self.cat, self.A
        T = self.pair(a, b)
        if a == 0 or b == 0:
            other = b if a == 0 else a
            if c != other:
                result = []
            else:
                ix = Mor.identity(self.simples[other].obj)
                lift = cat.tensor_mor(A.unit, ix) if a == 0 else cat.tensor_mor(ix, A.unit)
                result = [T.pi @ lift]
        else:
            result = hom_mod(self.simples[c], T.structure)
        self._vertices[key] = result
        return result


def export_dual_category(A: Algebra, name: Optional[str] = None, seed: Optional[int] = None) -> CategoryData:
    """_A C_A como CategoryData (sem trança)"""
    cat = A.ambient
    simples = simple_bimodules(A, seed=seed)
    n = len(simples)
    builder = _DualBuilder(A, simples)
    logger.info(f"Exportando _{A.name}C_{A.name}: {n} bimódulos simples")

    fusion = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                k = len(builder.vertices(a, b, c))
                if k:
                    fusion[(a, b, c)] = k
    N = np.zeros((n, n, n), dtype=int)
    for (a, b, c), k in fusion.items():
        N[a, b, c] = k

    dual = []
    for a in range(n):
        partners = [b for b in range(n) if N[a, b, 0]]
        if len(partners) != 1:
            raise StructuralError(f"bimódulo {a} sem dual único em _A C_A", path='dual')
        dual.append(partners[0])

    f_symbols = {}
    worst = 0.0
    for a in range(1, n):
        for b in range(1, n):
            for c in range(1, n):
                for d in range(n):
                    block, residual = _f_block(builder, a, b, c, d, N)
                    worst = max(worst, residual)
                    f_symbols.update(block)
    if worst > 1e-8:
        raise VerificationError("símbolos F de _A C_A não reproduzem o associador", residual=worst)

    fp_A = cat.fpdim(A.obj)
    fpdims = [cat.fpdim(X.obj) / fp_A for X in simples]
    pivotal = []
    for a in range(n):
        if a == 0:
            pivotal.append(1.0 + 0j)
            continue
        key = (a, dual[a], a, a, 0, 0, 0, 0, 0, 0)
        pivotal.append(_clean(fpdims[a] * f_symbols.get(key, 1.0)))

    labels = tuple('1' if a == 0 else f"X{a}" for a in range(n))
    data = CategoryData(
        name=name or f"{cat.name}_{A.name}",
        simples=labels,
        unit=0,
        dual=tuple(dual),
        fusion=fusion,
        f_symbols=f_symbols,
        r_symbols=None,
        pivotal=tuple(pivotal),
        tolerance=cat.tolerance,
    )
    logger.info(f"_A C_A exportada: posto {n}, {len(f_symbols)} símbolos F, resíduo {worst:.2e}")
    return data


def _f_block(builder: _DualBuilder, a: int, b: int, c: int, d: int, N: np.ndarray):
    """F^{abc}_d por mínimos quadrados; retorna (entradas, resíduo)"""
    cat = builder.cat
    n = N.shape[0]
    X = builder.simples
    rows = [(e, mu, nu) for e in range(n) for mu in range(N[a, b, e]) for nu in range(N[e, c, d])]
    cols = [(f, rho, sigma) for f in range(n) for rho in range(N[b, c, f]) for sigma in range(N[a, f, d])]
    if not rows and not cols:
        return {}, 0.0

    T_ab, T_bc = builder.pair(a, b), builder.pair(b, c)
    left_total = builder.product(T_ab.structure, X[c], ('ab|c', a, b, c))
    right_total = builder.product(X[a], T_bc.structure, ('a|bc', a, b, c))
    ia, ic = Mor.identity(X[a].obj), Mor.identity(X[c].obj)
    assoc = (right_total.pi
             @ cat.tensor_mor(ia, T_bc.pi)
             @ cat.associator(X[a].obj, X[b].obj, X[c].obj)
             @ cat.tensor_mor(T_ab.iota, ic)
             @ left_total.iota)

    rights = []
    for f, rho, sigma in cols:
        outer = builder.pair(a, f)
        inner = builder.vertices(b, c, f)[rho]
        rights.append(right_total.pi @ cat.tensor_mor(ia, inner) @ outer.iota @ builder.vertices(a, f, d)[sigma])
    matrix = np.stack([r.vector() for r in rights], axis=1)

    entries, worst = {}, 0.0
    for e, mu, nu in rows:
        outer = builder.pair(e, c)
        inner = builder.vertices(a, b, e)[mu]
        left = left_total.pi @ cat.tensor_mor(inner, ic) @ outer.iota @ builder.vertices(e, c, d)[nu]
        target = (assoc @ left).vector()
        coef, *_ = scipy.linalg.lstsq(matrix, target, lapack_driver='gelsd')
        worst = max(worst, float(np.max(np.abs(matrix @ coef - target))))
        for j, (f, rho, sigma) in enumerate(cols):
            entries[(a, b, c, d, e, f, mu, nu, rho, sigma)] = _clean(coef[j])
    return entries, worst
