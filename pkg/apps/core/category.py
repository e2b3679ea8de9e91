# apps/core/category.py

"""
Motor esquelético de uma categoria de fusão.

Convenções:
- cópias de c em X⊗Y são rotuladas por (a, b, α, β, μ) em ordem
  lexicográfica, com α cópia de a em X, β cópia de b em Y e μ o índice de
  multiplicidade do vértice c → a⊗b;
- o associador α_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z) usa
  α((ψ^{ab}_e⊗id)ψ^{ec}_d) = Σ F^{abc}_d[(e,μ,ν),(f,ρ,σ)] (id⊗ψ^{bc}_f)ψ^{af}_d;
- F com uma perna na unidade é a identidade, logo os unitores são identidades;
- ev_a: a*⊗a → 1 tem coeficiente 1 e coev_a: 1 → a⊗a* tem 1/F^{a a* a}_a[1,1].
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from .exceptions import SingularityError, StructuralError, UnsupportedError
from .models import CategoryData, Mor, Obj
from .utils import (
    BoundedCache, cokernel_blocks, direct_sum_maps, kernel_blocks, matrix_units, split_idempotent,
)

logger = logging.getLogger(__name__)

Tree = Union[Obj, Tuple['Tree', 'Tree']]


@dataclass
class TensorLayout:
    """Posições das cópias de cada simples c dentro de X⊗Y"""

    left: Obj
    right: Obj
    obj: Obj
    offsets: List[Dict[Tuple[int, int], int]]

    def position(self, c: int, a: int, b: int, alpha, beta, mu, n: int):
        return self.offsets[c][(a, b)] + (alpha * self.right[b] + beta) * n + mu


@dataclass
class FBlock:
    rows: List[Tuple[int, int, int]]
    cols: List[Tuple[int, int, int]]
    matrix: np.ndarray


class FusionCategory:
    """
    Categoria de fusão esquelética com produto tensorial, associador,
    trança (se houver símbolos R) e dualidade derivada dos símbolos F.
    """

    def __init__(self, data: CategoryData):
        self.data = data
        self.rank = data.rank
        self.unit = data.unit
        self.tolerance = data.tolerance
        self.dual = np.array(data.dual, dtype=int)

        self.N = np.zeros((self.rank,) * 3, dtype=int)
        for (a, b, c), n in data.fusion.items():
            self.N[a, b, c] = n

        self._F: Dict[Tuple[int, int, int, int], FBlock] = {}
        self._F_entries: Dict[Tuple[int, int, int, int], List[Tuple]] = {}
        self._build_f_blocks()

        self._R: Dict[Tuple[int, int, int], np.ndarray] = {}
        if data.r_symbols is not None:
            self._build_r_blocks()

        self._layouts = BoundedCache()
        self._associators = BoundedCache()
        self._associators_inv = BoundedCache()
        self._braidings = BoundedCache()

    # === DADOS ===

    @property
    def name(self) -> str:
        return self.data.name

    @property
    def braided(self) -> bool:
        return bool(self._R) or self.data.r_symbols is not None

    def _is_unit_leg(self, a: int, b: int, c: int) -> bool:
        return self.unit in (a, b, c)

    def _build_f_blocks(self):
        r = self.rank
        N = self.N
        for a in range(r):
            for b in range(r):
                for c in range(r):
                    for d in range(r):
                        rows = [(e, mu, nu) for e in range(r)
                                for mu in range(N[a, b, e]) for nu in range(N[e, c, d])]
                        cols = [(f, rho, sigma) for f in range(r)
                                for rho in range(N[b, c, f]) for sigma in range(N[a, f, d])]
                        if not rows and not cols:
                            continue
                        if len(rows) != len(cols):
                            raise StructuralError(
                                f"bloco F^{{{a}{b}{c}}}_{d} não é quadrado ({len(rows)}x{len(cols)}); "
                                f"anel de fusão não associativo",
                                path='fusion',
                            )
                        matrix = np.zeros((len(rows), len(cols)), dtype=complex)
                        for i, (e, mu, nu) in enumerate(rows):
                            for j, (f, rho, sigma) in enumerate(cols):
                                key = (a, b, c, d, e, f, mu, nu, rho, sigma)
                                if key in self.data.f_symbols:
                                    matrix[i, j] = self.data.f_symbols[key]
                                elif self._is_unit_leg(a, b, c):
                                    matrix[i, j] = 1.0 if i == j else 0.0
                                else:
                                    raise StructuralError(f"símbolo F ausente para a tupla {key}", path='F')
                        self._F[(a, b, c, d)] = FBlock(rows, cols, matrix)
                        self._F_entries[(a, b, c, d)] = [
                            (e, mu, nu, f, rho, sigma, matrix[i, j])
                            for i, (e, mu, nu) in enumerate(rows)
                            for j, (f, rho, sigma) in enumerate(cols)
                            if matrix[i, j] != 0
                        ]
        for key in self.data.f_symbols:
            a, b, c, d = key[:4]
            block = self._F.get((a, b, c, d))
            if block is None or (key[4], key[6], key[7]) not in block.rows \
                    or (key[5], key[8], key[9]) not in block.cols:
                raise StructuralError(f"símbolo F para tupla inadmissível {key}", path='F')

    def _build_r_blocks(self):
        r = self.rank
        for a in range(r):
            for b in range(r):
                for c in range(r):
                    n = self.N[a, b, c]
                    if n == 0:
                        continue
                    if self.N[b, a, c] != n:
                        raise StructuralError(f"N_{{{a}{b}}}^{c} != N_{{{b}{a}}}^{c}; trança impossível", path='R')
                    matrix = np.zeros((n, n), dtype=complex)
                    for mu in range(n):
                        for nu in range(n):
                            key = (a, b, c, mu, nu)
                            if key in self.data.r_symbols:
                                matrix[mu, nu] = self.data.r_symbols[key]
                            elif self.unit in (a, b):
                                matrix[mu, nu] = 1.0 if mu == nu else 0.0
                            else:
                                raise StructuralError(f"símbolo R ausente para a tupla {key}", path='R')
                    self._R[(a, b, c)] = matrix

    def f_block(self, a: int, b: int, c: int, d: int) -> FBlock:
        return self._F[(a, b, c, d)]

    def f_blocks(self) -> Dict[Tuple[int, int, int, int], FBlock]:
        return dict(self._F)

    def f_matrix(self, a: int, b: int, c: int, d: int) -> np.ndarray:
        return self._F[(a, b, c, d)].matrix

    def has_f_block(self, a: int, b: int, c: int, d: int) -> bool:
        return (a, b, c, d) in self._F

    def r_matrix(self, a: int, b: int, c: int) -> np.ndarray:
        if not self._R:
            raise UnsupportedError(f"categoria {self.name} não possui símbolos R")
        return self._R[(a, b, c)]

    # === OBJETOS ===

    def simple(self, label) -> Obj:
        return Obj.simple(self.rank, self.data.index(label))

    def unit_obj(self) -> Obj:
        return Obj.simple(self.rank, self.unit)

    def zero_obj(self) -> Obj:
        return Obj.zero(self.rank)

    def obj(self, spec: Dict) -> Obj:
        """Objeto a partir de {rótulo: multiplicidade}"""
        mult = [0] * self.rank
        for label, m in spec.items():
            mult[self.data.index(label)] += int(m)
        return Obj(tuple(mult))

    def describe(self, x: Obj) -> str:
        partes = []
        for a, m in enumerate(x.mult):
            if m:
                partes.append(self.data.simples[a] if m == 1 else f"{m}·{self.data.simples[a]}")
        return ' ⊕ '.join(partes) if partes else '0'

    def fuse(self, x: Obj, y: Obj) -> Obj:
        mult = np.einsum('a,b,abc->c', np.array(x.mult), np.array(y.mult), self.N)
        return Obj(tuple(int(m) for m in mult))

    def dual_obj(self, x: Obj) -> Obj:
        mult = [0] * self.rank
        for a, m in enumerate(x.mult):
            mult[self.dual[a]] = m
        return Obj(tuple(mult))

    def layout(self, x: Obj, y: Obj) -> TensorLayout:
        key = (x.mult, y.mult)
        cached = self._layouts.get(key)
        if cached is not None:
            return cached
        r = self.rank
        offsets: List[Dict[Tuple[int, int], int]] = [dict() for _ in range(r)]
        sizes = [0] * r
        for c in range(r):
            for a in range(r):
                if not x[a]:
                    continue
                for b in range(r):
                    n = self.N[a, b, c]
                    if y[b] and n:
                        offsets[c][(a, b)] = sizes[c]
                        sizes[c] += x[a] * y[b] * n
        layout = TensorLayout(x, y, Obj(tuple(sizes)), offsets)
        self._layouts[key] = layout
        return layout

    # === MORFISMOS ===

    def identity(self, x: Obj) -> Mor:
        return Mor.identity(x)

    def hom_dim(self, x: Obj, y: Obj) -> int:
        return x.hom_dim(y)

    def tensor_mor(self, f: Mor, g: Mor) -> Mor:
        """f⊗g: X⊗Y → X'⊗Y'"""
        src = self.layout(f.src, g.src)
        dst = self.layout(f.dst, g.dst)
        blocks = [np.zeros((dst.obj[c], src.obj[c]), dtype=complex) for c in range(self.rank)]
        for c in range(self.rank):
            for (a, b), off_src in src.offsets[c].items():
                off_dst = dst.offsets[c].get((a, b))
                if off_dst is None:
                    continue
                n = self.N[a, b, c]
                piece = np.kron(np.kron(f.blocks[a], g.blocks[b]), np.eye(n))
                blocks[c][off_dst:off_dst + piece.shape[0], off_src:off_src + piece.shape[1]] = piece
        return Mor(src.obj, dst.obj, tuple(blocks))

    def associator(self, x: Obj, y: Obj, z: Obj) -> Mor:
        """α_{X,Y,Z}: (X⊗Y)⊗Z → X⊗(Y⊗Z), estendido por naturalidade"""
        key = (x.mult, y.mult, z.mult)
        cached = self._associators.get(key)
        if cached is not None:
            return cached

        N = self.N
        lxy = self.layout(x, y)
        lyz = self.layout(y, z)
        src = self.layout(lxy.obj, z)
        dst = self.layout(x, lyz.obj)
        blocks = [np.zeros((dst.obj[d], src.obj[d]), dtype=complex) for d in range(self.rank)]
        yz = lyz.obj

        for a in x.support():
            for b in y.support():
                for c in z.support():
                    alpha, beta, gamma = np.indices((x[a], y[b], z[c]))
                    for d in range(self.rank):
                        for (e, mu, nu, f, rho, sigma, coef) in self._F_entries.get((a, b, c, d), ()):
                            eps = lxy.position(e, a, b, alpha, beta, mu, N[a, b, e])
                            src_pos = src.offsets[d][(e, c)] + (eps * z[c] + gamma) * N[e, c, d] + nu
                            phi = lyz.position(f, b, c, beta, gamma, rho, N[b, c, f])
                            dst_pos = dst.offsets[d][(a, f)] + (alpha * yz[f] + phi) * N[a, f, d] + sigma
                            blocks[d][dst_pos.ravel(), src_pos.ravel()] += coef

        mor = Mor(src.obj, dst.obj, tuple(blocks))
        self._associators[key] = mor
        return mor

    def associator_inv(self, x: Obj, y: Obj, z: Obj) -> Mor:
        key = (x.mult, y.mult, z.mult)
        cached = self._associators_inv.get(key)
        if cached is None:
            cached = self.associator(x, y, z).inverse()
            self._associators_inv[key] = cached
        return cached

    def braiding(self, x: Obj, y: Obj) -> Mor:
        """c_{X,Y}: X⊗Y → Y⊗X a partir dos símbolos R"""
        key = (x.mult, y.mult)
        cached = self._braidings.get(key)
        if cached is not None:
            return cached
        if not self._R:
            raise UnsupportedError(f"categoria {self.name} não é trançada")
        N = self.N
        src = self.layout(x, y)
        dst = self.layout(y, x)
        blocks = [np.zeros((dst.obj[c], src.obj[c]), dtype=complex) for c in range(self.rank)]
        for c in range(self.rank):
            for (a, b), off in src.offsets[c].items():
                n = N[a, b, c]
                R = self._R[(a, b, c)]
                alpha, beta = np.indices((x[a], y[b]))
                for mu in range(n):
                    for nu in range(n):
                        if R[mu, nu] == 0:
                            continue
                        s = off + (alpha * y[b] + beta) * n + mu
                        t = dst.offsets[c][(b, a)] + (beta * x[a] + alpha) * n + nu
                        blocks[c][t.ravel(), s.ravel()] += R[mu, nu]
        mor = Mor(src.obj, dst.obj, tuple(blocks))
        self._braidings[key] = mor
        return mor

    def braiding_inverse(self, x: Obj, y: Obj) -> Mor:
        """c^{-1}_{Y,X}: X⊗Y → Y⊗X"""
        return self.braiding(y, x).inverse()

    # === REASSOCIAÇÃO ===

    def tree_obj(self, tree: Tree) -> Obj:
        if isinstance(tree, Obj):
            return tree
        left, right = tree
        return self.fuse(self.tree_obj(left), self.tree_obj(right))

    def _normalize(self, tree: Tree) -> Tuple[Mor, Tree]:
        if isinstance(tree, Obj):
            return Mor.identity(tree), tree
        left, right = tree
        fl, nl = self._normalize(left)
        fr, nr = self._normalize(right)
        g, normal = self._push(nl, nr)
        return g @ self.tensor_mor(fl, fr), normal

    def _push(self, left: Tree, right: Tree) -> Tuple[Mor, Tree]:
        if isinstance(left, Obj):
            return Mor.identity(self.tree_obj((left, right))), (left, right)
        head, rest = left
        a = self.associator(self.tree_obj(head), self.tree_obj(rest), self.tree_obj(right))
        g, normal = self._push(rest, right)
        return self.tensor_mor(Mor.identity(self.tree_obj(head)), g) @ a, (head, normal)

    def rebracket(self, src: Tree, dst: Tree) -> Mor:
        """Composição de associadores entre dois parentesamentos das mesmas folhas"""
        f_src, n_src = self._normalize(src)
        f_dst, n_dst = self._normalize(dst)
        if f_src.dst != f_dst.dst:
            raise StructuralError("parentesamentos com folhas diferentes")
        return f_dst.inverse() @ f_src

    # === DUALIDADE ===

    def coev_scalar(self, a: int) -> complex:
        ad = int(self.dual[a])
        block = self._F[(a, ad, a, a)]
        i = block.rows.index((self.unit, 0, 0))
        j = block.cols.index((self.unit, 0, 0))
        value = block.matrix[i, j]
        if abs(value) < 1e-14:
            raise SingularityError(f"F^{{a a* a}}_a[1,1] nulo para a={a}; dualidade indefinida")
        return 1.0 / value

    def ev(self, x: Obj) -> Mor:
        """ev_X: X*⊗X → 1"""
        xd = self.dual_obj(x)
        lay = self.layout(xd, x)
        one = self.unit_obj()
        blocks = [np.zeros((one[c], lay.obj[c]), dtype=complex) for c in range(self.rank)]
        for a in x.support():
            ad = int(self.dual[a])
            for alpha in range(x[a]):
                pos = lay.position(self.unit, ad, a, alpha, alpha, 0, 1)
                blocks[self.unit][0, pos] = 1.0
        return Mor(lay.obj, one, tuple(blocks))

    def coev(self, x: Obj) -> Mor:
        """coev_X: 1 → X⊗X*"""
        xd = self.dual_obj(x)
        lay = self.layout(x, xd)
        one = self.unit_obj()
        blocks = [np.zeros((lay.obj[c], one[c]), dtype=complex) for c in range(self.rank)]
        for a in x.support():
            ad = int(self.dual[a])
            s = self.coev_scalar(a)
            for alpha in range(x[a]):
                pos = lay.position(self.unit, a, ad, alpha, alpha, 0, 1)
                blocks[self.unit][pos, 0] = s
        return Mor(one, lay.obj, tuple(blocks))

    def zigzag_residuals(self, x: Obj) -> Tuple[float, float]:
        """Resíduos das duas identidades de zigue-zague para X"""
        xd = self.dual_obj(x)
        first = (self.tensor_mor(Mor.identity(x), self.ev(x))
                 @ self.associator(x, xd, x)
                 @ self.tensor_mor(self.coev(x), Mor.identity(x)))
        second = (self.tensor_mor(self.ev(x), Mor.identity(xd))
                  @ self.associator_inv(xd, x, xd)
                  @ self.tensor_mor(Mor.identity(xd), self.coev(x)))
        return first.distance(Mor.identity(x)), second.distance(Mor.identity(xd))

    # === DIMENSÕES ===

    def simple_qdims(self, check: bool = True) -> np.ndarray:
        dims = np.array([self.data.pivotal_of(a) * self.coev_scalar(a) for a in range(self.rank)],
                        dtype=complex)
        if check:
            gap = self.sphericality_residual(dims)
            if gap > max(self.tolerance, 1e-9) * 1e3:
                raise UnsupportedError(f"dados não esféricos (max |d_a - d_a*| = {gap:.3e})")
        return dims

    def sphericality_residual(self, dims: Optional[np.ndarray] = None) -> float:
        if dims is None:
            dims = np.array([self.data.pivotal_of(a) * self.coev_scalar(a) for a in range(self.rank)])
        return float(max(abs(dims[a] - dims[self.dual[a]]) for a in range(self.rank)))

    def qdim(self, x: Obj) -> complex:
        return complex(np.dot(np.array(x.mult), self.simple_qdims()))

    def simple_fpdims(self) -> np.ndarray:
        dims = np.zeros(self.rank)
        for a in range(self.rank):
            vals = np.linalg.eigvals(self.N[a].astype(float))
            dims[a] = float(np.max(vals.real))
        return dims

    def fpdim(self, x: Obj) -> float:
        return float(np.dot(np.array(x.mult), self.simple_fpdims()))

    def global_dim(self) -> float:
        dims = self.simple_qdims()
        return float(np.sum(dims * dims).real)

    def fp_global_dim(self) -> float:
        return float(np.sum(self.simple_fpdims() ** 2))

    def trace(self, f: Mor) -> complex:
        """Traço pivotal de um endomorfismo: Σ_a d_a Tr(f_a)"""
        return complex(np.dot(f.trace_blocks(), self.simple_qdims()))

    # === AMBIENTE ===
    # Interface comum com o centro de Drinfeld: álgebras e módulos são
    # escritos uma vez e rodam em C ou em Z(C).

    kind = 'plain'

    @property
    def base(self) -> 'FusionCategory':
        return self

    def unit_object(self) -> Obj:
        return self.unit_obj()

    def tensor(self, x: Obj, y: Obj) -> Obj:
        return self.fuse(x, y)

    def carrier(self, x: Obj) -> Obj:
        return x

    def simple_objects(self) -> List[Obj]:
        return [Obj.simple(self.rank, a) for a in range(self.rank)]

    def hom_basis(self, x: Obj, y: Obj) -> List[Mor]:
        return matrix_units(x, y)

    def restrict(self, x: Obj, iota: Mor, pi: Mor) -> Obj:
        return iota.src

    def image(self, projector: Mor, source: Optional[Obj] = None):
        sub, iota, pi = split_idempotent(projector)
        return sub, iota, pi

    def kernel(self, f: Mor, source: Optional[Obj] = None):
        return kernel_blocks(f, self.tolerance)

    def cokernel(self, f: Mor, target: Optional[Obj] = None):
        return cokernel_blocks(f, self.tolerance)

    def direct_sum(self, parts: List[Obj]):
        return direct_sum_maps(parts)

    def half_braiding(self, x: Obj, y: Obj) -> Mor:
        """Trança x⊗y → y⊗x usada pelas construções genéricas"""
        return self.braiding(x, y)

    def half_braiding_inverse(self, x: Obj, y: Obj) -> Mor:
        """Inversa de half_braiding(x, y): y⊗x → x⊗y"""
        return self.braiding(x, y).inverse()
