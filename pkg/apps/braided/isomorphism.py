# apps/braided/isomorphism.py

"""
Busca de isomorfismos de álgebras e o grupo Aut.

Caminho exato: quando cada simples do ambiente aparece no máximo uma vez no
portador, todo isomorfismo é diagonal, φ = Σ t_s ι^B_s π^A_s, e as leis de
homomorfismo viram equações monomiais t_r·κ = t_s·t_t resolvidas por
propagação e ramificação nas raízes quadradas.

Caminho numérico: mínimos quadrados sobre Hom(A, B), com até ISO_RETRIES
sementes; o resultado é marcado como não exaustivo.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy.optimize import least_squares

from apps.algebras.models import Algebra
from apps.core.conf import default_seed, default_tolerance, get_config
from apps.core.models import Mor
from apps.core.utils import combine

from .models import GroupTable, IsoResult

logger = logging.getLogger(__name__)

Equation = Tuple[int, int, int, complex]


def homomorphism_residual(phi: Mor, A: Algebra, B: Algebra) -> float:
    """max(|φ m_A - m_B(φ⊗φ)|, |φ u_A - u_B|)"""
    amb = A.ambient
    return max((phi @ A.mult).distance(B.mult @ amb.tensor_mor(phi, phi)),
               (phi @ A.unit).distance(B.unit))


def simple_multiplicities(ambient, carrier) -> List[int]:
    return [len(ambient.hom_basis(s, carrier)) if ambient.carrier(s).hom_dim(ambient.carrier(carrier)) else 0
            for s in ambient.simple_objects()]


# === CAMINHO MONOMIAL ===

def _summands(A: Algebra) -> Dict[int, Tuple[Mor, Mor]]:
    """Para carregador sem multiplicidade: k ↦ (ι_k, π_k) com π_k ι_k = id"""
    amb = A.ambient
    pieces = {}
    for k, s in enumerate(amb.simple_objects()):
        incs = amb.hom_basis(s, A.carrier)
        if not incs:
            continue
        proj = amb.hom_basis(A.carrier, s)[0]
        iota = incs[0]
        proj = proj * (1.0 / (proj @ iota).scalar())
        pieces[k] = (iota, proj)
    return pieces


def _ratio(a: np.ndarray, b: np.ndarray, tol: float) -> Optional[complex]:
    """κ com a = κ·b; None se não paralelos. Exige b não nulo."""
    kappa = complex(np.vdot(b, a) / np.vdot(b, b))
    if np.max(np.abs(a - kappa * b)) > tol:
        return None
    return kappa


def _monomial_system(A: Algebra, B: Algebra, pa, pb, tol: float):
    """Equações t_r·κ = t_s·t_t e valores fixados pela unidade; None se inconsistente"""
    amb = A.ambient
    keys = sorted(pa)
    equations: List[Equation] = []
    for s in keys:
        for t in keys:
            for r in keys:
                src_a = amb.tensor_mor(pa[s][0], pa[t][0])
                src_b = amb.tensor_mor(pb[s][0], pb[t][0])
                ca = (pa[r][1] @ A.mult @ src_a).vector()
                cb = (pb[r][1] @ B.mult @ src_b).vector()
                za, zb = np.max(np.abs(ca), initial=0.0) < tol, np.max(np.abs(cb), initial=0.0) < tol
                if za and zb:
                    continue
                if za != zb:
                    return None
                kappa = _ratio(ca, cb, tol * 1e3)
                if kappa is None:
                    return None
                equations.append((r, s, t, kappa))

    fixed = {}
    for r in keys:
        ua = (pa[r][1] @ A.unit).vector()
        ub = (pb[r][1] @ B.unit).vector()
        za, zb = np.max(np.abs(ua), initial=0.0) < tol, np.max(np.abs(ub), initial=0.0) < tol
        if za and zb:
            continue
        if za != zb:
            return None
        value = _ratio(ub, ua, tol * 1e3)
        if value is None:
            return None
        fixed[r] = value
    return keys, equations, fixed


def _propagate(values: Dict[int, complex], equations: List[Equation], tol: float) -> bool:
    """Completa valores forçados; False em contradição ou zero"""
    changed = True
    while changed:
        changed = False
        for r, s, t, kappa in equations:
            known = (r in values, s in values, t in values)
            if known[1] and known[2]:
                value = values[s] * values[t] / kappa
                if r in values:
                    if abs(values[r] - value) > tol * max(1.0, abs(value)):
                        return False
                else:
                    values[r] = value
                    changed = True
            elif known[0] and s != t and (known[1] or known[2]):
                other, free = (s, t) if known[1] else (t, s)
                if abs(values[other]) < tol:
                    return False
                values[free] = values[r] * kappa / values[other]
                changed = True
    return all(abs(v) > tol for v in values.values())


def _branch(values: Dict[int, complex], keys: List[int], equations: List[Equation], tol: float,
            solutions: List[Dict[int, complex]], state: Dict[str, bool]):
    values = dict(values)
    if not _propagate(values, equations, tol):
        return
    missing = [k for k in keys if k not in values]
    if not missing:
        solutions.append(values)
        return
    for r, s, t, kappa in equations:
        if s == t and s not in values and r in values:
            root = np.sqrt(complex(values[r] * kappa))
            for sign in (1, -1):
                _branch({**values, s: sign * root}, keys, equations, tol, solutions, state)
            return
    # parâmetro livre: qualquer escalar não nulo serve
    state['exhaustive'] = False
    _branch({**values, missing[0]: 1.0 + 0j}, keys, equations, tol, solutions, state)


def _monomial_solutions(A: Algebra, B: Algebra, tol: float):
    pa, pb = _summands(A), _summands(B)
    system = _monomial_system(A, B, pa, pb, tol)
    if system is None:
        return [], [], True
    keys, equations, fixed = system
    solutions: List[Dict[int, complex]] = []
    state = {'exhaustive': True}
    _branch(fixed, keys, equations, tol, solutions, state)
    maps, scalars = [], []
    for values in solutions:
        phi = combine([pb[k][0] @ pa[k][1] for k in keys], [values[k] for k in keys])
        maps.append(phi)
        scalars.append(tuple(complex(np.round(values[k], 9)) for k in keys))
    return maps, scalars, state['exhaustive']


# === CAMINHO NUMÉRICO ===

def _numeric_solutions(A: Algebra, B: Algebra, seed: int, tol: float, retries: int) -> List[Mor]:
    amb = A.ambient
    basis = amb.hom_basis(A.carrier, B.carrier)
    if not basis:
        return []
    n = len(basis)

    def residual(params):
        coef = params[:n] + 1j * params[n:]
        phi = combine(basis, coef)
        diff = np.concatenate([(phi @ A.mult - B.mult @ amb.tensor_mor(phi, phi)).vector(),
                               (phi @ A.unit - B.unit).vector()])
        return np.concatenate([diff.real, diff.imag])

    rng = np.random.default_rng(seed)
    found = []
    for _ in range(retries):
        start = rng.normal(size=2 * n)
        fit = least_squares(residual, start, xtol=1e-14, ftol=1e-14, gtol=1e-14)
        if np.max(np.abs(fit.fun), initial=0.0) > tol * 1e3:
            continue
        phi = combine(basis, fit.x[:n] + 1j * fit.x[n:])
        if phi.is_invertible(1e-8):
            found.append(phi)
    return found


# === API ===

def find_algebra_iso(A: Algebra, B: Algebra, seed: Optional[int] = None, enumerate_all: bool = False) -> IsoResult:
    """Isomorfismo de álgebras A → B no mesmo ambiente, ou IsoResult vazio"""
    amb = A.ambient
    if B.ambient is not amb:
        return IsoResult(False, reason='ambientes distintos')
    tol = max(default_tolerance() * 1e2, 1e-8)
    mult_a = simple_multiplicities(amb, A.carrier)
    mult_b = simple_multiplicities(amb, B.carrier)
    if mult_a != mult_b:
        logger.info(f"{A.name} ≇ {B.name}: objetos distintos {mult_a} vs {mult_b}")
        return IsoResult(False, method='object', reason=f"objetos distintos: {mult_a} vs {mult_b}")

    if max(mult_a, default=0) <= 1:
        maps, scalars, exhaustive = _monomial_solutions(A, B, tol)
        method = 'monomial'
    else:
        seed = default_seed() if seed is None else seed
        retries = int(get_config('ISO_RETRIES'))
        maps = _numeric_solutions(A, B, seed, tol, retries)
        scalars, exhaustive, method = [], False, 'numeric'

    valid = [phi for phi in maps if phi.is_invertible(1e-8)]
    if not valid:
        return IsoResult(False, method=method, exhaustive=exhaustive, reason='sistema sem solução invertível')
    residual = max(homomorphism_residual(phi, A, B) for phi in valid)
    result = IsoResult(True, map=valid[0], method=method, exhaustive=exhaustive, residual=residual,
                       solutions=valid if enumerate_all else valid[:1],
                       scalars=scalars if enumerate_all else scalars[:1])
    logger.info(f"{A.name} ≅ {B.name} ({method}), resíduo {residual:.2e}")
    return result


def _close(maps: List[Mor], limit: int = 64) -> Tuple[List[Mor], bool]:
    """Fecho por composição, deduplicando por distância"""
    elements = []

    def known(phi):
        return any(phi.distance(psi) < 1e-6 for psi in elements)

    frontier = list(maps)
    while frontier:
        phi = frontier.pop()
        if known(phi):
            continue
        elements.append(phi)
        if len(elements) > limit:
            return elements, False
        for psi in list(elements):
            frontier.extend([phi @ psi, psi @ phi])
    return elements, True


def _label(scalars: Tuple[complex, ...]) -> str:
    def fmt(z: complex) -> str:
        if abs(z.imag) < 1e-9:
            return f"{z.real:+.6g}"
        return f"{z.real:+.6g}{z.imag:+.6g}i"

    return '(' + ','.join(fmt(z) for z in scalars) + ')'


def automorphism_group(B: Algebra, seed: Optional[int] = None) -> GroupTable:
    """Aut(B) por tabela; exaustivo só no caminho monomial sem parâmetros livres"""
    result = find_algebra_iso(B, B, seed, enumerate_all=True)
    identity = B.identity
    if result.method == 'monomial':
        elements, exhaustive = list(result.solutions), result.exhaustive
        labels = [_label(s) for s in result.scalars]
    else:
        elements, closed = _close([identity] + list(result.solutions))
        exhaustive = False
        labels = [f"g{i}" for i in range(len(elements))]
        if not closed:
            logger.warning(f"Aut({B.name}): fecho truncado")

    order = len(elements)

    def index(phi: Mor) -> int:
        for k, psi in enumerate(elements):
            if phi.distance(psi) < 1e-6:
                return k
        return -1

    table = [[index(elements[i] @ elements[j]) for j in range(order)] for i in range(order)]
    group = GroupTable(elements=labels, table=table, identity=index(identity), exhaustive=exhaustive,
                       maps=elements)
    if not exhaustive:
        group.notes.append('non-exhaustive')
    if any(-1 in row for row in table):
        group.notes.append('tabela incompleta: composição fora do conjunto')
    logger.info(f"Aut({B.name}): ordem {order} ({group.identify()}), exaustivo={exhaustive}")
    return group
