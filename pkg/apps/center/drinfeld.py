# apps/center/drinfeld.py

"""
Cálculo do centro de Drinfeld por indução.

Para cada simples x de C o objeto induzido I(x) = ⊕_a (a*⊗x)⊗a recebe a
meia-trança canônica; End_Z(I(x)) é cindido com um elemento aleatório e
os simples encontrados são deduplicados por dimensão de Hom_Z. O processo
termina quando Σ d² atinge dim(C)².
"""

import logging
import weakref
from typing import List, Optional, Union

import numpy as np
import scipy.linalg

from apps.core.category import FusionCategory
from apps.core.conf import default_seed, default_tolerance
from apps.core.exceptions import SplittingError, VerificationError
from apps.core.models import CategoryData, Mor, Obj
from apps.core.utils import copy_maps, direct_sum_maps, random_combination, spectral_projectors

from .ambient import CenterAmbient
from .models import CenterCategory, CenterObject

logger = logging.getLogger(__name__)

_CENTERS: 'weakref.WeakKeyDictionary' = weakref.WeakKeyDictionary()


def as_category(c: Union[CategoryData, FusionCategory]) -> FusionCategory:
    return c if isinstance(c, FusionCategory) else FusionCategory(c)


# === INDUÇÃO ===

def pair_evaluation(cat: FusionCategory, A: Obj, B: Obj) -> Mor:
    """ev_{a⊗b}: (b*⊗a*)⊗(a⊗b) → 1 a partir de ev_a e ev_b"""
    Ad, Bd = cat.dual_obj(A), cat.dual_obj(B)
    return (cat.ev(B)
            @ cat.tensor_mor(Mor.identity(Bd), cat.tensor_mor(cat.ev(A), Mor.identity(B)))
            @ cat.rebracket(((Bd, Ad), (A, B)), (Bd, ((Ad, A), B))))


def transpose_inclusion(cat: FusionCategory, A: Obj, B: Obj, c: int, copy: int) -> Mor:
    """κ: (a⊗b)* = b*⊗a* → c*, transposta da inclusão da cópia `copy` de c em a⊗b"""
    Y = cat.fuse(A, B)
    Yd = cat.fuse(cat.dual_obj(B), cat.dual_obj(A))
    C = cat.simple(c)
    Cd = cat.dual_obj(C)
    inc, _ = copy_maps(Y, c, copy)
    return (cat.tensor_mor(pair_evaluation(cat, A, B), Mor.identity(Cd))
            @ cat.associator_inv(Yd, Y, Cd)
            @ cat.tensor_mor(Mor.identity(Yd), cat.tensor_mor(inc, Mor.identity(Cd)))
            @ cat.tensor_mor(Mor.identity(Yd), cat.coev(C)))


def induced_object(cat: FusionCategory, x: Obj, name: str = '') -> CenterObject:
    """I(x) = ⊕_a (a*⊗x)⊗a com a meia-trança do coend"""
    simples = [cat.simple(a) for a in range(cat.rank)]
    duals = [cat.dual_obj(s) for s in simples]
    summands = [cat.fuse(cat.fuse(duals[a], x), simples[a]) for a in range(cat.rank)]
    total = summands[0]
    for s in summands[1:]:
        total = total + s
    _, injections, projections = direct_sum_maps(summands)
    ix = Mor.identity(x)

    betas = []
    for b in range(cat.rank):
        B, Bd = simples[b], duals[b]
        ib = Mor.identity(B)
        beta = Mor.zero(cat.fuse(total, B), cat.fuse(B, total))
        for a in range(cat.rank):
            A, Ad = simples[a], duals[a]
            W = cat.fuse(summands[a], B)
            lift = cat.tensor_mor(cat.coev(B), Mor.identity(W))
            move = cat.rebracket(((B, Bd), (((Ad, x), A), B)), (B, (((Bd, Ad), x), (A, B))))
            head = move @ lift @ cat.tensor_mor(projections[a], ib)
            Y = cat.fuse(A, B)
            for c in Y.support():
                for nu in range(Y[c]):
                    _, proj = copy_maps(Y, c, nu)
                    kappa = transpose_inclusion(cat, A, B, c, nu)
                    collapse = cat.tensor_mor(cat.tensor_mor(kappa, ix), proj)
                    beta = beta + cat.tensor_mor(ib, injections[c] @ collapse) @ head
        betas.append(beta)
    return CenterObject(cat, total, tuple(betas), name=name or f"I({cat.describe(x)})")


# === CISÃO ===

def split_center_object(ambient: CenterAmbient, z: CenterObject, rng: np.random.Generator,
                        depth: int = 0) -> List[CenterObject]:
    """Somandos simples de z por projetores espectrais de um elemento aleatório de End_Z(z)"""
    if z.carrier.is_zero():
        return []
    end = ambient.hom_basis(z, z)
    if len(end) <= 1:
        return [z]
    if depth > 4:
        raise SplittingError("cisão de End_Z não convergiu")
    element = random_combination(end, rng)
    pieces = []
    for projector in spectral_projectors(element):
        sub, _, _ = ambient.image(projector, z)
        pieces.extend(split_center_object(ambient, sub, rng, depth + 1))
    return pieces


def _is_isomorphic(ambient: CenterAmbient, s: CenterObject, t: CenterObject) -> bool:
    return s.carrier == t.carrier and len(ambient.hom_basis(s, t)) > 0


def _phase(theta: complex) -> float:
    p = float(np.angle(theta)) % (2 * np.pi)
    return 0.0 if 2 * np.pi - p < 1e-6 else round(p, 6)


def beta_spectrum(cat: FusionCategory, z: CenterObject) -> tuple:
    """
    Autovalores de cada β_a com a⊗Z identificado a Z⊗a fatia a fatia.

    Trocar a base do portador conjuga essas matrizes, então o espectro não
    depende da semente que produziu z. Blocos em que N_ab^c != N_ba^c ficam de fora.
    """
    spectra = []
    for a in range(cat.rank):
        A = cat.simple(a)
        src, dst = cat.layout(z.carrier, A), cat.layout(A, z.carrier)
        block_beta = z.beta(a).blocks
        for c in range(cat.rank):
            n = src.obj[c]
            if n == 0 or n != dst.obj[c]:
                continue
            order = np.zeros(n, dtype=int)
            comparable = True
            for (b, _), off in src.offsets[c].items():
                off_dst = dst.offsets[c].get((a, b))
                if off_dst is None or cat.N[a, b, c] != cat.N[b, a, c]:
                    comparable = False
                    break
                size = z.carrier[b] * cat.N[b, a, c]
                order[off:off + size] = np.arange(off_dst, off_dst + size)
            if not comparable:
                continue
            vals = scipy.linalg.eigvals(block_beta[c][order, :])
            spectra.extend(sorted((round(float(v.real), 6) + 0.0, round(float(v.imag), 6) + 0.0) for v in vals))
    return tuple(spectra)


def check_half_braidings(simples: List[CenterObject], tol: float) -> float:
    """Pior resíduo de hexágono e de unidade; levanta VerificationError acima de tol"""
    worst = 0.0
    for z in simples:
        residual = max(z.hexagon_residual(), z.unit_residual())
        if residual > tol:
            raise VerificationError(f"meia-trança de {z.name or '?'} não satisfaz o hexágono", residual=residual)
        worst = max(worst, residual)
    return worst


def twist(cat: FusionCategory, z: CenterObject) -> complex:
    """θ_Z = tr(c_{Z,Z}) / d_Z"""
    return cat.trace(z.braid_over(z.carrier)) / cat.qdim(z.carrier)


def s_matrix(cat: FusionCategory, simples: List[CenterObject]) -> np.ndarray:
    n = len(simples)
    dims = np.array([cat.qdim(z.carrier) for z in simples])
    D = np.sqrt(np.sum(np.abs(dims) ** 2))
    S = np.zeros((n, n), dtype=complex)
    for i, zi in enumerate(simples):
        for j, zj in enumerate(simples):
            double = zj.braid_over(zi.carrier) @ zi.braid_over(zj.carrier)
            S[i, j] = cat.trace(double) / D
    return S


# === CENTRO ===

def drinfeld_center(c: Union[CategoryData, FusionCategory], seed: Optional[int] = None) -> CenterCategory:
    """Simples de Z(C) em ordem canônica, com qdims, twists e matriz S"""
    cat = as_category(c)
    seed = default_seed() if seed is None else int(seed)
    cached = _CENTERS.get(cat, {}).get(seed)
    if cached is not None:
        return cached

    cat.simple_qdims(check=True)
    ambient = CenterAmbient(cat)
    rng = np.random.default_rng(seed)
    target = cat.global_dim() ** 2
    found: List[CenterObject] = []
    total = 0.0

    logger.info(f"Centro de {cat.name}: alvo Σd² = {target:.6f}")
    for x in range(cat.rank):
        if abs(total - target) < 1e-6:
            break
        induced = induced_object(cat, cat.simple(x))
        for piece in split_center_object(ambient, induced, rng):
            if any(_is_isomorphic(ambient, piece, known) for known in found):
                continue
            found.append(piece)
            total += abs(cat.qdim(piece.carrier)) ** 2
        logger.debug(f"I({cat.data.simples[x]}): {len(found)} simples, Σd² = {total:.6f}")

    if abs(total - target) > 1e-6:
        raise VerificationError(f"centro de {cat.name} incompleto: Σd² = {total:.6f}, esperado {target:.6f}",
                                residual=abs(total - target))

    unit = ambient.unit_object()
    twists = {id(z): twist(cat, z) for z in found}

    def key(z):
        is_unit = _is_isomorphic(ambient, z, unit)
        return (not is_unit, round(float(np.real(cat.qdim(z.carrier))), 6),
                _phase(twists[id(z)]), z.carrier.mult, beta_spectrum(cat, z))

    ordered = sorted(found, key=key)
    for k, z in enumerate(ordered):
        z.name = '1' if k == 0 else f"Z{k}"
    ambient.simples = ordered

    center = CenterCategory(
        category=cat,
        ambient=ambient,
        simples=ordered,
        qdims=np.array([cat.qdim(z.carrier) for z in ordered]),
        twists=np.array([twists[id(z)] for z in ordered]),
        S=s_matrix(cat, ordered),
        seed=seed,
    )
    worst = check_half_braidings(ordered, max(default_tolerance() * 1e3, 1e-8))
    logger.info(f"Centro de {cat.name}: {center.rank} simples, pior resíduo de hexágono {worst:.2e}")
    _CENTERS.setdefault(cat, {})[seed] = center
    return center


def center_ambient(c: Union[CategoryData, FusionCategory], seed: Optional[int] = None) -> CenterAmbient:
    """Ambiente Z(C) com os simples já calculados"""
    return drinfeld_center(c, seed).ambient
