# tests/test_center.py

import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from apps.algebras.models import Algebra, Module
from apps.algebras.modules import simple_bimodules
from apps.center.drinfeld import check_half_braidings, drinfeld_center, induced_object
from apps.center.export import export_dual_category
from apps.center.full_center import center_sum_map, full_center, is_full_center_lagrangian
from apps.center.induction import adjunction_audit, adjunction_dims, alpha_induction
from apps.center.local import coequ_lambda_rho, lambda_equals_rho, local_modules, trivial_commutative
from apps.center.models import CenterObject
from apps.core.category import FusionCategory
from apps.core.exceptions import UnsupportedError, VerificationError
from apps.core.models import Mor
from apps.core.validation import validate_category
from apps.homs.internal import ihom_center
from apps.relatorios.formats import resolve_algebra

PHI = (1 + math.sqrt(5)) / 2


def _object_module(cat, label):
    x = cat.simple(label)
    return Module(Algebra.trivial(cat), x, Mor.identity(x), side='right', name=label)


class TestCentroDeDrinfeld:
    def test_vec(self, vec):
        assert drinfeld_center(vec).rank == 1

    def test_codigo_torico(self, vecz2_center):
        assert vecz2_center.rank == 4
        assert vecz2_center.names == ['1', 'Z1', 'Z2', 'Z3']
        twists = sorted(round(float(np.real(t)), 6) for t in vecz2_center.twists)
        assert twists == [-1.0, 1.0, 1.0, 1.0]
        assert np.allclose(np.abs(vecz2_center.qdims), 1.0)

    def test_matriz_s_unitaria(self, vecz2_center):
        S = vecz2_center.S
        assert np.allclose(S @ S.conj().T, np.eye(4), atol=1e-9)
        assert vecz2_center.is_nondegenerate()

    def test_verlinde(self, vecz2_center):
        assert vecz2_center.verlinde_residual() < 1e-8
        assert np.all(vecz2_center.fusion().sum(axis=2) == 1)

    def test_fib(self, fib, fib_center):
        assert fib_center.rank == 4
        assert fib_center.global_dim == pytest.approx(fib.global_dim() ** 2)
        assert fib_center.global_dim == pytest.approx((1 + PHI ** 2) ** 2)

    def test_ising(self, ising_center):
        assert ising_center.rank == 9
        assert ising_center.global_dim == pytest.approx(16.0)

    def test_meias_trancas(self, ising_center):
        for z in ising_center.simples:
            assert z.hexagon_residual() < 1e-9
            assert z.unit_residual() < 1e-9
            assert z.is_invertible()

    def test_objeto_induzido(self, fib):
        induced = induced_object(fib, fib.simple('tau'))
        assert induced.hexagon_residual() < 1e-9

    def test_cache_por_semente(self, vecz2):
        assert drinfeld_center(vecz2) is drinfeld_center(vecz2)

    def test_pares_modulares(self, vecz2_center):
        pairs = vecz2_center.modular_pairs()
        assert len(pairs) == 4
        assert (1.0, -1.0, 0.0) in pairs

    def test_meia_tranca_corrompida_reprovada(self, vecz2, vecz2_center):
        z = vecz2_center.simples[2]
        betas = list(z.betas)
        betas[vecz2.data.index('g')] = betas[vecz2.data.index('g')] * 2
        broken = CenterObject(vecz2, z.carrier, tuple(betas), name='Z2x')
        assert check_half_braidings(vecz2_center.simples, 1e-8) < 1e-9
        with pytest.raises(VerificationError) as exc:
            check_half_braidings([*vecz2_center.simples, broken], 1e-8)
        assert exc.value.residual > 1
        assert 'Z2x' in str(exc.value)

    def test_ordem_independe_da_semente(self, fib):
        first, second = drinfeld_center(fib, seed=1), drinfeld_center(fib, seed=2)
        assert first.names == second.names
        assert [z.carrier for z in first.simples] == [z.carrier for z in second.simples]
        assert np.allclose(first.twists, second.twists)
        assert np.allclose(first.S, second.S, atol=1e-8)

    @pytest.mark.slow
    def test_ordem_do_ising_independe_da_semente(self, ising, ising_center):
        other = drinfeld_center(ising, seed=ising_center.seed + 1)
        assert [z.carrier for z in other.simples] == [z.carrier for z in ising_center.simples]
        assert np.allclose(other.twists, ising_center.twists)
        assert np.allclose(other.S, ising_center.S, atol=1e-8)


class TestAmbienteDoCentro:
    def test_produto_em_cache(self, vecz2_center):
        amb = vecz2_center.ambient
        z, w = vecz2_center.simples[1], vecz2_center.simples[2]
        assert amb.tensor(z, w) is amb.tensor(z, w)

    def test_produto_apos_descartar_homs(self, vecz2, vecz2_center, vecz2_unit_center):
        amb = vecz2_center.ambient
        Z1 = vecz2_unit_center.carrier
        g, one = _object_module(vecz2, 'g'), _object_module(vecz2, '1')
        for _ in range(6):
            H1 = ihom_center(g, one, amb)
            assert amb.tensor(H1.carrier, Z1).carrier == vecz2.obj({'g': 4})
            del H1
            H2 = ihom_center(one, one, amb)
            product = amb.tensor(H2.carrier, Z1)
            assert product.carrier == vecz2.obj({'1': 4})
            assert product.hexagon_residual() < 1e-9


class TestCentroPleno:
    def test_vecz2(self, vecz2, vecz2_unit_center):
        Z1 = vecz2_unit_center
        assert Z1.obj == vecz2.obj({'1': 2})
        assert Z1.name == 'Z(1)'
        assert Z1.connected and Z1.separable
        assert Z1.commutativity < 1e-8
        assert Z1.audits['davydov'] < 1e-8
        assert Z1.audits['end_carrier']

    def test_ising(self, ising, ising_unit_center):
        Z1 = ising_unit_center
        assert Z1.obj == ising.obj({'1': 3, 'psi': 1})
        assert ising.fpdim(Z1.obj) == pytest.approx(ising.global_dim())

    def test_lagrangiano(self, vecz2_unit_center):
        assert is_full_center_lagrangian(vecz2_unit_center)

    def test_soma_de_algebras(self, vecz2, vecz2_center):
        result = center_sum_map(Algebra.trivial(vecz2), resolve_algebra(vecz2, 'group'), vecz2_center)
        assert result['invertible']
        assert result['passed']

    def test_algebra_do_centro_recusada(self, vecz2_center):
        with pytest.raises(UnsupportedError):
            full_center(Algebra.trivial(vecz2_center.ambient), vecz2_center)


class TestModulosLocais:
    def test_unidade_tem_todos_os_simples_como_locais(self, vecz2_center):
        # sobre a unidade todo objeto de Z(C) é local
        assert len(local_modules(trivial_commutative(vecz2_center))) == 4

    def test_coequalizador_fib(self, fib):
        quotient = coequ_lambda_rho(fib.simple('tau'), cat=fib)
        assert quotient.is_zero()

    def test_coequalizador_vecz2(self, vecz2, vecz2_unit_center):
        x = vecz2.obj({'1': 1, 'g': 1})
        assert coequ_lambda_rho(x, vecz2_unit_center) == vecz2.unit_obj()
        assert not lambda_equals_rho(vecz2_unit_center, x)
        assert lambda_equals_rho(vecz2_unit_center, vecz2.unit_obj())


class TestInducao:
    def test_unidade(self, vecz2, vecz2_center):
        phi = alpha_induction(Algebra.trivial(vecz2), vecz2_center)
        assert len(phi.images) == 4
        assert phi.unit_residual() < 1e-9

    def test_coerencia(self, vecz2, vecz2_center):
        phi = alpha_induction(resolve_algebra(vecz2, 'group'), vecz2_center)
        z, w = vecz2_center.simples[1], vecz2_center.simples[2]
        _, invertible, residual = phi.coherence(z, w)
        assert invertible
        assert residual < 1e-9

    def test_adjuncao(self, vecz2, vecz2_center):
        A = Algebra.trivial(vecz2)
        for b in vecz2_center.simples:
            for w in simple_bimodules(A):
                left, right = adjunction_dims(A, b, w, vecz2_center.ambient)
                assert left == right

    @pytest.mark.parametrize('name, selector', [('vecz2', 'trivial'), ('vecz2', 'group'), ('fib', 'trivial')])
    def test_adjuncao_em_pares_sorteados(self, request, name, selector):
        cat = request.getfixturevalue(name)
        center = request.getfixturevalue(f"{name}_center")
        rows = adjunction_audit(resolve_algebra(cat, selector), center, count=20, seed=3)
        assert len(rows) == 20
        assert any('⊕' in w for _, w, _, _ in rows)
        assert all(left == right for _, _, left, right in rows)

    @pytest.mark.slow
    def test_adjuncao_fermion_no_ising(self, ising, ising_center):
        rows = adjunction_audit(resolve_algebra(ising, 'fermion'), ising_center, count=20, seed=3)
        assert any('⊕' in w for _, w, _, _ in rows)
        assert all(left == right for _, _, left, right in rows)

    @given(st.integers(0, 2 ** 16))
    @hsettings(max_examples=8, deadline=None)
    def test_adjuncao_independe_da_semente(self, vecz2, vecz2_center, seed):
        rows = adjunction_audit(resolve_algebra(vecz2, 'group'), vecz2_center, count=3, seed=seed)
        assert all(left == right for _, _, left, right in rows)


class TestCategoriaDual:
    def test_vecz2_por_algebra_de_grupo(self, vecz2):
        data = export_dual_category(resolve_algebra(vecz2, 'group'))
        assert len(data.simples) == 2
        assert max(validate_category(data).residuals.values()) < 1e-8

    @pytest.mark.slow
    def test_ising_por_fermion(self, ising, ising_center):
        data = export_dual_category(resolve_algebra(ising, 'fermion'))
        report = validate_category(data)
        assert max(report.residuals.values()) < 1e-8
        dual_center = drinfeld_center(FusionCategory(data))
        pairs = zip(dual_center.modular_pairs(), ising_center.modular_pairs())
        assert dual_center.rank == ising_center.rank
        assert all(max(abs(a - b) for a, b in zip(p, q)) < 1e-5 for p, q in pairs)
