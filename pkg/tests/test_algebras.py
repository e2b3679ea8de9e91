# tests/test_algebras.py

import pytest

from apps.algebras.laws import check_algebra, require_separable, separability_witness
from apps.algebras.models import Algebra
from apps.algebras.modules import (
    completeness_residual,
    decompose,
    direct_sum_modules,
    find_module_iso,
    free_module,
    hom_mod,
    module_category_dim,
    module_residuals,
    regular_module,
    simple_bimodules,
    simple_modules,
)
from apps.algebras.relative import dual_module, dual_zigzag_residual, tensor_over, tensor_over_cokernel
from apps.core.exceptions import StructuralError, UnsupportedError
from apps.relatorios.formats import resolve_algebra


@pytest.fixture(scope='module')
def group(vecz2):
    return resolve_algebra(vecz2, 'group')


@pytest.fixture(scope='module')
def fermion(ising):
    return resolve_algebra(ising, 'fermion')


class TestLeis:
    def test_trivial(self, fib):
        report = check_algebra(Algebra.trivial(fib))
        assert report.passed
        assert report.connected
        assert report.simple

    def test_algebra_de_grupo(self, group):
        report = check_algebra(group)
        assert report.passed
        assert report.connected and report.simple
        assert report.witness.residual < 1e-9

    def test_algebra_quebrada_nao_e_separavel(self, vecz2):
        broken = resolve_algebra(vecz2, 'broken')
        report = check_algebra(broken)
        assert report.associative
        assert report.unital
        assert not report.separable
        assert not report.passed
        with pytest.raises(UnsupportedError):
            require_separable(broken)

    def test_fermion(self, fermion):
        report = check_algebra(fermion)
        assert report.passed
        assert fermion.name == '1⊕psi'

    def test_checks_nomeados(self, group):
        names = [name for name, _, _ in check_algebra(group).checks()]
        assert names == ['associativity', 'left_unit', 'right_unit', 'unit_unique', 'separable']

    def test_testemunha_e_secao(self, group):
        witness = separability_witness(group)
        assert (group.mult @ witness.section).distance(group.identity) < 1e-9

    def test_soma_direta(self, vecz2):
        A = Algebra.trivial(vecz2).direct_sum(Algebra.trivial(vecz2))
        report = check_algebra(A)
        assert report.passed
        assert not report.connected
        assert A.name == '1⊕1'


class TestModulos:
    def test_grupo_tem_um_simples(self, group):
        simples = simple_modules(group)
        assert len(simples) == 1
        assert module_category_dim(group, simples) == pytest.approx(1.0)

    def test_fermion_tem_tres_simples(self, fermion):
        simples = simple_modules(fermion)
        assert len(simples) == 3
        assert module_category_dim(fermion, simples) == pytest.approx(2.0)
        assert completeness_residual(fermion, simples) < 1e-9

    def test_trivial_fib(self, fib):
        assert len(simple_modules(Algebra.trivial(fib))) == 2
        assert len(simple_bimodules(Algebra.trivial(fib))) == 2

    def test_bimodulos_ising(self, ising):
        bimodules = simple_bimodules(Algebra.trivial(ising))
        assert len(bimodules) == 3
        assert bimodules[0].name == '1'

    def test_leis_do_modulo_livre(self, fermion, ising):
        M = free_module(fermion, ising.simple('sigma'))
        assert max(module_residuals(M).values()) < 1e-9
        assert len(decompose(M)) == 2

    def test_endomorfismos_do_regular(self, group):
        M = regular_module(group)
        assert len(hom_mod(M, M)) == 1
        assert find_module_iso(M, M) is not None

    def test_soma_direta_de_modulos(self, group):
        M = regular_module(group)
        total, injections, projections = direct_sum_modules([M, M])
        assert max(module_residuals(total).values()) < 1e-9
        assert len(injections) == len(projections) == 2
        assert len(decompose(total)) == 2

    def test_algebra_nao_separavel_recusa_simples(self, vecz2):
        with pytest.raises(UnsupportedError):
            simple_modules(resolve_algebra(vecz2, 'broken'))


class TestProdutoRelativo:
    def test_regular_sobre_regular(self, group):
        result = tensor_over(group, regular_module(group, 'right'), regular_module(group, 'left'))
        assert result.obj == group.obj
        assert result.idempotence < 1e-9

    def test_concorda_com_conucleo(self, fermion, ising):
        sigma = ising.simple('sigma')
        x = free_module(fermion, sigma, 'right')
        y = free_module(fermion, sigma, 'left')
        by_idempotent = tensor_over(fermion, x, y).obj
        assert by_idempotent == tensor_over_cokernel(fermion, x, y)
        assert by_idempotent == ising.obj({'1': 2, 'psi': 2})

    def test_lados_trocados(self, group):
        left = regular_module(group, 'left')
        with pytest.raises(StructuralError):
            tensor_over(group, left, left)

    def test_dual_de_modulo(self, fib):
        M = free_module(Algebra.trivial(fib), fib.simple('tau'))
        assert dual_zigzag_residual(M) < 1e-10
        dual = dual_module(M)
        assert dual.side == 'left'
        assert dual.carrier == fib.simple('tau')
        assert max(module_residuals(dual).values()) < 1e-9
