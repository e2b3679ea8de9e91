# tests/test_braided.py

import pytest

from apps.algebras.models import Algebra, Bimodule
from apps.braided.formula import (
    closedness_check,
    offdiagonal_audit,
    pointed_center_morphism,
    require_formula,
    unit_full_center,
    verify_exactalg,
    verify_formula_grid,
    verify_main_formula,
)
from apps.braided.isomorphism import automorphism_group, find_algebra_iso
from apps.braided.models import GroupTable
from apps.braided.operations import (
    commutativity_residual,
    law_residuals,
    left_center,
    right_center,
    tensor_algebras,
    tensor_over_commutative,
)
from apps.braided.picard import invertible_bimodules, morita_test, pic_to_aut, picard_group, twist_automorphism
from apps.core.category import FusionCategory
from apps.core.exceptions import UnsupportedError, VerificationError
from apps.core.models import Mor
from apps.relatorios.formats import resolve_algebra

from .factories import PointedCategoryFactory


@pytest.fixture(scope='module')
def group(vecz2):
    return resolve_algebra(vecz2, 'group')


def _cyclic(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


class TestOperacoes:
    def test_produto_com_trivial(self, vecz2, group):
        product = tensor_algebras(Algebra.trivial(vecz2), group)
        assert product.obj == group.obj
        assert max(law_residuals(product).values()) < 1e-9

    def test_algebra_de_grupo_comutativa(self, group):
        assert commutativity_residual(group) < 1e-9

    def test_centros_laterais(self, group):
        left, iota = left_center(group)
        right, _ = right_center(group)
        assert left.obj == group.obj == right.obj
        assert iota.is_invertible()

    def test_sem_tranca(self):
        cat = FusionCategory(PointedCategoryFactory(order=2, braided=False))
        with pytest.raises(UnsupportedError):
            commutativity_residual(Algebra.trivial(cat))

    def test_produto_sobre_z1(self, vecz2):
        U = pointed_center_morphism(vecz2, vecz2.unit_obj())['object']
        relative, algebra, residuals = tensor_over_commutative(U, U)
        assert relative.obj.carrier == vecz2.obj({'1': 2})
        assert algebra is not None
        assert residuals['projection'] < 1e-8
        assert residuals['associativity'] < 1e-8


class TestIsomorfismos:
    def test_automorfismo_identico(self, group):
        result = find_algebra_iso(group, group)
        assert result
        assert result.method == 'monomial'
        assert result.residual < 1e-8

    def test_objetos_distintos(self, vecz2, group):
        result = find_algebra_iso(Algebra.trivial(vecz2), group)
        assert not result
        assert result.method == 'object'

    def test_aut_da_algebra_de_grupo(self, group):
        aut = automorphism_group(group)
        assert aut.order == 2
        assert aut.is_group()
        assert aut.identify() == 'Z/2'

    def test_tabelas(self):
        assert GroupTable(elements=['e', 'a', 'b'], table=_cyclic(3)).identify() == 'Z/3'
        klein = [[i ^ j for j in range(4)] for i in range(4)]
        assert GroupTable(elements=list('eabc'), table=klein).identify() == 'Z/2×Z/2'
        assert GroupTable(elements=['e'], table=[[0]]).identify() == 'trivial'
        assert not GroupTable(elements=['e', 'a'], table=[[0, 1], [1, 1]]).is_group()


class TestPicard:
    def test_vecz2(self, vecz2):
        A = Algebra.trivial(vecz2)
        assert len(invertible_bimodules(A)) == 2
        result = pic_to_aut(A)
        assert result['pic'].identify() == result['aut'].identify() == 'Z/2'
        assert result['passed']

    def test_fib(self, fib):
        group = picard_group(Algebra.trivial(fib))
        assert group.identify() == 'trivial'

    def test_torcao_de_bimodulo_corrompido(self, vecz2, vecz2_unit_center):
        A = vecz2_unit_center.source
        M = invertible_bimodules(A)[-1]
        assert twist_automorphism(vecz2_unit_center, M).is_invertible()
        broken = Bimodule(A, A, M.carrier, Mor.zero(M.left_action.src, M.left_action.dst), M.right_action,
                          name='M0')
        with pytest.raises(VerificationError) as exc:
            twist_automorphism(vecz2_unit_center, broken)
        assert exc.value.residual > 1e-3

    @pytest.mark.slow
    def test_ising(self, ising):
        result = pic_to_aut(Algebra.trivial(ising))
        assert result['pic'].identify() == 'Z/2'
        assert result['bijective']


class TestMorita:
    def test_vecz2_nao_equivalentes(self, vecz2, group):
        verdict = morita_test(Algebra.trivial(vecz2), group)
        assert not verdict['equivalent']
        assert verdict['carriers'] == ((2, 0), (1, 1))

    @pytest.mark.slow
    def test_ising_equivalentes(self, ising):
        verdict = morita_test(Algebra.trivial(ising), resolve_algebra(ising, 'ihom:sigma'))
        assert verdict['equivalent']
        assert verdict['witness'] is not None


class TestFormulaDeFusao:
    def test_unidade_fechada(self, vecz2):
        result = pointed_center_morphism(vecz2, vecz2.unit_obj())
        assert result['carrier'] == (2, 0)
        assert closedness_check(result['object'])['closed']
        assert result['twist'].distance(result['algebra'].identity) < 1e-8

    def test_objeto_invertivel(self, vecz2):
        assert pointed_center_morphism(vecz2, vecz2.simple('g'))['carrier'] == (2, 0)

    def test_fora_da_diagonal(self, vecz2):
        audit = offdiagonal_audit(vecz2, vecz2.unit_obj(), vecz2.simple('g'))
        assert audit['passed']
        assert len(audit['blocks']) == 4

    def test_uma_quadrupla(self, vecz2):
        g = vecz2.simple('g')
        report = verify_main_formula(vecz2, g, g, g, g)
        assert report['passed']
        assert report['algebra_iso']
        assert report['residuals']['projection'] < 1e-8

    @pytest.mark.parametrize('labels', [('1', '1', 'g', 'g'), ('g', 'g', '1', '1')])
    def test_projecao_e_homomorfismo(self, vecz2, labels):
        x, x2, y, y2 = (vecz2.simple(label) for label in labels)
        assert verify_main_formula(vecz2, x, x2, y, y2)['residuals']['projection'] < 1e-8

    def test_projecao_violada_levanta(self, vecz2, monkeypatch):
        def corrupted(U, V, Z=None):
            relative, algebra, residuals = tensor_over_commutative(U, V, Z)
            return relative, algebra, dict(residuals, projection=0.25)

        monkeypatch.setattr('apps.braided.formula.tensor_over_commutative', corrupted)
        g = vecz2.simple('g')
        with pytest.raises(VerificationError) as exc:
            verify_main_formula(vecz2, g, g, g, g)
        assert exc.value.residual == 0.25

    def test_grade_vecz2(self, vecz2):
        results = verify_formula_grid(vecz2)
        assert len(results) == 16
        assert all(r['passed'] for r in results)

    @pytest.mark.slow
    def test_grade_fib(self, fib):
        assert all(r['passed'] for r in verify_formula_grid(fib))

    def test_falha_levanta(self):
        report = {'passed': False, 'tuple': '[1,1]⊗[g,g]', 'lhs_carrier': (1, 0), 'rhs_carrier': (2, 0),
                  'residuals': {'coequalizes': 0.5}}
        with pytest.raises(VerificationError) as exc:
            require_formula(report)
        assert exc.value.residual == 0.5

    @pytest.mark.parametrize('selector', ['trivial', 'group'])
    def test_coequalizador_exato(self, vecz2, selector):
        assert verify_exactalg(resolve_algebra(vecz2, selector))['passed']

    def test_cache_de_z1(self, vecz2):
        assert unit_full_center(vecz2) is unit_full_center(vecz2)
