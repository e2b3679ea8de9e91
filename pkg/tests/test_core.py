# tests/test_core.py

import dataclasses
import math

import numpy as np
import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st

from apps.core.category import FusionCategory
from apps.core.conf import DEFAULTS, get_config
from apps.core.deligne import deligne_product
from apps.core.exceptions import SingularityError, StructuralError
from apps.core.fusion_trees import (
    basis_vectors,
    f_move,
    f_move_matrix,
    hom_basis,
    left_nested,
    right_nested,
    word_tree,
)
from apps.core.models import Mor, Obj
from apps.core.utils import BoundedCache, matrix_units, null_space, split_idempotent
from apps.core.validation import validate_category
from apps.relatorios.formats import category_document, load_category, parse_category, resolve_category_path

from .factories import PointedCategoryFactory

PHI = (1 + math.sqrt(5)) / 2


def _document(name):
    return category_document(load_category(resolve_category_path(name)))


class TestConfiguracao:
    def test_valores_do_settings(self, settings):
        settings.VORTEX_CENTER = dict(settings.VORTEX_CENTER, TOLERANCE=1e-7)
        assert get_config('TOLERANCE') == 1e-7

    def test_chave_ausente_cai_no_padrao(self, settings):
        settings.VORTEX_CENTER = {}
        assert get_config('ISO_RETRIES') == DEFAULTS['ISO_RETRIES']


class TestObjetosEMorfismos:
    def test_soma_e_multiplo(self):
        x = Obj((1, 0)) + 2 * Obj((0, 1))
        assert x.mult == (1, 2)
        assert x.total() == 3
        assert x.support() == [0, 1]

    def test_composicao_incompativel(self):
        f = Mor.identity(Obj((1, 0)))
        g = Mor.identity(Obj((0, 1)))
        with pytest.raises(StructuralError):
            f @ g

    def test_bloco_com_forma_errada(self):
        with pytest.raises(StructuralError):
            Mor(Obj((1,)), Obj((2,)), (np.zeros((1, 1)),))

    def test_inversa_de_morfismo_singular(self):
        x = Obj((2,))
        with pytest.raises(SingularityError):
            Mor(x, x, (np.zeros((2, 2), dtype=complex),)).inverse()

    def test_dados_da_categoria_imutaveis(self):
        data = PointedCategoryFactory(order=3)
        with pytest.raises(dataclasses.FrozenInstanceError):
            data.tolerance = 1e-3
        assert data.tolerance == 1e-9


class TestAlgebraLinear:
    def test_unidades_matriciais_grandes(self):
        src, dst = Obj((40, 30)), Obj((50, 20))
        units = matrix_units(src, dst)
        assert len(units) == 40 * 50 + 30 * 20
        total = sum(u.vector() for u in units)
        assert np.array_equal(total, np.ones(len(units)))
        assert units[7].blocks[0][0, 7] == 1

    def test_nucleo_de_matriz_alta(self):
        rng = np.random.default_rng(5)
        matrix = rng.normal(size=(3000, 3)) @ rng.normal(size=(3, 5))
        kernel = null_space(matrix)
        assert kernel.shape == (5, 2)
        assert np.allclose(matrix @ kernel, 0, atol=1e-8)
        assert np.allclose(kernel.conj().T @ kernel, np.eye(2), atol=1e-10)

    def test_cisao_de_projetor_obliquo_ruidoso(self):
        rng = np.random.default_rng(11)
        S = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        P = S @ np.diag([1, 1, 0, 0]) @ np.linalg.inv(S) + 1e-10 * rng.normal(size=(4, 4))
        x = Obj((4,))
        sub, iota, pi = split_idempotent(Mor(x, x, (P,)))
        assert sub == Obj((2,))
        assert np.allclose(iota.blocks[0].conj().T @ iota.blocks[0], np.eye(2), atol=1e-12)
        assert (pi @ iota).distance(Mor.identity(sub)) < 1e-8
        assert np.allclose((iota @ pi).blocks[0], P, atol=1e-8)

    def test_cache_limitado_descarta_o_mais_antigo(self):
        cache = BoundedCache(2)
        cache['a'], cache['b'] = 1, 2
        assert cache.get('a') == 1
        cache['c'] = 3
        assert len(cache) == 2
        assert cache.get('b') is None
        assert cache.get('a') == 1

    def test_caches_da_categoria_respeitam_a_capacidade(self, settings):
        settings.VORTEX_CENTER = dict(settings.VORTEX_CENTER, CACHE_SIZE=3)
        cat = FusionCategory(load_category(resolve_category_path('fib')))
        objs = [cat.obj({'tau': n}) for n in range(1, 6)]
        for x in objs:
            cat.associator(x, x, x)
        assert len(cat._associators) == 3
        assert len(cat._layouts) <= 3
        assert cat.associator(objs[-1], objs[-1], objs[-1]) is cat.associator(objs[-1], objs[-1], objs[-1])


class TestValidacao:
    @pytest.mark.parametrize('name', ['vec', 'vecz2', 'fib', 'ising'])
    def test_categorias_embutidas_passam(self, name):
        report = validate_category(load_category(resolve_category_path(name)))
        assert report.passed
        assert report.residuals['pentagon'] < 1e-9
        assert report.residuals['rigidity'] < 1e-9
        assert 'esférica' in report.notes

    def test_vecz2_pentagono_exato(self):
        report = validate_category(load_category(resolve_category_path('vecz2')))
        assert report.residuals['pentagon'] == 0.0
        assert report.residuals['hexagon'] == 0.0

    def test_fib_corrompida_falha_no_pentagono(self):
        report = validate_category(load_category(resolve_category_path('fib_corrupted')))
        assert not report.passed
        assert report.residuals['pentagon'] > 1e-2
        assert 'pentagon' in report.worst

    def test_tupla_f_ausente_e_nomeada(self):
        doc = _document('fib')
        doc['F'] = [row for row in doc['F'] if row[:6] != ['tau'] * 6]
        data = parse_category(doc)
        with pytest.raises(StructuralError) as exc:
            FusionCategory(data)
        assert exc.value.path == 'F'
        assert '(1, 1, 1, 1, 1, 1, 0, 0, 0, 0)' in str(exc.value)

    def test_f_matriz_singular(self):
        doc = _document('fib')
        for row in doc['F']:
            if row[:4] == ['tau'] * 4:
                row[10], row[11] = 0.0, 0.0
        with pytest.raises(SingularityError):
            validate_category(parse_category(doc))

    def test_grupo_ciclico_da_factory(self):
        data = PointedCategoryFactory(order=3)
        report = validate_category(data)
        assert report.passed
        assert report.residuals['hexagon'] < 1e-12


class TestFusao:
    def test_vecz2(self, vecz2):
        g = vecz2.simple('g')
        assert vecz2.fuse(g, g) == vecz2.unit_obj()

    def test_fib(self, fib):
        tau = fib.simple('tau')
        assert fib.fuse(tau, tau) == fib.obj({'1': 1, 'tau': 1})

    def test_ising(self, ising):
        sigma = ising.simple('sigma')
        assert ising.fuse(sigma, sigma) == ising.obj({'1': 1, 'psi': 1})
        assert ising.describe(ising.fuse(sigma, sigma)) == '1 ⊕ psi'

    @given(st.lists(st.integers(0, 3), min_size=3, max_size=3),
           st.lists(st.integers(0, 3), min_size=3, max_size=3),
           st.lists(st.integers(0, 3), min_size=3, max_size=3))
    @hsettings(max_examples=40, deadline=None)
    def test_fusao_associativa(self, ising, a, b, c):
        x, y, z = Obj(tuple(a)), Obj(tuple(b)), Obj(tuple(c))
        assert ising.fuse(ising.fuse(x, y), z) == ising.fuse(x, ising.fuse(y, z))

    @given(st.lists(st.integers(0, 4), min_size=3, max_size=3),
           st.lists(st.integers(0, 4), min_size=3, max_size=3))
    @hsettings(max_examples=40, deadline=None)
    def test_fpdim_multiplicativa(self, ising, a, b):
        x, y = Obj(tuple(a)), Obj(tuple(b))
        assert ising.fpdim(ising.fuse(x, y)) == pytest.approx(ising.fpdim(x) * ising.fpdim(y), abs=1e-9)


class TestDimensoes:
    def test_qdim_da_unidade(self, fib):
        assert fib.qdim(fib.unit_obj()) == pytest.approx(1.0)

    def test_fib(self, fib):
        tau = fib.simple('tau')
        assert fib.fpdim(tau) == pytest.approx(PHI)
        assert fib.qdim(tau).real == pytest.approx(PHI)
        assert fib.global_dim() == pytest.approx(1 + PHI ** 2)

    def test_ising(self, ising):
        assert ising.global_dim() == pytest.approx(4.0)
        assert ising.fpdim(ising.simple('sigma')) == pytest.approx(math.sqrt(2))

    def test_zigue_zague(self, fib):
        assert max(fib.zigzag_residuals(fib.obj({'1': 1, 'tau': 2}))) < 1e-10


class TestArvoresDeFusao:
    def test_tamanho_da_base(self, fib):
        basis = hom_basis(fib, ['tau', 'tau', 'tau'], 'tau')
        assert basis.size == 2
        assert basis.labels == (((0,), (0, 0)), ((1,), (0, 0)))

    def test_f_move_fib_reproduz_f(self, fib):
        assert np.allclose(f_move_matrix(fib, ['tau', 'tau', 'tau'], 'tau'), fib.f_matrix(1, 1, 1, 1).T)

    def test_f_move_ising(self, ising):
        expected = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
        assert np.allclose(f_move_matrix(ising, ['sigma', 'sigma', 'sigma'], 'sigma'), expected)

    def test_f_move_vecz2_identidade(self, vecz2):
        assert np.allclose(f_move_matrix(vecz2, ['g', 'g', 'g'], 'g'), np.eye(1))

    def test_parentesamento_incompleto(self, fib):
        with pytest.raises(StructuralError):
            hom_basis(fib, ['tau', 'tau', 'tau'], 'tau', bracketing=(0, 1))

    @given(st.lists(st.sampled_from(['1', 'tau']), min_size=4, max_size=4))
    @hsettings(max_examples=16, deadline=None)
    def test_ida_e_volta(self, fib, word):
        L, R = left_nested(4), right_nested(4)
        v = basis_vectors(fib, word, 'tau', L)
        back = f_move(fib, f_move(fib, v, word, L, R), word, R, L)
        assert back.distance(v) < 1e-9

    @given(st.lists(st.sampled_from([0, 1]), min_size=4, max_size=4))
    @hsettings(max_examples=16, deadline=None)
    def test_dois_caminhos_concordam(self, fib, word):
        L, M, R = left_nested(4), ((0, 1), (2, 3)), right_nested(4)
        tL, tM, tR = (word_tree(fib, word, b) for b in (L, M, R))
        via_meio = fib.rebracket(tM, tR) @ fib.rebracket(tL, tM)
        assert via_meio.distance(fib.rebracket(tL, tR)) < 1e-9


class TestDeligne:
    def test_vec_e_unidade(self, vec, fib):
        product = deligne_product(vec.data, fib.data)
        assert product.simples == fib.data.simples
        assert product.fusion == fib.data.fusion

    def test_klein(self, vecz2):
        product = deligne_product(vecz2.data, vecz2.data)
        cat = FusionCategory(product)
        assert cat.rank == 4
        assert all(cat.dual[a] == a for a in range(4))
        assert validate_category(product).passed

    def test_fib_fib(self, fib):
        report = validate_category(deligne_product(fib.data, fib.data))
        assert report.residuals['pentagon'] < 1e-9
