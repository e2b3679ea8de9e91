# tests/test_formats.py

import json

import pytest

from apps.core.exceptions import StructuralError
from apps.relatorios.formats import (
    category_document,
    data_dir,
    dumps_algebra,
    dumps_category,
    load_algebra,
    load_category,
    parse_category,
    parse_object,
    parse_tuple,
    resolve_algebra,
    resolve_category_path,
    save_algebra,
    save_category,
)


def _raw(name):
    return json.loads(resolve_category_path(name).read_text(encoding='utf-8'))


class TestCategorias:
    @pytest.mark.parametrize('name', ['vec', 'vecz2', 'fib', 'fib_corrupted', 'ising'])
    def test_forma_canonica(self, name):
        path = resolve_category_path(name)
        assert dumps_category(load_category(path)) == path.read_text(encoding='utf-8')

    def test_gravar_e_reler(self, tmp_path):
        data = load_category(resolve_category_path('fib'))
        target = save_category(data, tmp_path / 'saida' / 'fib.json')
        again = load_category(target)
        assert again.simples == data.simples
        assert again.f_symbols == data.f_symbols
        assert dumps_category(again) == dumps_category(data)

    def test_campo_desconhecido(self):
        raw = _raw('vecz2')
        raw['cor'] = 'azul'
        with pytest.raises(StructuralError) as exc:
            parse_category(raw)
        assert 'campos desconhecidos' in str(exc.value)
        assert exc.value.path == 'cor'

    def test_versao_de_esquema(self):
        raw = _raw('vecz2')
        raw['schema_version'] = 2
        with pytest.raises(StructuralError) as exc:
            parse_category(raw)
        assert exc.value.path == 'schema_version'

    def test_dual_nao_involutivo(self):
        raw = _raw('vecz2')
        raw['dual'] = {'1': '1', 'g': '1'}
        with pytest.raises(StructuralError) as exc:
            parse_category(raw)
        assert 'dual não é involução' in str(exc.value)
        assert exc.value.path == 'dual.g'

    def test_rotulo_desconhecido(self):
        raw = _raw('vecz2')
        raw['fusion'][0][0] = 'h'
        with pytest.raises(StructuralError) as exc:
            parse_category(raw)
        assert exc.value.path == 'fusion[0][0]'

    def test_linha_curta(self):
        raw = _raw('fib')
        raw['F'][0] = raw['F'][0][:11]
        with pytest.raises(StructuralError) as exc:
            parse_category(raw)
        assert exc.value.path == 'F[0]'

    def test_tolerancia_negativa(self):
        raw = _raw('vec')
        raw['tolerance'] = -1
        with pytest.raises(StructuralError):
            parse_category(raw)

    def test_json_invalido(self, tmp_path):
        path = tmp_path / 'quebrado.json'
        path.write_text('{"name": ', encoding='utf-8')
        with pytest.raises(StructuralError) as exc:
            load_category(path)
        assert 'JSON inválido' in str(exc.value)

    def test_documento_canonico(self):
        doc = category_document(load_category(resolve_category_path('vecz2')))
        assert doc['schema_version'] == 1
        assert doc['unit'] == '1'
        assert doc['dual'] == {'1': '1', 'g': 'g'}


class TestAlgebras:
    def test_nomes_embutidos(self, vecz2, ising):
        assert resolve_algebra(vecz2, 'group').name == '1⊕g'
        assert resolve_algebra(vecz2, 'broken').name == '1⊕g (g·g = 0)'
        assert resolve_algebra(ising, 'fermion').name == '1⊕psi'
        assert resolve_algebra(vecz2, None).name == '1'

    def test_hom_interno_pelo_seletor(self, ising):
        A = resolve_algebra(ising, 'ihom:sigma')
        assert A.obj == ising.obj({'1': 1, 'psi': 1})

    def test_algebra_inexistente(self, vecz2):
        with pytest.raises(StructuralError):
            resolve_algebra(vecz2, 'nenhuma')

    def test_gravar_e_reler(self, vecz2, tmp_path):
        A = resolve_algebra(vecz2, 'group')
        target = save_algebra(A, tmp_path / 'grupo.json', category='vecz2')
        again = load_algebra(target, vecz2)
        assert again.mult.distance(A.mult) == 0.0
        assert again.unit.distance(A.unit) == 0.0
        assert dumps_algebra(again, 'vecz2') == target.read_text(encoding='utf-8')

    def test_copia_fora_do_portador(self, vecz2):
        doc = json.loads(dumps_algebra(resolve_algebra(vecz2, 'group'), 'vecz2'))
        doc['unit'] = [[3, 1.0, 0.0]]
        with pytest.raises(StructuralError) as exc:
            load_algebra(doc, vecz2)
        assert exc.value.path == 'unit[0][0]'

    def test_categoria_declarada_diferente(self, vecz2, ising):
        doc = json.loads(dumps_algebra(resolve_algebra(ising, 'fermion'), 'ising'))
        assert load_algebra(doc, ising).name == '1⊕psi'
        doc['category'] = 'vecz2'
        with pytest.raises(StructuralError) as exc:
            load_algebra(doc, ising)
        assert exc.value.path == 'category'
        assert 'ising' in str(exc.value)


class TestSeletores:
    def test_objeto(self, fib):
        assert parse_object(fib, '2*1+tau') == fib.obj({'1': 2, 'tau': 1})
        assert parse_object(fib, 'tau + tau') == fib.obj({'tau': 2})

    @pytest.mark.parametrize('text', ['1+', 'x*tau', 'phi'])
    def test_objeto_invalido(self, fib, text):
        with pytest.raises(StructuralError):
            parse_object(fib, text)

    def test_tupla(self, fib):
        assert parse_tuple(fib, '1,tau', 2) == [fib.unit_obj(), fib.simple('tau')]
        with pytest.raises(StructuralError):
            parse_tuple(fib, '1,tau', 4)

    def test_caminho_inexistente(self):
        with pytest.raises(StructuralError):
            resolve_category_path('nao-existe')

    def test_diretorio_de_dados(self, settings, tmp_path):
        (tmp_path / 'categories').mkdir()
        (tmp_path / 'categories' / 'minha.json').write_text(
            resolve_category_path('vec').read_text(encoding='utf-8'), encoding='utf-8')
        settings.VORTEX_CENTER = dict(settings.VORTEX_CENTER, DATA_DIR=str(tmp_path))
        assert data_dir() == tmp_path
        assert load_category(resolve_category_path('minha')).name == 'vec'
