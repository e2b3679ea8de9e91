# tests/test_commands.py

import json
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from apps.relatorios.formats import load_category


def run(*args):
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


def run_json(*args):
    return json.loads(run(*args, '--format', 'json'))


def failing(*args):
    with pytest.raises(CommandError) as exc:
        call_command(*args, stdout=StringIO())
    return exc.value


class TestValidate:
    def test_fib_aprovada(self):
        text = run('validate', 'fib')
        assert 'resultado: APROVADO' in text
        assert 'pentagon' in text

    def test_fib_corrompida_reprovada(self):
        error = failing('validate', 'fib_corrupted')
        assert error.returncode == 1
        assert 'pentagon' in str(error)

    def test_tupla_f_ausente(self, data_copy):
        path = data_copy('fib')
        doc = json.loads(path.read_text(encoding='utf-8'))
        doc['F'] = [row for row in doc['F'] if row[:6] != ['tau'] * 6]
        path.write_text(json.dumps(doc), encoding='utf-8')
        error = failing('validate', str(path))
        assert error.returncode == 2
        assert '(1, 1, 1, 1, 1, 1, 0, 0, 0, 0)' in str(error)

    def test_arquivo_inexistente(self):
        assert failing('validate', 'nao-existe').returncode == 2

    def test_tolerancia_zero(self):
        assert failing('validate', 'fib', '--tol', '0').returncode == 2

    def test_pdf_sem_saida(self):
        assert failing('validate', 'fib', '--format', 'pdf').returncode == 2

    def test_json(self):
        doc = run_json('validate', 'vecz2')
        assert doc['command'] == 'validate'
        assert doc['argv'][:2] == ['validate', 'vecz2']
        assert doc['artifacts']['simples'] == ['1', 'g']
        assert doc['passed'] is True


class TestRelatoriosEmArquivo:
    def test_deterministico(self, tmp_path):
        first, second = tmp_path / 'a.json', tmp_path / 'b.json'
        run('center', 'vecz2', '--format', 'json', '--out', str(first))
        run('center', 'vecz2', '--format', 'json', '--out', str(second))
        assert first.read_bytes() == second.read_bytes()

    @pytest.mark.parametrize('fmt, magic', [('pdf', b'%PDF'), ('xlsx', b'PK')])
    def test_binarios(self, tmp_path, fmt, magic):
        target = tmp_path / f"relatorio.{fmt}"
        text = run('validate', 'fib', '--format', fmt, '--out', str(target))
        assert 'Relatório gravado em' in text
        assert target.read_bytes().startswith(magic)


class TestComandosDeDominio:
    def test_fuse(self):
        doc = run_json('fuse', 'fib', 'tau', 'tau')
        assert doc['artifacts']['product'] == '1 ⊕ tau'

    def test_fuse_objeto_invalido(self):
        assert failing('fuse', 'fib', 'tau', 'phi').returncode == 2

    def test_center(self):
        doc = run_json('center', 'vecz2')
        assert doc['artifacts']['rank'] == 4
        assert doc['passed'] is True

    def test_full_center(self):
        doc = run_json('full_center', 'vecz2')
        assert doc['artifacts']['carrier'] == '2·1'
        assert doc['artifacts']['lagrangian'] == 'yes'

    def test_full_center_com_soma(self):
        doc = run_json('full_center', 'vecz2', '--sum-with', 'group')
        assert doc['passed'] is True
        assert 'sum' in doc['artifacts']

    def test_algebra_check_quebrada(self):
        error = failing('algebra_check', 'vecz2', '--algebra', 'broken')
        assert error.returncode == 1
        assert 'separable' in str(error)

    def test_modules_recusa_nao_separavel(self):
        assert failing('modules', 'vecz2', '--algebra', 'broken').returncode == 2

    def test_modules_fermion(self):
        doc = run_json('modules', 'ising', '--algebra', 'fermion', '--no-bimodules')
        assert doc['artifacts']['right_modules'] == 3

    def test_picard(self):
        doc = run_json('picard', 'vecz2')
        assert doc['artifacts']['group'] == 'Z/2'

    def test_aut_center(self):
        doc = run_json('aut_center', 'vecz2')
        assert doc['artifacts']['aut_group'] == 'Z/2'
        assert doc['artifacts']['pic_group'] == 'Z/2'

    def test_morita(self):
        doc = run_json('morita', 'vecz2', '--algebra-b', 'group', '--expect', 'inequivalent')
        assert doc['artifacts']['equivalent'] is False
        assert doc['passed'] is True

    def test_verify_formula(self):
        doc = run_json('verify_formula', 'vecz2', '--tuple', 'g,g,g,g')
        assert doc['artifacts']['tuples'] == 1
        assert doc['passed'] is True

    def test_verify_exactalg(self):
        assert run_json('verify_exactalg', 'vecz2', '--algebra', 'group')['passed'] is True

    def test_export(self, tmp_path):
        target = tmp_path / 'dual.json'
        run('export_dual_category', 'vecz2', '--algebra', 'group', '--emit', str(target))
        assert len(load_category(target).simples) == 2

    def test_selftest_parcial(self):
        text = run('selftest', '--only', 'coherence')
        assert 'resultado: APROVADO' in text

    def test_selftest_item_desconhecido(self):
        assert failing('selftest', '--only', 'nada').returncode == 2
