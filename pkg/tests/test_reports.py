# tests/test_reports.py

import json
from io import StringIO

import numpy as np
import pytest

from apps.core.exceptions import StructuralError
from apps.relatorios.formats import resolve_category_path
from apps.relatorios.reports import Report, RunConfig, _cell, digest_file, plain

from .factories import ReportFactory, RunConfigFactory


class _Stdout(StringIO):
    """Imita o OutputWrapper dos comandos"""

    def write(self, text, ending='\n'):
        return super().write(text + ending)


def _filled(**kwargs) -> Report:
    report = ReportFactory(**kwargs)
    report.add_input(resolve_category_path('vecz2'))
    report.artifact('simples', 4)
    report.artifact('dimensão', 4.0)
    report.table('twists', ['simples', 'θ'], [['1', 1 + 0j], ['Z3', -1 + 0j]])
    report.check('pentágono', 0.0, True)
    report.check_below('hexágono', 1e-12)
    return report


class TestConfiguracao:
    def test_tolerancia_invalida(self):
        with pytest.raises(StructuralError) as exc:
            RunConfigFactory(tolerance=0)
        assert exc.value.path == '--tol'

    def test_formato_desconhecido(self):
        with pytest.raises(StructuralError):
            RunConfigFactory(output_format='html')

    @pytest.mark.parametrize('fmt', ['pdf', 'xlsx'])
    def test_binarios_exigem_saida(self, fmt):
        with pytest.raises(StructuralError) as exc:
            RunConfigFactory(output_format=fmt)
        assert exc.value.path == '--out'


class TestNormalizacao:
    def test_complexos_e_numpy(self):
        assert plain(np.float64(0.1) + 0.2) == 0.3
        assert plain(1 + 2j) == [1.0, 2.0]
        assert plain({'x': np.int64(3)}) == {'x': 3}
        assert plain(-0.0) == 0.0

    def test_celulas(self):
        assert _cell(True) == 'sim'
        assert _cell(1 + 0j) == '1'
        assert _cell(None) == ''

    def test_digest(self):
        path = resolve_category_path('vec')
        assert len(digest_file(path)) == 64


class TestRelatorio:
    def test_veredito(self):
        report = _filled()
        assert report.passed
        report.check('rigidez', 0.5, False, 'zigue-zague')
        assert not report.passed
        assert report.failures == ['rigidez']

    def test_texto(self):
        text = _filled().to_text()
        assert text.startswith('== validate ==\ncomando: validate vecz2\n')
        assert 'entrada: vecz2.json sha256=' in text
        assert '-- twists --' in text
        assert text.endswith('resultado: APROVADO\n')

    def test_json(self):
        doc = json.loads(_filled().to_json())
        assert doc['schema_version'] == 1
        assert doc['passed'] is True
        assert doc['tables'][0]['rows'][1] == ['Z3', [-1.0, 0.0]]
        assert list(doc['inputs']) == ['vecz2.json']

    def test_deterministico(self):
        assert _filled().to_json() == _filled().to_json()
        assert _filled().to_text() == _filled().to_text()

    def test_pdf(self, tmp_path):
        target = _filled().write_pdf(tmp_path / 'r' / 'relatorio.pdf')
        assert target.read_bytes().startswith(b'%PDF')

    def test_pdf_reprodutivel(self, tmp_path):
        first = _filled().write_pdf(tmp_path / 'a.pdf')
        second = _filled().write_pdf(tmp_path / 'b.pdf')
        assert first.read_bytes() == second.read_bytes()

    def test_xlsx(self, tmp_path):
        target = _filled().write_xlsx(tmp_path / 'relatorio.xlsx')
        assert target.read_bytes()[:2] == b'PK'

    def test_emit_texto_no_stdout(self):
        out = _Stdout()
        assert _filled().emit(RunConfigFactory(), out) is None
        assert out.getvalue().endswith('resultado: APROVADO\n')

    def test_emit_json_em_arquivo(self, tmp_path):
        config = RunConfigFactory(output_format='json', out=str(tmp_path / 'r.json'))
        target = _filled().emit(config, _Stdout())
        assert json.loads(target.read_text(encoding='utf-8'))['command'] == 'validate'

    def test_start(self):
        config = RunConfig(command='center', categories=['fib'], seed=7)
        report = Report.start(config, ['center', 'fib'], [resolve_category_path('fib')])
        assert report.seed == 7
        assert 'fib.json' in report.inputs
