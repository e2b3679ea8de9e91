# apps/relatorios/reports.py

"""
Relatórios dos comandos: texto, JSON versionado, PDF (reportlab) e XLSX (xlsxwriter).

Nenhum relatório carrega data/hora; os números são normalizados para um
número fixo de algarismos significativos, de modo que duas execuções com a
mesma semente produzem bytes idênticos.
"""

import hashlib
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
import xlsxwriter
from reportlab import rl_config
from reportlab.lib import colors
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from apps.core.exceptions import StructuralError

logger = logging.getLogger(__name__)

REPORT_SCHEMA_VERSION = 1
SIGNIFICANT = 10
FORMATS = ('text', 'json', 'pdf', 'xlsx')

rl_config.invariant = 1


# === NORMALIZAÇÃO ===

def _float(x: float) -> float:
    if not np.isfinite(x):
        return x
    return float(f"{x:.{SIGNIFICANT}g}") + 0.0


def plain(value: Any) -> Any:
    """Converte para tipos JSON estáveis: complexos viram [re, im]"""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return _float(float(value))
    if isinstance(value, (complex, np.complexfloating)):
        z = complex(value)
        return [_float(z.real), _float(z.imag)]
    if isinstance(value, np.ndarray):
        return plain(value.tolist())
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    if value is None or isinstance(value, str):
        return value
    if hasattr(value, 'as_dict'):
        return plain(value.as_dict())
    return str(value)


def _cell(value: Any) -> str:
    value = plain(value)
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, list) and len(value) == 2 and all(isinstance(v, float) for v in value):
        re, im = value
        if abs(im) < 1e-12:
            return f"{re:.6g}"
        return f"{re:.6g}{im:+.6g}i"
    if isinstance(value, bool):
        return 'sim' if value else 'não'
    if isinstance(value, list):
        return '[' + ', '.join(_cell(v) for v in value) + ']'
    return '' if value is None else str(value)


def digest_file(path: Union[str, Path]) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


# === CONFIGURAÇÃO DA EXECUÇÃO ===

@dataclass
class RunConfig:
    """Opções já validadas de uma execução"""

    command: str
    categories: List[str] = field(default_factory=list)
    algebras: List[str] = field(default_factory=list)
    selectors: List[str] = field(default_factory=list)
    tolerance: float = 1e-9
    seed: int = 0
    output_format: str = 'text'
    out: Optional[str] = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise StructuralError(f"tolerância deve ser positiva, recebido {self.tolerance}", path='--tol')
        if self.output_format not in FORMATS:
            raise StructuralError(f"formato desconhecido {self.output_format!r}; use {', '.join(FORMATS)}",
                                  path='--format')
        if self.output_format in ('pdf', 'xlsx') and not self.out:
            raise StructuralError(f"o formato {self.output_format} exige --out", path='--out')


# === RELATÓRIO ===

@dataclass
class Check:
    name: str
    residual: Optional[float]
    passed: bool
    detail: str = ''

    def as_dict(self) -> Dict:
        return {'name': self.name, 'residual': self.residual, 'passed': self.passed, 'detail': self.detail}


@dataclass
class ArtifactTable:
    title: str
    headers: List[str]
    rows: List[List[Any]]

    def as_dict(self) -> Dict:
        return {'title': self.title, 'headers': list(self.headers), 'rows': [list(r) for r in self.rows]}


@dataclass
class Report:
    """Eco do comando, resumo das entradas, verificações e artefatos"""

    command: str
    argv: List[str] = field(default_factory=list)
    inputs: Dict[str, str] = field(default_factory=dict)
    seed: Optional[int] = None
    tolerance: Optional[float] = None
    checks: List[Check] = field(default_factory=list)
    artifacts: Dict[str, Any] = field(default_factory=dict)
    tables: List[ArtifactTable] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @classmethod
    def start(cls, config: RunConfig, argv: Sequence[str], inputs: Sequence[Union[str, Path]] = ()) -> 'Report':
        report = cls(command=config.command, argv=list(argv), seed=config.seed, tolerance=config.tolerance)
        for path in inputs:
            report.add_input(path)
        return report

    def add_input(self, path: Union[str, Path]):
        path = Path(path)
        if path.is_file():
            self.inputs[path.name] = digest_file(path)

    def check(self, name: str, residual: Optional[float], passed: bool, detail: str = '') -> bool:
        self.checks.append(Check(name, None if residual is None else float(residual), bool(passed), detail))
        logger.debug(f"[{self.command}] {name}: resíduo={residual} aprovado={passed}")
        return bool(passed)

    def check_below(self, name: str, residual: float, tolerance: Optional[float] = None, detail: str = '') -> bool:
        limit = self.tolerance if tolerance is None else tolerance
        return self.check(name, residual, residual < limit, detail)

    def artifact(self, key: str, value: Any):
        self.artifacts[key] = value

    def table(self, title: str, headers: Sequence[str], rows: Sequence[Sequence[Any]]):
        self.tables.append(ArtifactTable(title, list(headers), [list(r) for r in rows]))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def as_dict(self) -> Dict:
        return plain({
            'schema_version': REPORT_SCHEMA_VERSION,
            'command': self.command,
            'argv': self.argv,
            'inputs': dict(sorted(self.inputs.items())),
            'seed': self.seed,
            'tolerance': self.tolerance,
            'passed': self.passed,
            'checks': [c.as_dict() for c in self.checks],
            'artifacts': self.artifacts,
            'tables': [t.as_dict() for t in self.tables],
            'notes': self.notes,
        })

    # === RENDERIZAÇÃO ===

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False, allow_nan=True) + '\n'

    def to_text(self) -> str:
        lines = [f"== {self.command} ==", f"comando: {' '.join(self.argv)}"]
        for name, digest in sorted(self.inputs.items()):
            lines.append(f"entrada: {name} sha256={digest[:16]}")
        if self.seed is not None:
            lines.append(f"semente: {self.seed}   tolerância: {_cell(self.tolerance)}")
        for key, value in self.artifacts.items():
            lines.append(f"{key}: {_cell(value)}")
        for t in self.tables:
            lines.append('')
            lines.extend(_text_table(t.title, t.headers, t.rows))
        if self.checks:
            lines.append('')
            rows = [[c.name, '-' if c.residual is None else f"{c.residual:.3e}", 'ok' if c.passed else 'FALHOU',
                     c.detail] for c in self.checks]
            lines.extend(_text_table('verificações', ['verificação', 'resíduo', 'veredito', 'detalhe'], rows))
        for note in self.notes:
            lines.append(f"nota: {note}")
        lines.append('')
        lines.append(f"resultado: {'APROVADO' if self.passed else 'REPROVADO'}")
        return '\n'.join(lines) + '\n'

    def write_pdf(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = SimpleDocTemplate(str(path), pagesize=A4, title=f"vortex-center {self.command}",
                                author='vortex-center', creator='vortex-center')
        story = []

        styles = getSampleStyleSheet()
        title_style = ParagraphStyle(
            'CustomTitle',
            parent=styles['Heading1'],
            fontSize=18,
            spaceAfter=20,
            textColor=colors.darkblue
        )
        heading_style = ParagraphStyle(
            'CustomHeading',
            parent=styles['Heading2'],
            fontSize=13,
            spaceAfter=10,
            textColor=colors.darkblue
        )

        story.append(Paragraph(f"Relatório: {self.command}", title_style))
        story.append(Paragraph(f"Comando: {' '.join(self.argv)}", styles['Normal']))
        for name, digest in sorted(self.inputs.items()):
            story.append(Paragraph(f"Entrada {name}: {digest[:16]}", styles['Normal']))
        story.append(Spacer(1, 16))

        if self.artifacts:
            story.append(Paragraph("Resumo", heading_style))
            story.append(_pdf_table([['Campo', 'Valor']] + [[k, _cell(v)] for k, v in self.artifacts.items()]))
            story.append(Spacer(1, 16))

        for t in self.tables:
            story.append(Paragraph(t.title, heading_style))
            story.append(_pdf_table([t.headers] + [[_cell(v) for v in row] for row in t.rows]))
            story.append(Spacer(1, 16))

        if self.checks:
            story.append(Paragraph("Verificações", heading_style))
            rows = [['Verificação', 'Resíduo', 'Veredito']]
            rows += [[c.name, '-' if c.residual is None else f"{c.residual:.3e}", 'ok' if c.passed else 'FALHOU']
                     for c in self.checks]
            story.append(_pdf_table(rows))

        story.append(Spacer(1, 20))
        story.append(Paragraph(f"Resultado: {'APROVADO' if self.passed else 'REPROVADO'}", styles['Normal']))
        doc.build(story)
        logger.info(f"PDF gravado em {path}")
        return path

    def write_xlsx(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        workbook = xlsxwriter.Workbook(str(path))
        workbook.set_properties({'title': f"vortex-center {self.command}", 'created': datetime(2000, 1, 1)})

        header_format = workbook.add_format({
            'bold': True,
            'font_color': 'white',
            'bg_color': '#366092',
            'border': 1
        })
        cell_format = workbook.add_format({'border': 1})

        resumo = workbook.add_worksheet('Resumo')
        resumo.write(0, 0, 'Comando', header_format)
        resumo.write(0, 1, ' '.join(self.argv), cell_format)
        resumo.write(1, 0, 'Resultado', header_format)
        resumo.write(1, 1, 'APROVADO' if self.passed else 'REPROVADO', cell_format)
        for row, (key, value) in enumerate(self.artifacts.items(), 3):
            resumo.write(row, 0, key, header_format)
            resumo.write(row, 1, _cell(value), cell_format)
        resumo.set_column(0, 0, 28)
        resumo.set_column(1, 1, 60)

        used = {'Resumo'}
        for k, t in enumerate(self.tables, 1):
            sheet = workbook.add_worksheet(_sheet_name(t.title, k, used))
            for col, header in enumerate(t.headers):
                sheet.write(0, col, header, header_format)
            for row, values in enumerate(t.rows, 1):
                for col, value in enumerate(values):
                    value = plain(value)
                    if isinstance(value, (int, float)) and not isinstance(value, bool):
                        sheet.write_number(row, col, value, cell_format)
                    else:
                        sheet.write(row, col, _cell(value), cell_format)

        if self.checks:
            sheet = workbook.add_worksheet('Verificações')
            for col, header in enumerate(['Verificação', 'Resíduo', 'Veredito', 'Detalhe']):
                sheet.write(0, col, header, header_format)
            for row, c in enumerate(self.checks, 1):
                sheet.write(row, 0, c.name, cell_format)
                if c.residual is None or not np.isfinite(c.residual):
                    sheet.write(row, 1, '-' if c.residual is None else str(c.residual), cell_format)
                else:
                    sheet.write_number(row, 1, c.residual, cell_format)
                sheet.write(row, 2, 'ok' if c.passed else 'FALHOU', cell_format)
                sheet.write(row, 3, c.detail, cell_format)
            sheet.set_column(0, 0, 32)

        workbook.close()
        logger.info(f"XLSX gravado em {path}")
        return path

    def emit(self, config: RunConfig, stdout) -> Optional[Path]:
        """Grava no formato pedido; texto e JSON vão para --out ou para stdout"""
        if config.output_format == 'pdf':
            return self.write_pdf(config.out)
        if config.output_format == 'xlsx':
            return self.write_xlsx(config.out)
        text = self.to_json() if config.output_format == 'json' else self.to_text()
        if config.out:
            path = Path(config.out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
            return path
        stdout.write(text, ending='')
        return None


def _text_table(title: str, headers: List[str], rows: List[List[Any]]) -> List[str]:
    cells = [[str(h) for h in headers]] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(headers))]
    fmt = '  '.join(f"{{:<{w}}}" for w in widths)
    lines = [f"-- {title} --", fmt.format(*cells[0]).rstrip()]
    lines.extend(fmt.format(*r).rstrip() for r in cells[1:])
    return lines


def _pdf_table(rows: List[List[str]]) -> Table:
    table = Table(rows)
    table.setStyle(TableStyle([
        ('BACKGROUND', (0, 0), (-1, 0), colors.grey),
        ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
        ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
        ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
        ('FONTSIZE', (0, 0), (-1, -1), 8),
        ('BOTTOMPADDING', (0, 0), (-1, 0), 8),
        ('BACKGROUND', (0, 1), (-1, -1), colors.beige),
        ('GRID', (0, 0), (-1, -1), 1, colors.black)
    ]))
    return table


def _sheet_name(title: str, k: int, used: set) -> str:
    """Nomes de aba: até 31 caracteres, sem []:*?/\\ e sem repetição"""
    clean = ''.join('_' if ch in '[]:*?/\\' else ch for ch in title)[:28] or f"Tabela{k}"
    name = clean
    while name in used:
        name = f"{clean[:26]}_{k}"
        k += 1
    used.add(name)
    return name
