# apps/relatorios/formats.py

"""
Leitura e escrita dos arquivos de categoria e de álgebra (JSON).

Categoria:
    {"schema_version": 1, "name": ..., "simples": [...], "unit": rótulo,
     "dual": {rótulo: rótulo}, "fusion": [[a, b, c, n], ...],
     "F": [[a, b, c, d, e, f, mu, nu, rho, sigma, re, im], ...],
     "R": [[a, b, c, mu, nu, re, im], ...] | null,
     "pivotal": {rótulo: [re, im]} (opcional), "tolerance": 1e-9 (opcional)}

Álgebra:
    {"schema_version": 1, "name": ..., "carrier": {rótulo: mult},
     "unit": [[copia, re, im], ...],
     "mult": [[a, alfa, b, beta, c, gama, mu, re, im], ...]}

Os erros de esquema levantam StructuralError com o caminho do campo
(ex: "F[3][10]"). A forma canônica é estável: save(load(save(load(f)))) é
igual byte a byte a save(load(f)).
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from apps.algebras.models import Algebra
from apps.core.category import FusionCategory
from apps.core.conf import get_config
from apps.core.exceptions import StructuralError
from apps.core.models import CategoryData, Mor, Obj

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

CATEGORY_FIELDS = ('schema_version', 'name', 'simples', 'unit', 'dual', 'fusion', 'F', 'R', 'pivotal', 'tolerance')
ALGEBRA_FIELDS = ('schema_version', 'name', 'category', 'carrier', 'unit', 'mult')

Source = Union[str, Path, Dict[str, Any]]


# === UTILITÁRIOS ===

def _read(source: Source) -> Tuple[Dict[str, Any], str]:
    if isinstance(source, dict):
        return source, '<dict>'
    path = Path(source)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise StructuralError(f"não foi possível ler {path}: {e.strerror}", path=str(path))
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise StructuralError(f"JSON inválido (linha {e.lineno}, coluna {e.colno}): {e.msg}", path=str(path))
    if not isinstance(raw, dict):
        raise StructuralError("o documento deve ser um objeto JSON", path=str(path))
    return raw, str(path)


def _check_fields(raw: Dict, allowed, required, origin: str):
    unknown = sorted(set(raw) - set(allowed))
    if unknown:
        raise StructuralError(f"campos desconhecidos em {origin}: {unknown}", path=unknown[0])
    for key in required:
        if key not in raw:
            raise StructuralError(f"campo obrigatório ausente em {origin}", path=key)
    version = raw.get('schema_version', SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise StructuralError(f"versão de esquema {version!r} não suportada (esperado {SCHEMA_VERSION})",
                              path='schema_version')


def _label(index: Dict[str, int], value, path: str) -> int:
    if not isinstance(value, str) or value not in index:
        raise StructuralError(f"rótulo de simples desconhecido: {value!r}", path=path)
    return index[value]


def _natural(value, path: str, positive: bool = False) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < (1 if positive else 0):
        kind = 'inteiro positivo' if positive else 'inteiro não negativo'
        raise StructuralError(f"esperado {kind}, recebido {value!r}", path=path)
    return value


def _number(value, path: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise StructuralError(f"esperado número, recebido {value!r}", path=path)
    return float(value)


def _complex(row: List, start: int, path: str) -> complex:
    return complex(_number(row[start], f"{path}[{start}]"), _number(row[start + 1], f"{path}[{start + 1}]"))


def _rows(raw, width: int, path: str) -> List[List]:
    if not isinstance(raw, list):
        raise StructuralError("esperada uma lista de linhas", path=path)
    for k, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != width:
            raise StructuralError(f"cada linha deve ter {width} entradas", path=f"{path}[{k}]")
    return raw


def _pair(z: complex) -> List[float]:
    # +0.0 normaliza -0.0
    return [float(z.real) + 0.0, float(z.imag) + 0.0]


def _dump(doc: Dict[str, Any], row_fields=()) -> str:
    """JSON canônico: chaves na ordem do esquema, uma linha por registro tabular"""
    lines = ['{']
    items = list(doc.items())
    for k, (key, value) in enumerate(items):
        comma = ',' if k < len(items) - 1 else ''
        if key in row_fields and isinstance(value, list) and value:
            lines.append(f'  {json.dumps(key)}: [')
            for j, row in enumerate(value):
                sep = ',' if j < len(value) - 1 else ''
                lines.append(f'    {json.dumps(row, ensure_ascii=False)}{sep}')
            lines.append(f'  ]{comma}')
        else:
            lines.append(f'  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}{comma}')
    lines.append('}')
    return '\n'.join(lines) + '\n'


# === CATEGORIAS ===

def parse_category(raw: Dict[str, Any], origin: str = '<dict>') -> CategoryData:
    """Valida o documento e monta CategoryData; não verifica coerência (ver validate_category)"""
    _check_fields(raw, CATEGORY_FIELDS, ('name', 'simples', 'unit', 'dual', 'fusion', 'F'), origin)

    name = raw['name']
    if not isinstance(name, str) or not name:
        raise StructuralError("nome deve ser texto não vazio", path='name')

    simples = raw['simples']
    if not isinstance(simples, list) or not simples or not all(isinstance(s, str) and s for s in simples):
        raise StructuralError("lista não vazia de rótulos textuais", path='simples')
    if len(set(simples)) != len(simples):
        raise StructuralError("rótulos repetidos", path='simples')
    index = {label: k for k, label in enumerate(simples)}
    rank = len(simples)

    unit = _label(index, raw['unit'], 'unit')

    dual_raw = raw['dual']
    if not isinstance(dual_raw, dict):
        raise StructuralError("esperado objeto {rótulo: rótulo}", path='dual')
    dual = [0] * rank
    for label in simples:
        if label not in dual_raw:
            raise StructuralError(f"dual ausente para {label!r}", path=f"dual.{label}")
        dual[index[label]] = _label(index, dual_raw[label], f"dual.{label}")
    for label in dual_raw:
        _label(index, label, 'dual')
    for a in range(rank):
        if dual[dual[a]] != a:
            raise StructuralError(f"dual não é involução: {simples[a]} ↦ {simples[dual[a]]} ↦ "
                                  f"{simples[dual[dual[a]]]}", path=f"dual.{simples[a]}")
    if dual[unit] != unit:
        raise StructuralError("o dual da unidade deve ser a unidade", path=f"dual.{simples[unit]}")

    fusion: Dict[Tuple[int, int, int], int] = {}
    for k, row in enumerate(_rows(raw['fusion'], 4, 'fusion')):
        path = f"fusion[{k}]"
        key = tuple(_label(index, row[j], f"{path}[{j}]") for j in range(3))
        n = _natural(row[3], f"{path}[3]")
        if key in fusion:
            raise StructuralError(f"entrada repetida {row[:3]}", path=path)
        if n:
            fusion[key] = n
    # linhas com a unidade podem ser omitidas
    for a in range(rank):
        for key in ((unit, a, a), (a, unit, a)):
            fusion.setdefault(key, 1)

    f_symbols = {}
    for k, row in enumerate(_rows(raw['F'], 12, 'F')):
        path = f"F[{k}]"
        labels = tuple(_label(index, row[j], f"{path}[{j}]") for j in range(6))
        multiplicities = tuple(_natural(row[j], f"{path}[{j}]") for j in range(6, 10))
        key = labels + multiplicities
        if key in f_symbols:
            raise StructuralError(f"entrada F repetida {row[:10]}", path=path)
        f_symbols[key] = _complex(row, 10, path)

    r_symbols = None
    if raw.get('R') is not None:
        r_symbols = {}
        for k, row in enumerate(_rows(raw['R'], 7, 'R')):
            path = f"R[{k}]"
            key = (tuple(_label(index, row[j], f"{path}[{j}]") for j in range(3))
                   + tuple(_natural(row[j], f"{path}[{j}]") for j in range(3, 5)))
            if key in r_symbols:
                raise StructuralError(f"entrada R repetida {row[:5]}", path=path)
            r_symbols[key] = _complex(row, 5, path)

    pivotal = None
    if raw.get('pivotal') is not None:
        if not isinstance(raw['pivotal'], dict):
            raise StructuralError("esperado objeto {rótulo: [re, im]}", path='pivotal')
        values = [1.0 + 0j] * rank
        for label, value in raw['pivotal'].items():
            path = f"pivotal.{label}"
            a = _label(index, label, path)
            if not isinstance(value, list) or len(value) != 2:
                raise StructuralError("esperado [re, im]", path=path)
            values[a] = _complex(value, 0, path)
        pivotal = tuple(values)

    tolerance = _number(raw.get('tolerance', 1e-9), 'tolerance')
    if tolerance <= 0:
        raise StructuralError(f"tolerância deve ser positiva, recebido {tolerance}", path='tolerance')

    data = CategoryData(name=name, simples=tuple(simples), unit=unit, dual=tuple(dual), fusion=fusion,
                        f_symbols=f_symbols, r_symbols=r_symbols, pivotal=pivotal, tolerance=tolerance)
    logger.debug(f"Categoria {name} lida de {origin}: {rank} simples, {len(f_symbols)} símbolos F")
    return data


def load_category(source: Source) -> CategoryData:
    raw, origin = _read(source)
    return parse_category(raw, origin)


def category_document(data: CategoryData) -> Dict[str, Any]:
    """Documento canônico: linhas ordenadas por índices, complexos como [re, im]"""
    s = data.simples
    doc: Dict[str, Any] = {
        'schema_version': SCHEMA_VERSION,
        'name': data.name,
        'simples': list(s),
        'unit': s[data.unit],
        'dual': {s[a]: s[data.dual[a]] for a in range(data.rank)},
        'fusion': [[s[a], s[b], s[c], int(n)] for (a, b, c), n in sorted(data.fusion.items()) if n],
        'F': [[s[k] for k in key[:6]] + [int(k) for k in key[6:]] + _pair(complex(value))
              for key, value in sorted(data.f_symbols.items())],
        'R': None,
    }
    if data.r_symbols is not None:
        doc['R'] = [[s[k] for k in key[:3]] + [int(k) for k in key[3:]] + _pair(complex(value))
                    for key, value in sorted(data.r_symbols.items())]
    if data.pivotal is not None:
        doc['pivotal'] = {s[a]: _pair(complex(v)) for a, v in enumerate(data.pivotal)}
    doc['tolerance'] = float(data.tolerance)
    return doc


def dumps_category(data: CategoryData) -> str:
    return _dump(category_document(data), row_fields=('fusion', 'F', 'R'))


def save_category(data: CategoryData, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_category(data), encoding='utf-8')
    logger.info(f"Categoria {data.name} gravada em {path}")
    return path


# === ÁLGEBRAS ===

def parse_algebra(raw: Dict[str, Any], cat: FusionCategory, origin: str = '<dict>') -> Algebra:
    """Monta uma Algebra em C a partir do documento; as leis são conferidas por check_algebra"""
    _check_fields(raw, ALGEBRA_FIELDS, ('name', 'carrier', 'unit', 'mult'), origin)
    declared = raw.get('category')
    if declared is not None and declared != cat.name:
        raise StructuralError(f"álgebra declarada para {declared!r}, carregada em {cat.name!r}", path='category')
    index = {label: k for k, label in enumerate(cat.data.simples)}

    carrier_raw = raw['carrier']
    if not isinstance(carrier_raw, dict) or not carrier_raw:
        raise StructuralError("esperado objeto {rótulo: multiplicidade} não vazio", path='carrier')
    mult = [0] * cat.rank
    for label, m in carrier_raw.items():
        mult[_label(index, label, f"carrier.{label}")] = _natural(m, f"carrier.{label}")
    A = Obj(tuple(mult))
    if A.is_zero():
        raise StructuralError("portador nulo", path='carrier')
    one = cat.unit_obj()

    unit_blocks = [np.zeros((A[c], one[c]), dtype=complex) for c in range(cat.rank)]
    for k, row in enumerate(_rows(raw['unit'], 3, 'unit')):
        path = f"unit[{k}]"
        copy = _natural(row[0], f"{path}[0]")
        if copy >= A[cat.unit]:
            raise StructuralError(f"cópia {copy} da unidade inexistente no portador", path=f"{path}[0]")
        unit_blocks[cat.unit][copy, 0] = _complex(row, 1, path)

    AA = cat.fuse(A, A)
    layout = cat.layout(A, A)
    mult_blocks = [np.zeros((A[c], AA[c]), dtype=complex) for c in range(cat.rank)]
    for k, row in enumerate(_rows(raw['mult'], 9, 'mult')):
        path = f"mult[{k}]"
        a = _label(index, row[0], f"{path}[0]")
        alpha = _natural(row[1], f"{path}[1]")
        b = _label(index, row[2], f"{path}[2]")
        beta = _natural(row[3], f"{path}[3]")
        c = _label(index, row[4], f"{path}[4]")
        gamma = _natural(row[5], f"{path}[5]")
        mu = _natural(row[6], f"{path}[6]")
        n = int(cat.N[a, b, c])
        if alpha >= A[a] or beta >= A[b] or gamma >= A[c] or mu >= n:
            raise StructuralError(f"índices fora do portador ou vértice inadmissível {row[:7]}", path=path)
        column = layout.position(c, a, b, alpha, beta, mu, n)
        mult_blocks[c][gamma, column] = _complex(row, 7, path)

    name = raw['name']
    if not isinstance(name, str) or not name:
        raise StructuralError("nome deve ser texto não vazio", path='name')
    algebra = Algebra(cat, A, Mor(one, A, tuple(unit_blocks)), Mor(AA, A, tuple(mult_blocks)), name=name)
    logger.debug(f"Álgebra {name} lida de {origin}: portador {cat.describe(A)}")
    return algebra


def load_algebra(source: Source, cat: FusionCategory) -> Algebra:
    raw, origin = _read(source)
    return parse_algebra(raw, cat, origin)


def algebra_document(A: Algebra, category: Optional[str] = None) -> Dict[str, Any]:
    cat = A.ambient
    s = cat.data.simples
    x = A.obj
    doc: Dict[str, Any] = {'schema_version': SCHEMA_VERSION, 'name': A.name}
    if category:
        doc['category'] = category
    doc['carrier'] = {s[a]: int(m) for a, m in enumerate(x.mult) if m}
    block = A.unit.blocks[cat.unit]
    doc['unit'] = [[copy] + _pair(complex(block[copy, 0])) for copy in range(block.shape[0])
                   if block[copy, 0] != 0]
    layout = cat.layout(x, x)
    rows = []
    for c in range(cat.rank):
        for (a, b) in sorted(layout.offsets[c]):
            n = int(cat.N[a, b, c])
            for alpha in range(x[a]):
                for beta in range(x[b]):
                    for mu in range(n):
                        column = layout.position(c, a, b, alpha, beta, mu, n)
                        for gamma in range(x[c]):
                            value = complex(A.mult.blocks[c][gamma, column])
                            if value != 0:
                                rows.append([s[a], alpha, s[b], beta, s[c], gamma, mu] + _pair(value))
    doc['mult'] = sorted(rows, key=lambda r: (s.index(r[0]), r[1], s.index(r[2]), r[3], s.index(r[4]), r[5], r[6]))
    return doc


def dumps_algebra(A: Algebra, category: Optional[str] = None) -> str:
    return _dump(algebra_document(A, category), row_fields=('unit', 'mult'))


def save_algebra(A: Algebra, path: Union[str, Path], category: Optional[str] = None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dumps_algebra(A, category), encoding='utf-8')
    logger.info(f"Álgebra {A.name} gravada em {path}")
    return path


# === SELETORES DA LINHA DE COMANDO ===

def data_dir() -> Path:
    configured = get_config('DATA_DIR')
    return Path(configured) if configured else Path(__file__).resolve().parents[2] / 'data'


def resolve_category_path(value: str) -> Path:
    """Caminho existente, ou nome de categoria embutida (ex: 'fib')"""
    path = Path(value)
    if path.exists():
        return path
    bundled = data_dir() / 'categories' / f"{value}.json"
    if bundled.exists():
        return bundled
    raise StructuralError(f"arquivo de categoria não encontrado: {value}", path=value)


def parse_object(cat: FusionCategory, text: str) -> Obj:
    """'2*1+tau' → 2·1 ⊕ τ"""
    spec: Dict[str, int] = {}
    for term in text.replace(' ', '').split('+'):
        if not term:
            raise StructuralError(f"termo vazio em {text!r}", path='object')
        copies, _, label = term.rpartition('*')
        if copies and not copies.isdigit():
            raise StructuralError(f"multiplicidade inválida em {term!r}", path='object')
        cat.data.index(label)
        spec[label] = spec.get(label, 0) + (int(copies) if copies else 1)
    return cat.obj(spec)


def parse_tuple(cat: FusionCategory, text: str, size: int) -> List[Obj]:
    parts = [p for p in text.split(',')]
    if len(parts) != size:
        raise StructuralError(f"esperados {size} objetos em {text!r}", path='tuple')
    return [parse_object(cat, p) for p in parts]


def resolve_algebra(cat: FusionCategory, selector: Optional[str]) -> Algebra:
    """
    'trivial', 'ihom:OBJ' ([x,x]), caminho de arquivo, ou nome embutido
    procurado em data/algebras/<categoria>_<nome>.json e data/algebras/<nome>.json.
    """
    if selector is None or selector == 'trivial':
        return Algebra.trivial(cat)
    if selector.startswith('ihom:'):
        from apps.homs.internal import endomorphism_algebra

        return endomorphism_algebra(cat, parse_object(cat, selector[len('ihom:'):]))
    path = Path(selector)
    if not path.exists():
        folder = data_dir() / 'algebras'
        candidates = [folder / f"{cat.name}_{selector}.json", folder / f"{selector}.json"]
        path = next((p for p in candidates if p.exists()), None)
        if path is None:
            raise StructuralError(f"álgebra não encontrada: {selector}", path='algebra')
    return load_algebra(path, cat)
