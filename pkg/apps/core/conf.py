# apps/core/conf.py

"""
Acesso às configurações numéricas do projeto.

Lê `settings.VORTEX_CENTER` quando o Django está configurado e cai nos
valores padrão quando a biblioteca é usada de forma isolada.
"""

from typing import Any, Dict

DEFAULTS: Dict[str, Any] = {
    'TOLERANCE': 1e-9,
    'SNAP': 1e-6,
    'SEED': 20240917,
    'ISO_RETRIES': 8,
    'WORKERS': 1,
    'CACHE_SIZE': 512,
    'REPORT_FORMAT': 'text',
    'DATA_DIR': None,
}


def get_config(key: str) -> Any:
    """Retorna o valor configurado para `key` (ex: 'TOLERANCE')."""
    try:
        from django.conf import settings

        if settings.configured:
            valores = getattr(settings, 'VORTEX_CENTER', {})
            if key in valores:
                return valores[key]
    except ImportError:
        pass
    return DEFAULTS[key]


def default_tolerance() -> float:
    return float(get_config('TOLERANCE'))


def default_seed() -> int:
    return int(get_config('SEED'))
