# config/settings/production.py

from .base import *

# === PRODUÇÃO ===

DEBUG = False

# Execuções em lote: relatórios estruturados por padrão
VORTEX_CENTER['REPORT_FORMAT'] = env('VORTEX_REPORT_FORMAT', default='json')

# === LOGGING ===

LOGGING['handlers']['file']['filename'] = LOG_DIR / 'vortex-production.log'
LOGGING['handlers']['console']['level'] = 'ERROR'

# === VALIDAÇÕES ===

if VORTEX_CENTER['TOLERANCE'] <= 0:
    raise ValueError("VORTEX_TOLERANCE deve ser positiva")

if VORTEX_CENTER['WORKERS'] < 1:
    raise ValueError("VORTEX_WORKERS deve ser pelo menos 1")

if VORTEX_CENTER['CACHE_SIZE'] < 1:
    raise ValueError("VORTEX_CACHE_SIZE deve ser pelo menos 1")
