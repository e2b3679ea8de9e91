# config/settings/development.py

from .base import *

# === DESENVOLVIMENTO ===

DEBUG = True

# === LOGGING MAIS VERBOSO ===

LOGGING['handlers']['console']['level'] = env('VORTEX_CONSOLE_LEVEL', default='INFO')
LOGGING['handlers']['file']['level'] = 'DEBUG'
LOGGING['root']['level'] = 'DEBUG'
LOGGING['loggers']['apps']['level'] = 'DEBUG'
