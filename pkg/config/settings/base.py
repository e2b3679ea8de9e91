# config/settings/base.py

import environ
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Configuração do django-environ
env = environ.Env(
    DEBUG=(bool, False),
    VORTEX_TOLERANCE=(float, 1e-9),
    VORTEX_SNAP=(float, 1e-6),
    VORTEX_SEED=(int, 20240917),
    VORTEX_ISO_RETRIES=(int, 8),
    VORTEX_WORKERS=(int, 1),
    VORTEX_CACHE_SIZE=(int, 512),
)

# Lê o arquivo env_vortex.txt se existir
environ.Env.read_env(BASE_DIR / 'env_vortex.txt')

# === CONFIGURAÇÕES BÁSICAS ===

SECRET_KEY = env('SECRET_KEY', default='vortex-center-sem-superficie-web')

DEBUG = env('DEBUG', default=False)

ALLOWED_HOSTS = []

# === APLICAÇÕES ===

DJANGO_APPS = []

LOCAL_APPS = [
    'apps.core',
    'apps.algebras',
    'apps.homs',
    'apps.center',
    'apps.braided',
    'apps.relatorios',
]

INSTALLED_APPS = DJANGO_APPS + LOCAL_APPS

# Sem banco de dados e sem URLs: tudo roda por comandos de gerenciamento
DATABASES = {}

USE_TZ = True
LANGUAGE_CODE = 'pt-br'
TIME_ZONE = 'America/Sao_Paulo'

# === LOGGING ===

LOG_DIR = Path(env('VORTEX_LOG_DIR', default=str(BASE_DIR / 'logs')))

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'file': {
            'level': 'INFO',
            'class': 'logging.FileHandler',
            'filename': LOG_DIR / 'vortex.log',
            'formatter': 'verbose',
        },
        # StreamHandler escreve em stderr; stdout fica reservado aos relatórios
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'root': {
        'handlers': ['console', 'file'],
        'level': 'INFO',
    },
    'loggers': {
        'django': {
            'handlers': ['file'],
            'level': 'INFO',
            'propagate': False,
        },
        'apps': {
            'handlers': ['console', 'file'],
            'level': 'INFO',
            'propagate': False,
        },
    },
}

# Criar pasta de logs se não existir
LOG_DIR.mkdir(parents=True, exist_ok=True)

# === CONFIGURAÇÕES DO VORTEX CENTER ===

VORTEX_CENTER = {
    # Tolerância padrão das verificações; --tol sobrepõe por execução
    'TOLERANCE': env('VORTEX_TOLERANCE'),
    # Arredondamento de espectros de idempotentes para {0, 1}
    'SNAP': env('VORTEX_SNAP'),
    'SEED': env('VORTEX_SEED'),
    # Sementes tentadas pela busca numérica de isomorfismos
    'ISO_RETRIES': env('VORTEX_ISO_RETRIES'),
    'WORKERS': env('VORTEX_WORKERS'),
    # Entradas por cache de associadores, tranças e produtos no centro
    'CACHE_SIZE': env('VORTEX_CACHE_SIZE'),
    'DATA_DIR': BASE_DIR / 'data',
    'REPORT_FORMAT': env('VORTEX_REPORT_FORMAT', default='text'),
}
