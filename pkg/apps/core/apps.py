# apps/core/apps.py

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class CoreConfig(AppConfig):
    """Configuração da app Core"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.core'
    verbose_name = 'Core - Categorias de fusão'

    def ready(self):
        from .conf import get_config

        logger.debug(f"Core App inicializada (tolerância {get_config('TOLERANCE')})")
