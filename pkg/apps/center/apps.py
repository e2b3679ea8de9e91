# apps/center/apps.py

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class CenterConfig(AppConfig):
    """Configuração da app Center"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.center'
    verbose_name = 'Centro de Drinfeld'

    def ready(self):
        logger.debug("Center App inicializada")
