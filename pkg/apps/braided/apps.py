# apps/braided/apps.py

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class BraidedConfig(AppConfig):
    """Configuração da app Braided"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.braided'
    verbose_name = 'Álgebras trançadas'

    def ready(self):
        logger.debug("Braided App inicializada")
