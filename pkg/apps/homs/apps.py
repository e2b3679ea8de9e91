# apps/homs/apps.py

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class HomsConfig(AppConfig):
    """Configuração da app Homs"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.homs'
    verbose_name = 'Homs internos e fins'

    def ready(self):
        logger.debug("Homs App inicializada")
