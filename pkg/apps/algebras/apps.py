# apps/algebras/apps.py

import logging

from django.apps import AppConfig

logger = logging.getLogger(__name__)


class AlgebrasConfig(AppConfig):
    """Configuração da app Algebras"""

    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.algebras'
    verbose_name = 'Álgebras e módulos'

    def ready(self):
        logger.debug("Algebras App inicializada")
