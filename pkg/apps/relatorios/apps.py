# apps/relatorios/apps.py

from django.apps import AppConfig


class RelatoriosConfig(AppConfig):
    """Configuração da app Relatórios"""

    name = 'apps.relatorios'
    verbose_name = 'Relatórios - Arquivos, CLI e Exports'

    def ready(self):
        """Comandos e renderizadores não têm estado global a registrar"""
        import logging
        logger = logging.getLogger(__name__)
        logger.debug("Relatorios App inicializada - ReportLab e xlsxwriter habilitados")
