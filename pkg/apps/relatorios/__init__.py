# apps/relatorios/__init__.py

"""
Relatórios - Arquivos, linha de comando e relatórios do vortex-center

Funcionalidades:
- Leitura e escrita canônica de categorias e álgebras (JSON)
- Comandos de gerenciamento (validate, center, full-center, ...)
- Relatórios em texto, JSON versionado, PDF (ReportLab) e Excel
"""

default_app_config = 'apps.relatorios.apps.RelatoriosConfig'
