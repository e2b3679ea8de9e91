# apps/__init__.py

"""
Vortex Center - Aplicações Django

Este pacote contém todas as aplicações do sistema:
- core: Categorias de fusão, morfismos em blocos, árvores de fusão e validação
- algebras: Álgebras, módulos, bimódulos e produto tensorial relativo
- homs: Homs internos e fins
- center: Centro de Drinfeld, centros plenos, α-indução e módulos locais
- braided: Álgebras trançadas, Pic/Aut, Morita e a fórmula de fusão
- relatorios: Arquivos, relatórios (texto, JSON, PDF, XLSX) e comandos
"""

__version__ = '0.1.0'
__author__ = 'Equipe Vórtex'
