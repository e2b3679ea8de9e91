# apps/braided/__init__.py

"""
Braided - Álgebras num ambiente trançado

Contém:
- Produto de álgebras, centros à esquerda e à direita
- Produto relativo sobre uma álgebra comutativa de Z(C)
- Busca de isomorfismos, Aut, Pic e teste de Morita
- Verificação da fórmula de fusão do funtor centro pontuado
"""

default_app_config = 'apps.braided.apps.BraidedConfig'
