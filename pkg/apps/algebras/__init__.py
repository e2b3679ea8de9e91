# apps/algebras/__init__.py

"""
Algebras - Álgebras, módulos e bimódulos numa categoria de fusão

Contém:
- Algebra, Module, Bimodule como tensores de coeficientes
- Verificação de leis, separabilidade e simplicidade
- Enumeração de módulos e bimódulos simples por cisão de idempotentes
- Produto tensorial relativo x ⊗_A y e módulos duais
"""

default_app_config = 'apps.algebras.apps.AlgebrasConfig'
