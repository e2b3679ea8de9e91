# apps/core/__init__.py

"""
Core - Categorias de fusão e infraestrutura comum do vortex-center

Contém:
- Objetos e morfismos como vetores de multiplicidade e blocos de matrizes
- FusionCategory com símbolos F, R e estrutura pivotal
- Validação das equações de coerência (pentágono, hexágono, triângulo)
- Configuração VORTEX_CENTER e hierarquia de exceções
"""

default_app_config = 'apps.core.apps.CoreConfig'
