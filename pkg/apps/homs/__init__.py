# apps/homs/__init__.py

"""
Homs - Homs internos em C e em Z(C)

Contém:
- [x,y] com a avaliação ev e mates únicos
- Estruturas de álgebra em [x,x] e de bimódulo em [x,y]
- Fins sobre categorias semissimples apresentadas por simples
"""

default_app_config = 'apps.homs.apps.HomsConfig'
