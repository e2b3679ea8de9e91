# apps/center/__init__.py

"""
Center - Centro de Drinfeld, centros plenos e álgebras comutativas em Z(C)

Contém:
- Ambiente Z(C): objetos com meia-trança e morfismos que a entrelaçam
- Cálculo de Z(C) por indução e cisão de End
- Centro pleno Z(A) pela propriedade terminal, com auditorias
- α-indução, módulos locais e teste lagrangiano
- Exportação de _A C_A como nova categoria
"""

default_app_config = 'apps.center.apps.CenterConfig'
