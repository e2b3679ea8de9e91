#!/usr/bin/env python
"""
Django's command-line utility for administrative tasks.

Vortex Center - centro de Drinfeld pontuado
"""

import os
import sys

# Verbos com hífen na linha de comando; os módulos de comando usam sublinhado
HYPHENATED = {
    'full-center',
    'algebra-check',
    'aut-center',
    'verify-formula',
    'verify-exactalg',
    'export-dual-category',
}


def main():
    """Run administrative tasks."""

    # Configuração padrão para desenvolvimento
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings.development')

    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc

    argv = list(sys.argv)
    if len(argv) > 1 and argv[1] in HYPHENATED:
        argv[1] = argv[1].replace('-', '_')

    execute_from_command_line(argv)


if __name__ == '__main__':
    main()
