# apps/core/exceptions.py

"""
Hierarquia de erros do domínio.

Os comandos de gerenciamento traduzem estes erros em códigos de saída:
StructuralError -> 2, VerificationError -> 1.
"""

from typing import Dict, Optional


class TensorCategoryError(Exception):
    """Erro base de todas as computações categóricas"""

    def __init__(self, message: str, details: Optional[Dict] = None):
        super().__init__(message)
        self.details = details or {}


class StructuralError(TensorCategoryError):
    """Dados malformados: tupla F ausente, bloco com forma errada, campo inválido"""

    def __init__(self, message: str, path: Optional[str] = None, details: Optional[Dict] = None):
        super().__init__(message if path is None else f"{path}: {message}", details)
        self.path = path


class SingularityError(TensorCategoryError):
    """Matriz que deveria ser invertível não é (F-matrix, meia-trança)"""


class UnsupportedError(TensorCategoryError):
    """Entrada fora do escopo suportado (não esférica, não separável, ...)"""


class SplittingError(TensorCategoryError):
    """Idempotente cujo espectro não pode ser arredondado para {0, 1}"""


class VerificationError(TensorCategoryError):
    """Uma verificação estrutural falhou; carrega o resíduo encontrado"""

    def __init__(self, message: str, residual: float = float('nan'), details: Optional[Dict] = None):
        super().__init__(f"{message} (resíduo={residual:.3e})", details)
        self.residual = residual
