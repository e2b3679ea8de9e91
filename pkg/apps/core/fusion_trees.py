# apps/core/fusion_trees.py

"""
Bases de árvores de fusão e F-moves.

Um parentesamento é uma tupla aninhada de posições da palavra, por exemplo
((0, 1), 2) para o padrão aninhado à esquerda de três letras.
"""

from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from .category import FusionCategory, Tree
from .exceptions import StructuralError
from .models import FusionTreeBasis, Mor, Obj

Bracketing = Union[int, Tuple['Bracketing', 'Bracketing']]


def left_nested(n: int) -> Bracketing:
    if n < 1:
        raise StructuralError("palavra vazia não tem parentesamento")
    tree: Bracketing = 0
    for i in range(1, n):
        tree = (tree, i)
    return tree


def right_nested(n: int) -> Bracketing:
    tree: Bracketing = n - 1
    for i in range(n - 2, -1, -1):
        tree = (i, tree)
    return tree


def _leaves(bracketing: Bracketing) -> List[int]:
    if isinstance(bracketing, int):
        return [bracketing]
    return _leaves(bracketing[0]) + _leaves(bracketing[1])


def word_tree(cat: FusionCategory, word: Sequence[int], bracketing: Bracketing) -> Tree:
    """Árvore de objetos simples da palavra segundo o parentesamento"""
    if isinstance(bracketing, int):
        return cat.simple(word[bracketing])
    return (word_tree(cat, word, bracketing[0]), word_tree(cat, word, bracketing[1]))


def _labels(cat: FusionCategory, word: Sequence[int], bracketing: Bracketing, target: int) -> list:
    """Rótulos das cópias de `target` na ordem do motor"""
    if isinstance(bracketing, int):
        return [()] if word[bracketing] == target else []
    left, right = bracketing
    found = []
    for a in range(cat.rank):
        labels_a = _labels(cat, word, left, a)
        if not labels_a:
            continue
        for b in range(cat.rank):
            n = cat.N[a, b, target]
            if not n:
                continue
            labels_b = _labels(cat, word, right, b)
            for la in labels_a:
                for lb in labels_b:
                    for mu in range(n):
                        found.append(((a, la), (b, lb), mu))
    return found


def _flatten_label(label) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(intermediários em pré-ordem, multiplicidades em pré-ordem)"""
    if label == ():
        return (), ()
    (a, la), (b, lb), mu = label
    ia, ma = _flatten_label(la)
    ib, mb = _flatten_label(lb)
    inter = ((a,) if la != () else ()) + ia + ((b,) if lb != () else ()) + ib
    return inter, (mu,) + ma + mb


def hom_basis(cat: FusionCategory, word: Sequence, target,
              bracketing: Optional[Bracketing] = None) -> FusionTreeBasis:
    """Base de Hom(w_0 ⊗ ... ⊗ w_{n-1}, t) no parentesamento dado (padrão: à esquerda)"""
    word_idx = tuple(cat.data.index(w) for w in word)
    t = cat.data.index(target)
    bracketing = left_nested(len(word_idx)) if bracketing is None else bracketing
    if sorted(_leaves(bracketing)) != list(range(len(word_idx))):
        raise StructuralError(f"parentesamento {bracketing} não cobre a palavra")
    labels = tuple(_flatten_label(lab) for lab in _labels(cat, word_idx, bracketing, t))
    expected = cat.tree_obj(word_tree(cat, word_idx, bracketing))[t]
    if len(labels) != expected:
        raise StructuralError(f"base com {len(labels)} árvores, esperado {expected}")
    return FusionTreeBasis(word=word_idx, target=t, labels=labels)


def f_move(cat: FusionCategory, mor: Mor, word: Sequence, src: Bracketing, dst: Bracketing) -> Mor:
    """
    Reexpressa um morfismo com destino na palavra parentesada por `src`
    na base do parentesamento `dst`.
    """
    word_idx = tuple(cat.data.index(w) for w in word)
    src_tree = word_tree(cat, word_idx, src)
    if cat.tree_obj(src_tree) != mor.dst:
        raise StructuralError("morfismo não termina na palavra parentesada")
    return cat.rebracket(src_tree, word_tree(cat, word_idx, dst)) @ mor


def f_move_matrix(cat: FusionCategory, word: Sequence, target, src: Bracketing = None,
                  dst: Bracketing = None) -> np.ndarray:
    """
    Matriz de mudança de base de árvores (linhas: árvores de `dst`).

    Para três letras e parentesamentos padrão, é a transposta de F^{abc}_d.
    """
    word_idx = tuple(cat.data.index(w) for w in word)
    t = cat.data.index(target)
    src = left_nested(len(word_idx)) if src is None else src
    dst = right_nested(len(word_idx)) if dst is None else dst
    mor = cat.rebracket(word_tree(cat, word_idx, src), word_tree(cat, word_idx, dst))
    return mor.blocks[t]


def basis_vectors(cat: FusionCategory, word: Sequence, target, bracketing: Bracketing = None) -> Mor:
    """Morfismo t^{⊕n} → palavra cujas colunas são os vetores da base de árvores"""
    word_idx = tuple(cat.data.index(w) for w in word)
    t = cat.data.index(target)
    bracketing = left_nested(len(word_idx)) if bracketing is None else bracketing
    obj = cat.tree_obj(word_tree(cat, word_idx, bracketing))
    src = Obj.simple(cat.rank, t, obj[t])
    blocks = tuple(np.eye(obj[c], dtype=complex) if c == t else np.zeros((obj[c], 0), dtype=complex)
                   for c in range(cat.rank))
    return Mor(src, obj, blocks)
