# tests/test_homs.py

import pytest

from apps.algebras.laws import check_algebra
from apps.algebras.models import Algebra, Module
from apps.algebras.modules import simple_modules
from apps.core.models import Mor
from apps.homs.ends import end_over, full_center_end, ihom_end_diagram
from apps.homs.internal import (
    adjunction_dims,
    composition_associativity,
    convention_check,
    endomorphism_algebra,
    hom_into,
    inhom_audit,
    internal_hom,
    mate_audit,
)


def _object_module(cat, label):
    x = cat.simple(label)
    return Module(Algebra.trivial(cat), x, Mor.identity(x), side='right', name=label)


class TestHomInterno:
    def test_sigma_sigma(self, ising):
        M = _object_module(ising, 'sigma')
        H = internal_hom(M.algebra, M, M)
        assert H.obj == ising.obj({'1': 1, 'psi': 1})
        assert H.multiplicities() == [1, 0, 1]

    def test_mates(self, ising):
        M = _object_module(ising, 'sigma')
        audit = mate_audit(internal_hom(M.algebra, M, M))
        assert audit['residual'] < 1e-9
        assert audit['unique'] == 1.0

    def test_adjuncao(self, fib):
        M = _object_module(fib, 'tau')
        for left, right in adjunction_dims(internal_hom(M.algebra, M, M)):
            assert left == right

    def test_base_por_partes(self, ising):
        M = _object_module(ising, 'sigma')
        H = internal_hom(M.algebra, M, M)
        amb = H.ambient
        for a in amb.simple_objects():
            basis = hom_into(H, a)
            assert len(basis) == len(amb.hom_basis(a, H.carrier))
            assert all(f.dst == H.obj for f in basis)

    def test_algebra_de_endomorfismos(self, ising):
        A = endomorphism_algebra(ising, ising.simple('sigma'))
        assert A.name == '[sigma,sigma]'
        assert A.obj == ising.obj({'1': 1, 'psi': 1})
        assert check_algebra(A).passed

    def test_composicao_associativa(self, ising):
        M = _object_module(ising, 'sigma')
        H = internal_hom(M.algebra, M, M)
        assert composition_associativity(H, H, H, H, H, H) < 1e-9

    def test_convencao(self, fib):
        M = _object_module(fib, 'tau')
        obtained, expected, agree = convention_check(M.algebra, M, M)
        assert agree
        assert obtained == expected

    @pytest.mark.slow
    def test_hom_no_centro(self, vecz2):
        M = _object_module(vecz2, 'g')
        invariants, module_maps = inhom_audit(M, M)
        assert invariants == module_maps == 1


class TestFins:
    def test_vecz2(self, vecz2):
        result = full_center_end(Algebra.trivial(vecz2))
        assert result.obj == vecz2.obj({'1': 2})
        assert result.naturality < 1e-9

    def test_ising(self, ising):
        result = full_center_end(Algebra.trivial(ising))
        assert result.obj == ising.obj({'1': 3, 'psi': 1})
        assert result.obj == result.expected

    def test_diagrama_inclui_somas(self, fib):
        A = Algebra.trivial(fib)
        diagram = ihom_end_diagram(A, simple_modules(A))
        assert diagram.simple_count == 2
        assert len(diagram.diagonal) == 3
        assert len(diagram.constraints) == 4
        assert end_over(diagram).obj == fib.obj({'1': 2, 'tau': 1})
