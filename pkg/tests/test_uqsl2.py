import pytest

from src.algebra.qarith import root_power
from src.errors import DomainError
from src.oracle.uqsl2 import (
    RANK_ONE_SUBALGEBRAS, Subalgebra, algebra, antipode, characters, comultiply, counit,
    dual_unit, is_central_dual, is_hopf_subalgebra, quotient_dim, torus_character, triple_subalgebra,
)


@pytest.fixture(params=[3, 5])
def alg(request):
    return algebra(request.param)


def test_dimension(alg):
    assert alg.dim == alg.ell ** 3


def test_defining_relations(alg):
    ell = alg.ell
    e = root_power(ell, 1)
    E, F, K = alg.E, alg.F, alg.K
    Kinv = alg.monomial(0, ell - 1, 0)
    assert K * Kinv == alg.one()
    assert K * E == (E * K) * (e ** 2)
    assert K * F == (F * K) * (e ** -2)
    assert E * F - F * E == (K - Kinv) * (e - e.inverse()).inverse()
    assert (E ** ell).is_zero()
    assert (F ** ell).is_zero()
    assert K ** ell == alg.one()
    assert not (E ** (ell - 1)).is_zero()


def test_pbw_normal_order(alg):
    x = alg.monomial(2, 1, 1)
    assert set(x.coeffs) == {(2, 1, 1)}
    assert alg.F * alg.F * alg.K * alg.E == x


def test_coproduct_of_generators():
    alg = algebra(3)
    one = alg.one_c
    assert comultiply(alg.E) == {(0, 0, 1, 0, 0, 0): one, (0, 1, 0, 0, 0, 1): one}
    assert comultiply(alg.F) == {(0, 0, 0, 1, 0, 0): one, (1, 0, 0, 0, 2, 0): one}
    assert comultiply(alg.K) == {(0, 1, 0, 0, 1, 0): one}


def test_counit_and_antipode():
    alg = algebra(3)
    assert counit(alg.K) == 1
    assert counit(alg.E).is_zero()
    assert counit(alg.one() + alg.F) == 1
    Kinv = alg.monomial(0, 2, 0)
    assert antipode(alg.E) == -(Kinv * alg.E)
    assert antipode(alg.F) == -(alg.F * alg.K)
    assert antipode(alg.K) == Kinv


def test_coproduct_is_multiplicative_on_generators():
    alg = algebra(5)
    E, F = alg.E, alg.F
    lhs = alg.coproduct_vec((E * F).vec)
    rhs = alg.mul_tensor(alg.coproduct_vec(E.vec), alg.coproduct_vec(F.vec))
    assert lhs == rhs


def test_exponent_range():
    with pytest.raises(DomainError):
        algebra(3).monomial(3, 0, 0)
    with pytest.raises(DomainError):
        algebra(4)


@pytest.mark.parametrize("name,plus,minus", RANK_ONE_SUBALGEBRAS)
def test_rank_one_subalgebras_are_hopf(name, plus, minus):
    sub = Subalgebra.rank_one(3, plus, minus)
    assert sub.name == name
    assert is_hopf_subalgebra(sub)
    assert sub.dim == 3 ** (1 + int(plus) + int(minus))


def test_group_algebra_of_trivial_group():
    sub = Subalgebra(3, False, False, frozenset({0}))
    assert is_hopf_subalgebra(sub)
    assert not is_hopf_subalgebra(Subalgebra(3, True, True, frozenset({0})))


@pytest.mark.parametrize("plus,minus,count", [
    (False, False, 3), (True, False, 3), (False, True, 3), (True, True, 1),
])
def test_character_counts(plus, minus, count):
    chars = characters(plus, minus, 3)
    assert len(chars) == count
    assert dual_unit(Subalgebra.rank_one(3, plus, minus)) in chars


def test_borel_characters_are_not_central():
    sub = Subalgebra.rank_one(3, True, False)
    assert is_central_dual(torus_character(sub, 0), sub)
    assert not is_central_dual(torus_character(sub, 1), sub)


def test_torus_quotients():
    sub = Subalgebra.rank_one(3, False, False)
    unit = dual_unit(sub)
    assert quotient_dim(sub, []) == 3
    assert quotient_dim(sub, [torus_character(sub, 1) - unit]) == 1


def test_triple_subalgebra():
    from src.algebra.abelian import FinAbGroup, Subgroup
    T = FinAbGroup.torus(3, 1)
    sub = triple_subalgebra(3, Subgroup.trivial(T), set(), set())
    assert sub.basis() == (0,)
    assert triple_subalgebra(3, Subgroup.full(T), {1}, set()).name == "borel+"
    with pytest.raises(DomainError):
        triple_subalgebra(5, Subgroup.full(T), set(), set())
