import pytest

from hopfgalois.comodule import BModule, regular_bmodule
from hopfgalois.fields import QQ, PrimeField
from hopfgalois.fixtures import (cp_fixture, cyclic_cayley,
                                 dual_group_algebra, graded_m2, group_algebra,
                                 regular_comodule, sweedler_h4, trivial_kxk)
from hopfgalois.linalg import Matrix

F3 = PrimeField(3)
F5 = PrimeField(5)


@pytest.fixture
def kc2_q():
    h = group_algebra(QQ, cyclic_cayley(2), ["1", "g"])
    return regular_comodule(h)


@pytest.fixture
def kc2_f3():
    h = group_algebra(F3, cyclic_cayley(2), ["1", "g"])
    return regular_comodule(h)


@pytest.fixture
def kc4_q():
    h = group_algebra(QQ, cyclic_cayley(4))
    return regular_comodule(h)


@pytest.fixture
def dual_kc2_q():
    h = dual_group_algebra(QQ, cyclic_cayley(2), ["p0", "p1"])
    return regular_comodule(h)


@pytest.fixture
def h4_q():
    return regular_comodule(sweedler_h4(QQ))


@pytest.fixture
def h4_f5():
    return regular_comodule(sweedler_h4(F5))


@pytest.fixture
def m2_q():
    return graded_m2(QQ)


@pytest.fixture
def m2_f3():
    return graded_m2(F3)


@pytest.fixture
def cp_minus1():
    return cp_fixture(QQ, QQ.from_int(-1))


@pytest.fixture
def cp2():
    return cp_fixture(QQ, QQ.from_int(2))


@pytest.fixture
def cp4():
    return cp_fixture(QQ, QQ.from_int(4))


@pytest.fixture
def kxk_q():
    return trivial_kxk(QQ)


@pytest.fixture
def kxk_f3():
    return trivial_kxk(F3)


def character_module(ca, values):
    """M = k as a B-module via the algebra character b_i -> values[i]."""
    b = ca.coinvariants()
    f = ca.field
    actions = [Matrix(f, 1, 1, [v]) for v in values]
    m = BModule(b, 1, actions)
    assert m.validate().passed
    return m


def module_k(ca):
    """M = k via the first-coordinate character of B (works for the shipped
    fixtures, whose coinvariants are spanned by orthogonal idempotents or 1)."""
    b = ca.coinvariants()
    f = ca.field
    if b.dim == 1:
        # B = k.1; scale by the coefficient making the unit act as 1
        c = b.algebra.unit[0]
        return character_module(ca, [f.inv(c)])
    return character_module(ca, [f.one if i == 0 else f.zero
                                 for i in range(b.dim)])


def module_b(ca):
    return regular_bmodule(ca)
