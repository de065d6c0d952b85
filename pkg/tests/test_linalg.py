import pytest

from hopfgalois import _modp_py
from hopfgalois.fields import QQ, PrimeField
from hopfgalois.linalg import (Matrix, NoSolution, basis_vec, kron_vec,
                               perm_legs)

F2 = PrimeField(2)
F5 = PrimeField(5)


def test_kernel_f2_oracle():
    # frozen oracle: ker [[1,1],[1,1]] over F_2 is spanned by (1,1)
    m = Matrix(F2, 2, 2, [1, 1, 1, 1])
    ker = m.kernel()
    assert ker == [[1, 1]]


def test_inverse_f5_oracle():
    m = Matrix(F5, 1, 1, [2])
    assert m.invert() == Matrix(F5, 1, 1, [3])


def test_rref_deterministic():
    m = Matrix(QQ, 3, 3, [QQ.parse(x) for x in
                          ["2", "4", "1", "1", "2", "0", "0", "0", "3"]])
    r1, p1 = m.rref()
    r2, p2 = m.rref()
    assert r1 == r2 and p1 == p2
    assert p1 == [0, 2]


def test_solve_and_no_solution():
    m = Matrix(QQ, 2, 2, [QQ.parse(x) for x in ["1", "1", "2", "2"]])
    assert m.solve([QQ.parse("3"), QQ.parse("6")])[0] is not None
    with pytest.raises(NoSolution):
        m.solve([QQ.one, QQ.zero])


def test_kron_and_apply():
    a = Matrix(QQ, 2, 2, [QQ.parse(x) for x in ["1", "2", "3", "4"]])
    v = [QQ.parse("1"), QQ.parse("-1")]
    w = [QQ.parse("2"), QQ.parse("0")]
    # (A (x) A)(v (x) w) = Av (x) Aw
    lhs = a.kron(a).apply(kron_vec(QQ, v, w))
    rhs = kron_vec(QQ, a.apply(v), a.apply(w))
    assert lhs == rhs


def test_perm_legs_swap():
    sw = perm_legs(QQ, (2, 3), (1, 0))
    v = [QQ.from_int(i) for i in range(6)]
    out = sw.apply(v)
    # entry (j, i) of the swapped tensor equals entry (i, j) of the original
    for i in range(2):
        for j in range(3):
            assert out[j * 2 + i] == v[i * 3 + j]


def test_backends_agree():
    try:
        from hopfgalois import _modp_fast
    except ImportError:
        pytest.skip("compiled backend unavailable")
    import random
    rng = random.Random(1)
    n, p = 17, 3
    a = [rng.randrange(p) for _ in range(n * n)]
    b = [rng.randrange(p) for _ in range(n * n)]
    assert list(_modp_fast.matmul_modp(a, n, n, b, n, n, p)) == \
        list(_modp_py.matmul_modp(a, n, n, b, n, n, p))
    rf, pf = _modp_fast.rref_modp(list(a), n, n, p)
    rp, pp = _modp_py.rref_modp(list(a), n, n, p)
    assert list(rf) == list(rp) and list(pf) == list(pp)


def test_left_inverse():
    m = Matrix(QQ, 3, 2, [QQ.parse(x) for x in
                          ["1", "0", "0", "1", "1", "1"]])
    li = m.left_inverse()
    assert li @ m == Matrix.identity(QQ, 2)


def test_basis_vec():
    assert basis_vec(QQ, 3, 1) == [QQ.zero, QQ.one, QQ.zero]
