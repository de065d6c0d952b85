"""Built-in comodule-algebra fixtures used by the tests and the CLI.

The same objects are also shipped as JSON data (see fixtures/); the
constructors here are the source of truth for both.
"""

from .comodule import ComoduleAlgebraData
from .hopf import (BadCharacteristic, CoalgebraData, HopfAlgebraData, Matrix,
                   StructureConstantAlgebra, cyclic_cayley, dual_group_algebra,
                   group_algebra, sweedler_h4)
from .linalg import basis_vec, kron_vec

__all__ = [
    "group_algebra", "dual_group_algebra", "sweedler_h4", "cyclic_cayley",
    "regular_comodule", "trivial_coaction", "graded_m2", "trivial_kxk",
    "cp_fixture",
]


def regular_comodule(hopf):
    """A = H with rho = Delta: the standard Galois extension of k."""
    return ComoduleAlgebraData(hopf, hopf.algebra, hopf.coalgebra.comul)


def trivial_coaction(hopf, algebra):
    """rho(a) = a (x) 1; coinvariants are all of A (never Galois unless H = k)."""
    f = algebra.field
    cols = [kron_vec(f, basis_vec(f, algebra.dim, j), hopf.algebra.unit)
            for j in range(algebra.dim)]
    rho = Matrix.from_cols(f, cols, nrows=algebra.dim * hopf.dim)
    return ComoduleAlgebraData(hopf, algebra, rho)


def trivial_kxk(field):
    """Negative fixture: k x k with trivial kC_2-coaction (not Galois, not cleft)."""
    h = group_algebra(field, cyclic_cayley(2), ["1", "g"])
    a = dual_group_algebra(field, cyclic_cayley(2), ["p0", "p1"]).algebra
    return trivial_coaction(h, a)


def graded_m2(field):
    """M_2(k) graded by C_2: diagonal in degree e, antidiagonal in degree g.

    Basis order e11, e12, e21, e22.  Coinvariants are the diagonal k x k.
    """
    h = group_algebra(field, cyclic_cayley(2), ["1", "g"])
    one, zero = field.one, field.zero
    n = 4
    labels = ["e11", "e12", "e21", "e22"]
    idx = {(0, 0): 0, (0, 1): 1, (1, 0): 2, (1, 1): 3}
    mul = Matrix.zeros(field, n, n * n)
    for (i, j), a in idx.items():
        for (k, l), b in idx.items():
            if j == k:
                mul.data[idx[(i, l)] * n * n + a * n + b] = one
    unit = [one, zero, zero, one]
    alg = StructureConstantAlgebra(field, n, mul, unit, labels)
    # degree of e_ij is (i + j) mod 2 in C_2
    rho = Matrix.zeros(field, n * 2, n)
    for (i, j), a in idx.items():
        rho.data[(a * 2 + (i + j) % 2) * n + a] = one
    return ComoduleAlgebraData(h, alg, rho)


def cp_fixture(field, c):
    """CP(c) = k[x]/(x^2 - c) as a kC_2-comodule algebra; basis 1, x with
    deg x = g.  Galois iff c is invertible; cleft for every such c, smash
    iff c is a square."""
    if c == field.zero:
        raise ValueError("c must be nonzero")
    h = group_algebra(field, cyclic_cayley(2), ["1", "g"])
    one, zero = field.one, field.zero
    mul = Matrix.zeros(field, 2, 4)
    mul.data[0 * 4 + 0] = one        # 1*1 = 1
    mul.data[1 * 4 + 1] = one        # 1*x = x
    mul.data[1 * 4 + 2] = one        # x*1 = x
    mul.data[0 * 4 + 3] = c          # x*x = c
    alg = StructureConstantAlgebra(field, 2, mul, [one, zero], ["1", "x"])
    rho = Matrix.zeros(field, 4, 2)
    rho.data[0 * 2 + 0] = one        # 1 -> 1 (x) 1
    rho.data[3 * 2 + 1] = one        # x -> x (x) g
    return ComoduleAlgebraData(h, alg, rho)
