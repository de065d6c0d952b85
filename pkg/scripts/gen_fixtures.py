#!/usr/bin/env python3
"""Regenerate the JSON fixture bundles shipped in src/hopfgalois/fixtures/.

The Python constructors in hopfgalois.fixtures are the source of truth; this
script just serializes them so the CLI has stable on-disk inputs.
"""

import pathlib

from hopfgalois import io_json
from hopfgalois.comodule import regular_bmodule
from hopfgalois.fields import QQ, PrimeField
from hopfgalois.fixtures import (cp_fixture, cyclic_cayley,
                                 dual_group_algebra, graded_m2, group_algebra,
                                 regular_comodule, sweedler_h4, trivial_kxk)
from hopfgalois.linalg import Matrix

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "hopfgalois" / "fixtures"


def bundle(field):
    return io_json.WorkspaceBundle(field)


def add_ca(b, hname, hopf, cname, ca):
    b.hopf_algebras[hname] = hopf
    ca.hopf_name = hname
    b.comodule_algebras[cname] = ca
    return ca


def kc2_regular(field):
    b = bundle(field)
    h = group_algebra(field, cyclic_cayley(2), ["1", "g"])
    add_ca(b, "kC2", h, "regular", regular_comodule(h))
    return b


def kc4_regular(field):
    b = bundle(field)
    h = group_algebra(field, cyclic_cayley(4), ["1", "g", "g2", "g3"])
    add_ca(b, "kC4", h, "regular", regular_comodule(h))
    return b


def dual_kc2_regular(field):
    b = bundle(field)
    h = dual_group_algebra(field, cyclic_cayley(2), ["p0", "p1"])
    add_ca(b, "kC2_dual", h, "regular", regular_comodule(h))
    return b


def h4_regular(field):
    b = bundle(field)
    h = sweedler_h4(field)
    add_ca(b, "H4", h, "regular", regular_comodule(h))
    return b


def m2_graded(field):
    b = bundle(field)
    ca = graded_m2(field)
    add_ca(b, "kC2", ca.hopf, "m2_graded", ca)
    m = regular_bmodule(ca)
    m.ca_name = "m2_graded"
    b.modules["b_regular"] = m
    return b


def cp(field, c, name):
    b = bundle(field)
    ca = cp_fixture(field, c)
    add_ca(b, "kC2", ca.hopf, name, ca)
    return b


def trivial(field):
    b = bundle(field)
    ca = trivial_kxk(field)
    add_ca(b, "kC2", ca.hopf, "kxk_trivial", ca)
    return b


def cp_minus1_crossed(field):
    """Crossed-product data over B = k assembling to CP(-1)."""
    b = bundle(field)
    h = group_algebra(field, cyclic_cayley(2), ["1", "g"])
    b.hopf_algebras["kC2"] = h
    base = group_algebra(field, cyclic_cayley(1), ["1"]).algebra
    one = field.one
    omega = Matrix.zeros(field, 1, 2)   # h . b = eps(h) b
    omega.data[0] = one
    omega.data[1] = one
    sigma = Matrix.zeros(field, 1, 4)   # sigma(g,g) = -1, normalized
    sigma.data[0] = one
    sigma.data[1] = one
    sigma.data[2] = one
    sigma.data[3] = field.neg(one)
    b.crossed_products["cp_minus1_data"] = (base, h, omega, sigma, None, "kC2")
    return b


BUNDLES = {
    "kc2.json": lambda: kc2_regular(QQ),
    "kc4.json": lambda: kc4_regular(QQ),
    "dual_kc2.json": lambda: dual_kc2_regular(QQ),
    "h4.json": lambda: h4_regular(QQ),
    "h4_f5.json": lambda: h4_regular(PrimeField(5)),
    "m2_graded.json": lambda: m2_graded(QQ),
    "m2_graded_f3.json": lambda: m2_graded(PrimeField(3)),
    "cp_minus1.json": lambda: cp(QQ, QQ.from_int(-1), "cp_minus1"),
    "cp2.json": lambda: cp(QQ, QQ.from_int(2), "cp2"),
    "cp4.json": lambda: cp(QQ, QQ.from_int(4), "cp4"),
    "trivial_kxk.json": lambda: trivial(QQ),
    "trivial_kxk_f3.json": lambda: trivial(PrimeField(3)),
    "cp_minus1_crossed.json": lambda: cp_minus1_crossed(QQ),
}


def main():
    OUT.mkdir(exist_ok=True)
    for name, make in sorted(BUNDLES.items()):
        path = OUT / name
        io_json.dump_bundle(make(), path)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
