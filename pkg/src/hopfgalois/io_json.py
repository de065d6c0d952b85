"""JSON bundle format: named Hopf algebras, comodule algebras, B-modules and
crossed-product data over one explicit ground field.

Schema (one file = one bundle):

    {
      "field": "Q" | "F_p",
      "hopf_algebras":     {name: {dim, labels?, mul, unit, comul, counit,
                                   antipode, antipode_inv?}},
      "comodule_algebras": {name: {hopf, dim, labels?, mul, unit, coaction}},
      "modules":           {name: {comodule_algebra, dim, actions}},
      "crossed_products":  {name: {hopf, base: {dim, labels?, mul, unit},
                                   omega, sigma, sigma_bar?}}
    }

Sparse encodings, all with scalars in the field's text format ("n"/"n/d" over
Q, "n mod p" over F_p):
  - 3-leg tensors (mul, comul, coaction, omega, sigma): [i, j, k, "coeff"]
    quadruples; for mul the entry is <e_i, e_j * e_k>, for comul
    <e_i (x) e_j, Delta(e_k)>, for coaction <e_i (x) f_j, rho(e_k)>, for
    omega <b_i, h_j . b_k>, for sigma <b_i, sigma(h_j (x) h_k)>.
  - matrices (antipode, module actions): [i, j, "coeff"] triples, entry (i,j).
  - vectors (unit, counit): dense lists of scalars.

All validators run eagerly on load; emit(load(x)) round-trips semantically.
"""

import json

from .cleft import build_crossed_product
from .comodule import BModule, ComoduleAlgebraData
from .fields import FieldError, field_from_name, field_name
from .hopf import (CoalgebraData, HopfAlgebraData, StructureConstantAlgebra,
                   validate_hopf)
from .linalg import Matrix


class ParseError(ValueError):
    def __init__(self, where, message):
        super().__init__(f"{where}: {message}")
        self.where = where


class ValidationError(ValueError):
    def __init__(self, where, axiom, witness=None):
        super().__init__(f"{where}: axiom {axiom!r} fails"
                         + (f" at {witness}" if witness is not None else ""))
        self.where = where
        self.axiom = axiom
        self.witness = witness


class WorkspaceBundle:
    def __init__(self, field):
        self.field = field
        self.hopf_algebras = {}
        self.comodule_algebras = {}
        self.modules = {}
        self.crossed_products = {}


# -- decoding ----------------------------------------------------------------


def _scalar(field, text, where):
    try:
        return field.parse(str(text))
    except FieldError as exc:
        raise ParseError(where, str(exc)) from exc


def _vector(field, data, length, where):
    if not isinstance(data, list) or len(data) != length:
        raise ParseError(where, f"expected a list of {length} scalars")
    return [_scalar(field, x, where) for x in data]


def _matrix(field, entries, rows, cols, where):
    m = Matrix.zeros(field, rows, cols)
    if not isinstance(entries, list):
        raise ParseError(where, "expected a list of [i, j, coeff] triples")
    for idx, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 3):
            raise ParseError(f"{where}[{idx}]", "expected [i, j, coeff]")
        i, j, c = entry
        if not (isinstance(i, int) and 0 <= i < rows
                and isinstance(j, int) and 0 <= j < cols):
            raise ParseError(f"{where}[{idx}]", f"index out of range ({i},{j})")
        m.data[i * cols + j] = _scalar(field, c, f"{where}[{idx}]")
    return m


def _tensor3(field, entries, d_out, d_in1, d_in2, where, kind):
    """kind 'mul': rows d_out, cols d_in1*d_in2 (entry i <- (j,k));
    kind 'split': rows d_out*d_in1, cols d_in2 (entry (i,j) <- k)."""
    if kind == "mul":
        rows, cols = d_out, d_in1 * d_in2
    else:
        rows, cols = d_out * d_in1, d_in2
    m = Matrix.zeros(field, rows, cols)
    if not isinstance(entries, list):
        raise ParseError(where, "expected a list of [i, j, k, coeff] entries")
    for idx, entry in enumerate(entries):
        if not (isinstance(entry, list) and len(entry) == 4):
            raise ParseError(f"{where}[{idx}]", "expected [i, j, k, coeff]")
        i, j, k, c = entry
        if not (isinstance(i, int) and 0 <= i < d_out
                and isinstance(j, int) and 0 <= j < d_in1
                and isinstance(k, int) and 0 <= k < d_in2):
            raise ParseError(f"{where}[{idx}]",
                             f"index out of range ({i},{j},{k})")
        if kind == "mul":
            m.data[i * cols + j * d_in2 + k] = _scalar(field, c,
                                                       f"{where}[{idx}]")
        else:
            m.data[(i * d_in1 + j) * cols + k] = _scalar(field, c,
                                                         f"{where}[{idx}]")
    return m


def _require(record, key, where):
    if key not in record:
        raise ParseError(where, f"missing field {key!r}")
    return record[key]


def _algebra(field, record, where):
    dim = _require(record, "dim", where)
    if not (isinstance(dim, int) and dim >= 0):
        raise ParseError(where, "dim must be a nonnegative integer")
    mul = _tensor3(field, _require(record, "mul", where), dim, dim, dim,
                   f"{where}.mul", "mul")
    unit = _vector(field, _require(record, "unit", where), dim,
                   f"{where}.unit")
    labels = record.get("labels")
    if labels is not None and (not isinstance(labels, list)
                               or len(labels) != dim):
        raise ParseError(f"{where}.labels", f"expected {dim} labels")
    return StructureConstantAlgebra(field, dim, mul, unit, labels)


def _hopf(field, record, where):
    alg = _algebra(field, record, where)
    dim = alg.dim
    comul = _tensor3(field, _require(record, "comul", where), dim, dim, dim,
                     f"{where}.comul", "split")
    counit = Matrix(field, 1, dim,
                    _vector(field, _require(record, "counit", where), dim,
                            f"{where}.counit"))
    coalg = CoalgebraData(field, dim, comul, counit)
    antipode = _matrix(field, _require(record, "antipode", where), dim, dim,
                       f"{where}.antipode")
    if "antipode_inv" in record:
        antipode_inv = _matrix(field, record["antipode_inv"], dim, dim,
                               f"{where}.antipode_inv")
    else:
        try:
            antipode_inv = antipode.invert()
        except Exception as exc:
            raise ParseError(f"{where}.antipode",
                             "antipode is not invertible") from exc
    hopf = HopfAlgebraData(alg, coalg, antipode, antipode_inv)
    report = validate_hopf(hopf)
    if not report.passed:
        raise ValidationError(where, *report.failures[0])
    return hopf


def load_bundle(path):
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(str(path), str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(str(path), f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError(str(path), "bundle must be a JSON object")
    field = None
    try:
        field = field_from_name(_require(raw, "field", str(path)))
    except FieldError as exc:
        raise ParseError(str(path), str(exc)) from exc
    bundle = WorkspaceBundle(field)
    for name, record in sorted(raw.get("hopf_algebras", {}).items()):
        bundle.hopf_algebras[name] = _hopf(field, record,
                                           f"hopf_algebras.{name}")
    for name, record in sorted(raw.get("comodule_algebras", {}).items()):
        where = f"comodule_algebras.{name}"
        href = _require(record, "hopf", where)
        if href not in bundle.hopf_algebras:
            raise ParseError(where, f"unknown hopf algebra {href!r}")
        hopf = bundle.hopf_algebras[href]
        alg = _algebra(field, record, where)
        coaction = _tensor3(field, _require(record, "coaction", where),
                            alg.dim, hopf.dim, alg.dim,
                            f"{where}.coaction", "split")
        ca = ComoduleAlgebraData(hopf, alg, coaction)
        report = ca.validate()
        if not report.passed:
            raise ValidationError(where, *report.failures[0])
        ca.hopf_name = href
        bundle.comodule_algebras[name] = ca
    for name, record in sorted(raw.get("modules", {}).items()):
        where = f"modules.{name}"
        cref = _require(record, "comodule_algebra", where)
        if cref not in bundle.comodule_algebras:
            raise ParseError(where, f"unknown comodule algebra {cref!r}")
        ca = bundle.comodule_algebras[cref]
        b = ca.coinvariants()
        dim = _require(record, "dim", where)
        actions_raw = _require(record, "actions", where)
        if not (isinstance(actions_raw, list) and len(actions_raw) == b.dim):
            raise ParseError(f"{where}.actions",
                             f"expected {b.dim} action matrices (one per "
                             f"coinvariant basis element)")
        actions = [_matrix(field, a, dim, dim, f"{where}.actions[{k}]")
                   for k, a in enumerate(actions_raw)]
        module = BModule(b, dim, actions)
        report = module.validate()
        if not report.passed:
            raise ValidationError(where, *report.failures[0])
        module.ca_name = cref
        bundle.modules[name] = module
    for name, record in sorted(raw.get("crossed_products", {}).items()):
        where = f"crossed_products.{name}"
        href = _require(record, "hopf", where)
        if href not in bundle.hopf_algebras:
            raise ParseError(where, f"unknown hopf algebra {href!r}")
        hopf = bundle.hopf_algebras[href]
        base = _algebra(field, _require(record, "base", where),
                        f"{where}.base")
        db, dh = base.dim, hopf.dim
        omega = _tensor3(field, _require(record, "omega", where),
                         db, dh, db, f"{where}.omega", "mul")
        sigma = _tensor3(field, _require(record, "sigma", where),
                         db, dh, dh, f"{where}.sigma", "mul")
        sigma_bar = None
        if "sigma_bar" in record:
            sigma_bar = _tensor3(field, record["sigma_bar"], db, dh, dh,
                                 f"{where}.sigma_bar", "mul")
        bundle.crossed_products[name] = (base, hopf, omega, sigma, sigma_bar,
                                         href)
    return bundle


def build_crossed(bundle, name):
    """Assemble the named crossed product (validating Prop 5.1 on the way)."""
    base, hopf, omega, sigma, sigma_bar, _ = bundle.crossed_products[name]
    return build_crossed_product(base, hopf, omega, sigma, sigma_bar)


# -- encoding ----------------------------------------------------------------


def _emit_vector(field, vec):
    return [field.format(x) for x in vec]


def _emit_matrix(field, m):
    out = []
    for i in range(m.rows):
        for j in range(m.cols):
            x = m.get(i, j)
            if x != field.zero:
                out.append([i, j, field.format(x)])
    return out


def _emit_tensor3(field, m, d_out, d_in1, d_in2, kind):
    out = []
    if kind == "mul":
        for i in range(d_out):
            for j in range(d_in1):
                for k in range(d_in2):
                    x = m.get(i, j * d_in2 + k)
                    if x != field.zero:
                        out.append([i, j, k, field.format(x)])
    else:
        for i in range(d_out):
            for j in range(d_in1):
                for k in range(d_in2):
                    x = m.get(i * d_in1 + j, k)
                    if x != field.zero:
                        out.append([i, j, k, field.format(x)])
    return out


def emit_algebra(field, alg):
    return {
        "dim": alg.dim,
        "labels": list(alg.labels),
        "mul": _emit_tensor3(field, alg.mul, alg.dim, alg.dim, alg.dim, "mul"),
        "unit": _emit_vector(field, alg.unit),
    }


def emit_hopf(field, hopf):
    record = emit_algebra(field, hopf.algebra)
    record.update({
        "comul": _emit_tensor3(field, hopf.coalgebra.comul,
                               hopf.dim, hopf.dim, hopf.dim, "split"),
        "counit": _emit_vector(field, hopf.coalgebra.counit.data),
        "antipode": _emit_matrix(field, hopf.antipode),
        "antipode_inv": _emit_matrix(field, hopf.antipode_inv),
    })
    return record


def emit_comodule_algebra(field, ca, hopf_name):
    record = emit_algebra(field, ca.algebra)
    record.update({
        "hopf": hopf_name,
        "coaction": _emit_tensor3(field, ca.coaction, ca.algebra.dim,
                                  ca.hopf.dim, ca.algebra.dim, "split"),
    })
    return record


def emit_module(field, module, ca_name):
    return {
        "comodule_algebra": ca_name,
        "dim": module.dim,
        "actions": [_emit_matrix(field, a) for a in module.actions],
    }


def emit_crossed(field, cp, hopf_name):
    db, dh = cp.base.dim, cp.hopf.dim
    return {
        "hopf": hopf_name,
        "base": emit_algebra(field, cp.base),
        "omega": _emit_tensor3(field, cp.omega, db, dh, db, "mul"),
        "sigma": _emit_tensor3(field, cp.sigma, db, dh, dh, "mul"),
        "sigma_bar": _emit_tensor3(field, cp.sigma_bar, db, dh, dh, "mul"),
    }


def emit_bundle(bundle):
    """Serialize a WorkspaceBundle back to the schema dict."""
    out = {"field": field_name(bundle.field)}
    if bundle.hopf_algebras:
        out["hopf_algebras"] = {
            name: emit_hopf(bundle.field, h)
            for name, h in sorted(bundle.hopf_algebras.items())}
    if bundle.comodule_algebras:
        out["comodule_algebras"] = {
            name: emit_comodule_algebra(bundle.field, ca,
                                        getattr(ca, "hopf_name", "hopf"))
            for name, ca in sorted(bundle.comodule_algebras.items())}
    if bundle.modules:
        out["modules"] = {
            name: emit_module(bundle.field, m, getattr(m, "ca_name", "ca"))
            for name, m in sorted(bundle.modules.items())}
    if bundle.crossed_products:
        out["crossed_products"] = {}
        for name, rec in sorted(bundle.crossed_products.items()):
            base, hopf, omega, sigma, sigma_bar, href = rec
            record = {
                "hopf": href,
                "base": emit_algebra(bundle.field, base),
                "omega": _emit_tensor3(bundle.field, omega, base.dim,
                                       hopf.dim, base.dim, "mul"),
                "sigma": _emit_tensor3(bundle.field, sigma, base.dim,
                                       hopf.dim, hopf.dim, "mul"),
            }
            if sigma_bar is not None:
                record["sigma_bar"] = _emit_tensor3(
                    bundle.field, sigma_bar, base.dim, hopf.dim, hopf.dim,
                    "mul")
            out["crossed_products"][name] = record
    return out


def dump_bundle(bundle, path):
    with open(path, "w") as fh:
        json.dump(emit_bundle(bundle), fh, indent=1, sort_keys=True)
        fh.write("\n")
