"""Loading and saving structure files.

The JSON layout is the normative interchange format: all coefficients are
strings in the coefficient-expression grammar, all indices are 0-based, and
operators use the column convention (column j is the image of basis vector
j).  The mandatory ``convention`` field spells this out inside every file.

Top-level keys::

    format      "rbx-structure/1"
    convention  CONVENTION (exact string below)
    params      list of parameter names
    relations   optional {name: expression} quadratic side relations
    dimension   n
    basis       list of n labels
    mul         optional sparse triples [i, j, k, coeff]  (e_i e_j -> coeff e_k)
    comul       optional sparse triples [i, j, k, coeff]  (Delta e_i -> coeff e_j (x) e_k)
    unit        optional sparse pairs [i, coeff]
    counit      optional sparse pairs [i, coeff]
    operators   {name: [[i, j, coeff], ...]}   entries mat[i][j]
    forms       {name: [[i, j, coeff], ...]}   entries form(e_i, e_j)
    meta        optional free-form extension block (corpus entries live here)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import CorpusIntegrityError, ParseError
from .linalg import Tensor, zeros
from .scalar import ParamRing
from .structures import Algebra, Bialgebra, BilinearForm, Coalgebra, LinearOp

FORMAT = "rbx-structure/1"
CONVENTION = ("coefficients: expression strings over the declared params; "
              "indices: 0-based; operators: columns are images of basis "
              "vectors; forms: entry [i][j] is form(e_i, e_j)")


@dataclass
class StructureBundle:
    ring: ParamRing
    dimension: int
    basis: tuple
    algebra: Algebra | None = None
    coalgebra: Coalgebra | None = None
    operators: dict = field(default_factory=dict)
    forms: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)
    name: str = ""

    @property
    def bialgebra(self):
        if self.algebra is None or self.coalgebra is None:
            return None
        return Bialgebra(self.algebra, self.coalgebra)


def _tensor3_from_triples(ring, n, triples, what):
    out = zeros(ring, (n, n, n))
    for entry in triples:
        if len(entry) != 4:
            raise CorpusIntegrityError(f"{what}: expected [i, j, k, coeff]")
        i, j, k, coeff = entry
        _check_index(i, n, what)
        _check_index(j, n, what)
        _check_index(k, n, what)
        out[i, j, k] = out[i, j, k] + ring.scalar(coeff)
    return out


def _mat_from_triples(ring, n, triples, what):
    out = zeros(ring, (n, n))
    for entry in triples:
        if len(entry) != 3:
            raise CorpusIntegrityError(f"{what}: expected [i, j, coeff]")
        i, j, coeff = entry
        _check_index(i, n, what)
        _check_index(j, n, what)
        out[i, j] = out[i, j] + ring.scalar(coeff)
    return out


def _vec_from_pairs(ring, n, pairs, what):
    out = Tensor(ring, (n,))
    for entry in pairs:
        if len(entry) != 2:
            raise CorpusIntegrityError(f"{what}: expected [i, coeff]")
        i, coeff = entry
        _check_index(i, n, what)
        out[(i,)] = out[(i,)] + ring.scalar(coeff)
    return out


def _check_index(i, n, what):
    if not isinstance(i, int) or not 0 <= i < n:
        raise CorpusIntegrityError(f"{what}: index {i!r} out of range 0..{n-1}")


def load_structure(path_or_data, name=""):
    """Parse a structure file (path, JSON text or already-decoded dict)."""
    if isinstance(path_or_data, dict):
        data = path_or_data
    else:
        path = Path(path_or_data)
        name = name or path.stem
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as err:
            raise CorpusIntegrityError(f"{path}: invalid JSON: {err}") from err
    if data.get("format") != FORMAT:
        raise CorpusIntegrityError(
            f"unsupported format {data.get('format')!r} (expected {FORMAT!r})")
    if "convention" not in data:
        raise CorpusIntegrityError("missing mandatory 'convention' field")
    if data["convention"] != CONVENTION:
        raise CorpusIntegrityError("unrecognized 'convention' field")
    try:
        ring = ParamRing(data.get("params", ()),
                         relations=data.get("relations"))
    except (ValueError, ParseError) as err:
        raise CorpusIntegrityError(f"bad parameter declaration: {err}") from err
    n = data["dimension"]
    basis = tuple(data.get("basis") or (f"e{i+1}" for i in range(n)))
    if len(basis) != n:
        raise CorpusIntegrityError("basis label count differs from dimension")
    try:
        algebra = None
        if "mul" in data:
            unit = _vec_from_pairs(ring, n, data["unit"], "unit") \
                if "unit" in data else None
            algebra = Algebra(ring, n,
                              _tensor3_from_triples(ring, n, data["mul"],
                                                    "mul"),
                              unit=unit, labels=basis)
        coalgebra = None
        if "comul" in data:
            counit = _vec_from_pairs(ring, n, data["counit"], "counit") \
                if "counit" in data else None
            coalgebra = Coalgebra(ring, n,
                                  _tensor3_from_triples(ring, n,
                                                        data["comul"],
                                                        "comul"),
                                  counit=counit, labels=basis)
        operators = {
            opname: LinearOp(_mat_from_triples(ring, n, triples,
                                               f"operator {opname}"))
            for opname, triples in data.get("operators", {}).items()
        }
        forms = {
            fname: BilinearForm(_mat_from_triples(ring, n, triples,
                                                  f"form {fname}"))
            for fname, triples in data.get("forms", {}).items()
        }
    except ParseError as err:
        raise CorpusIntegrityError(f"coefficient parse error: {err}") from err
    return StructureBundle(ring=ring, dimension=n, basis=basis,
                           algebra=algebra, coalgebra=coalgebra,
                           operators=operators, forms=forms,
                           meta=data.get("meta", {}), name=name)


def _triples_of_tensor3(t):
    return [[i, j, k, str(v)] for (i, j, k), v in t.nonzero_items()]


def _triples_of_mat(m):
    return [[i, j, str(v)] for (i, j), v in m.nonzero_items()]


def _pairs_of_vec(v):
    return [[i, str(val)] for (i,), val in v.nonzero_items()]


def dump_structure(bundle: StructureBundle) -> dict:
    """Serialize back to the normative JSON layout."""
    data = {
        "format": FORMAT,
        "convention": CONVENTION,
        "params": list(bundle.ring.params),
        "dimension": bundle.dimension,
        "basis": list(bundle.basis),
    }
    if bundle.ring.relations:
        data["relations"] = {
            bundle.ring.params[idx]: str(poly)
            for idx, poly in bundle.ring.relations.items()
        }
    if bundle.algebra is not None:
        data["mul"] = _triples_of_tensor3(bundle.algebra.mul)
        if bundle.algebra.unit is not None:
            data["unit"] = _pairs_of_vec(bundle.algebra.unit)
    if bundle.coalgebra is not None:
        data["comul"] = _triples_of_tensor3(bundle.coalgebra.comul)
        if bundle.coalgebra.counit is not None:
            data["counit"] = _pairs_of_vec(bundle.coalgebra.counit)
    if bundle.operators:
        data["operators"] = {name: _triples_of_mat(op.mat)
                             for name, op in sorted(bundle.operators.items())}
    if bundle.forms:
        data["forms"] = {name: _triples_of_mat(form.mat)
                         for name, form in sorted(bundle.forms.items())}
    if bundle.meta:
        data["meta"] = bundle.meta
    return data


def save_structure(bundle: StructureBundle, path):
    Path(path).write_text(json.dumps(dump_structure(bundle), indent=1) + "\n")
