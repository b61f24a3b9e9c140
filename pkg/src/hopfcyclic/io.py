"""JSON input documents: structure constants as sparse triple lists.

Schema (all scalars are exact strings: integers or fractions "a/b"):

    field:     {"kind": "Q"} or {"kind": "Fp", "p": prime}
    hopf:      basis, mult [[i,j,k,c]] (e_i e_j -> c e_k),
               unit [[i,c]], comult [[i,j,k,c]] (e_i -> c e_j x e_k),
               counit [[i,c]], antipode [[i,j,c]] (e_i -> c e_j)
    algebra:   basis, mult, unit, coaction [[i,j,k,c]] (a_i -> c h_j x a_k)
    coalgebra: basis, comult, counit, action [[i,j,k,c]] (h_i . c_j -> c c_k)
    options:   N, P, Q, rmax (all optional)

The antipode inverse is computed, never read.  Serialization is normalized
(sorted triples, canonical scalar strings), so parse/serialize round-trips
are idempotent and byte-identical across runs.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .fields import Field
from .hopf import (
    Algebra, Coalgebra, ComoduleAlgebra, HopfAlgebra, ModuleCoalgebra,
)
from .linalg import SparseMatrix


def _parse_field(node):
    if not isinstance(node, dict) or "kind" not in node:
        raise ParseError("field block must carry a kind")
    if node["kind"] == "Q":
        return Field.rationals()
    if node["kind"] == "Fp":
        try:
            return Field.prime(int(node["p"]))
        except (KeyError, ValueError) as e:
            raise ParseError("bad prime field: %s" % e)
    raise ParseError("unknown field kind %r" % (node["kind"],))


def _entries(field, triples, shape, index_of, what):
    ent = {}
    rows, cols = shape
    for t in triples:
        try:
            *idx, c = t
            val = field.parse(str(c))
        except Exception as e:
            raise ParseError("bad %s entry %r: %s" % (what, t, e))
        key = index_of([int(i) for i in idx])
        if key is None or not (0 <= key[0] < rows and 0 <= key[1] < cols):
            raise ParseError("%s entry %r out of range" % (what, t))
        if key in ent:
            raise ParseError("duplicate %s entry %r" % (what, t))
        if not field.is_zero(val):
            ent[key] = val
    return SparseMatrix(field, rows, cols, ent)


def _mult_matrix(field, triples, d):
    return _entries(field, triples, (d, d * d),
                    lambda ix: (ix[2], ix[0] * d + ix[1]) if len(ix) == 3 else None,
                    "mult")


def _comult_matrix(field, triples, d):
    return _entries(field, triples, (d * d, d),
                    lambda ix: (ix[1] * d + ix[2], ix[0]) if len(ix) == 3 else None,
                    "comult")


def _vector(field, pairs, d):
    return _entries(field, pairs, (d, 1),
                    lambda ix: (ix[0], 0) if len(ix) == 1 else None, "vector")


def _covector(field, pairs, d):
    return _entries(field, pairs, (1, d),
                    lambda ix: (0, ix[0]) if len(ix) == 1 else None, "covector")


def _map_matrix(field, triples, d):
    return _entries(field, triples, (d, d),
                    lambda ix: (ix[1], ix[0]) if len(ix) == 2 else None, "map")


def _coaction_matrix(field, triples, dh, da):
    return _entries(field, triples, (dh * da, da),
                    lambda ix: (ix[1] * da + ix[2], ix[0]) if len(ix) == 3 else None,
                    "coaction")


def _action_matrix(field, triples, dh, dc):
    return _entries(field, triples, (dc, dh * dc),
                    lambda ix: (ix[2], ix[0] * dc + ix[1]) if len(ix) == 3 else None,
                    "action")


class InputDocument:
    def __init__(self, field, hopf, algebra=None, coalgebra=None, options=None):
        self.field = field
        self.hopf = hopf
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.options = options or {}


def parse_document(data) -> InputDocument:
    if not isinstance(data, dict):
        raise ParseError("document must be a JSON object")
    field = _parse_field(data.get("field", {}))
    hnode = data.get("hopf")
    if not isinstance(hnode, dict):
        raise ParseError("missing hopf block")
    try:
        basis = list(hnode["basis"])
        d = len(basis)
        hopf = HopfAlgebra(
            field, d,
            _mult_matrix(field, hnode["mult"], d),
            _vector(field, hnode["unit"], d),
            _comult_matrix(field, hnode["comult"], d),
            _covector(field, hnode["counit"], d),
            _map_matrix(field, hnode["antipode"], d),
            basis_names=[str(b) for b in basis])
    except KeyError as e:
        raise ParseError("hopf block missing %s" % e)
    algebra = None
    if "algebra" in data:
        anode = data["algebra"]
        try:
            abasis = [str(b) for b in anode["basis"]]
            da = len(abasis)
            alg = Algebra(field, da,
                          _mult_matrix(field, anode["mult"], da),
                          _vector(field, anode["unit"], da), abasis)
            algebra = ComoduleAlgebra(
                hopf, alg, _coaction_matrix(field, anode["coaction"], d, da))
        except KeyError as e:
            raise ParseError("algebra block missing %s" % e)
    coalgebra = None
    if "coalgebra" in data:
        cnode = data["coalgebra"]
        try:
            cbasis = [str(b) for b in cnode["basis"]]
            dc = len(cbasis)
            coa = Coalgebra(field, dc,
                            _comult_matrix(field, cnode["comult"], dc),
                            _covector(field, cnode["counit"], dc), cbasis)
            coalgebra = ModuleCoalgebra(
                hopf, coa, _action_matrix(field, cnode["action"], d, dc))
        except KeyError as e:
            raise ParseError("coalgebra block missing %s" % e)
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise ParseError("options must be an object")
    return InputDocument(field, hopf, algebra, coalgebra, dict(options))


def load_document(path) -> InputDocument:
    try:
        with open(path, "r") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise ParseError("cannot read %s: %s" % (path, e))
    return parse_document(data)


# -- normalized serialization ---------------------------------------------------------

def _mult_triples(field, m, d):
    out = []
    for (k, ij), v in m.entries.items():
        out.append([ij // d, ij % d, k, field.to_str(v)])
    return sorted(out, key=lambda t: t[:3])


def _comult_triples(field, m, d):
    out = []
    for (jk, i), v in m.entries.items():
        out.append([i, jk // d, jk % d, field.to_str(v)])
    return sorted(out, key=lambda t: t[:3])


def _vector_pairs(field, m):
    return sorted([[i, field.to_str(v)] for (i, _), v in m.entries.items()])


def _covector_pairs(field, m):
    return sorted([[j, field.to_str(v)] for (_, j), v in m.entries.items()])


def _map_pairs(field, m):
    return sorted([[j, i, field.to_str(v)] for (i, j), v in m.entries.items()],
                  key=lambda t: t[:2])


def _coaction_triples(field, m, da):
    out = []
    for (jk, i), v in m.entries.items():
        out.append([i, jk // da, jk % da, field.to_str(v)])
    return sorted(out, key=lambda t: t[:3])


def _action_triples(field, m, dc):
    out = []
    for (k, ij), v in m.entries.items():
        out.append([ij // dc, ij % dc, k, field.to_str(v)])
    return sorted(out, key=lambda t: t[:3])


def document_to_dict(doc: InputDocument) -> dict:
    f = doc.field
    h = doc.hopf
    out = {
        "field": {"kind": "Q"} if f.p is None else {"kind": "Fp", "p": f.p},
        "hopf": {
            "basis": list(h.basis_names),
            "mult": _mult_triples(f, h.mult, h.dim),
            "unit": _vector_pairs(f, h.unit),
            "comult": _comult_triples(f, h.comult, h.dim),
            "counit": _covector_pairs(f, h.counit),
            "antipode": _map_pairs(f, h.antipode),
        },
    }
    if doc.algebra is not None:
        a = doc.algebra
        out["algebra"] = {
            "basis": list(a.algebra.basis_names),
            "mult": _mult_triples(f, a.mult, a.dim),
            "unit": _vector_pairs(f, a.unit),
            "coaction": _coaction_triples(f, a.coaction, a.dim),
        }
    if doc.coalgebra is not None:
        c = doc.coalgebra
        out["coalgebra"] = {
            "basis": list(c.coalgebra.basis_names),
            "comult": _comult_triples(f, c.comult, c.dim),
            "counit": _covector_pairs(f, c.counit),
            "action": _action_triples(f, c.action, c.dim),
        }
    if doc.options:
        out["options"] = {k: doc.options[k] for k in sorted(doc.options)}
    return out


def dumps_document(doc: InputDocument) -> str:
    return json.dumps(document_to_dict(doc), sort_keys=True, indent=2) + "\n"
