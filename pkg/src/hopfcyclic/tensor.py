"""Tensor-index bookkeeping and the operator compiler.

Basis of a tensor product is ordered row-major with the LEFTMOST factor
varying SLOWEST; this single convention is fixed package-wide.

Structural operators on tensor-power spaces (rotations with coaction legs,
conjugation actions, leg products under antipodes, ...) are described
declaratively: a list of input factors, a Sweedler-leg expansion per factor,
and one expression per output factor referencing each produced leg exactly
once.  `compile_operator` turns such a description into an exact sparse
matrix, evaluating column by column so the (potentially huge) intermediate
leg space is never materialized.
"""

from __future__ import annotations

from itertools import product as iproduct

from .linalg import SparseMatrix, kron_all


def tensor_index(dims, multi):
    idx = 0
    for d, m in zip(dims, multi):
        idx = idx * d + m
    return idx


def tensor_unindex(dims, idx):
    multi = [0] * len(dims)
    for k in range(len(dims) - 1, -1, -1):
        multi[k] = idx % dims[k]
        idx //= dims[k]
    return tuple(multi)


def perm_matrix(field, dims, out_to_in):
    """Factor permutation; out_to_in[k] is the input position of output k."""
    n = len(dims)
    assert sorted(out_to_in) == list(range(n))
    out_dims = [dims[s] for s in out_to_in]
    total = 1
    for d in dims:
        total *= d
    ent = {}
    one = field.one()
    for j in range(total):
        multi = tensor_unindex(dims, j)
        ent[(tensor_index(out_dims, [multi[s] for s in out_to_in]), j)] = one
    return SparseMatrix(field, total, total, ent)


class SpaceOps:
    """Structure maps of one kind of tensor factor, as matrices.

    mult: X (x) X -> X, unit: k -> X (dim x 1), comult: X -> X (x) X,
    counit: X -> k (1 x dim), antipode / antipode_inv: X -> X,
    coaction: X -> H (x) X, action: H (x) X -> X.
    """

    def __init__(self, dim, mult=None, unit=None, comult=None, counit=None,
                 antipode=None, antipode_inv=None, coaction=None, action=None):
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.comult = comult
        self.counit = counit
        self.antipode = antipode
        self.antipode_inv = antipode_inv
        self.coaction = coaction
        self.action = action


# -- expression constructors ----------------------------------------------------

def leg(slot):
    return ("leg", slot)


def S(e):
    return ("S", e)


def Sinv(e):
    return ("Sinv", e)


def prod(*es):
    return ("prod", list(es))


def act(h_expr, c_expr):
    return ("act", h_expr, c_expr)


def eps(e):
    return ("eps", e)


def unit(space_label):
    return ("unit", space_label)


class Legs:
    """Slot numbering for the legs produced by a list of factor expansions.

    Expansions: ("id",) keeps the factor; ("comult", k) splits it into k+1
    Sweedler legs (0)..(k) left to right; ("coaction", k) yields k coaction
    legs (k-bar)..(1-bar) left to right followed by the (0-bar) body.
    """

    def __init__(self, specs):
        self.specs = specs
        self.start = []
        self.leg_spaces = []
        pos = 0
        for label, exp in specs:
            self.start.append(pos)
            if exp[0] == "id":
                self.leg_spaces.append(label)
                pos += 1
            elif exp[0] == "comult":
                self.leg_spaces.extend([label] * (exp[1] + 1))
                pos += exp[1] + 1
            elif exp[0] == "coaction":
                self.leg_spaces.extend(["H"] * exp[1] + [label])
                pos += exp[1] + 1
            else:
                raise ValueError("unknown expansion %r" % (exp,))

    def plain(self, f):
        assert self.specs[f][1][0] == "id"
        return ("leg", self.start[f])

    def com(self, f, j):
        """Sweedler comultiplication leg (j) of factor f."""
        kind, k = self.specs[f][1]
        assert kind == "comult" and 0 <= j <= k
        return ("leg", self.start[f] + j)

    def coact(self, f, bar):
        """Coaction leg; bar >= 1 are H legs (leftmost = highest), 0 the body."""
        kind, k = self.specs[f][1]
        assert kind == "coaction" and 0 <= bar <= k
        return ("leg", self.start[f] + (k - bar))


def _mult_chain(field, ops, n):
    """Iterated product X^(x)n -> X; n = 0 gives the unit, n = 1 the identity."""
    if n == 0:
        return ops.unit
    m = SparseMatrix.identity(field, ops.dim)
    for _ in range(n - 1):
        m = ops.mult @ m.kron(SparseMatrix.identity(field, ops.dim))
    return m


def iterate_comult_matrix(field, ops, k):
    """X -> X^(x)(k+1) by k applications of comult to the last factor."""
    m = SparseMatrix.identity(field, ops.dim)
    for j in range(k):
        m = SparseMatrix.identity(field, ops.dim ** j).kron(ops.comult) @ m
    return m


def iterate_coaction_matrix(field, hdim, ops, k):
    """X -> H^(x)k (x) X by k applications of the coaction to the body."""
    m = SparseMatrix.identity(field, ops.dim)
    for j in range(k):
        m = SparseMatrix.identity(field, hdim ** j).kron(ops.coaction) @ m
    return m


def _expansion_matrix(field, spaces, label, exp):
    ops = spaces[label]
    if exp[0] == "id":
        return SparseMatrix.identity(field, ops.dim), [ops.dim]
    if exp[0] == "comult":
        k = exp[1]
        return iterate_comult_matrix(field, ops, k), [ops.dim] * (k + 1)
    if exp[0] == "coaction":
        k = exp[1]
        hdim = spaces["H"].dim
        return (iterate_coaction_matrix(field, hdim, ops, k),
                [hdim] * k + [ops.dim])
    raise ValueError("unknown expansion %r" % (exp,))


def _compile_expr(field, spaces, leg_spaces, e):
    """Compile an expression to (matrix, slot list, space label).

    The matrix maps the tensor product of the expression's legs (in slot-list
    order) to the expression's output space ("1" for counit-consumed scalars).
    """
    tag = e[0]
    if tag == "leg":
        sp = leg_spaces[e[1]]
        return SparseMatrix.identity(field, spaces[sp].dim), [e[1]], sp
    if tag in ("S", "Sinv"):
        m, sl, sp = _compile_expr(field, spaces, leg_spaces, e[1])
        if sp != "H":
            raise ValueError("antipode applied to non-Hopf leg")
        a = spaces["H"].antipode if tag == "S" else spaces["H"].antipode_inv
        return a @ m, sl, "H"
    if tag == "prod":
        parts = [_compile_expr(field, spaces, leg_spaces, x) for x in e[1]]
        sp = parts[0][2]
        if any(p[2] != sp for p in parts):
            raise ValueError("product of legs from different spaces")
        mat = _mult_chain(field, spaces[sp], len(parts)) @ kron_all(
            field, [p[0] for p in parts])
        slots = [s for p in parts for s in p[1]]
        return mat, slots, sp
    if tag == "act":
        hm, hs, hsp = _compile_expr(field, spaces, leg_spaces, e[1])
        cm, cs, csp = _compile_expr(field, spaces, leg_spaces, e[2])
        if hsp != "H":
            raise ValueError("action by a non-Hopf expression")
        return spaces[csp].action @ hm.kron(cm), hs + cs, csp
    if tag == "eps":
        m, sl, sp = _compile_expr(field, spaces, leg_spaces, e[1])
        return spaces[sp].counit @ m, sl, "1"
    if tag == "unit":
        sp = e[1]
        return spaces[sp].unit, [], sp
    raise ValueError("unknown expression %r" % (e,))


def compile_operator(field, spaces, specs, outputs):
    """Build the sparse matrix of an operator from its leg description.

    specs: list of (space_label, expansion) for the input factors.
    outputs: expressions, one per output factor, using every leg exactly once.
    """
    legmap = Legs(specs)
    expansions = []
    leg_dims_per_factor = []
    for label, exp in specs:
        m, ldims = _expansion_matrix(field, spaces, label, exp)
        expansions.append(m)
        leg_dims_per_factor.append(ldims)
    leg_dims = [d for ld in leg_dims_per_factor for d in ld]

    compiled = []
    used = []
    out_dims = []
    for e in outputs:
        mat, slots, sp = _compile_expr(field, spaces, legmap.leg_spaces, e)
        compiled.append((mat, slots, [leg_dims[s] for s in slots]))
        used.extend(slots)
        out_dims.append(1 if sp == "1" else spaces[sp].dim)
    if sorted(used) != list(range(len(leg_dims))):
        raise ValueError("legs not used exactly once: %s of %d"
                         % (sorted(used), len(leg_dims)))

    in_dims = [spaces[label].dim for label, _ in specs]
    n_in = 1
    for d in in_dims:
        n_in *= d
    n_out = 1
    for d in out_dims:
        n_out *= d

    # decoded expansion columns, cached per (factor, basis index)
    _cache = {}

    def factor_terms(f, idx):
        got = _cache.get((f, idx))
        if got is None:
            ldims = leg_dims_per_factor[f]
            got = [(tensor_unindex(ldims, r), v)
                   for r, v in expansions[f].column(idx).items()]
            _cache[(f, idx)] = got
        return got

    ent = {}
    zero = field.zero()
    for cin in range(n_in):
        multi = tensor_unindex(in_dims, cin)
        per_factor = [factor_terms(f, i) for f, i in enumerate(multi)]
        for combo in iproduct(*per_factor):
            coeff = field.one()
            assign = []
            for legs_idx, v in combo:
                coeff = field.mul(coeff, v)
                assign.extend(legs_idx)
            # kron of the output expression columns
            acc = {0: coeff}
            for (mat, slots, sdims), odim in zip(compiled, out_dims):
                col = mat.column(tensor_index(sdims, [assign[s] for s in slots]))
                if not col:
                    acc = None
                    break
                nxt = {}
                for r0, c0 in acc.items():
                    for r, c in col.items():
                        nxt[r0 * odim + r] = field.mul(c0, c)
                acc = nxt
            if not acc:
                continue
            for r, c in acc.items():
                w = field.add(ent.get((r, cin), zero), c)
                if field.is_zero(w):
                    ent.pop((r, cin), None)
                else:
                    ent[(r, cin)] = w
    return SparseMatrix(field, n_out, n_in, ent)
