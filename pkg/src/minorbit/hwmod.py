"""Exact construction of simple highest-weight modules over Q.

The module V_lambda is built top-down from the highest-weight vector by
applying the simple lowering operators breadth-first.  At each new weight
the candidate vectors f_i(u) are pruned to a basis using the contravariant
form: its Gram rank equals the weight multiplicity in the simple module,
so the Verma-module null directions drop out with no prior knowledge of
the multiplicities.  All coordinates are exact rationals.

The contravariant form satisfies <f_i u, w> = <u, e_i w> with
<v_top, v_top> = 1, distinct weight spaces orthogonal; its Gram entries
are computed recursively from data one and two levels up, so construction
is a single sweep.

Matrices for a full Chevalley basis are obtained by bracketing the simple
generator matrices along root height; the resulting structure-constant
signs depend on that order, but every quantity computed here is a
dimension of a span, so the signs never matter.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg, rootsys
from .rootsys import RootSystem

DEFAULT_DIM_CAP = 1000


class DimensionCapExceeded(ValueError):
    def __init__(self, rs, lam, dim, cap):
        self.dim = dim
        super().__init__(
            f"V_lambda for {rs.name}, lambda={tuple(lam)} has dimension {dim} "
            f"(Weyl formula), above the configured cap {cap}")


class HWModule:
    """Simple module V_lambda with exact generator matrices.

    Attributes:
      rs, lam        : root system and highest weight
      dim            : module dimension
      weights        : weight (fund.-weight coords) of each basis vector
      spaces         : weight -> list of basis indices
      e, f           : per simple index, sparse columns {j: {i: coeff}}
      gram           : weight -> Gram matrix of the contravariant form
    """

    def __init__(self, rs, lam, weights, spaces, e_cols, f_cols, gram):
        self.rs = rs
        self.lam = tuple(lam)
        self.weights = weights
        self.spaces = spaces
        self.e = e_cols
        self.f = f_cols
        self.gram = gram
        self.dim = len(weights)

    @property
    def top_index(self) -> int:
        return self.spaces[self.lam][0]

    @property
    def lowest_weight(self):
        return tuple(-x for x in rootsys.dual_weight(self.rs, self.lam))

    @property
    def bottom_index(self) -> int:
        space = self.spaces[self.lowest_weight]
        if len(space) != 1:
            raise AssertionError("lowest weight space is not a line")
        return space[0]

    def vector(self, index: int):
        v = [Fraction(0)] * self.dim
        v[index] = Fraction(1)
        return v

    def h_eigenvalue(self, i: int, index: int) -> int:
        return self.weights[index][i]

    def apply_column_map(self, cols, vec):
        out = [Fraction(0)] * self.dim
        for j, x in enumerate(vec):
            if not x:
                continue
            for i, c in cols.get(j, {}).items():
                out[i] += x * c
        return out

    def apply_e(self, i, vec):
        return self.apply_column_map(self.e[i], vec)

    def apply_f(self, i, vec):
        return self.apply_column_map(self.f[i], vec)

    def apply_h(self, i, vec):
        return [x * self.weights[j][i] for j, x in enumerate(vec)]


def build_module(rs: RootSystem, lam, dim_cap: int = DEFAULT_DIM_CAP) -> HWModule:
    lam = tuple(lam)
    if not rootsys.is_dominant(lam):
        raise ValueError(f"highest weight must be dominant, got {lam}")
    wdim = rootsys.weyl_dim(rs, lam)
    if wdim > dim_cap:
        raise DimensionCapExceeded(rs, lam, wdim, dim_cap)
    n = rs.rank
    alphas = [rs.simple_root_weight(i) for i in range(n)]

    weights = [lam]
    spaces = {lam: [0]}
    gram = {lam: [[Fraction(1)]]}
    e_cols = [dict() for _ in range(n)]
    f_cols = [dict() for _ in range(n)]
    for i in range(n):
        e_cols[i][0] = {}

    def pos_in_space(idx):
        return spaces[weights[idx]].index(idx)

    def form_with_kept(u_idx, vec):
        """<u, vec> where vec is a coordinate dict on spaces[wt(u)]."""
        g = gram[weights[u_idx]]
        row = g[pos_in_space(u_idx)]
        space = spaces[weights[u_idx]]
        return sum(row[space.index(k)] * c for k, c in vec.items())

    level = [lam]
    while level:
        cand = {}
        for nu in level:
            for u in spaces[nu]:
                for i in range(n):
                    tgt = tuple(nu[j] - alphas[i][j] for j in range(n))
                    cand.setdefault(tgt, []).append((i, u))
        nxt = []
        for tgt in sorted(cand):
            gens = cand[tgt]
            m = len(gens)
            G = [[Fraction(0)] * m for _ in range(m)]
            f_of_e = {}
            for a, (i, u) in enumerate(gens):
                for b, (j, w) in enumerate(gens):
                    if b < a:
                        G[a][b] = G[b][a]
                        continue
                    # <f_i u, f_j w> = <u, f_j(e_i w)> + [i=j] <wt w, a_i^vee><u, w>
                    key = (i, j, w)
                    if key not in f_of_e:
                        acc = {}
                        for k, c in e_cols[i][w].items():
                            for t, d in f_cols[j].get(k, {}).items():
                                acc[t] = acc.get(t, Fraction(0)) + c * d
                        f_of_e[key] = acc
                    val = form_with_kept(u, f_of_e[key]) if f_of_e[key] else Fraction(0)
                    if i == j and weights[u] == weights[w]:
                        g = gram[weights[u]]
                        space = spaces[weights[u]]
                        val += weights[w][i] * g[pos_in_space(u)][space.index(w)]
                    G[a][b] = val
            # pivot selection: contravariant Gram is positive semidefinite
            S = []
            for k in range(m):
                trial = S + [k]
                sub = [[G[x][y] for y in trial] for x in trial]
                if linalg.rank(sub) == len(trial):
                    S.append(k)
            if S:
                if len(weights) + len(S) > wdim:
                    raise AssertionError("construction exceeded the Weyl dimension")
                base = len(weights)
                spaces[tgt] = list(range(base, base + len(S)))
                for _ in S:
                    weights.append(tgt)
                gram[tgt] = [[G[x][y] for y in S] for x in S]
                nxt.append(tgt)
            GS = gram.get(tgt)
            # f-columns for every candidate, solved against the kept Gram
            for a, (i, u) in enumerate(gens):
                if not S:
                    f_cols[i][u] = {}
                    continue
                rhs = [G[s][a] for s in S]
                x = linalg.solve(GS, rhs)
                if x is None:
                    raise AssertionError("contravariant Gram solve failed")
                f_cols[i][u] = {spaces[tgt][t]: c for t, c in enumerate(x) if c}
            # e-columns on the new kept vectors
            for t, s in enumerate(S):
                i, u = gens[s]
                new_idx = spaces[tgt][t]
                for j in range(n):
                    acc = {}
                    ej_u = e_cols[j][u]              # at wt(u)+alpha_j
                    for k, c in ej_u.items():
                        for tt, d in f_cols[i].get(k, {}).items():
                            acc[tt] = acc.get(tt, Fraction(0)) + c * d
                    if i == j:
                        hval = _coroot_value(rs, weights[u], i)
                        if hval:
                            acc[u] = acc.get(u, Fraction(0)) + hval
                    e_cols[j][new_idx] = {k: v for k, v in acc.items() if v}
        level = nxt

    if len(weights) != wdim:
        raise AssertionError(
            f"constructed dimension {len(weights)} != Weyl dimension {wdim}")
    mod = HWModule(rs, lam, weights, spaces, e_cols, f_cols, gram)
    _spot_check_relations(mod)
    return mod


def _coroot_value(rs, weight, i) -> int:
    return weight[i]


def _spot_check_relations(mod: HWModule):
    """[e_i, f_i] = h_i exactly on every basis vector; [e_i, f_j] = 0 for
    one pair i != j; one Serre relation when the rank allows."""
    rs = mod.rs
    n = rs.rank
    for i in range(n):
        for j in range(mod.dim):
            v = mod.vector(j)
            lhs = _sub(mod.apply_e(i, mod.apply_f(i, v)),
                       mod.apply_f(i, mod.apply_e(i, v)))
            rhs = mod.apply_h(i, v)
            if lhs != rhs:
                raise AssertionError(f"[e_{i},f_{i}] != h_{i} on basis vector {j}")
    if n >= 2:
        i, j = 0, 1
        for k in range(mod.dim):
            v = mod.vector(k)
            lhs = _sub(mod.apply_e(i, mod.apply_f(j, v)),
                       mod.apply_f(j, mod.apply_e(i, v)))
            if any(lhs):
                raise AssertionError("[e_0, f_1] != 0")
        # Serre relation (ad e_i)^{1-a_ij}(e_j) = 0 on the matrices
        Ei = _cols_to_mat(mod, mod.e[i])
        X = _cols_to_mat(mod, mod.e[j])
        for _ in range(1 - rs.cartan[i][j]):
            X = _commutator_sparse(Ei, X)
        if X:
            raise AssertionError(f"Serre relation fails for simple pair ({i},{j})")


def _sub(u, v):
    return [a - b for a, b in zip(u, v)]


# ---------------------------------------------------------------------------
# Chevalley basis action and tangent spaces


def chevalley_vectors(mod: HWModule, vec):
    """The set {x . vec : x in a Chevalley basis of g} as a list of
    coordinate vectors (raising/lowering for every positive root, plus the
    Cartan).  Nonsimple root actions are nested commutators of the simple
    ones applied to vec-spanned flags, built by root height."""
    rs = mod.rs
    n = rs.rank
    # build sparse matrices once per module, cached on the instance
    if not hasattr(mod, "_chevalley"):
        mats = {}
        order = sorted(range(len(rs.positive_roots)),
                       key=lambda k: sum(rs.positive_roots[k]))
        for k in order:
            c = rs.positive_roots[k]
            h = sum(c)
            if h == 1:
                i = c.index(1)
                mats[("e", c)] = _cols_to_mat(mod, mod.e[i])
                mats[("f", c)] = _cols_to_mat(mod, mod.f[i])
                continue
            for i in range(n):
                lower = list(c)
                lower[i] -= 1
                lower = tuple(lower)
                if lower[i] >= 0 and ("e", lower) in mats:
                    simple = tuple(int(j == i) for j in range(n))
                    E = _commutator_sparse(mats[("e", lower)], mats[("e", simple)])
                    F = _commutator_sparse(mats[("f", simple)], mats[("f", lower)])
                    if not E or not F:
                        raise AssertionError(
                            f"zero Chevalley matrix for root {c} (faithfulness)")
                    mats[("e", c)] = E
                    mats[("f", c)] = F
                    break
            else:
                raise AssertionError(f"root {c} has no simple-root predecessor")
        mod._chevalley = mats
    out = []
    for key, mat in mod._chevalley.items():
        out.append(_apply_sparse(mat, vec, mod.dim))
    for i in range(n):
        out.append(mod.apply_h(i, vec))
    return out


def _cols_to_mat(mod, cols):
    mat = {}
    for j, col in cols.items():
        for i, c in col.items():
            if c:
                mat.setdefault(j, {})[i] = c
    return mat


def _commutator_sparse(A, B):
    return _sparse_sub(_sparse_mul(A, B), _sparse_mul(B, A))


def _sparse_mul(A, B):
    out = {}
    for j, colB in B.items():
        acc = {}
        for k, c in colB.items():
            colA = A.get(k)
            if not colA:
                continue
            for i, d in colA.items():
                acc[i] = acc.get(i, Fraction(0)) + c * d
        acc = {i: v for i, v in acc.items() if v}
        if acc:
            out[j] = acc
    return out


def _sparse_sub(A, B):
    out = {j: dict(col) for j, col in A.items()}
    for j, col in B.items():
        tgt = out.setdefault(j, {})
        for i, c in col.items():
            tgt[i] = tgt.get(i, Fraction(0)) - c
    return {j: {i: c for i, c in col.items() if c}
            for j, col in out.items() if any(col.values())}


def _apply_sparse(mat, vec, dim):
    out = [Fraction(0)] * dim
    for j, x in enumerate(vec):
        if not x:
            continue
        for i, c in mat.get(j, {}).items():
            out[i] += x * c
    return out


def tangent_space(mod: HWModule, vec):
    """Basis and dimension of g . vec (the tangent space of the orbit of
    vec at vec, translated to the origin)."""
    rows = chevalley_vectors(mod, vec)
    basis = linalg.span_basis(rows)
    return basis, len(basis)


# ---------------------------------------------------------------------------
# Secant defects and the conical-secant-variety report


def secant_defect(rs: RootSystem, lam, dim_cap: int = DEFAULT_DIM_CAP,
                  module: HWModule | None = None) -> int:
    """Defect of the secant variety of the projectivized orbit of
    highest-weight vectors: dim (g.v_top ∩ g.v_bottom), computed by exact
    kernel arithmetic and cross-checked by rank-nullity against
    2 dim g.v_top - dim(g.v_top + g.v_bottom)."""
    mod = module or build_module(rs, lam, dim_cap)
    A, _ = tangent_space(mod, mod.vector(mod.top_index))
    B, _ = tangent_space(mod, mod.vector(mod.bottom_index))
    inter = linalg.intersection_basis(A, B)
    delta = len(inter)
    delta2 = 2 * len(A) - linalg.sum_dim(A, B)
    if len(A) != len(B) or delta != delta2:
        raise AssertionError(
            f"secant defect disagreement for {rs.name}, {lam}: "
            f"kernel route {delta}, rank route {delta2}")
    return delta


def cs_report(rs: RootSystem, lam, dim_cap: int = DEFAULT_DIM_CAP) -> dict:
    """Dimension data of the affine cone over the secant variety of the
    minimal orbit of V_lambda, plus conicality of the orbit of
    h = v_top + v_bottom and a null-cone witness when V is not self-dual."""
    lam = tuple(lam)
    mod = build_module(rs, lam, dim_cap)
    vtop = mod.vector(mod.top_index)
    vbot = mod.vector(mod.bottom_index)
    A, dimA = tangent_space(mod, vtop)
    B, _ = tangent_space(mod, vbot)
    min_dim = rootsys.min_orbit_dim(rs, lam)
    if dimA != min_dim:
        raise AssertionError("tangent dimension disagrees with the root count")
    delta = secant_defect(rs, lam, module=mod)
    cs_dim = 2 * min_dim - delta
    spans = linalg.sum_dim(A, B) == mod.dim
    fills = cs_dim == mod.dim
    if fills != spans:
        raise AssertionError("cs_dim fill test disagrees with the span test")
    h = [a + b for a, b in zip(vtop, vbot)]
    Th, _ = tangent_space(mod, h)
    conical = linalg.in_span(Th, h)
    lam_star = rootsys.dual_weight(rs, lam)
    witness = None
    if lam_star != lam:
        xi = tuple(a - b for a, b in zip(lam, lam_star))
        mu = tuple(-x for x in lam_star)
        p_lam = rs.pairing(lam, xi)
        p_mu = rs.pairing(mu, xi)
        if not (p_lam > 0 and p_mu > 0):
            raise AssertionError("null-cone witness pairings are not positive")
        witness = {"cocharacter": xi, "lam_pairing": p_lam, "mu_pairing": p_mu}
    return {
        "rs": rs.name,
        "lam": lam,
        "dim_module": mod.dim,
        "dim_min_orbit": min_dim,
        "delta": delta,
        "cs_dim": cs_dim,
        "fills_module": fills,
        "h_orbit_conical": conical,
        "self_dual": lam_star == lam,
        "nullcone_witness": witness,
    }


def delta_sign_tests(rs: RootSystem, lam, dim_cap: int = DEFAULT_DIM_CAP) -> dict:
    """Checks around the sign of the defect:

    * necessary_ok: delta > 0 implies (lambda, theta^vee) in {1, 2};
    * remark_prediction: for (lambda,theta^vee) = 1 the experimental
      criterion 'delta > 0 iff lambda + lambda* - theta is a positive root
      other than theta, or zero' - reported, never asserted;
    * lemma_case: whether v_bottom lies in g.v_top (expected exactly for
      the natural sl and sp modules)."""
    lam = tuple(lam)
    mod = build_module(rs, lam, dim_cap)
    delta = secant_defect(rs, lam, module=mod)
    theta = rs.highest_root
    pair = rs.coroot_pairing(lam, theta)
    necessary_ok = (delta == 0) or pair in (1, 2)
    prediction = None
    agrees = None
    if pair == 1:
        lam_star = rootsys.dual_weight(rs, lam)
        s = tuple(a + b - t for a, b, t in
                  zip(lam, lam_star, rootsys.highest_root_weight(rs)))
        in_root_lattice_set = False
        if not any(s):
            in_root_lattice_set = True
        else:
            c = rs.weight_to_root_coords(s)
            if all(x.denominator == 1 for x in c):
                ci = tuple(int(x) for x in c)
                in_root_lattice_set = (ci in rs.positive_roots
                                       and ci != tuple(theta))
        prediction = in_root_lattice_set
        agrees = prediction == (delta > 0)
    A, _ = tangent_space(mod, mod.vector(mod.top_index))
    lemma_case = linalg.in_span(A, mod.vector(mod.bottom_index))
    return {
        "rs": rs.name, "lam": lam, "delta": delta,
        "theta_pairing": pair,
        "necessary_ok": necessary_ok,
        "remark_prediction": prediction,
        "remark_agrees": agrees,
        "lemma_case": lemma_case,
    }


# ---------------------------------------------------------------------------
# Dumps for external verification


def dump(mod: HWModule) -> dict:
    """Weight basis and generator matrices in a JSON-friendly form."""
    def cols_out(cols):
        return {str(j): {str(i): str(c) for i, c in col.items()}
                for j, col in cols.items()}
    return {
        "type": mod.rs.name,
        "highest_weight": list(mod.lam),
        "dim": mod.dim,
        "weights": [list(w) for w in mod.weights],
        "e": [cols_out(c) for c in mod.e],
        "f": [cols_out(c) for c in mod.f],
    }
