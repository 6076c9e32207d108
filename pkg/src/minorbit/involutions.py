"""Symmetric pairs (g, g0): Satake catalog, intersection tests, projections.

The catalog of involution classes of the simple Lie algebras is shipped as
a plain-text file (data/involutions.txt) and revalidated record by record
at load time: stated dimensions of inner rows are recomputed from their
0/1 grading vectors, Satake arrows must form a partial matching on white
nodes, the rank bound dim g1 - dim g0 <= rk g must hold with equality
exactly for the maximal-rank rows, and orbit labels must resolve.

Intersection criteria implemented here:

* an orbit meets the odd part iff the black nodes sit inside the zeros of
  its weighted diagram and arrow-joined labels agree;
* the adjoint minimal orbit meets the odd part iff no black node pairs
  nontrivially with the highest root;
* it meets the even part iff the even root subsystem contains a long root
  (inner rows; the five outer families are curated and cross-checked by
  explicit matrix computations elsewhere).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

from . import orbits, rootsys
from .rootsys import RootSystem

_DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# Catalog domain: the non-redundant enumeration of simple types.  B2 = C2,
# D2 and D3 duplicate A1+A1 and A3, so those live under their canonical
# letter only.
_CATALOG_MIN_RANK = {"A": 1, "B": 3, "C": 2, "D": 4}
_CATALOG_MAX_RANK = 12


@dataclass(frozen=True)
class SatakeDiagram:
    rs: RootSystem
    black: frozenset          # 0-based node indices
    arrows: tuple             # pairs of 0-based white nodes
    inner: bool
    grading: tuple | None     # 0/1 labels for inner involutions

    @property
    def white(self):
        return tuple(i for i in range(self.rs.rank) if i not in self.black)

    @property
    def is_maximal_rank(self) -> bool:
        return not self.black and not self.arrows


@dataclass(frozen=True)
class SymmetricPair:
    rs: RootSystem
    pair_id: str
    class_label: str
    g0_name: str
    dim_g0: int
    dim_g1: int
    satake: SatakeDiagram
    g0_semisimple: bool
    _meets_g0_outer: bool | None
    tilde_label: str | None
    co0_label: str | None

    @property
    def name(self) -> str:
        return f"({self.rs.name}, {self.g0_name})"

    def __repr__(self):
        return f"SymmetricPair{self.name}"


# ---------------------------------------------------------------------------
# Loading and validation


_CATALOG_CACHE: dict = {}


def _parse_nodes(s):
    if s == "-":
        return frozenset()
    return frozenset(int(x) - 1 for x in s.split(","))


def _parse_arrows(s):
    if s == "-":
        return ()
    out = []
    for item in s.split(";"):
        a, b = item.split("-")
        out.append((int(a) - 1, int(b) - 1))
    return tuple(out)


def _validate(pair: SymmetricPair, line_no: int):
    rs, sat = pair.rs, pair.satake

    def fail(msg):
        raise ValueError(
            f"involutions.txt line {line_no} ({pair.pair_id}): {msg}")

    if any(not 0 <= b < rs.rank for b in sat.black):
        fail("black node out of range")
    seen = set()
    for a, b in sat.arrows:
        if a == b or a in sat.black or b in sat.black:
            fail("arrows must join distinct white nodes")
        if a in seen or b in seen:
            fail("arrow graph is not a partial matching")
        seen.update((a, b))
    if pair.dim_g0 + pair.dim_g1 != rs.dim:
        fail(f"dim_g0 + dim_g1 = {pair.dim_g0 + pair.dim_g1} != dim g = {rs.dim}")
    gap = pair.dim_g1 - pair.dim_g0
    if gap > rs.rank:
        fail("rank bound dim g1 - dim g0 <= rk g violated")
    if (gap == rs.rank) != sat.is_maximal_rank:
        fail("maximal-rank characterization violated")
    if symmetric_rank(pair) < 1:
        fail("symmetric rank must be at least 1")
    if sat.inner:
        if sat.grading is None or len(sat.grading) != rs.rank:
            fail("inner row without a grading vector")
        even = sum(1 for c in rs.positive_roots if _grade(sat.grading, c) == 0)
        d0 = rs.rank + 2 * even
        if d0 != pair.dim_g0:
            fail(f"grading vector gives dim_g0 = {d0}, stored {pair.dim_g0}")
        ss = _even_subsystem_full_rank(rs, sat.grading)
        if ss != pair.g0_semisimple:
            fail("stored g0_semisimple flag contradicts the grading vector")
    else:
        if sat.grading is not None:
            fail("outer row with a grading vector")
        if pair._meets_g0_outer is None:
            fail("outer row without curated meets_g0 flag")
    # orbit labels must resolve (dimension checks happen there)
    if pair.tilde_label:
        _resolve_tilde(pair)
    if pair.co0_label:
        _resolve_co0_dim(pair)


def _grade(grading, root) -> int:
    return sum(g * c for g, c in zip(grading, root)) % 2


def _even_subsystem_full_rank(rs, grading) -> bool:
    even = [[Fraction(x) for x in c] for c in rs.positive_roots
            if _grade(grading, c) == 0]
    if not even:
        return False
    from . import linalg
    return linalg.rank(even) == rs.rank


def _load_catalog():
    if _CATALOG_CACHE:
        return _CATALOG_CACHE
    path = os.path.join(_DATA_DIR, "involutions.txt")
    with open(path, encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f.strip() for f in line.split("|")]
            if len(fields) != 14:
                raise ValueError(f"involutions.txt line {ln}: expected 14 fields")
            (tname, pid, cls, g0name, in_out, grading_s, black_s, arrows_s,
             d0_s, d1_s, ss_s, meets_s, tilde_s, co0_s) = fields
            rs = rootsys.build(tname[0], int(tname[1:]))
            inner = in_out == "inner"
            grading = None
            if grading_s != "-":
                grading = tuple(int(x) for x in grading_s.split(","))
            sat = SatakeDiagram(rs=rs, black=_parse_nodes(black_s),
                                arrows=_parse_arrows(arrows_s),
                                inner=inner, grading=grading)
            pair = SymmetricPair(
                rs=rs, pair_id=pid, class_label=cls, g0_name=g0name,
                dim_g0=int(d0_s), dim_g1=int(d1_s), satake=sat,
                g0_semisimple=(ss_s == "T"),
                _meets_g0_outer=None if meets_s == "-" else (meets_s == "T"),
                tilde_label=None if tilde_s == "-" else tilde_s,
                co0_label=None if co0_s == "-" else co0_s)
            _validate(pair, ln)
            _CATALOG_CACHE.setdefault((rs.type_letter, rs.rank), []).append(pair)
    return _CATALOG_CACHE


def catalog(rs: RootSystem):
    """All involution classes of the given simple algebra, validated."""
    data = _load_catalog()
    key = (rs.type_letter, rs.rank)
    if key not in data:
        if rs.type_letter == "B" and rs.rank == 2:
            raise KeyError("B2 is catalogued as C2 (so5 = sp4)")
        if rs.type_letter == "D" and rs.rank == 3:
            raise KeyError("D3 is catalogued as A3 (so6 = sl4)")
        raise KeyError(f"no catalog data for {rs.name} "
                       f"(catalog covers ranks up to {_CATALOG_MAX_RANK})")
    return list(data[key])


def find_pair(rs: RootSystem, g0_name: str) -> SymmetricPair:
    for pair in catalog(rs):
        if pair.g0_name == g0_name or pair.pair_id == f"{rs.name}:{g0_name}" \
                or pair.class_label == g0_name:
            return pair
    raise KeyError(f"no pair ({rs.name}, {g0_name}) in the catalog")


# ---------------------------------------------------------------------------
# Ranks and intersection criteria


def symmetric_rank(pair: SymmetricPair) -> int:
    """Rank of G/G0: the number of white nodes minus the number of arrows."""
    sat = pair.satake
    return pair.rs.rank - len(sat.black) - len(sat.arrows)


def orbit_meets_g1(pair: SymmetricPair, diagram: orbits.WeightedDynkinDiagram) -> bool:
    """Whether the nilpotent orbit with the given weighted diagram meets the
    odd part: black nodes inside the diagram's zeros, and equal labels on
    arrow-joined nodes."""
    if diagram.rs is not pair.rs:
        raise ValueError("diagram and pair live on different root systems")
    labels = diagram.labels
    if any(labels[b] != 0 for b in pair.satake.black):
        return False
    return all(labels[a] == labels[b] for a, b in pair.satake.arrows)


def _meets_g1_highest_root(pair: SymmetricPair) -> bool:
    rs = pair.rs
    theta = rootsys.highest_root_weight(rs)
    for b in pair.satake.black:
        alpha = tuple(int(j == b) for j in range(rs.rank))
        if rs.pairing_weight_root(theta, alpha) != 0:
            return False
    return True


def meets_g0_inner(pair: SymmetricPair) -> bool:
    """Whether the even root subsystem contains a long root."""
    sat = pair.satake
    rs = pair.rs
    return any(_grade(sat.grading, c) == 0 and rs.is_long(c)
               for c in rs.positive_roots)


def omin_intersections(pair: SymmetricPair) -> dict:
    """Whether the adjoint minimal orbit meets g0 and g1."""
    g1 = _meets_g1_highest_root(pair)
    # cross-check against the general black-nodes-in-zeros criterion
    if g1 != orbit_meets_g1(pair, orbits.minimal_orbit_diagram(pair.rs)):
        raise AssertionError(f"{pair.pair_id}: minimal-orbit criteria disagree")
    if pair.satake.inner:
        g0 = meets_g0_inner(pair)
    else:
        g0 = pair._meets_g0_outer
    return {"meets_g0": g0, "meets_g1": g1}


# ---------------------------------------------------------------------------
# Classification of empty intersections

# The expected classification (family descriptors).
G1_EMPTY_FAMILIES = (
    "(A_{2n-1}, sp_{2n}), n >= 2",
    "(D_{n+1}, so_{2n+1}), n >= 3",
    "(E6, f4)",
    "(C_n, sp_{2k} + sp_{2n-2k}), 1 <= k <= n-1",
    "(B_n, so_{2n}), n >= 3",
    "(F4, so9)",
)
G0_EMPTY_FAMILIES = (
    "(sl_{n+1}, so_{n+1})  [maximal rank]",
    "(sp_{2n}, gl_n)  [maximal rank]",
)

_FAMILY_OF_CLASS = {
    "AII": G1_EMPTY_FAMILIES[0],
    "CII": G1_EMPTY_FAMILIES[3],
    "EIV": G1_EMPTY_FAMILIES[2],
    "FII": G1_EMPTY_FAMILIES[5],
}


def _g1_family(pair: SymmetricPair):
    cls = pair.class_label
    if cls in _FAMILY_OF_CLASS:
        return _FAMILY_OF_CLASS[cls]
    if cls == "BI" and pair.g0_name == f"so{2*pair.rs.rank}":
        return G1_EMPTY_FAMILIES[4]
    if cls == "DI" and pair.g0_name == f"so{2*pair.rs.rank - 1}":
        return G1_EMPTY_FAMILIES[1]
    return None


def _g0_family(pair: SymmetricPair):
    if pair.class_label == "AI" or (pair.rs.name == "A1" and pair.class_label == "AI"):
        return G0_EMPTY_FAMILIES[0]
    if pair.class_label == "CI":
        return G0_EMPTY_FAMILIES[1]
    return None


def sweep_types(max_rank: int = 8):
    """The canonical list of simple types for catalog-wide sweeps."""
    out = []
    for letter in "ABCD":
        for n in range(_CATALOG_MIN_RANK[letter], max_rank + 1):
            out.append((letter, n))
    out += [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
    return out


def classify_empty(max_rank: int = 8) -> dict:
    """Run the intersection criteria over the whole catalog and classify the
    pairs with empty minimal-orbit intersections.  The computed lists are
    compared against the expected family descriptors; a mismatch is flagged
    as a regression (never silently patched)."""
    g1_empty, g0_empty = [], []
    evidence = {}
    for letter, n in sweep_types(max_rank):
        rs = rootsys.build(letter, n)
        for pair in catalog(rs):
            inter = omin_intersections(pair)
            evidence[pair.pair_id] = inter
            if not inter["meets_g1"]:
                g1_empty.append(pair)
            if not inter["meets_g0"]:
                g0_empty.append(pair)
    regressions = []
    g1_families, g0_families = set(), set()
    for pair in g1_empty:
        fam = _g1_family(pair)
        if fam is None:
            regressions.append(f"unexpected g1-empty pair {pair.name}")
        else:
            g1_families.add(fam)
    for pair in g0_empty:
        fam = _g0_family(pair)
        if fam is None:
            regressions.append(f"unexpected g0-empty pair {pair.name}")
        else:
            g0_families.add(fam)
    # every family must actually occur, and none may have leaked a member
    for letter, n in sweep_types(max_rank):
        rs = rootsys.build(letter, n)
        for pair in catalog(rs):
            if _g1_family(pair) and pair not in g1_empty:
                regressions.append(f"{pair.name} should be g1-empty but is not")
            if _g0_family(pair) and pair not in g0_empty:
                regressions.append(f"{pair.name} should be g0-empty but is not")
    if g1_families != set(G1_EMPTY_FAMILIES):
        regressions.append(f"g1-empty families {sorted(g1_families)} != expected")
    if g0_families != set(G0_EMPTY_FAMILIES):
        regressions.append(f"g0-empty families {sorted(g0_families)} != expected")
    return {
        "g1_empty": g1_empty,
        "g0_empty": g0_empty,
        "g1_families": sorted(g1_families),
        "g0_families": sorted(g0_families),
        "evidence": evidence,
        "regressions": regressions,
        "matches_expected": not regressions,
    }


# ---------------------------------------------------------------------------
# Orbit-label resolution (tilde and co0 data of the six special families)


def _resolve_tilde(pair: SymmetricPair) -> orbits.OrbitEntry:
    label = pair.tilde_label
    rs = pair.rs
    if label.startswith("orbit:"):
        return orbits.orbit_by_label(rs, label[6:])
    if label.startswith("part:"):
        parts = tuple(int(x) for x in label[5:].split(","))
        diagram = orbits.diagram_from_partition(rs, parts)
        dim = orbits.grading_summary(diagram).orbit_dim
        return orbits.OrbitEntry(rs, label, parts, diagram, dim)
    raise ValueError(f"{pair.pair_id}: cannot resolve tilde label {label!r}")


def tilde_orbit(pair: SymmetricPair) -> orbits.OrbitEntry:
    """The nilpotent G-orbit generated by the minimal orbit of g1.  For
    pairs whose minimal orbit meets g1 this is the minimal orbit itself."""
    if pair.tilde_label:
        return _resolve_tilde(pair)
    if not omin_intersections(pair)["meets_g1"]:
        raise KeyError(f"{pair.pair_id}: no curated tilde orbit")
    d = orbits.minimal_orbit_diagram(pair.rs)
    dim = orbits.grading_summary(d).orbit_dim
    return orbits.OrbitEntry(pair.rs, "min", None, d, dim)


def _resolve_co0_dim(pair: SymmetricPair) -> int:
    """Dimension of the G0-orbit co0 = phi(O_min) for the six special
    pairs, recomputed from its partition/diagram data."""
    label = pair.co0_label
    if label.startswith("g0orbit:"):
        _, tname, olabel = label.split(":")
        rs0 = rootsys.build(tname[0], int(tname[1:]))
        return orbits.orbit_by_label(rs0, olabel).dim
    if label.startswith("part:"):
        parts = tuple(int(x) for x in label[5:].split(","))
        kind = _g0_classical_kind(pair)
        return orbits.partition_orbit_dim(kind, parts)
    if label.startswith("prod:"):
        p1, p2 = label[5:].split(";")
        d = 0
        for ps in (p1, p2):
            parts = tuple(int(x) for x in ps.split(","))
            d += orbits.partition_orbit_dim("sp", parts)
        return d
    raise ValueError(f"{pair.pair_id}: cannot resolve co0 label {label!r}")


def _g0_classical_kind(pair: SymmetricPair) -> str:
    if pair.g0_name.startswith("so"):
        return "so"
    if pair.g0_name.startswith("sp"):
        return "sp"
    raise ValueError(f"{pair.pair_id}: g0 is not a single classical factor")


def co0_orbit_dim(pair: SymmetricPair) -> int:
    if not pair.co0_label:
        raise KeyError(f"{pair.pair_id}: no curated co0 orbit")
    return _resolve_co0_dim(pair)


def co0_ambient_partition(pair: SymmetricPair):
    """Jordan type of a co0 element inside the ambient classical algebra
    (classical rows only): pad with ones, or merge the two blocks."""
    label = pair.co0_label
    N = {"A": pair.rs.rank + 1, "B": 2 * pair.rs.rank + 1,
         "C": 2 * pair.rs.rank, "D": 2 * pair.rs.rank}[pair.rs.type_letter]
    if label.startswith("part:"):
        parts = tuple(int(x) for x in label[5:].split(","))
        return orbits.partition_pad(parts, N)
    if label.startswith("prod:"):
        p1, p2 = label[5:].split(";")
        merged = orbits.partition_merge(
            tuple(int(x) for x in p1.split(",")),
            tuple(int(x) for x in p2.split(",")))
        return orbits.partition_pad(merged, N)
    raise ValueError(f"{pair.pair_id}: co0 is not classical partition data")


# ---------------------------------------------------------------------------
# Projection summary (dimensions of the two projections of the closed
# minimal orbit)


def projection_summary(pair: SymmetricPair) -> dict:
    rs = pair.rs
    inter = omin_intersections(pair)
    dmin = rootsys.min_orbit_dim(rs, rootsys.highest_root_weight(rs))
    if inter["meets_g1"]:
        finite = "psi"
        dim_psi = dmin
        dim_phi = dmin - 1
        psi_desc = "degree-2 over the cone over the closed orbit of h1 = e - f"
        phi_desc = "cone over the closed G0-orbit of the characteristic h"
        if not inter["meets_g0"]:
            if pair.class_label == "AI":
                n = rs.rank + 1
                psi_desc = f"degree-2 onto Sym^0_2({n}) (traceless symmetric rank<=2)"
            elif pair.class_label == "CI":
                n = rs.rank
                psi_desc = f"degree-2 onto Sym_1({n}) x Sym_1({n})"
    else:
        finite = "phi"
        t = tilde_orbit(pair)
        dim_phi = dmin
        dim_psi = t.dim // 2
        phi_desc = (f"degree-2 onto the closure of the G0-orbit "
                    f"{pair.co0_label} (dim {co0_orbit_dim(pair)})")
        psi_desc = (f"closure of the minimal G0-orbit of g1 "
                    f"= half of {t.label} (dim {dim_psi})")
    return {
        "pair": pair.pair_id,
        "finite_map": finite,
        "degree": 2,
        "dim_omin": dmin,
        "dim_phi_image": dim_phi,
        "dim_psi_image": dim_psi,
        "phi_desc": phi_desc,
        "psi_desc": psi_desc,
    }


# ---------------------------------------------------------------------------
# Secant defect of the minimal G0-orbit in g1


def secant_defect_g1(pair: SymmetricPair) -> dict:
    """Secant defect of the minimal G0-orbit of g1, from the grading of the
    ambient orbit it generates: delta = dim g(2) - 1.  Requires g0
    semisimple (so that g1 is a simple g0-module)."""
    if not pair.g0_semisimple:
        raise ValueError(
            f"{pair.pair_id}: g1 is not a simple g0-module (g0 has a centre)")
    t = tilde_orbit(pair)
    g = orbits.grading_summary(t.diagram)
    delta = g.dim(2) - 1
    dim_min_g1 = t.dim // 2
    cs_dim = 2 * dim_min_g1 - delta
    fills = cs_dim == pair.dim_g1
    return {
        "pair": pair.pair_id,
        "delta": delta,
        "dim_min_orbit_g1": dim_min_g1,
        "cs_dim": cs_dim,
        "dim_g1": pair.dim_g1,
        "fills_g1": fills,
        "tilde": t.label,
        "dim_tilde": t.dim,
        "symmetric_rank": symmetric_rank(pair),
    }


# ---------------------------------------------------------------------------
# The saturation identity  G . phi(O_min) = G . psi(O_min)


def theorem66_check(pair: SymmetricPair) -> dict:
    """For a pair with empty O_min ∩ g1, certify that the G-saturations of
    the two projection images agree: classical rows by the ambient-Jordan-
    type identity, exceptional rows by additivity of sl2-decompositions."""
    if omin_intersections(pair)["meets_g1"]:
        raise ValueError(f"{pair.pair_id}: minimal orbit meets g1; "
                         "the saturation identity is immediate there")
    t = tilde_orbit(pair)
    if pair.class_label == "EIV":      # (E6, f4)
        return _theorem66_exceptional(pair, t, "F4", (0, 0, 0, 1))
    if pair.class_label == "FII":      # (F4, so9)
        return _theorem66_exceptional(pair, t, "B4", (0, 0, 0, 1))
    ambient = co0_ambient_partition(pair)
    ok = ambient == t.partition
    return {"pair": pair.pair_id, "holds": ok, "method": "partition",
            "co0_ambient_partition": ambient, "tilde_partition": t.partition}


def _theorem66_exceptional(pair, t, g0_type, g1_weight):
    rs0 = rootsys.build(g0_type[0], int(g0_type[1:]))
    if rootsys.weyl_dim(rs0, g1_weight) != pair.dim_g1:
        raise AssertionError("g1-module weight does not match dim g1")
    if pair.co0_label.startswith("g0orbit:"):
        _, tname, olabel = pair.co0_label.split(":")
        d0 = orbits.orbit_by_label(rootsys.build(tname[0], int(tname[1:])), olabel).diagram
    else:
        parts = tuple(int(x) for x in pair.co0_label[5:].split(","))
        d0 = orbits.diagram_from_partition(rs0, parts)
    g0_dec = orbits.sl2_decomposition(d0)
    g1_dec = orbits.sl2_restrict(rs0, g1_weight, d0.labels)
    total = {}
    for dec in (g0_dec, g1_dec):
        for j, m in dec.items():
            total[j] = total.get(j, 0) + m
    ambient_dec = orbits.sl2_decomposition(t.diagram)
    ok = total == ambient_dec
    return {"pair": pair.pair_id, "holds": ok, "method": "sl2-decomposition",
            "g0_part": g0_dec, "g1_part": g1_dec, "sum": total,
            "ambient": ambient_dec}
