"""Weighted Dynkin diagrams, gradings and nilpotent-orbit arithmetic.

A nilpotent orbit is recorded by its weighted Dynkin diagram: the labels
alpha(h) in {0,1,2} of the dominant characteristic h on the simple roots.
Evaluating every root on h gives the associated Z-grading, from which orbit
dimension, height and the multiplicities of the ad-sl2 decomposition all
follow:

    dim O      = dim g - dim g(0) - dim g(1)
    height     = max { j : g(j) != 0 }
    m_j        = dim g(j) - dim g(j+2)   (j >= 0)

For classical types, diagrams are also computed from Jordan partitions by
the usual eigenvalue-sorting rule.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from . import rootsys
from .rootsys import RootSystem

_DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


@dataclass(frozen=True)
class WeightedDynkinDiagram:
    """Per-node labels (Bourbaki order) of a dominant characteristic."""

    rs: RootSystem
    labels: tuple

    def __post_init__(self):
        if len(self.labels) != self.rs.rank:
            raise ValueError("label count does not match the rank")
        if any(l not in (0, 1, 2) for l in self.labels):
            raise ValueError(f"weighted Dynkin labels must lie in {{0,1,2}}: {self.labels}")

    def level(self, root) -> int:
        """Value of a root (simple-root coords) on the characteristic."""
        return sum(l * c for l, c in zip(self.labels, root))

    def paper_labels(self):
        return rootsys.to_paper_order(self.rs.type_letter, self.rs.rank, self.labels)

    def __str__(self):
        return "-".join(str(x) for x in self.paper_labels())


@dataclass(frozen=True)
class GradingSummary:
    dims: dict          # i >= 0 -> dim g(i); dim g(-i) = dim g(i)
    orbit_dim: int
    height: int
    sl2_mults: dict     # j -> m_j, zero entries omitted

    def dim(self, i: int) -> int:
        return self.dims.get(abs(i), 0)


def grading_summary(diagram: WeightedDynkinDiagram) -> GradingSummary:
    rs = diagram.rs
    dims = {0: rs.rank}
    for c in rs.positive_roots:
        lev = diagram.level(c)
        if lev == 0:
            dims[0] += 2
        else:
            dims[lev] = dims.get(lev, 0) + 1
    height = max(dims)
    total = dims[0] + 2 * sum(v for k, v in dims.items() if k > 0)
    if total != rs.dim:
        raise AssertionError("grading dimensions do not sum to dim g")
    orbit_dim = rs.dim - dims[0] - dims.get(1, 0)
    mults = {}
    for j in range(height + 1):
        m = dims.get(j, 0) - dims.get(j + 2, 0)
        if m < 0:
            raise ValueError(
                f"negative sl2 multiplicity m_{j}={m}: not nilpotent-orbit data")
        if m:
            mults[j] = m
    if sum(m * (j + 1) for j, m in mults.items()) != rs.dim:
        raise AssertionError("sl2 multiplicities do not sum to dim g")
    return GradingSummary(dims=dims, orbit_dim=orbit_dim, height=height, sl2_mults=mults)


def sl2_decomposition(diagram: WeightedDynkinDiagram) -> dict:
    """Multiplicities m_j of the (j+1)-dimensional sl2-constituents of g
    under the triple attached to the diagram."""
    return grading_summary(diagram).sl2_mults


def minimal_orbit_diagram(rs: RootSystem) -> WeightedDynkinDiagram:
    """Diagram of the minimal nilpotent orbit: labels (alpha, theta^vee).

    The resulting grading has height 2, a one-dimensional top piece, and
    orbit dimension equal to ``min_orbit_dim`` of the adjoint module."""
    theta = rs.highest_root
    labels = []
    for i in range(rs.rank):
        # alpha_i(theta^vee) = 2 (alpha_i, theta) / (theta, theta)
        a = rs.pairing_weight_root(rs.root_to_weight_coords(_unit(rs, i)), theta)
        if a.denominator != 1:
            raise AssertionError("minimal-orbit label is not an integer")
        labels.append(int(a))
    d = WeightedDynkinDiagram(rs, tuple(labels))
    g = grading_summary(d)
    if g.height != 2 or g.sl2_mults.get(2) != 1:
        raise AssertionError("minimal orbit diagram failed its grading checks")
    return d


def _unit(rs, i):
    return tuple(int(i == j) for j in range(rs.rank))


# ---------------------------------------------------------------------------
# Partitions of classical nilpotent orbits


def validate_partition(kind: str, parts) -> tuple:
    """kind is 'sl', 'sp' or 'so'; parts a weakly decreasing partition.
    sp: odd parts with even multiplicity; so: even parts with even
    multiplicity."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if any(p <= 0 for p in parts):
        raise ValueError("partition parts must be positive")
    mult = {}
    for p in parts:
        mult[p] = mult.get(p, 0) + 1
    if kind == "sp":
        bad = [p for p, m in mult.items() if p % 2 == 1 and m % 2 == 1]
        if bad:
            raise ValueError(f"odd parts {bad} need even multiplicity in sp")
    elif kind == "so":
        bad = [p for p, m in mult.items() if p % 2 == 0 and m % 2 == 1]
        if bad:
            raise ValueError(f"even parts {bad} need even multiplicity in so")
    elif kind != "sl":
        raise ValueError(f"unknown classical kind {kind!r}")
    return parts


def partition_transpose(parts):
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0]))


def partition_orbit_dim(kind: str, parts) -> int:
    """Dimension of the nilpotent orbit with the given Jordan partition."""
    parts = validate_partition(kind, parts)
    N = sum(parts)
    s = partition_transpose(parts)
    sq = sum(x * x for x in s)
    odd = sum(1 for p in parts if p % 2 == 1)
    if kind == "sl":
        return N * N - sq
    if kind == "sp":
        return (N * (N + 1) - sq - odd) // 2
    return (N * (N - 1) - sq + odd) // 2


def partition_height(kind: str, parts) -> int:
    """Height of the orbit, from the h-eigenvalues on the natural module."""
    parts = validate_partition(kind, parts)
    eig = _h_eigenvalues(parts)
    if kind in ("sl", "sp"):
        return 2 * (parts[0] - 1)
    top = eig[0] + eig[1] if len(eig) > 1 else 0
    return top


def _h_eigenvalues(parts):
    eig = []
    for p in parts:
        eig.extend(range(p - 1, -p, -2))
    return sorted(eig, reverse=True)


def diagram_from_partition(rs: RootSystem, parts) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of the classical orbit with Jordan type
    ``parts`` (sl for type A on n+1 letters, sp for C, so for B/D)."""
    t, n = rs.type_letter, rs.rank
    kind = {"A": "sl", "B": "so", "C": "sp", "D": "so"}.get(t)
    if kind is None:
        raise ValueError(f"no partition model for type {t}")
    parts = validate_partition(kind, parts)
    N = sum(parts)
    expected_N = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}[t]
    if N != expected_N:
        raise ValueError(f"partition of {N} does not match {rs.name} (need {expected_N})")
    eig = _h_eigenvalues(parts)
    if t == "A":
        labels = tuple(eig[i] - eig[i + 1] for i in range(n))
    else:
        top = eig[:n]
        if t == "B":
            labels = tuple(top[i] - top[i + 1] for i in range(n - 1)) + (top[n - 1],)
        elif t == "C":
            labels = tuple(top[i] - top[i + 1] for i in range(n - 1)) + (2 * top[n - 1],)
        else:
            labels = tuple(top[i] - top[i + 1] for i in range(n - 1)) + (top[n - 2] + top[n - 1],)
    d = WeightedDynkinDiagram(rs, labels)
    g = grading_summary(d)
    if g.orbit_dim != partition_orbit_dim(kind, parts):
        raise AssertionError(
            f"{rs.name} {parts}: diagram dim {g.orbit_dim} != partition dim "
            f"{partition_orbit_dim(kind, parts)}")
    if g.height != partition_height(kind, parts):
        raise AssertionError(f"{rs.name} {parts}: diagram height {g.height} != partition height")
    return d


def partition_pad(parts, N) -> tuple:
    """Partition padded with 1s up to total N (ambient Jordan type of a
    subalgebra element under so_m in so_{m+k} etc.)."""
    parts = tuple(parts)
    missing = N - sum(parts)
    if missing < 0:
        raise ValueError("cannot pad a partition downward")
    return tuple(sorted(parts + (1,) * missing, reverse=True))


def partition_merge(a, b) -> tuple:
    return tuple(sorted(tuple(a) + tuple(b), reverse=True))


# ---------------------------------------------------------------------------
# sl2-restriction of a simple module along a characteristic


def sl2_restrict(rs: RootSystem, lam, labels) -> dict:
    """Decomposition multiplicities of V_lambda under the sl2-triple whose
    characteristic has the given simple-root labels: m_j counts the
    (j+1)-dimensional constituents."""
    mults = rootsys.weight_multiplicities(rs, lam)
    counts = {}
    for nu, m in mults.items():
        c = rs.weight_to_root_coords(nu)
        val = sum(Fraction(l) * x for l, x in zip(labels, c))
        if val.denominator != 1:
            raise AssertionError("weight has non-integral value on the characteristic")
        counts[int(val)] = counts.get(int(val), 0) + m
    out = {}
    j = max(counts)
    for k in range(j, -1, -1):
        m = counts.get(k, 0) - counts.get(k + 2, 0)
        if m < 0:
            raise AssertionError("negative sl2 multiplicity in restriction")
        if m:
            out[k] = m
    if sum(m * (k + 1) for k, m in out.items()) != sum(mults.values()):
        raise AssertionError("sl2 restriction does not sum to dim V")
    return out


# ---------------------------------------------------------------------------
# Curated secant-cone orbit data


class OrbitEntry:
    """One curated orbit: label, optional partition, diagram, dimension."""

    def __init__(self, rs, label, partition, diagram, dim):
        self.rs = rs
        self.label = label
        self.partition = partition
        self.diagram = diagram
        self.dim = dim

    def __repr__(self):
        return f"OrbitEntry({self.rs.name}, {self.label}, dim={self.dim})"


_ORBIT_CACHE = {}


def _load_orbit_file():
    if _ORBIT_CACHE:
        return _ORBIT_CACHE
    path = os.path.join(_DATA_DIR, "secant_cone_orbits.txt")
    with open(path, encoding="utf-8") as fh:
        for ln, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                fields = [f.strip() for f in line.split("|")]
                tname, label, part_s, diag_s, dim_s = fields
                letter, rank = tname[0], int(tname[1:])
                rs = rootsys.build(letter, rank)
                partition = None
                if part_s != "-":
                    partition = tuple(int(x) for x in part_s.split(","))
                labels = tuple(int(x) for x in diag_s.split(","))
                dim = int(dim_s)
                diagram = WeightedDynkinDiagram(rs, labels)
                g = grading_summary(diagram)
                if g.orbit_dim != dim:
                    raise ValueError(f"stored dim {dim} != recomputed {g.orbit_dim}")
                if partition is not None:
                    d2 = diagram_from_partition(rs, partition)
                    if d2.labels != labels:
                        raise ValueError(
                            f"partition {partition} gives diagram {d2.labels}, stored {labels}")
                entry = OrbitEntry(rs, label, partition, diagram, dim)
                _ORBIT_CACHE.setdefault((letter, rank), []).append(entry)
            except Exception as exc:
                raise ValueError(
                    f"secant_cone_orbits.txt line {ln}: corrupt entry ({exc})") from exc
    return _ORBIT_CACHE


def secant_cone_orbits(rs: RootSystem):
    """The curated nilpotent orbits inside the cone over the secant variety
    of the adjoint minimal orbit, each dimension revalidated at load."""
    data = _load_orbit_file()
    key = (rs.type_letter, rs.rank)
    if key not in data:
        raise KeyError(f"no curated secant-cone orbit data for {rs.name}")
    return list(data[key])


def orbit_by_label(rs: RootSystem, label: str) -> OrbitEntry:
    for entry in secant_cone_orbits(rs):
        if entry.label == label:
            return entry
    raise KeyError(f"no orbit labelled {label!r} for {rs.name}")
