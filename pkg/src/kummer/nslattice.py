"""The Neron-Severi lattice of a generic Jacobian Kummer surface.

Basis (N_0, N_1..N_5, N_12..N_45, H) with H^2 = 4, N^2 = -2, everything else
orthogonal.  Node labels live on even subsets of the six Weierstrass indices
modulo complement (the 2-torsion group of the Jacobian); trope labels live on
odd subsets modulo complement.  A node lies on a trope exactly when the
symmetric difference of their subsets is a singleton modulo complement, which
reproduces the classical (16,6) configuration.

The finite symmetry group of the chamber (order 6! * 2^5 = 23040) is
generated by the S6 permutations, the fifteen 2-torsion translations, and
the node-trope switch.
"""

from __future__ import annotations

from .linalg import (
    det,
    elementary_divisors,
    hnf_row,
    kernel_basis,
    mat,
    mat_mul,
    mat_vec,
    rank,
    transpose,
)
from .rationals import QQ, qq_str

FULL = frozenset(range(6))

# paper coordinate order
NODE_ORDER = (
    "0", "1", "2", "3", "4", "5",
    "12", "13", "14", "15", "23", "24", "25", "34", "35", "45",
)
TROPE_ORDER = NODE_ORDER  # same label scheme
DIM = 17  # 16 nodes + H
H_INDEX = 16


def node_subset(label: str) -> frozenset:
    """Even subset for a node label: n_0 -> {}, n_i -> {0,i}, n_ij -> {i,j}."""
    if label == "0":
        return frozenset()
    if len(label) == 1:
        return frozenset({0, int(label)})
    return frozenset({int(label[0]), int(label[1])})


def trope_subset(label: str) -> frozenset:
    """Odd subset for a trope label: T_0 -> {0}, T_i -> {i}, T_ij -> {0,i,j}."""
    if label == "0":
        return frozenset({0})
    if len(label) == 1:
        return frozenset({int(label)})
    return frozenset({0, int(label[0]), int(label[1])})


def canon_even(s: frozenset) -> str:
    if len(s) > 2:
        s = FULL - s
    if len(s) == 0:
        return "0"
    if 0 in s:
        (i,) = sorted(s - {0})
        return str(i)
    i, j = sorted(s)
    return f"{i}{j}"


def canon_odd(s: frozenset) -> str:
    if len(s) > 3:
        s = FULL - s
    if len(s) == 1:
        (i,) = s
        return str(i)
    if 0 not in s:
        s = FULL - s
    i, j = sorted(s - {0})
    return f"{i}{j}"


NODE_INDEX = {lab: i for i, lab in enumerate(NODE_ORDER)}


def gram_ns():
    """17x17 Gram matrix on the (nodes, H) basis."""
    g = [[QQ(0)] * DIM for _ in range(DIM)]
    for i in range(16):
        g[i][i] = QQ(-2)
    g[H_INDEX][H_INDEX] = QQ(4)
    return g


GRAM = gram_ns()


def pair(v, w):
    s = QQ(0)
    for i in range(16):
        s -= 2 * v[i] * w[i]
    s += 4 * v[H_INDEX] * w[H_INDEX]
    return s


def norm(v):
    return pair(v, v)


def node_class(label: str):
    v = [QQ(0)] * DIM
    v[NODE_INDEX[label]] = QQ(1)
    return v


def h_class():
    v = [QQ(0)] * DIM
    v[H_INDEX] = QQ(1)
    return v


def trope_incident_nodes(label: str):
    """The 6 node labels on the given trope."""
    th = trope_subset(label)
    out = []
    for nl in NODE_ORDER:
        sym = node_subset(nl) ^ th
        if len(sym) in (1, 5):
            out.append(nl)
    return out


def trope_class(label: str):
    """T = (H - sum of the 6 incident nodes) / 2."""
    if label not in NODE_INDEX:
        raise ValueError(f"invalid trope label {label!r}")
    v = [QQ(0)] * DIM
    v[H_INDEX] = QQ(1, 2)
    nodes = trope_incident_nodes(label)
    assert len(nodes) == 6
    for nl in nodes:
        v[NODE_INDEX[nl]] = QQ(-1, 2)
    return v


def incidence_matrix():
    """16x16 node-trope incidence (rows nodes, columns tropes)."""
    m = []
    for nl in NODE_ORDER:
        row = []
        ns = node_subset(nl)
        for tl in TROPE_ORDER:
            row.append(1 if len(ns ^ trope_subset(tl)) in (1, 5) else 0)
        m.append(row)
    return m


def weyl_vector_proj():
    """2H - sum N_mu / 2."""
    v = [QQ(-1, 2)] * 16 + [QQ(2)]
    return v


# -- integral structure ------------------------------------------------------


def _ns_generators_scaled():
    """Generators of NS scaled by 2 (integer coordinates)."""
    gens = []
    for lab in NODE_ORDER:
        gens.append([2 * c for c in node_class(lab)])
    gens.append([2 * c for c in h_class()])
    for lab in TROPE_ORDER:
        gens.append([2 * c for c in trope_class(lab)])
    return [[int(x) for x in row] for row in gens]


class NSLattice:
    """Integral model: HNF basis of the ZZ-span of nodes, H, and tropes."""

    def __init__(self):
        h, _ = hnf_row(_ns_generators_scaled())
        basis2 = [row for row in h if any(row)]
        assert len(basis2) == DIM, "NS must have rank 17"
        self.basis2 = basis2  # rows: doubled coordinates of a ZZ-basis
        self.basis = [[QQ(x, 2) for x in row] for row in basis2]
        self.gram_basis = [
            [int(pair(self.basis[i], self.basis[j])) for j in range(DIM)]
            for i in range(DIM)
        ]

    def coordinates(self, v):
        """Integer coordinates of v in the NS basis, or None if not in NS."""
        v2 = [2 * QQ(c) for c in v]
        coords = [QQ(0)] * DIM
        rows = self.basis2
        # back-substitution against the echelon rows
        lead_cols = []
        for row in rows:
            for j, x in enumerate(row):
                if x != 0:
                    lead_cols.append(j)
                    break
        rem = list(v2)
        for i, row in enumerate(rows):
            c = lead_cols[i]
            q = rem[c] / row[c]
            coords[i] = q
            for j in range(DIM):
                rem[j] = rem[j] - q * row[j]
        if any(x != 0 for x in rem):
            return None
        if any(x.denominator != 1 for x in coords):
            return None
        return [int(x) for x in coords]

    def is_in_ns(self, v) -> bool:
        return self.coordinates(v) is not None

    def is_primitive(self, v) -> bool:
        coords = self.coordinates(v)
        if coords is None:
            return False
        from math import gcd

        g = 0
        for c in coords:
            g = gcd(g, c)
        return g == 1

    def has_section(self, v) -> bool:
        """For a primitive elliptic class D: does some class pair with D to 1?"""
        if not self.is_in_ns(v):
            raise ValueError("divisor is not in NS")
        if norm(v) != 0:
            raise ValueError("divisor does not have self-intersection 0")
        if not self.is_primitive(v):
            raise ValueError("divisor is not primitive")
        from math import gcd

        g = 0
        for b in self.basis:
            g = gcd(g, int(pair(v, b)))
        return abs(g) == 1

    def disc_group(self):
        return [d for d in elementary_divisors(self.gram_basis) if d != 1]

    def det(self) -> int:
        return int(det(mat(self.gram_basis)))


_NS = None


def ns_lattice() -> NSLattice:
    global _NS
    if _NS is None:
        _NS = NSLattice()
    return _NS


# -- the chamber symmetry group ----------------------------------------------

# symbols 0..15: nodes in NODE_ORDER; 16..31: tropes in TROPE_ORDER


class Isometry:
    """Group element: permutation of the 32 node/trope classes + 17x17 matrix."""

    __slots__ = ("perm", "matrix", "tag")

    def __init__(self, perm, matrix, tag=""):
        self.perm = tuple(perm)
        self.matrix = matrix
        self.tag = tag

    def __mul__(self, other: "Isometry") -> "Isometry":
        p = tuple(self.perm[j] for j in other.perm)
        m = mat_mul(self.matrix, other.matrix)
        return Isometry(p, m, "composite")

    def apply(self, v):
        return mat_vec(self.matrix, v)

    def preserves_gram(self) -> bool:
        mt = transpose(self.matrix)
        return mat_mul(mat_mul(mt, GRAM), self.matrix) == GRAM

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.perm == other.perm

    def __hash__(self):
        return hash(self.perm)


def _perm_from_label_maps(node_map, trope_map):
    perm = [0] * 32
    for i, lab in enumerate(NODE_ORDER):
        perm[i] = NODE_INDEX[node_map[lab]]
    for i, lab in enumerate(TROPE_ORDER):
        perm[16 + i] = 16 + NODE_INDEX[trope_map[lab]]
    return perm


def _matrix_from_columns(cols):
    """cols[i] = image vector of basis element i."""
    return transpose(mat(cols))


def _node_action_matrix(node_map):
    cols = [node_class(node_map[lab]) for lab in NODE_ORDER]
    cols.append(h_class())
    return _matrix_from_columns(cols)


def weierstrass_permutation(perm6) -> Isometry:
    """Isometry induced by a permutation of the six Weierstrass indices."""
    pi = {i: perm6[i] for i in range(6)}
    node_map = {
        lab: canon_even(frozenset(pi[i] for i in node_subset(lab)))
        for lab in NODE_ORDER
    }
    trope_map = {
        lab: canon_odd(frozenset(pi[i] for i in trope_subset(lab)))
        for lab in TROPE_ORDER
    }
    return Isometry(
        _perm_from_label_maps(node_map, trope_map),
        _node_action_matrix(node_map),
        "permutation",
    )


def translation(eps_label: str) -> Isometry:
    """Translation by the 2-torsion point with node label eps_label."""
    eps = node_subset(eps_label)
    node_map = {lab: canon_even(node_subset(lab) ^ eps) for lab in NODE_ORDER}
    trope_map = {lab: canon_odd(trope_subset(lab) ^ eps) for lab in TROPE_ORDER}
    return Isometry(
        _perm_from_label_maps(node_map, trope_map),
        _node_action_matrix(node_map),
        "translation",
    )


def switch() -> Isometry:
    """The node-trope switch; sigma(N_mu) = T_mu and sigma(H) solved exactly.

    sigma(H) is the class orthogonal to all sixteen trope classes, scaled to
    norm 4 with sigma(H).H > 0; the paper states no explicit value, so it is
    computed rather than transcribed.
    """
    rows = [trope_class(lab) for lab in TROPE_ORDER]
    # pairing conditions <x, T> = 0 as linear equations (GRAM contraction)
    eq = [mat_vec(GRAM, r) for r in rows]
    kb = kernel_basis(mat(eq))
    assert len(kb) == 1, "sigma(H) direction must be unique"
    w = kb[0]
    n = norm(w)
    assert n > 0
    from .rationals import sqrt_rat

    scale = sqrt_rat(QQ(4) / n)
    w = [c * scale for c in w]
    if pair(w, h_class()) < 0:
        w = [-c for c in w]
    assert norm(w) == 4
    node_map = {}  # node eta -> trope eta+{0}; used only for the permutation part
    perm = [0] * 32
    for i, lab in enumerate(NODE_ORDER):
        perm[i] = 16 + NODE_INDEX[canon_odd(node_subset(lab) ^ {0})]
    for i, lab in enumerate(TROPE_ORDER):
        perm[16 + i] = NODE_INDEX[canon_even(trope_subset(lab) ^ {0})]
    cols = [trope_class(canon_odd(node_subset(lab) ^ {0})) for lab in NODE_ORDER]
    cols.append(w)
    iso = Isometry(perm, _matrix_from_columns(cols), "switch")
    sq = iso * iso
    assert sq.perm == tuple(range(32)), "switch must be an involution on classes"
    assert sq.matrix == [[QQ(1) if i == j else QQ(0) for j in range(DIM)] for i in range(DIM)]
    return iso


def aut_dprime_generators():
    """Generators of Aut(D'): transposition, 6-cycle, translations, switch."""
    gens = [
        weierstrass_permutation([1, 0, 2, 3, 4, 5]),
        weierstrass_permutation([1, 2, 3, 4, 5, 0]),
        translation("1"),
        translation("2"),
        translation("3"),
        translation("4"),
        switch(),
    ]
    for g in gens:
        assert g.preserves_gram(), f"{g.tag} generator must preserve the Gram matrix"
    return gens


def group_order(gens, bound: int = 100_000) -> int:
    """Closure order via BFS on the 32-symbol permutation action (faithful)."""
    idp = tuple(range(32))
    seen = {idp}
    frontier = [idp]
    gperms = [g.perm for g in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for gp in gperms:
                q = tuple(gp[j] for j in p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if len(seen) > bound:
                        raise RuntimeError("group closure exceeded bound")
        frontier = nxt
    return len(seen)


def orbit_reduce(v, gens):
    """Lexicographically minimal vector in the orbit of v, plus orbit size."""
    start = tuple(QQ(c) for c in v)
    seen = {start}
    frontier = [start]
    best = start
    mats = [g.matrix for g in gens]
    while frontier:
        nxt = []
        for p in frontier:
            for m in mats:
                q = tuple(mat_vec(m, list(p)))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
                    if q < best:
                        best = q
        frontier = nxt
    return list(best), len(seen)


# -- divisor table verification ------------------------------------------------


def verify_divisor_table(rows):
    """rows: list of (vector17, has_section_expected, label).

    Returns a report list of dicts; each row is checked for NS membership,
    norm 0, primitivity, and the section test.
    """
    ns = ns_lattice()
    report = []
    for vec, expect_section, label in rows:
        entry = {"label": label, "vector": [qq_str(c) for c in vec]}
        ok = True
        if not ns.is_in_ns(vec):
            entry["in_ns"] = False
            ok = False
        else:
            entry["in_ns"] = True
            entry["norm_zero"] = norm(vec) == 0
            entry["primitive"] = ns.is_primitive(vec)
            if not (entry["norm_zero"] and entry["primitive"]):
                ok = False
            else:
                got = ns.has_section(vec)
                entry["section"] = got
                entry["section_expected"] = expect_section
                if got != expect_section:
                    ok = False
        entry["pass"] = ok
        report.append(entry)
    return report
