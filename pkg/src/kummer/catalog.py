"""Catalog of the twenty-five fibrations and their variants.

Every displayed equation lives in the data files as a formula string; this
module parses them and specializes to concrete rational (a, b, c).  The
genericity pre-flight rejects parameter choices that collide any two catalog
fiber positions.
"""

from __future__ import annotations

import json
from importlib import resources

from .formula import eval_formula, parse_formula
from .igusa import ic_from_sigma
from .mordell import Section
from .mpoly import MPoly
from .rationals import QQ, qq
from .upoly import FIELD_QT, RING_T, RatFunc
from .wmodel import INF, WeierstrassModel, kodaira_from_label

CATALOG_VARIABLES = (
    "a", "b", "c", "t", "x", "y",
    "I2", "I4", "I5", "I6", "I10",
    "alpha", "beta", "gamma", "mu",
)

PRINCIPAL_IDS = [str(n) for n in range(1, 26)]
VARIANT_IDS = ["8A", "11A", "15A", "16A", "18A", "20A", "20B", "24A", "24B", "24C"]


class GenusTwoParams:
    def __init__(self, a, b, c):
        self.a, self.b, self.c = (qq(v) if isinstance(v, str) else QQ(v) for v in (a, b, c))
        vals = {self.a, self.b, self.c, QQ(0), QQ(1)}
        if len(vals) != 5:
            raise ValueError(
                "Weierstrass points 0, 1, a, b, c, oo must be six distinct points"
            )

    def as_env(self):
        return {"a": self.a, "b": self.b, "c": self.c}

    def __repr__(self):
        return f"(a,b,c)=({self.a},{self.b},{self.c})"


class FibrationRecord:
    def __init__(self, fid: str, raw: dict):
        self.id = fid
        self.raw = raw
        self.name = raw.get("name", "")
        self.zero = raw.get("zero")
        self.torsion = raw.get("torsion", [])
        self.torsion_sections = raw.get("torsion_sections", [])
        self.mw_basis = raw.get("mw_basis", [])
        self.mw_lattice = raw.get("mw_lattice", "0")
        self.edge = raw.get("edge")
        self.principal = raw.get("principal")  # set for variants
        self.divisor = raw.get("divisor")

    # -- construction at a specialization ------------------------------------

    def base_env(self, params: GenusTwoParams) -> dict:
        env = params.as_env()
        if self.raw.get("uses_invariants") or self.id in ("13", "23", "24", "25"):
            inv = ic_from_sigma(params.a, params.b, params.c)
            env.update(inv.as_env())
            if self.id == "24":
                alpha, beta, gamma, mu = inv.normalized()
                env.update({"alpha": alpha, "beta": beta, "gamma": gamma, "mu": mu})
        return env

    def model(self, params: GenusTwoParams) -> WeierstrassModel:
        env = self.base_env(params)
        return _model_from_equations(self.raw, env)

    def abc_model(self, params: GenusTwoParams) -> WeierstrassModel:
        """Fibration 24 only: the (alpha, beta, gamma)-form."""
        env = self.base_env(params)
        return _model_from_equations(self.raw["abc_form"], env)

    def expected_fibers(self, params: GenusTwoParams):
        """List of (place, KodairaType); place is a rational or INF."""
        env = params.as_env()
        out = []
        for pos, label in self.raw.get("fibers", []):
            if pos == "inf":
                place = INF
            else:
                place = eval_formula(parse_formula(pos, CATALOG_VARIABLES), env)
            out.append((place, kodaira_from_label(label)))
        return out

    def sections(self, params: GenusTwoParams) -> dict:
        env = dict(self.base_env(params))
        env["t"] = FIELD_QT.gen()
        out = {}
        for name, rec in self.raw.get("sections", {}).items():
            x = eval_formula(parse_formula(rec["x"], CATALOG_VARIABLES), env)
            y = eval_formula(parse_formula(rec["y"], CATALOG_VARIABLES), env)
            out[name] = Section(FIELD_QT.coerce(x), FIELD_QT.coerce(y))
        return out

    def mw_gram_expected(self):
        return [[qq(v) for v in row] for row in self.raw.get("mw_gram", [])]

    def __repr__(self):
        return f"Fibration {self.id} ({self.name})"


def _model_from_equations(raw: dict, env: dict) -> WeierstrassModel:
    tx_vars = ("t", "x")
    menv = dict(env)
    menv["t"] = MPoly.var(tx_vars, "t")
    menv["x"] = MPoly.var(tx_vars, "x")
    if "rhs" in raw:
        rhs = eval_formula(parse_formula(raw["rhs"], CATALOG_VARIABLES), menv)
        coeffs = rhs.coeffs_in("x")
        cubic = coeffs.get(3)
        if cubic is None or cubic.term_count() != 1 or cubic.terms.get((0,)) != 1:
            raise ValueError("right-hand side is not monic cubic in x")
        a2 = coeffs.get(2, MPoly.zero(("t",)))
        a4 = coeffs.get(1, MPoly.zero(("t",)))
        a6 = coeffs.get(0, MPoly.zero(("t",)))
        return WeierstrassModel(
            RING_T, _tpoly(a2), _tpoly(a4), _tpoly(a6)
        )
    parts = []
    for key in ("a2", "a4", "a6"):
        val = eval_formula(parse_formula(raw[key], CATALOG_VARIABLES), menv) if key in raw else MPoly.zero(tx_vars)
        if not isinstance(val, MPoly):
            val = MPoly.const(tx_vars, val)
        if val.degree_in("x") > 0:
            raise ValueError(f"{key} must not involve x")
        parts.append(_tpoly(val))
    return WeierstrassModel(RING_T, *parts)


def _tpoly(m: MPoly):
    """MPoly in t (and possibly a vanished x) -> Poly over QQ."""
    if not m.terms:
        return RING_T.zero
    if "x" in m.vars:
        by_x = m.coeffs_in("x")
        if set(by_x) - {0}:
            raise ValueError("unexpected x dependence")
        m = by_x.get(0, MPoly.zero(("t",)))
    deg = m.degree_in("t")
    coeffs = [QQ(0)] * (deg + 1)
    for e, cval in m.terms.items():
        coeffs[e[0]] = cval
    return RING_T.poly(coeffs)


class Catalog:
    def __init__(self, raw: dict):
        self.fibrations = {fid: FibrationRecord(fid, rec) for fid, rec in raw["fibrations"].items()}

    def record(self, fid) -> FibrationRecord:
        return self.fibrations[str(fid)]

    def principal_records(self):
        return [self.record(i) for i in PRINCIPAL_IDS if str(i) in self.fibrations]

    def variant_records(self):
        return [self.fibrations[v] for v in VARIANT_IDS if v in self.fibrations]

    def edges(self):
        out = []
        for fid in PRINCIPAL_IDS:
            rec = self.fibrations.get(fid)
            if rec is not None and rec.edge:
                out.append((rec.edge["source"], fid, rec.edge["param"]))
        return out

    def check_genericity(self, params: GenusTwoParams):
        """No two catalog fiber positions of any fibration may collide."""
        for rec in self.principal_records():
            places = [p for p, _ in rec.expected_fibers(params)]
            if len(set(map(str, places))) != len(places):
                raise ValueError(
                    f"fiber positions collide for fibration {rec.id} at {params!r}"
                )


_CATALOG = None


def load_catalog() -> Catalog:
    global _CATALOG
    if _CATALOG is None:
        with resources.files("kummer.data").joinpath("fibrations.json").open() as f:
            _CATALOG = Catalog(json.load(f))
    return _CATALOG


def load_divisor_table():
    """Rows of the elliptic-divisor table: (vector of 17 QQ, has_section, label)."""
    rows = []
    with resources.files("kummer.data").joinpath("divisor_table.txt").open() as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            vec_part, rest = line.split(")", 1)
            nums = [int(v) for v in vec_part.lstrip("(").split(",")]
            if len(nums) != 17:
                raise ValueError(f"bad divisor row: {line!r}")
            rest = rest.strip()
            den = 1
            if rest.startswith("/2"):
                den = 2
                rest = rest[2:].strip()
            toks = rest.split()
            yes = toks[0] == "Yes"
            label = toks[1] if len(toks) > 1 else ""
            rows.append(([QQ(n, den) for n in nums], yes, label))
    return rows
