"""Embedded-resolution combinatorics.

StratifiedResolution holds components (N, nu) and strata with Euler
characteristics and evaluates the (twisted) topological zeta functions
Z^(l) = sum_{I : l | N_i} chi(E_I°) / prod (N_i s + nu_i).

CurveResolutionGraph is the dual graph of a plane-curve resolution:
exceptional vertices, arrows for strict-transform branches, and edges.
From it we derive strata, A'Campo's monodromy zeta function, the solved
multiplicities (N, nu) from self-intersections, and the E^(n) component
classification.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CycloProduct
from .errors import ValidationError
from .ratfun import RatFun


@dataclass(frozen=True)
class Component:
    id: str
    N: int
    nu: int


@dataclass(frozen=True)
class Stratum:
    I: frozenset[str]
    chi: int


@dataclass
class StratifiedResolution:
    components: list[Component]
    strata: list[Stratum]
    prod_nu0: int = 1

    def __post_init__(self):
        ids = {c.id for c in self.components}
        if len(ids) != len(self.components):
            raise ValidationError("duplicate component ids")
        seen = set()
        for st in self.strata:
            if not st.I:
                raise ValidationError("empty stratum index set")
            if not st.I <= ids:
                raise ValidationError(f"stratum references unknown ids: {sorted(st.I)}")
            if st.I in seen:
                raise ValidationError(f"duplicate stratum {sorted(st.I)}")
            seen.add(st.I)
        for c in self.components:
            if c.N < 1 or c.nu < 1:
                raise ValidationError(f"component {c.id}: N and nu must be >= 1")

    def component(self, cid: str) -> Component:
        return next(c for c in self.components if c.id == cid)

    def check_normalization(self) -> None:
        """sum chi / prod nu_i over strata must equal 1 / prod_nu0."""
        total = Fraction(0)
        for st in self.strata:
            prod = 1
            for cid in st.I:
                prod *= self.component(cid).nu
            total += Fraction(st.chi, prod)
        if total != Fraction(1, self.prod_nu0):
            raise ValidationError(
                f"normalization fails: sum chi/prod nu = {total}, "
                f"expected 1/{self.prod_nu0}")


def ztop_from_strata(res: StratifiedResolution, l: int = 1) -> RatFun:
    """Z_top^(l); l = 1 imposes no divisibility condition."""
    if l < 1:
        raise ValueError("l must be >= 1")
    total = RatFun.zero()
    for st in res.strata:
        comps = [res.component(cid) for cid in st.I]
        if any(c.N % l for c in comps):
            continue
        term = RatFun.const(st.chi)
        for c in comps:
            term = term * RatFun.inv_linear(c.N, c.nu)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# curve dual graphs


@dataclass(frozen=True)
class Vertex:
    id: str
    N: int
    nu: int
    self_intersection: int | None = None


@dataclass(frozen=True)
class Arrow:
    id: str
    mult: int
    attached_to: str


@dataclass
class CurveResolutionGraph:
    vertices: list[Vertex]
    arrows: list[Arrow]
    edges: list[tuple[str, str]]
    prod_nu0: int = 1

    def __post_init__(self):
        ids = {v.id for v in self.vertices}
        if len(ids) != len(self.vertices):
            raise ValidationError("duplicate vertex ids")
        for a in self.arrows:
            if a.attached_to not in ids:
                raise ValidationError(f"arrow {a.id} attached to unknown vertex")
            if a.mult < 1:
                raise ValidationError(f"arrow {a.id}: mult must be >= 1")
        for u, v in self.edges:
            if u not in ids or v not in ids or u == v:
                raise ValidationError(f"bad edge ({u}, {v})")
        if not _connected(ids, self.edges):
            raise ValidationError("exceptional graph is not connected")
        if all(v.self_intersection is not None for v in self.vertices):
            self.check_projection_formula()

    def vertex(self, vid: str) -> Vertex:
        return next(v for v in self.vertices if v.id == vid)

    def neighbors(self, vid: str) -> list[str]:
        out = []
        for u, v in self.edges:
            if u == vid:
                out.append(v)
            elif v == vid:
                out.append(u)
        return out

    def arrows_at(self, vid: str) -> list[Arrow]:
        return [a for a in self.arrows if a.attached_to == vid]

    def valence(self, vid: str) -> int:
        return len(self.neighbors(vid)) + len(self.arrows_at(vid))

    def check_projection_formula(self) -> None:
        """Total transform meets each exceptional E_i with intersection 0:
        sum of neighbor multiplicities (arrows weighted by mult) = e_i N_i."""
        for v in self.vertices:
            if v.self_intersection is None:
                continue
            e = -v.self_intersection
            total = sum(self.vertex(w).N for w in self.neighbors(v.id))
            total += sum(a.mult for a in self.arrows_at(v.id))
            if total != e * v.N:
                raise ValidationError(
                    f"projection formula fails at {v.id}: "
                    f"{total} != {e} * {v.N}")


def _connected(ids: set[str], edges) -> bool:
    if not ids:
        return False
    adj: dict[str, set[str]] = {i: set() for i in ids}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    stack = [next(iter(ids))]
    seen = set(stack)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == ids


def strata_of_graph(g: CurveResolutionGraph) -> StratifiedResolution:
    """Stratify pi^{-1}(0): one open stratum per exceptional vertex with
    chi = 2 - valence, one point stratum per edge and per arrow attachment.
    Arrow open strata lie outside pi^{-1}(0) and are excluded; arrow
    components carry (N = mult, nu = 1)."""
    comps = [Component(v.id, v.N, v.nu) for v in g.vertices]
    comps += [Component(a.id, a.mult, 1) for a in g.arrows]
    strata = [Stratum(frozenset([v.id]), 2 - g.valence(v.id)) for v in g.vertices]
    strata += [Stratum(frozenset([u, v]), 1) for u, v in g.edges]
    strata += [Stratum(frozenset([a.attached_to, a.id]), 1) for a in g.arrows]
    res = StratifiedResolution(comps, strata, g.prod_nu0)
    res.check_normalization()
    return res


def acampo(g: CurveResolutionGraph) -> tuple[CycloProduct, CycloProduct]:
    """A'Campo data of a curve germ: the monodromy zeta function
    zeta = prod (tau^{N_i} - 1)^{chi(E_i°)} over exceptional vertices and
    the characteristic polynomial Delta = (tau - 1) prod (tau^{N_i} - 1)^{v_i - 2}."""
    if any(a.mult > 1 for a in g.arrows):
        raise ValidationError(
            "A'Campo valence convention undefined for non-reduced arrows")
    zeta = CycloProduct.from_brackets(
        (v.N, 2 - g.valence(v.id)) for v in g.vertices)
    delta = CycloProduct.from_brackets(
        [(1, 1)] + [(v.N, g.valence(v.id) - 2) for v in g.vertices])
    if not delta.is_polynomial():
        raise ValidationError("characteristic polynomial is not a polynomial; "
                              "graph is inconsistent with a curve germ")
    return zeta, delta


# ---------------------------------------------------------------------------
# solving (N, nu) from self-intersections


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Q; raises on a singular system."""
    n = len(matrix)
    aug = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValidationError("singular intersection matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


@dataclass
class GraphShape:
    """A dual graph with self-intersections and arrow multiplicities but
    without (or ignoring) the numerical data N, nu."""
    vertex_ids: list[str]
    self_intersections: dict[str, int]
    arrows: list[Arrow]
    edges: list[tuple[str, str]]
    prod_nu0: int = 1


def solve_multiplicities(shape: GraphShape) -> CurveResolutionGraph:
    """Fill in N and nu from self-intersections and arrow multiplicities.

    N solves the projection formula sum_{j~i} N_j + arrows_i = e_i N_i;
    nu - 1 solves the adjunction system M (nu - 1) = (e_i - 2) with M the
    intersection matrix (arrows contribute nu - 1 = 0).
    """
    ids = shape.vertex_ids
    if set(shape.self_intersections) != set(ids):
        raise ValidationError("solve_multiplicities needs every self-intersection")
    index = {vid: i for i, vid in enumerate(ids)}
    n = len(ids)
    m = [[Fraction(0)] * n for _ in range(n)]
    for vid in ids:
        m[index[vid]][index[vid]] = Fraction(shape.self_intersections[vid])
    for u, v in shape.edges:
        m[index[u]][index[v]] += 1
        m[index[v]][index[u]] += 1
    arrow_load = [Fraction(sum(a.mult for a in shape.arrows if a.attached_to == vid))
                  for vid in ids]
    big_n = _solve_exact([row[:] for row in m], [-x for x in arrow_load])
    rhs_nu = [Fraction(-shape.self_intersections[vid] - 2) for vid in ids]
    nu_minus_1 = _solve_exact([row[:] for row in m], rhs_nu)
    for name, vals in (("N", big_n), ("nu", [x + 1 for x in nu_minus_1])):
        for vid, val in zip(ids, vals):
            if val.denominator != 1:
                raise ValidationError(f"non-integer {name} at {vid}: {val}")
            if val < 1:
                raise ValidationError(f"non-positive {name} at {vid}: {val}")
    solved = [Vertex(vid, int(big_n[i]), int(nu_minus_1[i] + 1),
                     shape.self_intersections[vid])
              for i, vid in enumerate(ids)]
    return CurveResolutionGraph(solved, list(shape.arrows), list(shape.edges),
                                shape.prod_nu0)


# ---------------------------------------------------------------------------
# E^(n) components


@dataclass(frozen=True)
class EnComponent:
    strata: tuple[frozenset[str], ...]
    kind: str  # "type1" | "type2" | "other"


def e_n_components(g: CurveResolutionGraph, n: int) -> list[EnComponent]:
    """Connected components of E^(n), the union of exceptional strata all of
    whose divisors have multiplicity divisible by n, each tagged:

    - "type1": a single open stratum of a valence-2 vertex;
    - "type2": E_0° u E_1° u {E_0 n E_1} with valences 3 and 1;
    - "other": anything else (e.g. an isolated branching-vertex stratum).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    good = {v.id for v in g.vertices if v.N % n == 0}
    adj: dict[str, set[str]] = {vid: set() for vid in good}
    for u, v in g.edges:
        if u in good and v in good:
            adj[u].add(v)
            adj[v].add(u)
    out = []
    unvisited = set(good)
    while unvisited:
        start = min(unvisited)
        comp = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        unvisited -= comp
        strata: list[frozenset[str]] = [frozenset([vid]) for vid in sorted(comp)]
        strata += [frozenset([u, v]) for u, v in g.edges
                   if u in comp and v in comp]
        out.append(EnComponent(tuple(strata), _classify(g, comp)))
    return out


def _classify(g: CurveResolutionGraph, comp: set[str]) -> str:
    valences = sorted(g.valence(vid) for vid in comp)
    if len(comp) == 1 and valences == [2]:
        return "type1"
    if len(comp) == 2 and valences == [1, 3]:
        return "type2"
    return "other"


# ---------------------------------------------------------------------------
# JSON


def graph_to_json(g: CurveResolutionGraph) -> dict:
    return {
        "vertices": [
            {"id": v.id, "N": v.N, "nu": v.nu,
             **({"self_intersection": v.self_intersection}
                if v.self_intersection is not None else {})}
            for v in g.vertices],
        "arrows": [{"id": a.id, "mult": a.mult, "attached_to": a.attached_to}
                   for a in g.arrows],
        "edges": [[u, v] for u, v in g.edges],
        "prod_nu0": g.prod_nu0,
    }


def graph_from_json(obj: dict) -> CurveResolutionGraph:
    vertices = [Vertex(d["id"], int(d.get("N", 0)) or _missing(d, "N"),
                       int(d.get("nu", 0)) or _missing(d, "nu"),
                       d.get("self_intersection"))
                for d in obj["vertices"]]
    arrows = [Arrow(d["id"], int(d["mult"]), d["attached_to"])
              for d in obj.get("arrows", [])]
    edges = [(u, v) for u, v in obj.get("edges", [])]
    return CurveResolutionGraph(vertices, arrows, edges,
                                int(obj.get("prod_nu0", 1)))


def shape_from_json(obj: dict) -> GraphShape:
    """Graph with N/nu absent, for solve_multiplicities input."""
    ids = [d["id"] for d in obj["vertices"]]
    selfint = {d["id"]: int(d["self_intersection"]) for d in obj["vertices"]}
    arrows = [Arrow(d["id"], int(d["mult"]), d["attached_to"])
              for d in obj.get("arrows", [])]
    edges = [(u, v) for u, v in obj.get("edges", [])]
    return GraphShape(ids, selfint, arrows, edges, int(obj.get("prod_nu0", 1)))


def _missing(d: dict, key: str):
    raise ValidationError(f"vertex {d.get('id')}: missing field {key!r}")


def strata_to_json(res: StratifiedResolution) -> dict:
    return {
        "components": [{"id": c.id, "N": c.N, "nu": c.nu} for c in res.components],
        "strata": [{"I": sorted(st.I), "chi": st.chi} for st in res.strata],
        "prod_nu0": res.prod_nu0,
    }


def strata_from_json(obj: dict) -> StratifiedResolution:
    comps = [Component(d["id"], int(d["N"]), int(d["nu"]))
             for d in obj["components"]]
    strata = [Stratum(frozenset(d["I"]), int(d["chi"])) for d in obj["strata"]]
    return StratifiedResolution(comps, strata, int(obj.get("prod_nu0", 1)))
