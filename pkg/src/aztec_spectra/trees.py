"""Spanning-tree counts, tree/cotree generating functions, verification sweeps."""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import kernels
from .algebra import (
    CharPoly,
    RingMatrix,
    bipoly_eval,
    charpoly,
    det_bareiss,
    det_mod2,
    poly_to_json,
    reciprocal_transform,
)
from .bipoly import BiPoly, U, V
from .errors import DisconnectedGraphWarning, EnumerationCapExceeded
from .graphs import (
    PARITIES,
    BipartiteGraph,
    Parity,
    SignedGridGraph,
    adjacency_matrix,
    checkerboard,
    checkerboard_charpoly,
    interior_dual,
    opposite,
    path_graph,
)

ENUMERATION_CAP = 10**6
ENUMERATION_MAX_EDGES = 32


@dataclass(frozen=True)
class TreeCountResult:
    m: int
    n: int
    parity: Parity
    count: int
    method: str


def _edge_list(g: SignedGridGraph | BipartiteGraph) -> tuple[int, list[tuple[int, int]]]:
    if isinstance(g, SignedGridGraph):
        return g.order, [(a, b) for a, b, _ in g.edges]
    return g.order, g.edges


def laplacian(g: SignedGridGraph | BipartiteGraph) -> RingMatrix:
    n, edges = _edge_list(g)
    rows = [[0] * n for _ in range(n)]
    for a, b in edges:
        rows[a][b] -= 1
        rows[b][a] -= 1
        rows[a][a] += 1
        rows[b][b] += 1
    return RingMatrix.from_rows(rows)


def spanning_tree_count(g: SignedGridGraph | BipartiteGraph, delete: int | None = None) -> int:
    """Kirchhoff count: determinant of the Laplacian with one vertex removed.

    By default the last vertex in canonical order is removed.  A
    disconnected graph yields 0 and a DisconnectedGraphWarning.
    """
    n, _ = _edge_list(g)
    if n < 1:
        raise ValueError("spanning trees need at least one vertex")
    k = n - 1 if delete is None else delete
    count = det_bareiss(laplacian(g).minor(k))
    if count == 0:
        warnings.warn("graph is disconnected; it has no spanning trees",
                      DisconnectedGraphWarning, stacklevel=2)
    return count


def _require_board(m: int, n: int) -> None:
    if m < 2 or n < 2:
        raise ValueError("need m >= 2 and n >= 2")


def spanning_tree_count_theorem2(m: int, n: int, parity: Parity) -> int:
    """P(opposite-parity board of size (m-2, n-2); 4) with unit weights."""
    _require_board(m, n)
    return checkerboard_charpoly(m - 2, n - 2, opposite(parity))(4)


def count_trees(m: int, n: int, parity: Parity, method: str = "kirchhoff") -> TreeCountResult:
    if method == "kirchhoff":
        c = spanning_tree_count(checkerboard(m, n, parity))
    elif method == "theorem2":
        c = spanning_tree_count_theorem2(m, n, parity)
    elif method == "enumerate":
        c = sum(enumerate_spanning_trees(checkerboard(m, n, parity)).values())
    else:
        raise ValueError(f"unknown method {method!r}")
    return TreeCountResult(m, n, parity, c, method)


def enumerate_spanning_trees(g: SignedGridGraph, cap: int = ENUMERATION_CAP) -> dict[tuple[int, int], int]:
    """Brute-force multiset of (positive, negative) edge counts over all spanning trees.

    Refuses graphs with more than 32 edges or more than ``cap`` trees.
    """
    if len(g.edges) > ENUMERATION_MAX_EDGES:
        raise EnumerationCapExceeded(
            f"{len(g.edges)} edges exceeds the enumeration limit {ENUMERATION_MAX_EDGES}")
    if g.order == 0:
        raise ValueError("spanning trees need at least one vertex")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        estimate = spanning_tree_count(g)
    if estimate > cap:
        raise EnumerationCapExceeded(f"{estimate} trees exceeds cap {cap}")
    return kernels.tree_profiles(g.order, list(g.edges), cap)


def profiles_to_bipoly(profiles: dict[tuple[int, int], int]) -> BiPoly:
    return BiPoly(profiles)


@dataclass(frozen=True)
class TreeGenFun:
    gf: BiPoly
    kind: str  # "trees" or "cotrees"
    graph: tuple[int, int, str]

    def at_one(self) -> int:
        return self.gf.evaluate(1, 1)

    def to_json(self) -> dict:
        out = poly_to_json([self.gf], var=None)
        out.update({"kind": self.kind, "m": self.graph[0], "n": self.graph[1],
                    "parity": self.graph[2]})
        return out


def cotree_genfun(m: int, n: int, parity: Parity, rule: str | None = None) -> TreeGenFun:
    """Cotree generating function from the weighted interior dual.

    Every interior face is a diamond with two positive and two negative
    sides, so the reduced dual Laplacian is (2u+2v)I - W and the generating
    function is the characteristic polynomial of W at x = 2u + 2v.
    """
    _require_board(m, n)
    dual = interior_dual(checkerboard(m, n, parity))
    w = dual.weighted_face_adjacency(rule)
    gf = bipoly_eval(charpoly(w), 2 * U + 2 * V)
    return TreeGenFun(gf, "cotrees", (m, n, parity))


def tree_genfun(m: int, n: int, parity: Parity, rule: str | None = None) -> TreeGenFun:
    """Tree generating function: u^P v^N times the cotree GF at (1/u, 1/v).

    P and N are the measured numbers of positive and negative edges.
    """
    g = checkerboard(m, n, parity)
    pos, neg = g.sign_counts()
    cot = cotree_genfun(m, n, parity, rule)
    return TreeGenFun(reciprocal_transform(cot.gf, pos, neg), "trees", (m, n, parity))


def ceil_floor_edge_split(m: int, n: int) -> tuple[int, int]:
    """(ceil((m-1)(n-1)/2), floor((m-1)(n-1)/2))."""
    cells = (m - 1) * (n - 1)
    return (cells + 1) // 2, cells // 2


# sweeps ---------------------------------------------------------------------

@dataclass
class SweepReport:
    identity: str
    max_size: int
    rows: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r["pass"] for r in self.rows)

    @property
    def failures(self) -> list[dict]:
        return [r for r in self.rows if not r["pass"]]


def _run_cells(fn: Callable, cells: Iterable, jobs: int = 1) -> list[dict]:
    cells = list(cells)
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(fn, cells))
    else:
        rows = [fn(c) for c in cells]
    return sorted(rows, key=lambda r: (r["m"], r["n"], r.get("parity", "")))


def _kirchhoff(m: int, n: int, parity: Parity) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DisconnectedGraphWarning)
        return spanning_tree_count(checkerboard(m, n, parity))


def _corollary2_cell(mn: tuple[int, int]) -> dict:
    m, n = mn
    oc = _kirchhoff(m, n, "odd")
    ec = _kirchhoff(m, n, "even")
    return {"m": m, "n": n, "oc": oc, "ec": ec,
            "ratio": oc // ec if ec and oc % ec == 0 else None, "pass": oc == 4 * ec}


def verify_corollary2(max_size: int, jobs: int = 1) -> SweepReport:
    """count(OC_{m,n}) = 4 count(EC_{m,n}) for odd 3 <= m, n <= max_size."""
    if max_size < 3 or max_size % 2 == 0:
        raise ValueError("max_size must be odd and >= 3")
    sizes = range(3, max_size + 1, 2)
    rows = _run_cells(_corollary2_cell, [(m, n) for m in sizes for n in sizes], jobs)
    return SweepReport("corollary2", max_size, rows)


def _corollary3_cell(mn: tuple[int, int]) -> dict:
    m, n = mn
    ec = _kirchhoff(m, n, "even")
    return {"m": m, "n": n, "ec": ec, "pass": ec % 2 == 1}


def verify_corollary3(max_size: int, jobs: int = 1) -> SweepReport:
    """count(EC_{m,n}) odd for even m, n <= max_size, plus det(adj P_m) = 1 mod 2."""
    if max_size < 2 or max_size % 2 == 1:
        raise ValueError("max_size must be even and >= 2")
    sizes = range(2, max_size + 1, 2)
    rows = _run_cells(_corollary3_cell, [(m, n) for m in sizes for n in sizes], jobs)
    for m in sizes:
        d = det_mod2(adjacency_matrix(path_graph(m)))
        rows.append({"m": m, "n": 0, "path_det_mod2": d, "pass": d == 1})
    return SweepReport("corollary3", max_size, rows)


def _theorem2_cell(cell: tuple[int, int, str]) -> dict:
    m, n, parity = cell
    k = _kirchhoff(m, n, parity)
    t = spanning_tree_count_theorem2(m, n, parity)
    return {"m": m, "n": n, "parity": parity, "kirchhoff": k, "theorem2": t, "pass": k == t}


def verify_theorem2(max_size: int, jobs: int = 1) -> SweepReport:
    """Kirchhoff = P(opposite board (m-2, n-2); 4) for 2 <= m, n <= max_size."""
    if max_size < 2:
        raise ValueError("max_size must be >= 2")
    sizes = range(2, max_size + 1)
    cells = [(m, n, p) for m in sizes for n in sizes for p in PARITIES]
    return SweepReport("theorem2", max_size, _run_cells(_theorem2_cell, cells, jobs))


def _eq6_cell(mn: tuple[int, int]) -> dict:
    m, n = mn
    pe = checkerboard_charpoly(m, n, "even")
    po = checkerboard_charpoly(m, n, "odd")
    k = (m * n) % 2
    return {"m": m, "n": n, "x_power": k, "pass": pe == po.shift(k)}


def verify_eq6(max_size: int, jobs: int = 1) -> SweepReport:
    """P(EC_{m,n}; x) = x^(mn mod 2) P(OC_{m,n}; x) for 1 <= m, n <= max_size."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    sizes = range(1, max_size + 1)
    rows = _run_cells(_eq6_cell, [(m, n) for m in sizes for n in sizes], jobs)
    return SweepReport("eq6", max_size, rows)


def charpoly_product(m: int, n: int) -> CharPoly:
    """P(EC_{m,n}; x) P(OC_{m,n}; x) with unit weights."""
    return checkerboard_charpoly(m, n, "even") * checkerboard_charpoly(m, n, "odd")
