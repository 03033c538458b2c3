"""Paths, bipartite graphs, weak direct products and checkerboard graphs.

Checkerboard graphs live on the lattice points (x, y), 1 <= x <= m,
1 <= y <= n, of one colour class; two points are adjacent when they are
diagonal neighbours.  Vertices are always listed in lexicographic (x, y)
order and every edge carries the sign (x_a - x_b)(y_a - y_b).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Sequence

from .algebra import BIPOLY, INT, CharPoly, RingMatrix, charpoly, kron_blocks
from .bipoly import BiPoly, U, V

Parity = Literal["even", "odd"]
PARITIES: tuple[Parity, Parity] = ("even", "odd")

SAME_SIGN = "same-sign"
SWAPPED_SIGN = "swapped-sign"

# A dual edge carries the weight of the primal edge it crosses.  Fixed by
# brute-force enumeration (see tests/test_dual_rule.py): SAME_SIGN reproduces
# the cotree generating functions on every tested board, SWAPPED_SIGN fails
# on boards whose face graph is not u<->v symmetric (e.g. EC_{4,4}).
DUAL_EDGE_WEIGHT_RULE = SAME_SIGN


def opposite(parity: Parity) -> Parity:
    return "odd" if parity == "even" else "even"


def _check_parity(parity: str) -> None:
    if parity not in PARITIES:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph given by its p x q biadjacency matrix.

    Left vertices come first in the full adjacency order, then right ones.
    """

    part_sizes: tuple[int, int]
    biadjacency: tuple[tuple[int, ...], ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        p, q = self.part_sizes
        if p < 0 or q < 0:
            raise ValueError("part sizes must be nonnegative")
        if len(self.biadjacency) != p or any(len(r) != q for r in self.biadjacency):
            raise ValueError(f"biadjacency is not {p} x {q}")
        if any(x not in (0, 1) for r in self.biadjacency for x in r):
            raise ValueError("biadjacency entries must be 0 or 1")

    @classmethod
    def from_biadjacency(cls, rows: Sequence[Sequence[int]], q: int | None = None,
                         labels=None) -> "BipartiteGraph":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if q is None:
            q = len(rows[0]) if rows else 0
        return cls((len(rows), q), rows, labels)

    @property
    def order(self) -> int:
        return self.part_sizes[0] + self.part_sizes[1]

    @property
    def edges(self) -> list[tuple[int, int]]:
        p = self.part_sizes[0]
        return [(i, p + j) for i, r in enumerate(self.biadjacency) for j, x in enumerate(r) if x]

    def transposed_biadjacency(self) -> tuple[tuple[int, ...], ...]:
        q = self.part_sizes[1]
        return tuple(tuple(r[j] for r in self.biadjacency) for j in range(q))

    def adjacency_rows(self) -> list[list[int]]:
        p, q = self.part_sizes
        n = p + q
        rows = [[0] * n for _ in range(n)]
        for i, j in self.edges:
            rows[i][j] = rows[j][i] = 1
        return rows


@dataclass(frozen=True)
class SignedGridGraph:
    """EC_{m,n} (parity even) or OC_{m,n} (parity odd) with signed edges."""

    m: int
    n: int
    parity: Parity
    vertices: tuple[tuple[int, int], ...]
    edges: tuple[tuple[int, int, int], ...]

    @property
    def kind(self) -> str:
        return "EC" if self.parity == "even" else "OC"

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.vertices)}

    def sign_counts(self) -> tuple[int, int]:
        pos = sum(1 for *_, s in self.edges if s > 0)
        return pos, len(self.edges) - pos

    def degrees(self) -> list[int]:
        deg = [0] * self.order
        for a, b, _ in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def to_bipartite(self) -> BipartiteGraph:
        """Split by column parity: x odd on the left, x even on the right."""
        left = [i for i, (x, _) in enumerate(self.vertices) if x % 2 == 1]
        right = [i for i, (x, _) in enumerate(self.vertices) if x % 2 == 0]
        pos = {v: k for k, v in enumerate(right)}
        bi = [[0] * len(right) for _ in left]
        lpos = {v: k for k, v in enumerate(left)}
        for a, b, _ in self.edges:
            if a in lpos:
                bi[lpos[a]][pos[b]] = 1
            else:
                bi[lpos[b]][pos[a]] = 1
        labels = tuple(self.vertices[i] for i in left + right)
        return BipartiteGraph((len(left), len(right)), tuple(map(tuple, bi)), labels)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "vertices": [list(p) for p in self.vertices],
            "edges": [{"a": a, "b": b, "sign": s} for a, b, s in self.edges],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "SignedGridGraph":
        parity = {"EC": "even", "OC": "odd"}[obj["kind"]]
        g = cls(
            int(obj["m"]), int(obj["n"]), parity,
            tuple(tuple(p) for p in obj["vertices"]),
            tuple((e["a"], e["b"], e["sign"]) for e in obj["edges"]),
        )
        if g != checkerboard(g.m, g.n, parity):
            raise ValueError("graph JSON does not describe a canonical checkerboard")
        return g


def path_graph(n: int) -> BipartiteGraph:
    """P_n with odd-numbered vertices 1, 3, 5, ... on the left."""
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    left = list(range(1, n + 1, 2))
    right = list(range(2, n + 1, 2))
    bi = tuple(tuple(1 if abs(a - b) == 1 else 0 for b in right) for a in left)
    return BipartiteGraph((len(left), len(right)), bi, tuple(left + right))


def checkerboard(m: int, n: int, parity: Parity) -> SignedGridGraph:
    """EC_{m,n} or OC_{m,n}.  A zero dimension gives the empty graph."""
    _check_parity(parity)
    if m < 0 or n < 0:
        raise ValueError("board dimensions must be nonnegative")
    want = 0 if parity == "even" else 1
    verts = tuple((x, y) for x in range(1, m + 1) for y in range(1, n + 1) if (x + y) % 2 == want)
    idx = {p: i for i, p in enumerate(verts)}
    edges = []
    for a, (x, y) in enumerate(verts):
        # lexicographic order puts the x+1 neighbours after a
        for dy in (-1, 1):
            b = idx.get((x + 1, y + dy))
            if b is not None:
                edges.append((a, b, (x - (x + 1)) * (y - (y + dy))))
    edges.sort()
    return SignedGridGraph(m, n, parity, verts, tuple(edges))


def product_component(g: BipartiteGraph, h: BipartiteGraph, parity: Parity) -> BipartiteGraph:
    """E(G,H) (even) or O(G,H) (odd) of the weak direct product G x H.

    Even: left = L_G x L_H, right = R_G x R_H, biadjacency C (x) D.
    Odd:  left = L_G x R_H, right = R_G x L_H, biadjacency C (x) D^T.
    Labels are pairs of vertex indices into the full orders of G and H.
    """
    _check_parity(parity)
    p, q = g.part_sizes
    r, s = h.part_sizes
    gl, gr = range(p), range(p, p + q)
    hl, hr = range(r), range(r, r + s)
    if parity == "even":
        d = h.biadjacency
        left = [(a, b) for a in gl for b in hl]
        right = [(a, b) for a in gr for b in hr]
        cols = q * s
    else:
        d = h.transposed_biadjacency()
        left = [(a, b) for a in gl for b in hr]
        right = [(a, b) for a in gr for b in hl]
        cols = q * r
    bi = kron_blocks(g.biadjacency, d)
    return BipartiteGraph.from_biadjacency(bi, cols, labels=tuple(left + right))


def weak_direct_product_adjacency(g: BipartiteGraph, h: BipartiteGraph) -> RingMatrix:
    """Adjacency A (x) B of the whole product G x H."""
    return RingMatrix.from_rows(kron_blocks(g.adjacency_rows(), h.adjacency_rows()), INT)


def adjacency_matrix(g: SignedGridGraph | BipartiteGraph, weighting: str = "unit") -> RingMatrix:
    """Symmetric adjacency matrix; ``signed-uv`` puts u on positive and v on negative edges."""
    if weighting not in ("unit", "signed-uv"):
        raise ValueError(f"unknown weighting {weighting!r}")
    if isinstance(g, BipartiteGraph):
        if weighting != "unit":
            raise ValueError("bipartite graphs carry no edge signs")
        return RingMatrix.from_rows(g.adjacency_rows(), INT)
    n = g.order
    if weighting == "unit":
        rows = [[0] * n for _ in range(n)]
        for a, b, _ in g.edges:
            rows[a][b] = rows[b][a] = 1
        return RingMatrix.from_rows(rows, INT)
    rows = [[BiPoly() for _ in range(n)] for _ in range(n)]
    for a, b, s in g.edges:
        rows[a][b] = rows[b][a] = U if s > 0 else V
    return RingMatrix(tuple(map(tuple, rows)), BIPOLY)


def graph_charpoly(g: SignedGridGraph | BipartiteGraph, weighting: str = "unit") -> CharPoly:
    return charpoly(adjacency_matrix(g, weighting))


def checkerboard_charpoly(m: int, n: int, parity: Parity, weighting: str = "unit") -> CharPoly:
    return graph_charpoly(checkerboard(m, n, parity), weighting)


def relabel_product_to_board(m: int, n: int, parity: Parity) -> tuple[list, list]:
    """Map the vertices of product_component(P_m, P_n, parity) to lattice points.

    Returns (points, edges) where points[i] is the (x, y) of product vertex i
    and edges are index pairs of the product graph.
    """
    pm, pn = path_graph(m), path_graph(n)
    comp = product_component(pm, pn, parity)
    points = [(pm.labels[a], pn.labels[b]) for a, b in comp.labels]
    return points, comp.edges


def is_isomorphic_by_coordinates(m: int, n: int, parity: Parity) -> bool:
    """Check that (u, v) -> (x, y) = (u, v) carries the product component onto the board."""
    board = checkerboard(m, n, parity)
    points, edges = relabel_product_to_board(m, n, parity)
    if sorted(points) != list(board.vertices):
        return False
    mapped = {frozenset((points[a], points[b])) for a, b in edges}
    expected = {frozenset((board.vertices[a], board.vertices[b])) for a, b, _ in board.edges}
    return mapped == expected and len(mapped) == len(edges)


# interior dual -------------------------------------------------------------

@dataclass(frozen=True)
class DualCorrespondence:
    """Interior faces of a checkerboard graph and how primal edges border them.

    ``face_graph`` vertex i is the unit diamond centred at primal point
    ``face_centres[i]``; it sits at (x-1, y-1) on the (m-2) x (n-2) board of
    the opposite parity.  ``face_of_edge[e]`` lists the two sides of primal
    edge e, with None standing for the exterior face.  ``crossed_edge[k]`` is
    the primal edge crossed by face-graph edge k.
    """

    primal: SignedGridGraph
    face_graph: SignedGridGraph
    face_centres: tuple[tuple[int, int], ...]
    face_boundaries: tuple[tuple[int, ...], ...]
    face_of_edge: tuple[tuple[int | None, int | None], ...]
    crossed_edge: tuple[int, ...]
    edge_weight_rule: str = DUAL_EDGE_WEIGHT_RULE

    def dual_edge_signs(self, rule: str | None = None) -> list[int]:
        """Sign (u for +1, v for -1) carried by each face-graph edge under ``rule``."""
        rule = rule or self.edge_weight_rule
        if rule not in (SAME_SIGN, SWAPPED_SIGN):
            raise ValueError(f"unknown edge weight rule {rule!r}")
        signs = []
        for e in self.crossed_edge:
            s = self.primal.edges[e][2]
            signs.append(s if rule == SAME_SIGN else -s)
        return signs

    def weighted_face_adjacency(self, rule: str | None = None) -> RingMatrix:
        n = self.face_graph.order
        rows = [[BiPoly() for _ in range(n)] for _ in range(n)]
        for (a, b, _), s in zip(self.face_graph.edges, self.dual_edge_signs(rule)):
            rows[a][b] = rows[b][a] = U if s > 0 else V
        return RingMatrix(tuple(map(tuple, rows)), BIPOLY)


def interior_dual(g: SignedGridGraph) -> DualCorrespondence:
    if g.m < 2 or g.n < 2:
        raise ValueError("interior_dual needs m >= 2 and n >= 2")
    idx = g.index()
    edge_id = {}
    for k, (a, b, _) in enumerate(g.edges):
        edge_id[frozenset((a, b))] = k

    face_parity = opposite(g.parity)
    face_graph = checkerboard(g.m - 2, g.n - 2, face_parity)
    centres = tuple((x + 1, y + 1) for x, y in face_graph.vertices)

    boundaries = []
    sides: list[list[int]] = [[] for _ in g.edges]
    for f, (x, y) in enumerate(centres):
        corners = [idx[(x - 1, y)], idx[(x, y + 1)], idx[(x + 1, y)], idx[(x, y - 1)]]
        bnd = []
        for c in range(4):
            e = edge_id[frozenset((corners[c], corners[(c + 1) % 4]))]
            bnd.append(e)
            sides[e].append(f)
        boundaries.append(tuple(sorted(bnd)))

    face_of_edge = tuple(tuple(s + [None] * (2 - len(s))) for s in sides)
    crossed = []
    for a, b, _ in face_graph.edges:
        shared = set(boundaries[a]) & set(boundaries[b])
        if len(shared) != 1:
            raise AssertionError(f"faces {a}, {b} share {len(shared)} edges")
        crossed.append(shared.pop())
    return DualCorrespondence(
        g, face_graph, centres, tuple(boundaries), face_of_edge, tuple(crossed)
    )


# product identities ----------------------------------------------------------

@dataclass(frozen=True)
class ProductIdentityCheck:
    even: CharPoly
    odd: CharPoly
    whole: CharPoly
    exponent: int
    product_holds: bool
    shift_holds: bool


def check_product_identities(g: BipartiteGraph, h: BipartiteGraph) -> ProductIdentityCheck:
    """Test P(E)P(O) = P(G x H) and P(E) = x^((p-q)(r-s)) P(O) exactly.

    A negative exponent moves the power of x to the other side so that both
    sides stay polynomials.
    """
    p, q = g.part_sizes
    r, s = h.part_sizes
    pe = graph_charpoly(product_component(g, h, "even"))
    po = graph_charpoly(product_component(g, h, "odd"))
    whole = charpoly(weak_direct_product_adjacency(g, h))
    e = (p - q) * (r - s)
    if e >= 0:
        shift_holds = pe == po.shift(e)
    else:
        shift_holds = pe.shift(-e) == po
    return ProductIdentityCheck(pe, po, whole, e, pe * po == whole, shift_holds)
