"""Plane graphs as rotation systems with certified Euler checks.

A plane graph is stored combinatorially: darts (directed half-edges)
numbered 0..2E-1, where darts 2i and 2i+1 are the two directions of edge
i, plus for every vertex the cyclic order of outgoing darts.  Faces are
traced by the standard rule: after crossing dart d, continue with the
rotation successor of the reversed dart at the head vertex.

Every constructed PlaneGraph is certified on the spot: the face count
must satisfy Euler's relation V - E + F = 2, so a bogus rotation system
cannot sneak through.  One face is marked as the outer face and the root
vertex must lie on it.
"""

from __future__ import annotations

import itertools
import json
from typing import Iterable, Iterator

from .graphs import SimpleGraph, connected_components, is_connected


class NotPlanar(ValueError):
    """The abstract graph has no plane embedding."""


class NonPlanarEmbedding(ValueError):
    """A rotation system whose face trace violates Euler's relation."""


class NotACut(ValueError):
    """A vertex pair that does not separate the graph."""


class PlaneGraph:
    """Immutable rotation system with traced faces and a root corner."""

    def __init__(
        self,
        n: int,
        rotation: Iterable[Iterable[int]],
        root: int = 0,
        outer_dart: int | None = None,
    ):
        rot = tuple(tuple(r) for r in rotation)
        if len(rot) != n:
            raise ValueError("rotation must list darts for every vertex")
        darts = sorted(d for r in rot for d in r)
        ndarts = len(darts)
        if ndarts % 2:
            raise ValueError("odd number of darts")
        if darts != list(range(ndarts)):
            raise ValueError("darts must be exactly 0..2E-1, each used once")
        tails = [0] * ndarts
        for v, r in enumerate(rot):
            for d in r:
                tails[d] = v
        if not (0 <= root < n):
            raise ValueError("root out of range")

        self.n = n
        self.num_edges = ndarts // 2
        self.rotation = rot
        self.tails = tuple(tails)
        self.root = root

        self._succ = {}
        for r in rot:
            for i, d in enumerate(r):
                self._succ[d] = r[(i + 1) % len(r)]

        if ndarts == 0:
            if n != 1:
                raise ValueError("an edgeless plane graph must be a single vertex")
            self.faces = ((),)
            self.outer = 0
            self.dart_face = ()
            return

        if not self._connected():
            raise ValueError("plane graph must be connected")

        faces = []
        face_of = [-1] * ndarts
        for start in range(ndarts):
            if face_of[start] != -1:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                face_of[d] = len(faces)
                d = self._succ[d ^ 1]
                if d == start:
                    break
            faces.append(tuple(walk))
        self.faces = tuple(faces)
        self.dart_face = tuple(face_of)

        if n - self.num_edges + len(faces) != 2:
            raise NonPlanarEmbedding(
                f"V-E+F = {n}-{self.num_edges}+{len(faces)} != 2"
            )

        if outer_dart is not None:
            if not (0 <= outer_dart < ndarts):
                raise ValueError("outer_dart out of range")
            self.outer = face_of[outer_dart]
        else:
            self.outer = next(
                i for i, f in enumerate(self.faces) if root in self.face_vertices(i)
            )
        if root not in self.face_vertices(self.outer) and self.num_edges:
            raise ValueError("root vertex must lie on the outer face")

    def _connected(self) -> bool:
        adj: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for d in range(2 * self.num_edges):
            adj[self.tails[d]].add(self.tails[d ^ 1])
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # ------------------------------------------------------------------

    def head(self, d: int) -> int:
        return self.tails[d ^ 1]

    def face_vertices(self, i: int) -> tuple[int, ...]:
        """Vertices along the walk of face i (tails of its darts)."""
        return tuple(self.tails[d] for d in self.faces[i])

    def edge_pairs(self) -> list[tuple[int, int]]:
        """Endpoints of every edge, with multiplicity."""
        return [
            (self.tails[2 * i], self.tails[2 * i + 1]) for i in range(self.num_edges)
        ]

    def corners(self) -> list[tuple[int, int]]:
        """(face index, vertex) incidences counted with multiplicity."""
        out = []
        for i in range(len(self.faces)):
            out.extend((i, v) for v in self.face_vertices(i))
        return out

    def bounded_faces(self) -> list[int]:
        return [i for i in range(len(self.faces)) if i != self.outer]

    def outer_vertices(self) -> frozenset[int]:
        return frozenset(self.face_vertices(self.outer))

    def underlying(self) -> SimpleGraph:
        """Underlying simple graph; fails on loops or parallel edges."""
        return SimpleGraph.from_edges(self.n, self.edge_pairs())

    def with_root(self, root: int, outer_dart: int | None = None) -> "PlaneGraph":
        return PlaneGraph(self.n, self.rotation, root, outer_dart)

    # ------------------------------------------------------------------

    def to_json(self) -> str:
        data = {
            "n": self.n,
            "rotation": [list(r) for r in self.rotation],
            "root": self.root,
        }
        if self.faces and self.faces[self.outer]:
            data["outer_dart"] = min(self.faces[self.outer])
        return json.dumps(data)

    @classmethod
    def from_json(cls, text: str) -> "PlaneGraph":
        data = json.loads(text)
        return cls(
            int(data["n"]),
            data["rotation"],
            int(data.get("root", 0)),
            data.get("outer_dart"),
        )


def plane_graph_from_neighbors(
    n: int,
    neighbor_order: list[list[int]],
    root: int = 0,
    outer_dart: int | None = None,
) -> PlaneGraph:
    """Build a PlaneGraph of a simple graph from per-vertex neighbor orders."""
    pairs = sorted(
        {(min(u, v), max(u, v)) for u, nbrs in enumerate(neighbor_order) for v in nbrs}
    )
    dart_id = {}
    for i, (u, v) in enumerate(pairs):
        dart_id[(u, v)] = 2 * i
        dart_id[(v, u)] = 2 * i + 1
    rotation = [[dart_id[(u, v)] for v in nbrs] for u, nbrs in enumerate(neighbor_order)]
    return PlaneGraph(n, rotation, root, outer_dart)


def find_planar_embedding(g: SimpleGraph, root: int = 0) -> PlaneGraph:
    """Some plane embedding of g with the root on the outer face.

    Planarity testing is delegated to networkx; the returned rotation
    system is then re-traced and certified against Euler's relation here,
    so a wrong embedding cannot pass silently.  Raises NotPlanar.
    """
    if not is_connected(g):
        raise ValueError("embedding requires a connected graph")
    if g.n == 1:
        return PlaneGraph(1, [[]], 0)
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(G)
    if not ok:
        raise NotPlanar(f"graph with {g.n} vertices, {g.e} edges is not planar")
    data = emb.get_data()
    order = [list(data.get(v, [])) for v in range(g.n)]
    return plane_graph_from_neighbors(g.n, order, root)


def is_planar(g: SimpleGraph) -> bool:
    if g.n <= 4:
        return True
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return nx.check_planarity(G)[0]


def all_planar_embeddings(g: SimpleGraph, root: int = 0) -> Iterator[PlaneGraph]:
    """Every rotation system passing the Euler check, times every choice
    of outer face containing the root.  Exhaustive, so small graphs only;
    cost grows as the product of (deg - 1)! over vertices.
    """
    if not is_connected(g):
        raise ValueError("embedding requires a connected graph")
    if g.n == 1:
        yield PlaneGraph(1, [[]], 0)
        return
    nbrs = [g.neighbors(v) for v in range(g.n)]
    choices = []
    for v in range(g.n):
        if len(nbrs[v]) <= 2:
            choices.append([tuple(nbrs[v])])
        else:
            first = nbrs[v][0]
            choices.append(
                [(first,) + p for p in itertools.permutations(nbrs[v][1:])]
            )
    for combo in itertools.product(*choices):
        try:
            pg = plane_graph_from_neighbors(g.n, [list(c) for c in combo], root)
        except NonPlanarEmbedding:
            continue
        for i, face in enumerate(pg.faces):
            if root in pg.face_vertices(i):
                yield PlaneGraph(pg.n, pg.rotation, root, min(face))


def whitney_flip(
    pg: PlaneGraph, u: int, v: int, side: frozenset[int] | None = None
) -> PlaneGraph:
    """Reflect one side of a 2-vertex cut {u, v}, reattaching its edges
    at u to v and vice versa.  Returns a certified embedding of the
    flipped graph.  Raises NotACut if {u, v} does not separate."""
    g = pg.underlying()
    rest = [w for w in range(g.n) if w not in (u, v)]
    sub = g.induced(rest)
    comps = [frozenset(rest[i] for i in comp) for comp in connected_components(sub)]
    if len(comps) < 2:
        raise NotACut(f"{{{u},{v}}} does not disconnect the graph")
    if side is None:
        side = min(comps, key=min)
    else:
        side = frozenset(side)
        covered = frozenset().union(*(c for c in comps if c <= side))
        if side != covered or not side or side == frozenset(rest):
            raise NotACut("side must be a nonempty proper union of cut components")
    new_edges = []
    for a, b in g.edges:
        if a in side and b in (u, v):
            new_edges.append((a, u if b == v else v))
        elif b in side and a in (u, v):
            new_edges.append((b, u if a == v else v))
        else:
            new_edges.append((a, b))
    flipped = SimpleGraph.from_edges(g.n, new_edges)
    return find_planar_embedding(flipped, pg.root)
