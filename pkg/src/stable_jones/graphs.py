"""Abstract simple graphs: canonical codes, reductions, enumeration.

Vertices are 0..n-1.  Edges are stored as sorted (u, v) pairs with u < v.
Canonical codes come from color refinement with individualization
backtracking, so isomorphism questions reduce to byte-string equality.
Intended for small graphs (n <= 12 or so).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]]) -> "SimpleGraph":
        seen = set()
        for u, v in pairs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}; reduce the graph first")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"parallel edge {key}; reduce the graph first")
            seen.add(key)
        return cls(n, tuple(sorted(seen)))

    @property
    def e(self) -> int:
        return len(self.edges)

    def adjacency_masks(self) -> list[int]:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in set(self.edges)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Apply vertex map v -> perm[v]."""
        return SimpleGraph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced(self, verts: Sequence[int]) -> "SimpleGraph":
        """Subgraph induced on the given vertices, relabeled 0..k-1."""
        idx = {v: i for i, v in enumerate(verts)}
        es = [(idx[u], idx[v]) for u, v in self.edges if u in idx and v in idx]
        return SimpleGraph.from_edges(len(verts), es)

    def disjoint_union(self, other: "SimpleGraph") -> "SimpleGraph":
        es = list(self.edges) + [(u + self.n, v + self.n) for u, v in other.edges]
        return SimpleGraph.from_edges(self.n + other.n, es)


def reduce_multigraph(n: int, pairs: Iterable[Sequence[int]]) -> SimpleGraph:
    """Delete loops and collapse parallel edges."""
    seen = set()
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) out of range for n={n}")
        if u != v:
            seen.add((min(u, v), max(u, v)))
    return SimpleGraph(n, tuple(sorted(seen)))


# ----------------------------------------------------------------------
# text and graph6 forms


def parse_edge_list(text: str) -> tuple[int, list[tuple[int, int]]]:
    """Parse the plain edge-list format: header 'n <count>', then 'u v' lines.

    Loops and repeated edges are allowed here; callers reduce as needed.
    """
    lines = [ln.split("#")[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError("edge-list header must be 'n <vertex count>'")
    n = int(head[1])
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return n, pairs


def format_edge_list(g: SimpleGraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def to_graph6(g: SimpleGraph) -> str:
    """Standard graph6 encoding (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 support here is limited to n <= 62")
    bits = []
    eset = set(g.edges)
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        chars.append(chr(x + 63))
    return "".join(chars)


def from_graph6(text: str) -> SimpleGraph:
    s = text.strip()
    if not s:
        raise ValueError("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise ValueError("graph6 support here is limited to n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ValueError(f"graph6 body length {len(body)}, expected {need}")
    bits = []
    for ch in body:
        x = ord(ch) - 63
        if not (0 <= x < 64):
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend((x >> k) & 1 for k in range(5, -1, -1))
    pairs = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                pairs.append((u, v))
            i += 1
    return SimpleGraph.from_edges(n, pairs)


# ----------------------------------------------------------------------
# canonical labeling by refinement + individualization


def _refine(n: int, adj: list[int], colors: list[int]) -> list[int]:
    while True:
        sigs = []
        for v in range(n):
            m = adj[v]
            nb = []
            while m:
                w = (m & -m).bit_length() - 1
                nb.append(colors[w])
                m &= m - 1
            nb.sort()
            sigs.append((colors[v], tuple(nb)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode(n: int, adj: list[int], order: list[int]) -> bytes:
    bits = []
    for i in range(n):
        for j in range(i + 1, n):
            bits.append(1 if (adj[order[i]] >> order[j]) & 1 else 0)
    out = bytearray([n])
    for i in range(0, len(bits), 8):
        x = 0
        for b in bits[i : i + 8]:
            x = (x << 1) | b
        x <<= 8 - len(bits[i : i + 8])
        out.append(x)
    return bytes(out)


def _search_codes(n: int, adj: list[int], colors: list[int], best: list, leaves: list) -> None:
    colors = _refine(n, adj, colors)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        order = sorted(range(n), key=lambda v: colors[v])
        code = _encode(n, adj, order)
        if best[0] is None or code < best[0]:
            best[0] = code
            leaves.clear()
            leaves.append(tuple(order))
        elif code == best[0]:
            leaves.append(tuple(order))
        return
    for v in target:
        child = [2 * c for c in colors]
        child[v] -= 1
        _search_codes(n, adj, child, best, leaves)


def _canonical_data(g: SimpleGraph) -> tuple[bytes, tuple[int, ...], int]:
    n = g.n
    if n == 0:
        return b"\x00", (), 1
    adj = g.adjacency_masks()
    best: list = [None]
    leaves: list = []
    _search_codes(n, adj, [0] * n, best, leaves)
    distinct = set(leaves)
    return best[0], leaves[0], len(distinct)


def canonical_code(g: SimpleGraph) -> bytes:
    """Isomorphism-invariant byte string; equal iff graphs are isomorphic."""
    return _canonical_data(g)[0]


def canonical_form(g: SimpleGraph) -> tuple[SimpleGraph, list[int]]:
    """Canonically relabeled copy plus the map old vertex -> new index."""
    _, order, _ = _canonical_data(g)
    perm = [0] * g.n
    for i, v in enumerate(order):
        perm[v] = i
    return g.relabel(perm), perm


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.e != h.e:
        return False
    return canonical_code(g) == canonical_code(h)


def automorphism_count(g: SimpleGraph) -> int:
    """Order of the automorphism group."""
    return _canonical_data(g)[2]


# ----------------------------------------------------------------------
# connectivity


def connected_components(g: SimpleGraph) -> list[list[int]]:
    adj = g.adjacency_masks()
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            m = adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: SimpleGraph) -> bool:
    return len(connected_components(g)) <= 1


def _dfs_low(g: SimpleGraph):
    """Iterative DFS computing discovery and low values for bridges/cut vertices."""
    adjlist: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adjlist[u].append(v)
        adjlist[v].append(u)
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    bridges = []
    cut = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(adjlist[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(adjlist[w])))
                    advanced = True
                    break
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.append((min(p, v), max(p, v)))
                    if p != root and low[v] >= disc[p]:
                        cut.add(p)
        if root_children > 1:
            cut.add(root)
    return bridges, sorted(cut)


def bridges(g: SimpleGraph) -> list[tuple[int, int]]:
    return _dfs_low(g)[0]


def cut_vertices(g: SimpleGraph) -> list[int]:
    return _dfs_low(g)[1]


def is_two_edge_connected(g: SimpleGraph) -> bool:
    """Connected, at least one edge, and bridge-free."""
    return g.e >= 1 and is_connected(g) and not bridges(g)


def blocks(g: SimpleGraph) -> list[list[tuple[int, int]]]:
    """Biconnected components as edge lists (bridges become 1-edge blocks)."""
    adjlist: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adjlist[u].append(v)
        adjlist[v].append(u)
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    estack: list[tuple[int, int]] = []
    out: list[list[tuple[int, int]]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, iter(adjlist[root]))]
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    estack.append((v, w))
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, iter(adjlist[w])))
                    advanced = True
                    break
                elif w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        block = []
                        while estack:
                            e = estack.pop()
                            block.append((min(e), max(e)))
                            if e == (p, v):
                                break
                        out.append(sorted(set(block)))
    return out


# ----------------------------------------------------------------------
# connected-sum factorization


def _two_cut_edge_split(g: SimpleGraph) -> list[SimpleGraph] | None:
    """Split a 2-connected graph along an adjacent 2-vertex cut, if any.

    If {u, v} is an edge and removing both vertices disconnects the rest,
    the graph is the union of the pieces glued over that edge; each factor
    keeps the shared edge.  Returns None when no such cut exists.
    """
    if g.n < 4:
        return None
    for u, v in g.edges:
        rest = [w for w in range(g.n) if w not in (u, v)]
        if not rest:
            continue
        sub = g.induced(rest)
        comps = connected_components(sub)
        if len(comps) < 2:
            continue
        factors = []
        for comp in comps:
            verts = sorted([rest[i] for i in comp] + [u, v])
            keep = set(verts)
            es = [(a, b) for a, b in g.edges if a in keep and b in keep]
            idx = {w: i for i, w in enumerate(verts)}
            factors.append(SimpleGraph.from_edges(len(verts), [(idx[a], idx[b]) for a, b in es]))
        return factors
    return None


def connected_sum_factors(g: SimpleGraph) -> list[SimpleGraph]:
    """Irreducible factors under vertex and edge connected sums.

    Vertex sums split at cut vertices (block decomposition); edge sums
    split along adjacent 2-vertex cuts, with the shared edge kept in both
    pieces.  The result lists graphs that admit no further split.
    """
    if g.e == 0:
        return [g]
    work = []
    for comp in connected_components(g):
        sub = g.induced(comp)
        if sub.e:
            work.append(sub)
    out: list[SimpleGraph] = []
    while work:
        h = work.pop()
        blks = blocks(h)
        if len(blks) > 1:
            for blk in blks:
                verts = sorted({w for e in blk for w in e})
                idx = {w: i for i, w in enumerate(verts)}
                work.append(SimpleGraph.from_edges(len(verts), [(idx[a], idx[b]) for a, b in blk]))
            continue
        split = _two_cut_edge_split(h)
        if split is not None:
            work.extend(split)
            continue
        out.append(h)
    out.sort(key=lambda f: (f.n, f.e, canonical_code(f)))
    return out


def is_irreducible(g: SimpleGraph) -> bool:
    """No decomposition as a vertex or edge connected sum."""
    if g.e == 0:
        return g.n == 1
    if not is_connected(g):
        return False
    factors = connected_sum_factors(g)
    return len(factors) == 1 and factors[0].n == g.n


# ----------------------------------------------------------------------
# isomorph-free enumeration


@lru_cache(maxsize=None)
def enumerate_graphs(n: int, max_edges: int | None = None, connected: bool = True) -> tuple[SimpleGraph, ...]:
    """All graphs on exactly n vertices up to isomorphism, one per class.

    Built by vertex augmentation with canonical-code deduplication.  The
    edge cap prunes during generation, so sparse levels stay cheap.
    """
    cap = max_edges if max_edges is not None else n * (n - 1) // 2
    if n == 0:
        return (SimpleGraph(0, ()),)
    if n == 1:
        return (SimpleGraph(1, ()),)
    prev = enumerate_graphs(n - 1, max_edges, connected)
    seen: dict[bytes, SimpleGraph] = {}
    min_deg = 1 if connected else 0
    for base in prev:
        room = cap - base.e
        for k in range(min_deg, min(n - 1, room) + 1):
            for nbrs in itertools.combinations(range(n - 1), k):
                cand = SimpleGraph(
                    n, tuple(sorted(base.edges + tuple((w, n - 1) for w in nbrs)))
                )
                if connected and not is_connected(cand):
                    continue
                code = canonical_code(cand)
                if code not in seen:
                    seen[code] = cand
    return tuple(sorted(seen.values(), key=lambda g: (g.e, canonical_code(g))))


@lru_cache(maxsize=None)
def enumerate_connected_by_edges(max_edges: int) -> tuple[SimpleGraph, ...]:
    """All connected graphs with 1..max_edges edges, any vertex count."""
    out = []
    for n in range(2, max_edges + 2):
        out.extend(g for g in enumerate_graphs(n, max_edges, True) if g.e >= 1)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_bridgeless_by_edges(max_edges: int) -> tuple[SimpleGraph, ...]:
    """All bridgeless connected graphs with 3..max_edges edges, one per class.

    Grown by ear decomposition: every bridgeless connected graph arises
    from a cycle by repeatedly attaching an ear (a path between existing
    vertices, or a cycle through one), and every intermediate stage is
    itself bridgeless.  This keeps the search inside the target class,
    far smaller than enumerating all connected graphs.
    """
    seen: dict[bytes, SimpleGraph] = {}
    queue: list[SimpleGraph] = []
    for k in range(3, max_edges + 1):
        cyc = SimpleGraph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        code = canonical_code(cyc)
        if code not in seen:
            seen[code] = cyc
            queue.append(cyc)
    while queue:
        g = queue.pop()
        room = max_edges - g.e
        adj = [set() for _ in range(g.n)]
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        candidates: list[SimpleGraph] = []
        for u in range(g.n):
            for v in range(u, g.n):
                min_len = 3 if u == v else (2 if v in adj[u] else 1)
                for length in range(min_len, room + 1):
                    inner = list(range(g.n, g.n + length - 1))
                    chain = [u, *inner, v]
                    ear = list(zip(chain, chain[1:]))
                    candidates.append(
                        SimpleGraph.from_edges(g.n + length - 1, list(g.edges) + ear)
                    )
        for cand in candidates:
            code = canonical_code(cand)
            if code not in seen:
                seen[code] = cand
                queue.append(cand)
    return tuple(sorted(seen.values(), key=lambda g: (g.e, g.n, canonical_code(g))))
