"""Admissible states of a rooted plane graph and their weighted sum.

A state assigns an integer a_p to every face (0 on the outer face) and an
integer b_v to every vertex (0 at the root), subject to a_p + b_v >= 0 at
every corner.  Each state carries two quadratic forms:

    A = sum_p [ l(p) a_p^2 + 2 a_p sum_{v in walk(p)} b_v ]
        + 2 sum_{edges uv} b_u b_v
    B = 2 sum_v b_v + sum_p (l(p) - 2) a_p

and contributes sign q^{(A+B)/2} / prod_{corners} (q)_{a_p + b_v} with
sign = (-1)^B.  The series of the graph is (q)_oo^E times the sum over
all states.

form_A and form_A_nonneg evaluate A through two different algebraic
routes (the defining quadratic form, and a decomposition into manifestly
nonnegative per-face terms); they must agree on every state, which the
tests exercise heavily.  The enumerator is organized around the second
route, and its completeness is certified against a dumb box scan.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .graphs import SimpleGraph, connected_components, is_two_edge_connected
from .planar import PlaneGraph, find_planar_embedding
from .qseries import TruncSeries, euler_power, invert_unit, pochhammer

DEFAULT_BUDGET = 10**8


class HalfIntegerPower(ArithmeticError):
    """A state produced odd A + B; the theory forbids this."""


class BudgetExceeded(RuntimeError):
    """The enumeration walked more nodes than the configured budget."""


@dataclass(frozen=True)
class AdmissibleState:
    """a per face (outer entry 0), b per vertex (root entry 0)."""

    a: tuple[int, ...]
    b: tuple[int, ...]


@dataclass(frozen=True)
class StateWeight:
    A: int
    B: int
    degree: int
    sign: int
    denominators: tuple[int, ...]


# ----------------------------------------------------------------------
# the two routes to the quadratic form A


def form_A(pg: PlaneGraph, state: AdmissibleState) -> int:
    """A by its defining expression: face by face, plus the edge term."""
    a, b = state.a, state.b
    total = 0
    for p, face in enumerate(pg.faces):
        walk = pg.face_vertices(p)
        total += len(walk) * a[p] * a[p] + 2 * a[p] * sum(b[v] for v in walk)
    for u, v in pg.edge_pairs():
        total += 2 * b[u] * b[v]
    return total


def form_A_nonneg(pg: PlaneGraph, state: AdmissibleState) -> int:
    """A rearranged into nonnegative per-face brackets.

    For each bounded face, with m the minimum of b over its walk:

        l (a+m)^2 + 2 (a+m) sum (b_v - m) + sum (b_v - m)(b_v' - m)

    where the last sum runs over consecutive walk pairs; the outer face
    contributes sum b_v b_v' over its own walk pairs.  On admissible
    states every bracket is nonnegative.
    """
    a, b = state.a, state.b
    total = 0
    for p in range(len(pg.faces)):
        walk = pg.face_vertices(p)
        pairs = list(zip(walk, walk[1:] + walk[:1]))
        if p == pg.outer:
            total += sum(b[u] * b[v] for u, v in pairs)
            continue
        m = min(b[v] for v in walk)
        t = a[p] + m
        s = sum(b[v] - m for v in walk)
        e = sum((b[u] - m) * (b[v] - m) for u, v in pairs)
        total += len(walk) * t * t + 2 * t * s + e
    return total


def form_B(pg: PlaneGraph, state: AdmissibleState) -> int:
    a, b = state.a, state.b
    total = 2 * sum(b)
    for p, face in enumerate(pg.faces):
        total += (len(face) - 2) * a[p]
    return total


def is_admissible(pg: PlaneGraph, state: AdmissibleState) -> bool:
    a, b = state.a, state.b
    if a[pg.outer] != 0 or b[pg.root] != 0:
        return False
    return all(a[p] + b[v] >= 0 for p, v in pg.corners())


def state_weight(pg: PlaneGraph, state: AdmissibleState) -> StateWeight:
    """Weight data computed straight from the definitions."""
    A = form_A(pg, state)
    B = form_B(pg, state)
    if (A + B) % 2:
        raise HalfIntegerPower(f"A + B = {A} + {B} is odd")
    denoms = tuple(sorted(state.a[p] + state.b[v] for p, v in pg.corners()))
    return StateWeight(A, B, (A + B) // 2, -1 if B % 2 else 1, denoms)


def state_term(weight: StateWeight, order: int) -> TruncSeries:
    """sign q^degree / prod (q)_x truncated at the given order."""
    out = TruncSeries.monomial(order, weight.degree, weight.sign)
    if weight.degree > order:
        return TruncSeries.zero(order)
    for x in weight.denominators:
        if x:
            out = out * invert_unit(pochhammer(x, order))
    return out


# ----------------------------------------------------------------------
# the enumerator


class _Engine:
    """Depth-first enumeration of all admissible states up to a degree.

    Vertices are assigned in BFS order from the root.  Sound interval
    bounds come from the corner inequality a_p + b_v <= B <= 2N - A_lb
    (valid on bridgeless graphs), soundness of pruning from the fact
    that every per-face bracket of form_A_nonneg is nonnegative and, as
    a function of t = a_p + min b, nondecreasing on t >= 0.
    """

    def __init__(self, pg: PlaneGraph, max_degree: int, budget: int):
        self.pg = pg
        self.N = max_degree
        self.budget = budget
        self.nodes = 0

        for d in range(2 * pg.num_edges):
            if pg.dart_face[d] == pg.dart_face[d ^ 1]:
                raise ValueError("state enumeration requires a bridgeless graph")

        n = pg.n
        self.outer_set = pg.outer_vertices()
        self.bounded = pg.bounded_faces()
        self.face_walk = {p: pg.face_vertices(p) for p in range(len(pg.faces))}

        # BFS order over graph edges from the root
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in pg.edge_pairs():
            adj[u].add(v)
            adj[v].add(u)
        order = [pg.root]
        pos = {pg.root: 0}
        qi = 0
        while qi < len(order):
            v = order[qi]
            qi += 1
            for w in sorted(adj[v]):
                if w not in pos:
                    pos[w] = len(order)
                    order.append(w)
        self.order = order
        self.pos = pos

        # face-sharing partners among earlier vertices
        vertex_faces: list[set[int]] = [set() for _ in range(n)]
        for p in range(len(pg.faces)):
            for v in self.face_walk[p]:
                vertex_faces[v].add(p)
        self.partners: list[list[int]] = [[] for _ in range(n)]
        for v in range(n):
            if v == pg.root:
                continue
            ps = set()
            for p in vertex_faces[v]:
                for w in self.face_walk[p]:
                    if pos[w] < pos[v]:
                        ps.add(w)
            self.partners[v] = sorted(ps)

        # bounded faces complete once their last distinct vertex is set
        self.faces_done_at: list[list[int]] = [[] for _ in range(n)]
        for p in self.bounded:
            last = max(self.face_walk[p], key=lambda w: pos[w])
            self.faces_done_at[last].append(p)

        # outer walk dart products commit when the later endpoint is set
        self.outer_pairs_at: list[list[int]] = [[] for _ in range(n)]
        ow = self.face_walk[pg.outer]
        for u, v in zip(ow, ow[1:] + ow[:1]):
            later = u if pos[u] > pos[v] else v
            other = v if later == u else u
            self.outer_pairs_at[later].append(other)

        # static box per vertex from corner-difference chains
        INF = float("inf")
        dist = {v: (0 if v in self.outer_set else INF) for v in range(n)}
        frontier = sorted(self.outer_set)
        while frontier:
            nxt = []
            for v in frontier:
                for p in vertex_faces[v]:
                    for w in self.face_walk[p]:
                        if dist[w] == INF:
                            dist[w] = dist[v] + 1
                            nxt.append(w)
            frontier = nxt
        twoN = 2 * max_degree
        self.static_lo = [0 if v in self.outer_set else -twoN * int(dist[v]) for v in range(n)]
        self.static_hi = [twoN * (int(dist[v]) + 1) for v in range(n)]

        # floor of the incomplete-face bracket: e >= 0 and -(l-2) min b
        self.face_floor = {}
        for p in self.bounded:
            walk = self.face_walk[p]
            hi_m = min(self.static_hi[v] for v in walk)
            self.face_floor[p] = -(len(walk) - 2) * max(hi_m, 0)

        self.results: list[tuple[AdmissibleState, StateWeight]] = []

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"more than {self.budget} search nodes")

    def run(self) -> list[tuple[AdmissibleState, StateWeight]]:
        n = self.pg.n
        b = [0] * n
        lb_rest = sum(2 * self.static_lo[v] for v in self.order[1:])
        floor_rest = sum(self.face_floor.values())
        self._assign(1, b, 0, 0, 0, 0, lb_rest, floor_rest, {})
        self.results.sort(key=lambda sw: (sw[0].b, sw[0].a))
        return self.results

    def _assign(self, i, b, sum2b, einf_com, e_sum, g0_sum, lb_rest, floor_rest, face_data):
        # sum2b:    2 * sum of assigned b
        # einf_com: committed outer-walk products (each term >= 0)
        # e_sum:    sum of e_p over completed faces (each >= 0)
        # g0_sum:   sum of e_p - (l-2) m_p over completed faces
        # lb_rest:  sum of 2 * static_lo over unassigned vertices
        # floor_rest: sum of static face floors over incomplete faces
        twoN = 2 * self.N
        if i == len(self.order):
            self._face_phase(b, sum2b, face_data)
            return
        v = self.order[i]
        bmax = twoN - einf_com - e_sum
        if bmax < 0:
            return
        lo = max(b[w] for w in self.partners[v]) - bmax
        hi = min(b[w] for w in self.partners[v]) + bmax
        if v in self.outer_set:
            lo = max(lo, 0)
            hi = min(hi, bmax)
        lb_rest2 = lb_rest - 2 * self.static_lo[v]
        for bv in range(lo, hi + 1):
            self._tick()
            b[v] = bv
            einf_add = sum(bv * b[w] for w in self.outer_pairs_at[v])
            new_face_data = face_data
            floor2 = floor_rest
            g0_add = 0
            e_add = 0
            if self.faces_done_at[v]:
                new_face_data = dict(face_data)
                for p in self.faces_done_at[v]:
                    walk = self.face_walk[p]
                    m = min(b[w] for w in walk)
                    s = sum(b[w] - m for w in walk)
                    e = 0
                    prev = walk[-1]
                    for w in walk:
                        e += (b[prev] - m) * (b[w] - m)
                        prev = w
                    l = len(walk)
                    new_face_data[p] = (l, m, s, e)
                    g0_add += e - (l - 2) * m
                    e_add += e
                    floor2 -= self.face_floor[p]
            # partial lower bound on final A + B over any completion
            lb = (
                (einf_com + einf_add)
                + (sum2b + 2 * bv + lb_rest2)
                + (g0_sum + g0_add + floor2)
            )
            if lb <= twoN:
                self._assign(
                    i + 1,
                    b,
                    sum2b + 2 * bv,
                    einf_com + einf_add,
                    e_sum + e_add,
                    g0_sum + g0_add,
                    lb_rest2,
                    floor2,
                    new_face_data,
                )
        b[v] = 0

    def _face_phase(self, b, sum2b, face_data):
        einf = sum(
            b[u] * b[v]
            for u, v in zip(
                self.face_walk[self.pg.outer],
                self.face_walk[self.pg.outer][1:] + self.face_walk[self.pg.outer][:1],
            )
        )
        base = einf + sum2b
        for p in self.bounded:
            l, m, s, e = face_data[p]
            base += e - (l - 2) * m
        if base > 2 * self.N:
            return
        ts = [0] * len(self.bounded)
        self._face_dfs(0, 2 * self.N - base, ts, b, face_data, einf, sum2b)

    def _face_dfs(self, k, room, ts, b, face_data, einf, sum2b):
        if k == len(self.bounded):
            self._emit(ts, b, face_data, einf, sum2b)
            return
        p = self.bounded[k]
        l, m, s, e = face_data[p]
        t = 0
        while True:
            delta = l * t * t + (2 * s + l - 2) * t
            if delta > room:
                break
            self._tick()
            ts[k] = t
            self._face_dfs(k + 1, room - delta, ts, b, face_data, einf, sum2b)
            t += 1
        ts[k] = 0

    def _emit(self, ts, b, face_data, einf, sum2b):
        pg = self.pg
        A = einf
        a = [0] * len(pg.faces)
        for k, p in enumerate(self.bounded):
            l, m, s, e = face_data[p]
            t = ts[k]
            A += l * t * t + 2 * t * s + e
            a[p] = t - m
        B_ = sum2b
        for p in self.bounded:
            l = face_data[p][0]
            B_ += (l - 2) * a[p]
        if (A + B_) % 2:
            raise HalfIntegerPower(f"A + B = {A} + {B_} is odd")
        denoms = []
        for p in range(len(pg.faces)):
            ap = a[p]
            denoms.extend(ap + b[v] for v in self.face_walk[p])
        state = AdmissibleState(tuple(a), tuple(b))
        weight = StateWeight(
            A, B_, (A + B_) // 2, -1 if B_ % 2 else 1, tuple(sorted(denoms))
        )
        self.results.append((state, weight))


def enumerate_states(
    pg: PlaneGraph, max_degree: int, budget: int = DEFAULT_BUDGET
) -> list[tuple[AdmissibleState, StateWeight]]:
    """All admissible states with (A+B)/2 <= max_degree, sorted by (b, a).

    Requires a bridgeless (2-edge-connected) plane graph.  Raises
    BudgetExceeded when the search walks more nodes than allowed.
    """
    return _Engine(pg, max_degree, budget).run()


# ----------------------------------------------------------------------
# independent completeness oracle


@dataclass(frozen=True)
class OracleResult:
    states: tuple[tuple[AdmissibleState, StateWeight], ...]
    radius: int


def brute_box_oracle(
    pg: PlaneGraph, max_degree: int, radius: int | None = None
) -> OracleResult:
    """Box scan over raw coordinates, straight from the definitions.

    Scans b in [0, R] for outer vertices and [-R, R] elsewhere, a in
    [-R, R] per bounded face, keeping admissible states of degree at
    most max_degree.  With radius=None, R grows until two consecutive
    radii agree, and the stabilized radius is reported.
    """
    if radius is not None:
        return OracleResult(_box_scan(pg, max_degree, radius), radius)
    r = max(2, max_degree)
    prev = _box_scan(pg, max_degree, r)
    while True:
        cur = _box_scan(pg, max_degree, r + 1)
        if cur == prev:
            return OracleResult(cur, r + 1)
        prev = cur
        r += 1


def _box_scan(pg: PlaneGraph, max_degree: int, radius: int):
    n = pg.n
    faces = list(range(len(pg.faces)))
    bounded = pg.bounded_faces()
    outer_set = pg.outer_vertices()
    bvars = [v for v in range(n) if v != pg.root]
    ranges = []
    for v in bvars:
        ranges.append(range(0, radius + 1) if v in outer_set else range(-radius, radius + 1))
    for _ in bounded:
        ranges.append(range(-radius, radius + 1))

    walks = {p: pg.face_vertices(p) for p in faces}
    edges = pg.edge_pairs()
    out = []
    # chunk the cartesian product: python loop over leading dims, numpy inside
    lead = []
    tail = list(ranges)
    block = 1
    while tail and block * len(tail[-1]) <= 200_000:
        block *= len(tail[-1])
        lead = [tail.pop()] + lead
    if lead:
        grids = np.meshgrid(*[np.array(r, dtype=np.int64) for r in lead], indexing="ij")
        cols = [g.reshape(-1) for g in grids]
    else:
        cols = []
    nlead = len(lead)

    for prefix in itertools.product(*tail):
        vals: dict[int, object] = {}
        coords = list(prefix) + cols  # python ints then numpy columns
        bcol = {pg.root: 0}
        for idx, v in enumerate(bvars):
            bcol[v] = coords[idx]
        acol = {pg.outer: 0}
        for j, p in enumerate(bounded):
            acol[p] = coords[len(bvars) + j]

        ok = np.ones(block if nlead else 1, dtype=bool)
        for p in faces:
            for v in walks[p]:
                ok &= np.asarray(acol[p] + bcol[v] >= 0)
        if not ok.any():
            continue
        A = np.zeros(block if nlead else 1, dtype=np.int64)
        for p in faces:
            l = len(walks[p])
            sb = sum(bcol[v] for v in walks[p])
            A = A + l * acol[p] * acol[p] + 2 * acol[p] * sb
        for u, v in edges:
            A = A + 2 * bcol[u] * bcol[v]
        B = np.zeros(block if nlead else 1, dtype=np.int64)
        B = B + 2 * sum(bcol[v] for v in bvars)
        for p in faces:
            B = B + (len(walks[p]) - 2) * acol[p]
        ok &= np.asarray(A + B <= 2 * max_degree)
        idxs = np.nonzero(ok)[0]
        for i in idxs:
            a = [0] * len(faces)
            b = [0] * n
            for v in bvars:
                b[v] = int(bcol[v][i]) if isinstance(bcol[v], np.ndarray) else int(bcol[v])
            for p in bounded:
                a[p] = int(acol[p][i]) if isinstance(acol[p], np.ndarray) else int(acol[p])
            state = AdmissibleState(tuple(a), tuple(b))
            out.append((state, state_weight(pg, state)))
    out.sort(key=lambda sw: (sw[0].b, sw[0].a))
    return tuple(out)


# ----------------------------------------------------------------------
# the series


def phi_on_embedding(
    pg: PlaneGraph, order: int, budget: int = DEFAULT_BUDGET
) -> TruncSeries:
    """(q)_oo^E times the state sum, on one fixed embedding."""
    states = enumerate_states(pg, order, budget)
    # group states sharing a denominator multiset; each group needs one
    # series product instead of one per state
    buckets: dict[tuple[int, ...], list[int]] = {}
    for _, w in states:
        key = tuple(x for x in w.denominators if x)
        buckets.setdefault(key, [0] * (order + 1))
        if w.degree <= order:
            buckets[key][w.degree] += w.sign
    total = TruncSeries.zero(order)
    inv_cache: dict[int, TruncSeries] = {}
    for key, coeffs in sorted(buckets.items()):
        numer = TruncSeries(order, coeffs)
        if numer.is_zero():
            continue
        prod = numer
        for x in key:
            inv = inv_cache.get(x)
            if inv is None:
                inv = invert_unit(pochhammer(x, order))
                inv_cache[x] = inv
            prod = prod * inv
        total = total + prod
    return euler_power(pg.num_edges, order) * total


def phi_series(
    g: SimpleGraph | PlaneGraph, order: int, budget: int = DEFAULT_BUDGET
) -> TruncSeries:
    """The stable series of a graph, truncated at the given order.

    PlaneGraph input is evaluated on that embedding as given.  For an
    abstract graph the multiplicative reductions apply first: components
    multiply with a (1-q)^-1 per extra component, blocks split at cut
    vertices, and bridge or vertex blocks contribute 1.  Each remaining
    block is embedded and summed.  Raises NotPlanar when impossible.
    """
    if isinstance(g, PlaneGraph):
        return phi_on_embedding(g, order, budget)
    comps = connected_components(g)
    total = TruncSeries.one(order)
    for comp in comps:
        sub = g.induced(comp)
        total = total * _phi_connected(sub, order, budget)
    if len(comps) > 1:
        one_minus_q = TruncSeries.one(order) - TruncSeries.monomial(order, 1)
        total = total * invert_unit(one_minus_q).pow(len(comps) - 1)
    return total


def _phi_connected(g: SimpleGraph, order: int, budget: int) -> TruncSeries:
    from .graphs import blocks

    total = TruncSeries.one(order)
    for blk in blocks(g):
        if len(blk) < 2:
            continue
        verts = sorted({w for e in blk for w in e})
        idx = {w: i for i, w in enumerate(verts)}
        sub = SimpleGraph.from_edges(len(verts), [(idx[x], idx[y]) for x, y in blk])
        pg = find_planar_embedding(sub, 0)
        total = total * phi_on_embedding(pg, order, budget)
    return total
