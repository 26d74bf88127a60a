"""Alternating link diagrams of plane graphs and their DT codes.

A connected plane graph determines an alternating link diagram on its
medial curve: one crossing per edge, with strand arcs running along the
face corners between consecutive edges.  Strands pass straight through
every crossing, and over/under is assigned so that passages alternate
along each strand, which makes the diagram alternating by construction.

The Dowker-Thistlethwaite code numbers the passages 1..2n along the
strands, pairs the odd label with the even label at each crossing, and
records the signed even labels in odd-label order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .planar import PlaneGraph


class EmptyGraph(ValueError):
    """The graph has no edges, so there is no diagram."""


class NoValidNumbering(RuntimeError):
    """No passage numbering pairs odd with even labels at every crossing."""


@dataclass(frozen=True)
class Passage:
    """One trip through a crossing while walking a strand."""

    crossing: int
    over: bool


@dataclass(frozen=True)
class LinkDiagram:
    """Strands as cyclic passage sequences; one crossing per source edge."""

    crossing_count: int
    strands: tuple[tuple[Passage, ...], ...]

    def __post_init__(self):
        visits: dict[int, list[bool]] = {}
        for strand in self.strands:
            for p in strand:
                visits.setdefault(p.crossing, []).append(p.over)
        if sorted(visits) != list(range(self.crossing_count)):
            raise ValueError("crossing ids must be 0..crossing_count-1")
        for c, overs in visits.items():
            if len(overs) != 2 or overs[0] == overs[1]:
                raise ValueError(
                    f"crossing {c} needs exactly one over and one under passage"
                )


def _strand_cycles(pg: PlaneGraph) -> list[list[int]]:
    """Cycles of the strand-successor map over directed corner arcs.

    A state 2*d+m is the corner arc of dart d, heading toward the
    crossing on d's own edge (m=0) or toward the crossing on the face
    predecessor of d (m=1).  Passing straight through a crossing sends
    the arc at one endpoint to the arc at the other endpoint on the
    opposite side of the edge.
    """
    if pg.num_edges == 0:
        raise EmptyGraph("the graph has no edges")
    ndarts = 2 * pg.num_edges
    face_pred = [0] * ndarts
    for face in pg.faces:
        for prev, cur in zip(face, face[1:] + face[:1]):
            face_pred[cur] = prev
    rot_next = [0] * ndarts
    for v in range(pg.n):
        order = pg.rotation[v]
        for i, d in enumerate(order):
            rot_next[d] = order[(i + 1) % len(order)]

    def successor(state: int) -> int:
        d, mode = state >> 1, state & 1
        if mode == 0:
            return ((d ^ 1) << 1) | 1
        return rot_next[face_pred[d]] << 1

    def reverse(state: int) -> int:
        # Modes 0 and 1 are the two directions of the same corner arc.
        return state ^ 1

    seen = [False] * (2 * ndarts)
    cycles = []
    for start in range(2 * ndarts):
        if seen[start]:
            continue
        cycle = []
        s = start
        while not seen[s]:
            seen[s] = True
            cycle.append(s)
            s = successor(s)
        cycles.append(cycle)
    # Directed arcs double-cover the strands: every strand appears once
    # per direction.  Keep the lower-numbered orientation of each pair.
    cycle_of = {}
    for i, cycle in enumerate(cycles):
        for s in cycle:
            cycle_of[s] = i
    return [
        cycle
        for cycle in cycles
        if cycle[0] < min(cycles[cycle_of[reverse(cycle[0])]])
    ]


def medial_component_count(pg: PlaneGraph) -> int:
    """Number of strands in the diagram of the plane graph."""
    return len(_strand_cycles(pg))


def medial_link(pg: PlaneGraph) -> LinkDiagram:
    """The alternating link diagram of a connected plane graph.

    Crossing ids follow the source edge ids (dart pairs).  A state with
    mode 0 is about to pass through its own edge's crossing on the over
    strand; mode 1 passes through the face predecessor's crossing on the
    under strand.
    """
    ndarts = 2 * pg.num_edges
    face_pred = [0] * ndarts
    for face in pg.faces:
        for prev, cur in zip(face, face[1:] + face[:1]):
            face_pred[cur] = prev
    strands = []
    for cycle in _strand_cycles(pg):
        passages = []
        for state in cycle:
            d, mode = state >> 1, state & 1
            if mode == 0:
                passages.append(Passage(d >> 1, True))
            else:
                passages.append(Passage(face_pred[d] >> 1, False))
        strands.append(tuple(passages))
    return LinkDiagram(pg.num_edges, tuple(strands))


def _orientations(strand: tuple[Passage, ...]):
    """All rotations in both directions, deterministically ordered."""
    n = len(strand)
    for reverse in (False, True):
        seq = strand[::-1] if reverse else strand
        for r in range(n):
            yield seq[r:] + seq[:r]


def _number_passages(
    diagram: LinkDiagram,
) -> list[tuple[Passage, ...]]:
    """Choose a start and direction per strand so labels pair odd-even.

    Sequential labels 1..2n run along the reoriented strands.  Each
    crossing must receive one odd and one even label; the first valid
    assignment in deterministic order is returned.
    """
    strands = diagram.strands

    def extend(i: int, parity_of: dict[int, int]) -> list | None:
        if i == len(strands):
            return []
        base = 1 + sum(len(s) for s in strands[:i])
        for candidate in _orientations(strands[i]):
            chosen = dict(parity_of)
            ok = True
            for offset, passage in enumerate(candidate):
                parity = (base + offset) & 1
                prev = chosen.get(passage.crossing)
                if prev is None:
                    chosen[passage.crossing] = parity
                elif prev == parity:
                    ok = False
                    break
                else:
                    chosen[passage.crossing] = -1
            if not ok:
                continue
            rest = extend(i + 1, chosen)
            if rest is not None:
                return [candidate] + rest
        return None

    result = extend(0, {})
    if result is None:
        raise NoValidNumbering(
            "no start choices give an odd-even passage pairing"
        )
    return result


def dt_code(diagram: LinkDiagram) -> list[list[int]]:
    """Signed even labels in odd-label order, one sequence per strand.

    The sign is positive when the odd-labeled passage goes over.  For a
    one-strand diagram built here the labels alternate over/under, so
    the code comes out all positive.
    """
    numbered = _number_passages(diagram)
    label_of: list[tuple[int, Passage]] = []
    label = 1
    for strand in numbered:
        for passage in strand:
            label_of.append((label, passage))
            label += 1
    partner: dict[int, list[tuple[int, Passage]]] = {}
    for lab, passage in label_of:
        partner.setdefault(passage.crossing, []).append((lab, passage))
    code = []
    start = 1
    for strand in numbered:
        labels = range(start, start + len(strand))
        odds = [lab for lab in labels if lab & 1]
        seq = []
        for odd in odds:
            crossing = label_of[odd - 1][1].crossing
            (l1, p1), (l2, p2) = partner[crossing]
            if l1 == odd:
                even, odd_passage = l2, p1
            else:
                even, odd_passage = l1, p2
            seq.append(even if odd_passage.over else -even)
        code.append(seq)
        start += len(strand)
    return code


def retrace(code: list[list[int]]) -> LinkDiagram:
    """Rebuild a diagram from its code, with crossings renamed by pairs.

    Crossing ids are assigned in odd-label order, so the result matches
    the source diagram only up to renaming, rotation, and direction;
    compare with canonical_diagram.
    """
    pairs: dict[int, tuple[int, bool]] = {}
    odd = 1
    lengths = []
    for seq in code:
        lengths.append(2 * len(seq))
        for signed in seq:
            pairs[odd] = (abs(signed), signed > 0)
            odd += 2
    total = sum(lengths)
    crossing_of = {}
    over_of = {}
    for idx, (o, (e, odd_over)) in enumerate(sorted(pairs.items())):
        crossing_of[o] = crossing_of[e] = idx
        over_of[o] = odd_over
        over_of[e] = not odd_over
    if sorted(crossing_of) != list(range(1, total + 1)):
        raise ValueError("labels must pair 1..2n exactly")
    strands = []
    start = 1
    for length in lengths:
        strands.append(
            tuple(
                Passage(crossing_of[lab], over_of[lab])
                for lab in range(start, start + length)
            )
        )
        start += length
    return LinkDiagram(total // 2, tuple(strands))


def canonical_diagram(diagram: LinkDiagram) -> tuple:
    """Orbit representative under rotation, reversal, and renaming.

    Strand order is kept; each strand may be rotated or reversed, and
    crossings are renamed in first-visit order, so equal values mean the
    same diagram regardless of where tracing started.
    """
    best = None
    for combo in itertools.product(
        *(_orientations(s) for s in diagram.strands)
    ):
        rename: dict[int, int] = {}
        encoded = []
        for strand in combo:
            row = []
            for p in strand:
                if p.crossing not in rename:
                    rename[p.crossing] = len(rename)
                row.append((rename[p.crossing], p.over))
            encoded.append(tuple(row))
        key = tuple(encoded)
        if best is None or key < best:
            best = key
    return best
