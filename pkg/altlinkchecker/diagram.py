import logging
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from . import maps
from .errors import DeclaredSurfaceSmaller, MalformedDiagram, NotAlternatable
from .models import (
    AlternationResult,
    CombinatorialMap,
    CutResult,
    CutSide,
    EmbeddedCurve,
    FaceArc,
    FullyAlternatingResult,
    LinkDiagram,
    StrandPass,
    SurfaceInfo,
    VertexPoint,
)

logger = logging.getLogger(__name__)

Nugatory = Tuple[int, int, EmbeddedCurve, CutResult]


def components(diagram: LinkDiagram) -> List[List[StrandPass]]:
    """Link components as cyclic sequences of strand passes."""
    m = diagram.map
    consumed: Set[int] = set()
    walks = []
    for d0 in m.darts:
        if d0 in consumed:
            continue
        walk = []
        d = d0
        while True:
            walk.append(StrandPass(m.vertex(d), diagram.is_over(d), d))
            consumed.add(d)
            consumed.add(diagram.opposite(d))
            d = m.alpha(diagram.opposite(d))
            if d == d0:
                break
        walks.append(walk)
    return walks


def is_connected(diagram: LinkDiagram) -> bool:
    return len(maps.components(diagram.map)) == 1


def is_alternating(diagram: LinkDiagram) -> AlternationResult:
    for walk in components(diagram):
        n = len(walk)
        if n == 1:
            continue
        if n % 2:
            return AlternationResult(False, walk[0].crossing)
        flips = [walk[i].is_over == walk[(i + 1) % n].is_over for i in range(n)]
        if not any(flips):
            continue
        # a pass agreeing with both neighbours pins the offending crossing
        for i in range(n):
            if flips[i - 1] and flips[i]:
                return AlternationResult(False, walk[i].crossing)
        i = flips.index(True)
        return AlternationResult(False, walk[(i + 1) % n].crossing)
    return AlternationResult(True)


def pass_graph(m: CombinatorialMap) -> nx.Graph:
    """Nodes (crossing, strand); an edge means the two passes must differ."""
    graph = nx.Graph()
    for v, cyc in enumerate(m.rotation):
        if len(cyc) != 4:
            raise MalformedDiagram(f"crossing {v} has degree {len(cyc)}, expected 4")
        graph.add_edge((v, 0), (v, 1))
    for v, cyc in enumerate(m.rotation):
        for d in cyc:
            opp = m.dart_at(v, m.position(d) + 2)
            nxt = m.alpha(opp)
            a = (v, m.position(d) % 2)
            b = (m.vertex(nxt), m.position(nxt) % 2)
            if a != b:
                graph.add_edge(a, b)
    return graph


def _bfs_layers(graph: nx.Graph) -> Tuple[Dict, Dict]:
    depth, parent = {}, {}
    for root in sorted(graph.nodes):
        if root in depth:
            continue
        depth[root], parent[root] = 0, None
        for a, b in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            depth[b], parent[b] = depth[a] + 1, a
    return depth, parent


def _odd_cycle(graph: nx.Graph, depth: Dict, parent: Dict) -> List[Tuple[int, int]]:
    for a, b in sorted(graph.edges):
        if depth[a] != depth[b]:
            continue
        left, right = [a], [b]
        while left[-1] != right[-1]:
            left.append(parent[left[-1]])
            right.append(parent[right[-1]])
        return left + list(reversed(right[:-1]))
    return []


def alternating_assignment(m: CombinatorialMap) -> LinkDiagram:
    """Choose over-strands so that every component alternates.

    Raises NotAlternatable with an odd cycle of the pass graph when no choice
    works.
    """
    graph = pass_graph(m)
    depth, parent = _bfs_layers(graph)
    if not nx.is_bipartite(graph):
        cycle = _odd_cycle(graph, depth, parent)
        logger.info("no alternating assignment: odd cycle %s", cycle)
        raise NotAlternatable(cycle)
    over = tuple(m.rotation[v][0] if depth[(v, 0)] % 2 == 0 else m.rotation[v][1]
                 for v in range(m.vertex_count))
    return LinkDiagram(m, over)


def is_fully_alternating(diagram: LinkDiagram, declared: Optional[SurfaceInfo] = None) -> FullyAlternatingResult:
    derived = maps.surface_info(diagram.map)
    if declared is not None and declared.euler_char > derived.euler_char:
        raise DeclaredSurfaceSmaller(declared.euler_char, derived.euler_char)
    cellular = declared is None or (
        derived.components == 1
        and (declared.genus, declared.orientable) == (derived.genus, derived.orientable)
    )
    return FullyAlternatingResult(
        alternating=is_alternating(diagram).alternating,
        cellular=cellular,
        surface=derived,
        excluded_surface=derived.is_sphere or derived.is_projective_plane,
        declared=declared,
    )


def _nugatory(diagram: LinkDiagram) -> List[Nugatory]:
    m = diagram.map
    faces = maps.trace_faces(m)
    corners = maps.corner_index(m, faces)
    found = []
    for v in range(m.vertex_count):
        for g in (0, 1):
            f1, p1 = corners[(v, g)]
            f2, p2 = corners[(v, g + 2)]
            if f1 != f2:
                continue
            curve = EmbeddedCurve((VertexPoint(v),), (FaceArc(f1, p1, p2),))
            cut = maps.cut_along_curve(m, curve, faces)
            if cut.bounds_disk:
                found.append((v, g, curve, cut))
                break
    return found


def find_nugatory(diagram: LinkDiagram) -> List[Tuple[int, EmbeddedCurve]]:
    return [(v, curve) for v, _, curve, _ in _nugatory(diagram)]


def _disk_side(cut: CutResult) -> CutSide:
    return min(cut.disk_sides, key=lambda s: len(s.vertices))


def _untwist(diagram: LinkDiagram, v: int, cut: CutResult) -> Optional[LinkDiagram]:
    """Remove nugatory crossing v, reflecting the tangle in its disk side."""
    m = diagram.map
    side = _disk_side(cut)
    at_v = set(m.rotation[v])

    joins = {}
    used: Set[int] = set()
    for u in m.darts:
        if u in at_v or m.alpha(u) not in at_v or u in joins:
            continue
        sign = m.sign(u)
        r = m.alpha(u)
        t = diagram.opposite(r)
        used.update((r, t))
        while m.alpha(t) in at_v:
            sign *= m.sign(t)
            r = m.alpha(t)
            t = diagram.opposite(r)
            used.update((r, t))
        sign *= m.sign(t)
        partner = m.alpha(t)
        joins[u] = (partner, sign)
        joins[partner] = (u, sign)
    if used != at_v:
        logger.debug("crossing %d is nugatory but removing it leaves a crossing-free component", v)
        return None

    flipped = side.vertices
    rotation, over = [], []
    for w, cyc in enumerate(m.rotation):
        if w == v:
            continue
        if w in flipped:
            rotation.append(tuple(reversed(cyc)))
            over.append(m.succ(diagram.over[w]))
        else:
            rotation.append(cyc)
            over.append(diagram.over[w])
    edges = []
    for key in m.edge_keys:
        if key in at_v or m.alpha(key) in at_v:
            continue
        edges.append((key, m.alpha(key), m.sign(key)))
    for u, (partner, sign) in joins.items():
        if u < partner:
            edges.append((u, partner, sign))
    reduced = LinkDiagram(CombinatorialMap.from_edges(rotation, edges), tuple(over))
    logger.info("untwisted crossing %d (%d crossings reflected)", v, len(flipped))
    return reduced


def reduce(diagram: LinkDiagram) -> LinkDiagram:
    """Untwist nugatory crossings until none can be removed."""
    current = diagram
    while True:
        for v, _, _, cut in _nugatory(current):
            untwisted = _untwist(current, v, cut)
            if untwisted is not None:
                current = untwisted
                break
        else:
            return current


def lift_diagram(diagram: LinkDiagram) -> Tuple[LinkDiagram, Dict[int, int]]:
    """Lift to the orientable double cover; over-strands lift sheet by sheet."""
    cover, projection = maps.orientable_double_cover(diagram.map)
    index = {d: i for i, d in enumerate(diagram.map.darts)}
    over = []
    for v in range(diagram.crossing_count):
        for sheet in (0, 1):
            over.append(2 * index[diagram.over[v]] + sheet)
    return LinkDiagram(cover, tuple(over)), projection
