import logging
from collections import defaultdict
from typing import Dict, List, Mapping, Optional, Sequence, Set, Tuple

import networkx as nx

from .errors import InvalidCurve, MalformedMap
from .models import (
    CombinatorialMap,
    CutResult,
    CutSide,
    EdgePoint,
    EmbeddedCurve,
    Face,
    SurfaceInfo,
    VertexPoint,
)

logger = logging.getLogger(__name__)


def _step(m: CombinatorialMap, d: int, s: int) -> Tuple[int, int]:
    e = m.alpha(d)
    s = s * m.sign(d)
    return m.turn(e, s), s


def trace_faces(m: CombinatorialMap) -> List[Face]:
    """Face boundary walks of the cellular embedding defined by `m`.

    Each (dart, orientation) state belongs to one walk or to the reverse of
    one; only one direction of every face is returned.
    """
    visited: Set[Tuple[int, int]] = set()
    faces: List[Face] = []
    for d0 in m.darts:
        for s0 in (1, -1):
            if (d0, s0) in visited:
                continue
            walk: List[Tuple[int, int]] = []
            d, s = d0, s0
            while True:
                walk.append((d, s))
                d, s = _step(m, d, s)
                if (d, s) == (d0, s0):
                    break
                if len(walk) > 2 * len(m.darts):
                    raise MalformedMap(f"face walk from dart {d0} does not close")
            for d, s in walk:
                visited.add((d, s))
                visited.add((m.turn(d, -s), -s))
            faces.append(Face(len(faces), tuple(d for d, _ in walk), tuple(s for _, s in walk)))
    logger.debug("traced %d faces on %d darts", len(faces), len(m.darts))
    return faces


def corner_gap(m: CombinatorialMap, face: Face, i: int) -> int:
    """Rotation gap of corner i: gap g sits between rotation positions g and g+1."""
    d = face.darts[i % face.degree]
    if face.orientations[i % face.degree] > 0:
        return m.position(m.alpha(face.darts[(i - 1) % face.degree]))
    return m.position(d)


def edge_occurrences(m: CombinatorialMap, faces: Sequence[Face]) -> Dict[int, List[Tuple[int, int]]]:
    """Edge key -> its two side occurrences as (face, position)."""
    occ: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for f in faces:
        for i, d in enumerate(f.darts):
            occ[m.edge_key(d)].append((f.index, i))
    return dict(occ)


def corner_index(m: CombinatorialMap, faces: Sequence[Face]) -> Dict[Tuple[int, int], Tuple[int, int]]:
    """(vertex, gap) -> (face, position)."""
    corners = {}
    for f in faces:
        for i, d in enumerate(f.darts):
            corners[(m.vertex(d), corner_gap(m, f, i))] = (f.index, i)
    return corners


def map_graph(m: CombinatorialMap) -> nx.Graph:
    """Underlying simple graph; each graph edge remembers one dart of a map edge."""
    graph = nx.Graph()
    graph.add_nodes_from(range(m.vertex_count))
    for key in m.edge_keys:
        u, w = m.vertex(key), m.vertex(m.alpha(key))
        if not graph.has_edge(u, w):
            graph.add_edge(u, w, dart=key)
    return graph


def components(m: CombinatorialMap) -> List[Set[int]]:
    return sorted((set(c) for c in nx.connected_components(map_graph(m))), key=min)


def _orientable(m: CombinatorialMap, graph: nx.Graph, comp: Set[int]) -> bool:
    root = min(comp)
    flip = {root: 1}
    for u, w in nx.bfs_edges(graph, root):
        flip[w] = flip[u] * m.sign(graph.edges[u, w]["dart"])
    for key in m.edge_keys:
        u = m.vertex(key)
        if u not in comp:
            continue
        if flip[u] * flip[m.vertex(m.alpha(key))] * m.sign(key) != 1:
            return False
    return True


def surface_info(m: CombinatorialMap, faces: Optional[Sequence[Face]] = None) -> SurfaceInfo:
    faces = trace_faces(m) if faces is None else faces
    graph = map_graph(m)
    comps = components(m)
    where = {v: k for k, comp in enumerate(comps) for v in comp}
    vcount = [len(c) for c in comps]
    ecount = [0] * len(comps)
    fcount = [0] * len(comps)
    for key in m.edge_keys:
        ecount[where[m.vertex(key)]] += 1
    for f in faces:
        fcount[where[m.vertex(f.darts[0])]] += 1

    genus = 0
    orientable = True
    for k, comp in enumerate(comps):
        chi = vcount[k] - ecount[k] + fcount[k]
        if _orientable(m, graph, comp):
            if chi % 2:
                raise MalformedMap(f"orientable piece with odd euler characteristic {chi}")
            genus += (2 - chi) // 2
        else:
            orientable = False
            genus += 2 - chi
    info = SurfaceInfo(
        euler_char=m.vertex_count - m.edge_count + len(faces),
        orientable=orientable,
        genus=genus,
        face_count=len(faces),
        vertex_count=m.vertex_count,
        edge_count=m.edge_count,
        components=len(comps),
    )
    logger.debug("surface: %s", info)
    return info


def relabel_map(m: CombinatorialMap, mapping: Mapping[int, int]) -> CombinatorialMap:
    """Rename darts; edge signs move with their edges."""
    if len(set(mapping[d] for d in m.darts)) != len(m.darts):
        raise MalformedMap("dart relabeling is not injective")
    edges = [(mapping[k], mapping[m.alpha(k)], m.sign(k)) for k in m.edge_keys]
    return CombinatorialMap.from_edges([[mapping[d] for d in cyc] for cyc in m.rotation], edges)


def orientable_double_cover(m: CombinatorialMap) -> Tuple[CombinatorialMap, Dict[int, int]]:
    """Orientation double cover and the projection of its darts onto `m`.

    Dart `d` on sheet `s` becomes `2 * index(d) + s`, so the deck involution
    is `x ^ 1`. Sheet 1 carries the reversed rotations; an edge crosses
    sheets exactly when its sign is negative.
    """
    index = {d: i for i, d in enumerate(m.darts)}

    def lift(d: int, sheet: int) -> int:
        return 2 * index[d] + sheet

    rotation = []
    for cyc in m.rotation:
        rotation.append(tuple(lift(d, 0) for d in cyc))
        rotation.append(tuple(lift(d, 1) for d in reversed(cyc)))
    pairing = {}
    for d in m.darts:
        for sheet in (0, 1):
            other = sheet if m.sign(d) > 0 else 1 - sheet
            pairing[lift(d, sheet)] = lift(m.alpha(d), other)
    projection = {lift(d, sheet): d for d in m.darts for sheet in (0, 1)}
    return CombinatorialMap(tuple(rotation), pairing), projection


# Cutting along a curve. Every face boundary is read as a circle of
# coordinates (position, c): corner i at (i, 0); on edge occurrence i with k
# curve points, sub-edge pieces at (i, 1), (i, 3), ..., (i, 2k+1) and the
# points themselves at (i, 2), (i, 4), ..., (i, 2k).

Coord = Tuple[int, int]


def _edge_ranks(curve: EmbeddedCurve) -> Dict[int, List[int]]:
    ts: Dict[int, List[int]] = defaultdict(list)
    for p in curve.points:
        if isinstance(p, EdgePoint):
            ts[p.edge].append(p.t)
    return {e: sorted(v) for e, v in ts.items()}


def _forward(m: CombinatorialMap, face: Face, i: int) -> bool:
    d = face.darts[i]
    return d == m.edge_key(d)


def _point_coord(m: CombinatorialMap, face: Face, i: int, point, ranks: Dict[int, List[int]]) -> Coord:
    if not 0 <= i < face.degree:
        raise InvalidCurve(f"position {i} is outside face {face.index} of degree {face.degree}")
    d = face.darts[i]
    if isinstance(point, VertexPoint):
        if m.vertex(d) != point.vertex:
            raise InvalidCurve(f"corner {i} of face {face.index} is not at vertex {point.vertex}")
        return (i, 0)
    if m.edge_key(d) != point.edge:
        raise InvalidCurve(f"side {i} of face {face.index} is not on edge {point.edge}")
    order = ranks[point.edge]
    r = order.index(point.t)
    if not _forward(m, face, i):
        r = len(order) - 1 - r
    return (i, 2 * r + 2)


def validate_curve(m: CombinatorialMap, curve: EmbeddedCurve, faces: Sequence[Face]) -> Dict[int, List[Tuple[Coord, Coord]]]:
    """Check incidences, transversality and simplicity; return the chords of each face."""
    if not curve.points:
        if len(curve.arcs) != 1 or not 0 <= curve.arcs[0].face < len(faces):
            raise InvalidCurve("a curve without points must be a single arc in an existing face")
        return {}
    if len(curve.arcs) != len(curve.points):
        raise InvalidCurve(f"{len(curve.points)} points need {len(curve.points)} arcs, got {len(curve.arcs)}")
    if len(set(curve.points)) != len(curve.points):
        raise InvalidCurve("curve passes through the same point twice")
    for p in curve.points:
        if isinstance(p, EdgePoint) and p.edge not in m.pairing:
            raise InvalidCurve(f"unknown edge {p.edge}")
        if isinstance(p, EdgePoint) and p.edge != m.edge_key(p.edge):
            raise InvalidCurve(f"edge {p.edge} must be named by its smaller dart")
        if isinstance(p, VertexPoint) and not 0 <= p.vertex < m.vertex_count:
            raise InvalidCurve(f"unknown vertex {p.vertex}")

    ranks = _edge_ranks(curve)
    n = len(curve.points)
    chords: Dict[int, List[Tuple[Coord, Coord]]] = defaultdict(list)
    for k, arc in enumerate(curve.arcs):
        if not 0 <= arc.face < len(faces):
            raise InvalidCurve(f"unknown face {arc.face}")
        face = faces[arc.face]
        a = _point_coord(m, face, arc.start, curve.points[k], ranks)
        b = _point_coord(m, face, arc.end, curve.points[(k + 1) % n], ranks)
        if a == b:
            raise InvalidCurve(f"arc {k} starts and ends at the same place")
        chords[arc.face].append((a, b))

    for k, p in enumerate(curve.points):
        into, out = curve.arcs[k - 1], curve.arcs[k]
        if isinstance(p, EdgePoint):
            if (into.face, into.end) == (out.face, out.start):
                raise InvalidCurve(f"curve touches edge {p.edge} without crossing it")
        else:
            deg = m.degree(p.vertex)
            g_in = corner_gap(m, faces[into.face], into.end)
            g_out = corner_gap(m, faces[out.face], out.start)
            if deg % 2 or (g_in - g_out) % deg != deg // 2:
                raise InvalidCurve(f"curve does not pass straight through vertex {p.vertex}")

    for f, pairs in chords.items():
        ends = [x for pair in pairs for x in pair]
        if len(set(ends)) != len(ends):
            raise InvalidCurve(f"two arcs share an endpoint in face {f}")
        spans = [tuple(sorted(pair)) for pair in pairs]
        for i, (a, b) in enumerate(spans):
            for c, d in spans[i + 1:]:
                if a < c < b < d or c < a < d < b:
                    raise InvalidCurve(f"arcs cross each other inside face {f}")
    return dict(chords)


def _face_regions(m: CombinatorialMap, face: Face, chords: List[Tuple[Coord, Coord]],
                  counts: Dict[int, int]) -> List[List[Tuple[int, int]]]:
    """Split one face by its chords; each region is listed by the sub-edges on its boundary."""
    pieces: List[Tuple[Coord, Tuple[int, int]]] = []
    for i, d in enumerate(face.darts):
        key = m.edge_key(d)
        k = counts.get(key, 0)
        fwd = _forward(m, face, i)
        for j in range(k + 1):
            pieces.append(((i, 2 * j + 1), (key, j if fwd else k - j)))
    if not chords:
        return [[sub for _, sub in pieces]]

    partner = {}
    for a, b in chords:
        partner[a] = b
        partner[b] = a
    markers = sorted(partner)
    starts = {x: j for j, x in enumerate(markers)}
    segments: List[List[Tuple[int, int]]] = [[] for _ in markers]
    for coord, sub in pieces:
        j = 0
        while j + 1 < len(markers) and markers[j + 1] < coord:
            j += 1
        # pieces before the first marker wrap around onto the last segment
        if coord < markers[0]:
            j = len(markers) - 1
        segments[j].append(sub)

    regions = []
    seen = set()
    for j0 in range(len(markers)):
        if j0 in seen:
            continue
        region = []
        j = j0
        while j not in seen:
            seen.add(j)
            region.extend(segments[j])
            end = markers[(j + 1) % len(markers)]
            j = starts[partner[end]]
        regions.append(region)
    return regions


def cut_along_curve(m: CombinatorialMap, curve: EmbeddedCurve,
                    faces: Optional[Sequence[Face]] = None) -> CutResult:
    """Cut the surface piece carrying `curve` and report the complementary sides.

    A side's euler characteristic counts the curve as its boundary: vertices
    off the curve, minus sub-edges, plus face regions.
    """
    faces = trace_faces(m) if faces is None else faces
    chords = validate_curve(m, curve, faces)

    counts: Dict[int, int] = defaultdict(int)
    on_curve: Set[int] = set()
    for p in curve.points:
        if isinstance(p, EdgePoint):
            counts[p.edge] += 1
        else:
            on_curve.add(p.vertex)

    graph = nx.Graph()
    for v in range(m.vertex_count):
        if v in on_curve:
            continue
        graph.add_node(("v", v))
        for d in m.rotation[v]:
            key = m.edge_key(d)
            graph.add_edge(("v", v), ("e", key, 0 if d == key else counts.get(key, 0)))
    for key in m.edge_keys:
        for j in range(counts.get(key, 0) + 1):
            graph.add_node(("e", key, j))

    region_face: Dict[int, int] = {}
    annulus = None
    for f in faces:
        for region in _face_regions(m, f, chords.get(f.index, []), counts):
            rid = len(region_face)
            if not curve.points and f.index == curve.arcs[0].face:
                annulus = rid
            region_face[rid] = f.index
            graph.add_node(("r", rid))
            for key, j in region:
                graph.add_edge(("r", rid), ("e", key, j))
    if not curve.points:
        inner = len(region_face)
        region_face[inner] = curve.arcs[0].face
        graph.add_node(("r", inner))

    if curve.points:
        p = curve.points[0]
        anchor = p.vertex if isinstance(p, VertexPoint) else m.vertex(p.edge)
    else:
        anchor = m.vertex(faces[curve.arcs[0].face].darts[0])
    piece = next(c for c in components(m) if anchor in c)

    sides = []
    for group in nx.connected_components(graph):
        vertices = frozenset(node[1] for node in group if node[0] == "v")
        subs = frozenset((node[1], node[2]) for node in group if node[0] == "e")
        regions = [node[1] for node in group if node[0] == "r"]
        members = {m.vertex(key) for key, _ in subs} | set(vertices)
        if not members:
            members = {m.vertex(faces[region_face[r]].darts[0]) for r in regions}
        if not members & piece:
            continue
        # the face holding a pointless loop keeps only an annulus outside it
        chi = len(vertices) - len(subs) + len(regions) - (1 if annulus in regions else 0)
        sides.append(CutSide(
            euler_char=chi,
            vertices=vertices,
            faces=frozenset(region_face[r] for r in regions),
            sub_edges=subs,
        ))
    sides.sort(key=lambda s: (s.euler_char, len(s.vertices), sorted(s.sub_edges)))
    if len(sides) > 2:
        raise InvalidCurve(f"cutting along one curve produced {len(sides)} pieces")
    result = CutResult(separates=len(sides) == 2, sides=tuple(sides))
    logger.debug("cut along %d-point curve: separates=%s chis=%s",
                 len(curve.points), result.separates, [s.euler_char for s in sides])
    return result
