import logging
from typing import List, Set, Tuple

import networkx as nx

from . import diagram as dg
from . import maps
from .errors import MalformedDiagram, MalformedMap, NoPerfectMatching
from .models import CombinatorialMap, DensityStats, LinkDiagram, TilingQuotient

logger = logging.getLogger(__name__)


def weave_from_map(q: TilingQuotient) -> LinkDiagram:
    """Put alternating crossings at the vertices of a 4-regular quotient."""
    for v, cyc in enumerate(q.map.rotation):
        if len(cyc) != 4:
            raise MalformedDiagram(f"vertex {v} of the quotient has degree {len(cyc)}, expected 4")
    diagram = dg.alternating_assignment(q.map)
    logger.info("weave with %d crossings from %s", diagram.crossing_count, q.source or "quotient map")
    return diagram


def _matching_edges(m: CombinatorialMap) -> List[Tuple[int, int, int]]:
    """(key, u, w) for every non-loop edge, in key order."""
    out = []
    for key in m.edge_keys:
        u, w = m.vertex(key), m.vertex(m.alpha(key))
        if u != w:
            out.append((key, u, w))
    return out


def least_perfect_matching(m: CombinatorialMap) -> List[int]:
    """Lexicographically least perfect matching, as a sorted list of edge keys."""
    edges = _matching_edges(m)
    graph = nx.Graph()
    graph.add_nodes_from(range(m.vertex_count))
    graph.add_edges_from((u, w) for _, u, w in edges)
    if m.vertex_count % 2 or 2 * len(nx.max_weight_matching(graph, maxcardinality=True)) != m.vertex_count:
        raise NoPerfectMatching(f"the {m.vertex_count}-vertex quotient graph has no perfect matching")

    chosen: List[int] = []
    covered: Set[int] = set()

    def search(i: int) -> bool:
        if len(covered) == m.vertex_count:
            return True
        if i == len(edges):
            return False
        key, u, w = edges[i]
        lowest = min(v for v in range(m.vertex_count) if v not in covered)
        if u not in covered and w not in covered:
            chosen.append(key)
            covered.update((u, w))
            if search(i + 1):
                return True
            chosen.pop()
            covered.difference_update((u, w))
        # the least uncovered vertex must be matched by some later edge
        if not any(lowest in (a, b) for _, a, b in edges[i + 1:]):
            return False
        return search(i + 1)

    search(0)
    return chosen


def augment_three_regular(q: TilingQuotient) -> TilingQuotient:
    """Double the edges of the least perfect matching, adding one bigon per matched edge."""
    m = q.map
    for v, cyc in enumerate(m.rotation):
        if len(cyc) != 3:
            raise MalformedMap(f"vertex {v} has degree {len(cyc)}, expected 3")
    matching = least_perfect_matching(m)
    rotation = [list(cyc) for cyc in m.rotation]
    edges = [(k, m.alpha(k), m.sign(k)) for k in m.edge_keys]
    fresh = max(m.darts) + 1
    for key in matching:
        d, d2 = key, m.alpha(key)
        n1, n2 = fresh, fresh + 1
        fresh += 2
        u, w = m.vertex(d), m.vertex(d2)
        rotation[u].insert(rotation[u].index(d) + 1, n1)
        at = rotation[w].index(d2)
        rotation[w].insert(at if m.sign(key) > 0 else at + 1, n2)
        edges.append((n1, n2, m.sign(key)))
    augmented = CombinatorialMap.from_edges(rotation, edges)
    logger.info("doubled %d matched edges", len(matching))
    source = f"{q.source} with bigons on edges {matching}" if q.source else f"bigons on edges {matching}"
    return TilingQuotient(augmented, source)


def density_stats(diagram: LinkDiagram) -> DensityStats:
    return DensityStats(
        crossings_per_fundamental_domain=diagram.crossing_count,
        component_count=len(dg.components(diagram)),
        surface=maps.surface_info(diagram.map),
        reduced_crossing_count=dg.reduce(diagram).crossing_count,
    )
