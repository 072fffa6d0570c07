"""Diagram and map builders shared by the test modules."""
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from altlinkchecker.models import CombinatorialMap, LinkDiagram, TilingQuotient  # noqa: E402
from altlinkchecker.parser import DiagramParser  # noqa: E402

DATA_DIR = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", "altlinkchecker", "data"))

TREFOIL_PD = "pd X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT_PD = "pd X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
GRANNY_PD = "pd X[1,4,2,5] X[3,6,4,1] X[5,2,12,3] X[7,10,8,11] X[9,12,10,7] X[11,8,6,9]"


def data_path(name: str) -> str:
    return os.path.join(DATA_DIR, name)


def from_pd(text: str) -> LinkDiagram:
    return DiagramParser.parse_diagram(text)[0]


def trefoil() -> LinkDiagram:
    return from_pd(TREFOIL_PD)


def figure_eight() -> LinkDiagram:
    return from_pd(FIGURE_EIGHT_PD)


def granny() -> LinkDiagram:
    return from_pd(GRANNY_PD)


def torus_one() -> LinkDiagram:
    """One crossing on the torus: the two strands are the meridian and the longitude."""
    m = CombinatorialMap.from_edges([(1, 2, 3, 4)], [(1, 3), (2, 4)])
    return LinkDiagram(m, (1,))


def klein_one() -> LinkDiagram:
    m = CombinatorialMap.from_edges([(1, 2, 3, 4)], [(1, 3), (2, 4, -1)])
    return LinkDiagram(m, (1,))


def torus_weave2() -> LinkDiagram:
    """Square weave on the torus, two crossings per fundamental domain."""
    m = CombinatorialMap.from_edges([(1, 2, 3, 4), (5, 6, 7, 8)], [(1, 7), (2, 8), (3, 5), (4, 6)])
    return LinkDiagram(m, (1, 6))


def nonorient_weave() -> LinkDiagram:
    m = CombinatorialMap.from_edges([(1, 2, 3, 4), (5, 6, 7, 8)], [(1, 7, -1), (2, 8), (3, 5), (4, 6)])
    return LinkDiagram(m, (1, 6))


def two_braid(n: int) -> LinkDiagram:
    """Closed (2, n)-braid; crossing i has darts NW=4i, SW=4i+1, SE=4i+2, NE=4i+3."""
    rotation = [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(n)]
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((4 * i + 3, 4 * j))
        edges.append((4 * i + 2, 4 * j + 1))
    return LinkDiagram(CombinatorialMap.from_edges(rotation, edges), tuple(4 * i + 1 for i in range(n)))


def add_kink(diagram: LinkDiagram, x: int) -> LinkDiagram:
    """Insert a one-crossing kink on the edge leaving dart x, keeping the diagram alternating."""
    m = diagram.map
    y = m.alpha(x)
    p = max(m.darts) + 1
    q, r, s = p + 1, p + 2, p + 3
    edges = [(k, m.alpha(k), m.sign(k)) for k in m.edge_keys if k not in (x, y)]
    edges += [(x, p), (q, r), (s, y, m.sign(x))]
    rotation = list(m.rotation) + [(p, q, r, s)]
    over = tuple(diagram.over) + ((q if diagram.is_over(x) else p),)
    return LinkDiagram(CombinatorialMap.from_edges(rotation, edges), over)


def disjoint_union(a: LinkDiagram, b: LinkDiagram) -> LinkDiagram:
    shift = max(a.map.darts) + 1 - min(b.map.darts)
    rotation = list(a.map.rotation) + [tuple(d + shift for d in cyc) for cyc in b.map.rotation]
    edges = [(k, a.map.alpha(k), a.map.sign(k)) for k in a.map.edge_keys]
    edges += [(k + shift, b.map.alpha(k) + shift, b.map.sign(k)) for k in b.map.edge_keys]
    over = tuple(a.over) + tuple(d + shift for d in b.over)
    return LinkDiagram(CombinatorialMap.from_edges(rotation, edges), over)


def odd_strand_map() -> CombinatorialMap:
    """Two crossings where one strand closes up after three passes."""
    return CombinatorialMap.from_edges([(0, 1, 2, 3), (4, 5, 6, 7)], [(5, 7), (2, 1), (3, 4), (6, 0)])


def theta_torus() -> TilingQuotient:
    m = CombinatorialMap.from_edges([(1, 2, 3), (4, 5, 6)], [(1, 4), (2, 5), (3, 6)])
    return TilingQuotient(m, "theta graph on the torus")


def honeycomb_brick() -> TilingQuotient:
    """Hexagonal tiling on the torus, four vertices and two hexagons."""
    m = CombinatorialMap.from_edges(
        [(5, 1, 8), (9, 12, 2), (7, 6, 4), (11, 3, 10)],
        [(1, 2), (3, 4), (5, 6), (7, 8), (9, 10), (11, 12)],
    )
    return TilingQuotient(m, "brick pattern honeycomb")


def genus2_octagons() -> TilingQuotient:
    """Four-vertex quotient of the order-4 square tiling of the hyperbolic plane."""
    m = CombinatorialMap.from_edges(
        [(23, 11, 21, 13), (24, 12, 22, 14), (27, 15, 25, 17), (28, 16, 26, 18)],
        [(11, 22), (12, 23), (13, 24), (14, 25), (15, 26), (16, 27), (17, 28), (18, 21)],
    )
    return TilingQuotient(m, "order-4 square tiling, genus 2 quotient")


def random_map(rng, n: int) -> CombinatorialMap:
    """Random 4-valent map on n vertices; crossing i holds darts 4i .. 4i+3."""
    darts = list(range(4 * n))
    rng.shuffle(darts)
    rotation = [(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(n)]
    edges = [(darts[k], darts[k + 1]) for k in range(0, len(darts), 2)]
    return CombinatorialMap.from_edges(rotation, edges)


def random_diagram(rng, n: int) -> LinkDiagram:
    m = random_map(rng, n)
    return LinkDiagram(m, tuple(rng.choice(cyc) for cyc in m.rotation))
