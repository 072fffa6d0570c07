"""Canonical dart labelings, isomorphism tests and canonical document output."""
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from . import maps
from .models import CombinatorialMap, LinkDiagram, SurfaceInfo

FORMAT_VERSION = "1"

Code = Tuple[Tuple[int, ...], ...]


def canonical_labels(m: CombinatorialMap, root: int) -> Dict[int, int]:
    """Breadth-first labels from `root`, following rotation successor then edge partner."""
    labels = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for nb in (m.succ(d), m.alpha(d)):
            if nb not in labels:
                labels[nb] = len(order)
                order.append(nb)
    return labels


def _rooted_code(m: CombinatorialMap, root: int, flag: Optional[Callable[[int], int]]) -> Tuple[Code, Dict[int, int]]:
    labels = canonical_labels(m, root)
    order = sorted(labels, key=labels.get)
    code = []
    for d in order:
        row = (labels[m.succ(d)], labels[m.alpha(d)], m.sign(d))
        if flag is not None:
            row += (flag(d),)
        code.append(row)
    return tuple(code), labels


def _component_codes(m: CombinatorialMap, flag) -> List[Tuple[Code, Dict[int, int]]]:
    best = []
    for comp in maps.components(m):
        roots = [d for v in sorted(comp) for d in m.rotation[v]]
        best.append(min((_rooted_code(m, r, flag) for r in roots), key=lambda item: item[0]))
    best.sort(key=lambda item: item[0])
    return best


def _over_flag(diagram: LinkDiagram) -> Callable[[int], int]:
    return lambda d: int(diagram.is_over(d))


def map_code(m: CombinatorialMap) -> Tuple[Code, ...]:
    return tuple(code for code, _ in _component_codes(m, None))


def diagram_code(diagram: LinkDiagram) -> Tuple[Code, ...]:
    return tuple(code for code, _ in _component_codes(diagram.map, _over_flag(diagram)))


def maps_isomorphic(a: CombinatorialMap, b: CombinatorialMap) -> bool:
    return map_code(a) == map_code(b)


def diagrams_isomorphic(a: LinkDiagram, b: LinkDiagram) -> bool:
    return diagram_code(a) == diagram_code(b)


def relabel_diagram(diagram: LinkDiagram, mapping: Mapping[int, int]) -> LinkDiagram:
    return LinkDiagram(maps.relabel_map(diagram.map, mapping), tuple(mapping[d] for d in diagram.over))


def canonical_mapping(m: CombinatorialMap, flag=None) -> Dict[int, int]:
    """Old dart -> canonical dart, numbered from 1 component by component."""
    mapping: Dict[int, int] = {}
    for _, labels in _component_codes(m, flag):
        offset = len(mapping) + 1
        for d, label in labels.items():
            mapping[d] = offset + label
    return mapping


def canonical_diagram(diagram: LinkDiagram) -> LinkDiagram:
    mapping = canonical_mapping(diagram.map, _over_flag(diagram))
    renamed = relabel_diagram(diagram, mapping)
    # crossings ordered by their least dart, each rotation starting there
    rotation, over = [], []
    for v in sorted(range(renamed.crossing_count), key=lambda v: min(renamed.map.rotation[v])):
        cyc = renamed.map.rotation[v]
        start = cyc.index(min(cyc))
        rotation.append(cyc[start:] + cyc[:start])
        o = renamed.over[v]
        over.append(min(o, renamed.opposite(o)))
    m = renamed.map
    edges = [(k, m.alpha(k), m.sign(k)) for k in m.edge_keys]
    return LinkDiagram(CombinatorialMap.from_edges(rotation, edges), tuple(over))


def _surface_line(declared: SurfaceInfo) -> str:
    return f"surface genus={declared.genus} orientable={'true' if declared.orientable else 'false'}"


def serialize_diagram(diagram: LinkDiagram, declared: Optional[SurfaceInfo] = None,
                      comment: Optional[str] = None) -> str:
    canon = canonical_diagram(diagram)
    m = canon.map
    lines = [f"# altlinkchecker diagram, {canon.crossing_count} crossings"]
    if comment:
        lines.extend(f"# {text}" for text in comment.splitlines())
    lines.append(f"version {FORMAT_VERSION}")
    if declared is not None:
        lines.append(_surface_line(declared))
    for v, cyc in enumerate(m.rotation):
        lines.append(f"crossing {v + 1}: {' '.join(str(d) for d in cyc)} over={canon.over[v]}")
    for k in m.edge_keys:
        suffix = " sign=-1" if m.sign(k) < 0 else ""
        lines.append(f"edge {k} {m.alpha(k)}{suffix}")
    return "\n".join(lines) + "\n"


def serialize_map(m: CombinatorialMap, source: str = "") -> str:
    """Map document: `vertex` and `edge` lines with the darts as given."""
    lines = ["# altlinkchecker map", f"version {FORMAT_VERSION}"]
    if source:
        escaped = source.replace('"', "'")
        lines.append(f'source "{escaped}"')
    for v, cyc in enumerate(m.rotation):
        lines.append(f"vertex {v + 1}: {' '.join(str(d) for d in cyc)}")
    for k in m.edge_keys:
        suffix = " sign=-1" if m.sign(k) < 0 else ""
        lines.append(f"edge {k} {m.alpha(k)}{suffix}")
    return "\n".join(lines) + "\n"
