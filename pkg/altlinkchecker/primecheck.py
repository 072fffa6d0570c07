"""Two-point cuts of a diagram projection and the obvious-primeness test built on them."""
import logging
from typing import List, Optional, Sequence, Tuple

from . import diagram as dg
from . import maps
from .errors import InvalidCurve, PreconditionFailed
from .models import (
    EdgePoint,
    EmbeddedCurve,
    Face,
    FaceArc,
    LinkDiagram,
    ObviousPrimality,
    PrimeCertificate,
    TwoCutCandidate,
    TwoCutVerdict,
)

logger = logging.getLogger(__name__)

PRIME_CITATION = "Theorem 2"

Occurrence = Tuple[int, int]


def _candidate(p1: EdgePoint, p2: EdgePoint, o1: Occurrence, o2: Occurrence,
               o1b: Occurrence, o2b: Occurrence) -> TwoCutCandidate:
    a = FaceArc(o1[0], o1[1], o2[1])
    b = FaceArc(o2b[0], o2b[1], o1b[1])
    return TwoCutCandidate(p1, p2, a, b, EmbeddedCurve((p1, p2), (a, b)))


def _other(pair: List[Occurrence], o: Occurrence) -> Occurrence:
    return pair[1] if pair[0] == o else pair[0]


def enumerate_two_cuts(diagram: LinkDiagram, faces: Optional[Sequence[Face]] = None) -> List[TwoCutCandidate]:
    """Every curve meeting the projection transversely in two edge points, once per isotopy class.

    Candidates come out in canonical order: by edge pair, then by the face
    positions of the first corridor.
    """
    m = diagram.map
    faces = maps.trace_faces(m) if faces is None else faces
    occ = maps.edge_occurrences(m, faces)
    keys = sorted(occ)
    seen = set()
    found: List[TwoCutCandidate] = []

    def offer(candidate: TwoCutCandidate):
        if candidate.key in seen:
            return
        try:
            maps.validate_curve(m, candidate.realized, faces)
        except InvalidCurve:
            return
        seen.add(candidate.key)
        found.append(candidate)

    for i, e1 in enumerate(keys):
        for e2 in keys[i + 1:]:
            for o1 in sorted(occ[e1]):
                for o2 in sorted(occ[e2]):
                    o1b, o2b = _other(occ[e1], o1), _other(occ[e2], o2)
                    if o1[0] != o2[0] or o1b[0] != o2b[0]:
                        continue
                    offer(_candidate(EdgePoint(e1), EdgePoint(e2), o1, o2, o1b, o2b))

    for e in keys:
        s, sb = sorted(occ[e])
        if s[0] != sb[0]:
            continue
        # returning to the side it left, the curve would only encircle a piece of the edge
        offer(_candidate(EdgePoint(e, 0), EdgePoint(e, 1), s, sb, sb, s))

    logger.debug("%d two-point cut candidates", len(found))
    return found


def classify_two_cut(diagram: LinkDiagram, candidate: TwoCutCandidate,
                     faces: Optional[Sequence[Face]] = None) -> TwoCutVerdict:
    cut = maps.cut_along_curve(diagram.map, candidate.realized, faces)
    if not cut.bounds_disk:
        return TwoCutVerdict(bounds_disk=False)
    side = min(cut.disk_sides, key=lambda s: (len(s.vertices), len(s.sub_edges)))
    p1, p2 = candidate.crossing_point_1, candidate.crossing_point_2
    embedded_arc = (
        not side.vertices
        and p1.edge == p2.edge
        and side.sub_edges == frozenset({(p1.edge, 1)})
    )
    return TwoCutVerdict(
        bounds_disk=True,
        disk_side_crossing_count=len(side.vertices),
        embedded_arc=embedded_arc,
        disk_side=side,
    )


def first_failing_cut(diagram: LinkDiagram) -> ObviousPrimality:
    """Obvious-primeness scan without the reduced and alternating gate."""
    faces = maps.trace_faces(diagram.map)
    for candidate in enumerate_two_cuts(diagram, faces):
        verdict = classify_two_cut(diagram, candidate, faces)
        if verdict.bounds_disk and not verdict.embedded_arc:
            logger.info("two-point cut through edges %d and %d bounds a disk with %d crossings",
                        candidate.crossing_point_1.edge, candidate.crossing_point_2.edge,
                        verdict.disk_side_crossing_count)
            return ObviousPrimality(False, candidate)
    return ObviousPrimality(True)


def _require_reduced_alternating(diagram: LinkDiagram):
    if not dg.is_alternating(diagram):
        raise PreconditionFailed("alternating")
    if not dg.is_connected(diagram):
        raise PreconditionFailed("connected")
    if dg.find_nugatory(diagram):
        raise PreconditionFailed("reduced")


def is_obviously_prime(diagram: LinkDiagram) -> ObviousPrimality:
    """Scan two-point cuts of a connected, reduced, alternating diagram on any surface."""
    _require_reduced_alternating(diagram)
    return first_failing_cut(diagram)


def is_prime_certified(diagram: LinkDiagram) -> PrimeCertificate:
    surface = maps.surface_info(diagram.map)
    if surface.is_sphere:
        raise PreconditionFailed("orientable surface of genus at least 1", "surface is sphere")
    if not surface.orientable:
        raise PreconditionFailed("orientable surface of genus at least 1", f"surface is the {surface.name}")
    if surface.components != 1:
        raise PreconditionFailed("connected projection")
    result = is_obviously_prime(diagram)
    return PrimeCertificate(prime=result.obviously_prime, basis=PRIME_CITATION, witness=result.witness)
