from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, List, Literal, Mapping, Optional, Sequence, Tuple, Union

from .errors import MalformedDiagram, MalformedMap

VerdictKind = Literal["Hyperbolic", "FailsHypothesis", "NotCovered", "ConditionallyHyperbolic"]


@dataclass(frozen=True)
class CombinatorialMap:
    """Signed rotation system.

    `rotation[v]` lists the darts at vertex v counterclockwise in a local chart,
    `pairing` is the edge involution and `signs` maps an edge key (the smaller
    dart of the edge) to -1 when a traversal of that edge flips the local
    orientation. Edges missing from `signs` are positive.
    """

    rotation: Tuple[Tuple[int, ...], ...]
    pairing: Mapping[int, int]
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rotation", tuple(tuple(int(d) for d in cyc) for cyc in self.rotation))
        object.__setattr__(self, "pairing", {int(k): int(v) for k, v in dict(self.pairing).items()})
        signs = {int(k): int(v) for k, v in dict(self.signs).items() if int(v) != 1}
        object.__setattr__(self, "signs", signs)
        self._validate()

    @classmethod
    def from_edges(cls, rotation: Iterable[Iterable[int]], edges: Iterable[Sequence[int]]) -> "CombinatorialMap":
        """Build from edge tuples `(a, b)` or `(a, b, sign)`."""
        pairing: Dict[int, int] = {}
        signs: Dict[int, int] = {}
        for edge in edges:
            a, b = int(edge[0]), int(edge[1])
            if a in pairing or b in pairing:
                raise MalformedMap(f"dart paired twice in edge ({a}, {b})")
            pairing[a] = b
            pairing[b] = a
            if len(edge) > 2 and int(edge[2]) == -1:
                signs[min(a, b)] = -1
        return cls(tuple(tuple(c) for c in rotation), pairing, signs)

    def _validate(self):
        if not self.rotation:
            raise MalformedMap("map has no vertices")
        seen = set()
        for v, cyc in enumerate(self.rotation):
            if not cyc:
                raise MalformedMap(f"vertex {v} has an empty rotation")
            for d in cyc:
                if d in seen:
                    raise MalformedMap(f"dart {d} appears in more than one vertex cycle")
                seen.add(d)
        if set(self.pairing) != seen:
            missing = sorted(seen - set(self.pairing))
            extra = sorted(set(self.pairing) - seen)
            raise MalformedMap(f"edge pairing does not cover the darts (unpaired {missing}, unknown {extra})")
        for d, e in self.pairing.items():
            if d == e:
                raise MalformedMap(f"dart {d} is paired with itself")
            if self.pairing.get(e) != d:
                raise MalformedMap(f"edge pairing is not an involution at dart {d}")
        for key, s in self.signs.items():
            if key not in self.pairing or key > self.pairing[key]:
                raise MalformedMap(f"sign given for {key}, which is not an edge key")
            if s not in (1, -1):
                raise MalformedMap(f"edge sign must be +1 or -1, got {s}")

    def __hash__(self):
        return hash((self.rotation, tuple(sorted(self.pairing.items())), tuple(sorted(self.signs.items()))))

    @cached_property
    def _where(self) -> Dict[int, Tuple[int, int]]:
        return {d: (v, i) for v, cyc in enumerate(self.rotation) for i, d in enumerate(cyc)}

    @cached_property
    def darts(self) -> Tuple[int, ...]:
        return tuple(sorted(self._where))

    @cached_property
    def edge_keys(self) -> Tuple[int, ...]:
        return tuple(d for d in self.darts if d < self.pairing[d])

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.pairing) // 2

    def vertex(self, d: int) -> int:
        return self._where[d][0]

    def position(self, d: int) -> int:
        return self._where[d][1]

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def alpha(self, d: int) -> int:
        return self.pairing[d]

    def succ(self, d: int) -> int:
        v, i = self._where[d]
        cyc = self.rotation[v]
        return cyc[(i + 1) % len(cyc)]

    def pred(self, d: int) -> int:
        v, i = self._where[d]
        cyc = self.rotation[v]
        return cyc[(i - 1) % len(cyc)]

    def turn(self, d: int, orientation: int) -> int:
        return self.succ(d) if orientation > 0 else self.pred(d)

    def edge_key(self, d: int) -> int:
        return min(d, self.pairing[d])

    def sign(self, d: int) -> int:
        return self.signs.get(self.edge_key(d), 1)

    def dart_at(self, v: int, i: int) -> int:
        cyc = self.rotation[v]
        return cyc[i % len(cyc)]


@dataclass(frozen=True)
class SurfaceInfo:
    euler_char: int
    orientable: bool
    genus: int
    face_count: Optional[int] = None
    vertex_count: Optional[int] = None
    edge_count: Optional[int] = None
    components: int = 1

    @classmethod
    def declared(cls, genus: int, orientable: bool) -> "SurfaceInfo":
        chi = 2 - 2 * genus if orientable else 2 - genus
        return cls(euler_char=chi, orientable=orientable, genus=genus)

    @property
    def is_sphere(self) -> bool:
        return self.components == 1 and self.orientable and self.genus == 0

    @property
    def is_projective_plane(self) -> bool:
        return self.components == 1 and not self.orientable and self.genus == 1

    @property
    def is_klein_bottle(self) -> bool:
        return self.components == 1 and not self.orientable and self.genus == 2

    def same_surface(self, other: "SurfaceInfo") -> bool:
        return (self.genus, self.orientable, self.components) == (other.genus, other.orientable, other.components)

    @property
    def name(self) -> str:
        if self.components != 1:
            return f"{self.components} surfaces (total euler characteristic {self.euler_char})"
        if self.orientable:
            return {0: "sphere", 1: "torus"}.get(self.genus, f"genus-{self.genus} surface")
        return {1: "projective plane", 2: "Klein bottle"}.get(
            self.genus, f"non-orientable surface with {self.genus} cross-caps")

    def __str__(self):
        return f"{self.name} (chi={self.euler_char})"


@dataclass(frozen=True)
class Face:
    """One complementary region: its boundary walk as (dart, local orientation) steps.

    Position i names the corner at the vertex of `darts[i]` and the edge side
    traversed from `darts[i]`.
    """

    index: int
    darts: Tuple[int, ...]
    orientations: Tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


@dataclass(frozen=True, order=True)
class EdgePoint:
    """Transverse crossing of an edge interior; `t` orders points along the edge from its key dart."""

    edge: int
    t: int = 0


@dataclass(frozen=True, order=True)
class VertexPoint:
    vertex: int


CurvePoint = Union[EdgePoint, VertexPoint]


@dataclass(frozen=True)
class FaceArc:
    face: int
    start: int
    end: int


@dataclass(frozen=True)
class EmbeddedCurve:
    """Closed curve on the surface: arc k runs from points[k] to points[k+1] (cyclically).

    A curve without points is a loop inside the single face of its only arc.
    """

    points: Tuple[CurvePoint, ...]
    arcs: Tuple[FaceArc, ...]

    @classmethod
    def loop_in_face(cls, face: int) -> "EmbeddedCurve":
        return cls(points=(), arcs=(FaceArc(face, 0, 0),))

    @property
    def crossing_count(self) -> int:
        return len(self.points)

    def to_dict(self) -> Dict[str, Any]:
        points = []
        for p in self.points:
            if isinstance(p, EdgePoint):
                points.append({"edge": p.edge, "t": p.t})
            else:
                points.append({"vertex": p.vertex})
        return {"points": points, "arcs": [{"face": a.face, "start": a.start, "end": a.end} for a in self.arcs]}


@dataclass(frozen=True)
class CutSide:
    euler_char: int
    vertices: FrozenSet[int]
    faces: FrozenSet[int]
    sub_edges: FrozenSet[Tuple[int, int]]


@dataclass(frozen=True)
class CutResult:
    separates: bool
    sides: Tuple[CutSide, ...]

    @property
    def disk_sides(self) -> Tuple[CutSide, ...]:
        if not self.separates:
            return ()
        return tuple(s for s in self.sides if s.euler_char == 1)

    @property
    def bounds_disk(self) -> bool:
        return bool(self.disk_sides)


@dataclass(frozen=True)
class LinkDiagram:
    """4-valent map with the over strand chosen at every crossing.

    `over[v]` is a dart of vertex v; the over strand is that dart and the
    dart two steps later in the rotation.
    """

    map: CombinatorialMap
    over: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "over", tuple(int(d) for d in self.over))
        if len(self.over) != self.map.vertex_count:
            raise MalformedDiagram(f"{len(self.over)} over-darts for {self.map.vertex_count} crossings")
        for v, cyc in enumerate(self.map.rotation):
            if len(cyc) != 4:
                raise MalformedDiagram(f"crossing {v} has degree {len(cyc)}, expected 4")
            if self.over[v] not in cyc:
                raise MalformedDiagram(f"over-dart {self.over[v]} does not belong to crossing {v}")

    @property
    def crossing_count(self) -> int:
        return self.map.vertex_count

    def opposite(self, d: int) -> int:
        m = self.map
        return m.dart_at(m.vertex(d), m.position(d) + 2)

    def strand(self, d: int) -> int:
        """0 for the strand through rotation positions 0 and 2, 1 otherwise."""
        return self.map.position(d) % 2

    def is_over(self, d: int) -> bool:
        return self.strand(d) == self.strand(self.over[self.map.vertex(d)])


@dataclass(frozen=True)
class StrandPass:
    crossing: int
    is_over: bool
    entering: int


@dataclass(frozen=True)
class AlternationResult:
    alternating: bool
    violation: Optional[int] = None

    def __bool__(self):
        return self.alternating


@dataclass(frozen=True)
class FullyAlternatingResult:
    alternating: bool
    cellular: bool
    surface: SurfaceInfo
    excluded_surface: bool
    declared: Optional[SurfaceInfo] = None

    @property
    def fully_alternating(self) -> bool:
        return self.alternating and self.cellular and not self.excluded_surface

    def __bool__(self):
        return self.fully_alternating


@dataclass(frozen=True)
class TwoCutCandidate:
    crossing_point_1: EdgePoint
    crossing_point_2: EdgePoint
    corridor_1: FaceArc
    corridor_2: FaceArc
    realized: EmbeddedCurve

    @property
    def key(self) -> FrozenSet[FrozenSet[Tuple[int, int]]]:
        """Isotopy key: the two corridors as sets of (face, position) side occurrences."""
        a, b = self.corridor_1, self.corridor_2
        return frozenset({frozenset({(a.face, a.start), (a.face, a.end)}),
                          frozenset({(b.face, b.start), (b.face, b.end)})})

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edges": [self.crossing_point_1.edge, self.crossing_point_2.edge],
            "corridors": [
                {"face": self.corridor_1.face, "start": self.corridor_1.start, "end": self.corridor_1.end},
                {"face": self.corridor_2.face, "start": self.corridor_2.start, "end": self.corridor_2.end},
            ],
            "curve": self.realized.to_dict(),
        }


@dataclass(frozen=True)
class TwoCutVerdict:
    bounds_disk: bool
    disk_side_crossing_count: int = 0
    embedded_arc: bool = False
    disk_side: Optional[CutSide] = None


@dataclass(frozen=True)
class ObviousPrimality:
    obviously_prime: bool
    witness: Optional[TwoCutCandidate] = None

    def __bool__(self):
        return self.obviously_prime


@dataclass(frozen=True)
class PrimeCertificate:
    prime: bool
    basis: str
    witness: Optional[TwoCutCandidate] = None


@dataclass(frozen=True)
class AmbientAssertions:
    """User assertions about the ambient manifold M and the surface S inside it."""

    manifold_hyperbolic: bool = False
    finite_volume: bool = False
    geodesic_boundary: bool = False
    surface_essential: bool = False
    surface_closed: bool = False
    description: str = ""

    def missing(self) -> List[str]:
        names = {
            "manifold_hyperbolic": "M is hyperbolic",
            "finite_volume": "M has finite volume",
            "geodesic_boundary": "any boundary of M is totally geodesic",
            "surface_essential": "S is essential in M",
            "surface_closed": "S is closed",
        }
        return [text for attr, text in names.items() if not getattr(self, attr)]

    def as_assumptions(self) -> List[str]:
        listed = ["M is a finite volume hyperbolic 3-manifold with totally geodesic boundary (if any)",
                  "S is an essential closed surface in M"]
        if self.description:
            listed.append(f"user description: {self.description}")
        return listed


@dataclass
class Checks:
    connected: bool
    alternating: bool
    cellular: bool
    reduced: bool
    obviously_prime: Optional[bool]
    surface: SurfaceInfo
    two_braid: Optional[bool]
    component_count: int
    reduced_crossing_count: int
    crossing_count: int
    lift: Optional["Checks"] = None


@dataclass
class Verdict:
    kind: VerdictKind
    citation: Optional[str] = None
    assumptions: List[str] = field(default_factory=list)
    failed_check: Optional[str] = None
    witness: Any = None
    reason: str = ""


@dataclass
class Certificate:
    checks: Checks
    verdict: Verdict
    citations: List[str] = field(default_factory=list)
    extensions: List[Verdict] = field(default_factory=list)


@dataclass(frozen=True)
class TilingQuotient:
    map: CombinatorialMap
    source: str = ""


@dataclass(frozen=True)
class DensityStats:
    crossings_per_fundamental_domain: int
    component_count: int
    surface: SurfaceInfo
    reduced_crossing_count: int
