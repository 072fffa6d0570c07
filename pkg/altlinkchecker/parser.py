import logging
import re
from typing import Dict, List, Optional, Tuple

from dotenv import dotenv_values

from .errors import MalformedMap, ParseError, SemanticError
from .models import AmbientAssertions, CombinatorialMap, LinkDiagram, SurfaceInfo, TilingQuotient

logger = logging.getLogger(__name__)

SUPPORTED_VERSIONS = ("1",)

_CROSSING = re.compile(r"^(crossing|vertex)\s+([^\s:]+)\s*:\s*(.*)$")
_PD_ENTRY = re.compile(r"X\[([^\]]*)\]")
_SURFACE = re.compile(r"^surface\s+genus=(\S+)\s+orientable=(\S+)\s*$")
_SOURCE = re.compile(r'^source\s+"([^"]*)"\s*$')

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _to_bool(value: str, line: int, column: int) -> bool:
    low = value.strip().lower()
    if low in _TRUE:
        return True
    if low in _FALSE:
        return False
    raise ParseError(f"expected true or false, got '{value}'", line, column)


class _Document:
    """Statements of one document, collected before any map is built."""

    def __init__(self):
        self.declared: Optional[SurfaceInfo] = None
        self.source = ""
        self.pd: List[Tuple[List[str], int, int]] = []
        self.cycles: List[Tuple[str, List[str], Optional[str], int]] = []
        self.edges: List[Tuple[str, str, int, int]] = []
        self.kinds = set()


class DiagramParser:
    @staticmethod
    def parse_file(file_path: str) -> Tuple[LinkDiagram, Optional[SurfaceInfo]]:
        with open(file_path, "r", encoding="utf-8") as f:
            return DiagramParser.parse_diagram(f.read())

    @staticmethod
    def parse_map_file(file_path: str) -> TilingQuotient:
        with open(file_path, "r", encoding="utf-8") as f:
            return DiagramParser.parse_map(f.read())

    @staticmethod
    def parse_diagram(text: str) -> Tuple[LinkDiagram, Optional[SurfaceInfo]]:
        doc = DiagramParser._scan(text)
        if "vertex" in doc.kinds:
            raise SemanticError("diagram documents use crossing lines", "'vertex' lines belong to map documents")
        if doc.pd and (doc.cycles or doc.edges):
            raise SemanticError("one body form", "a document mixes pd and crossing/edge lines")
        if doc.pd:
            diagram = DiagramParser._from_pd(doc)
        else:
            diagram = DiagramParser._from_darts(doc)
        logger.debug("parsed diagram with %d crossings", diagram.crossing_count)
        return diagram, doc.declared

    @staticmethod
    def parse_map(text: str) -> TilingQuotient:
        """Map document: `vertex` (or `crossing`) lines of any degree plus `edge` lines."""
        doc = DiagramParser._scan(text)
        if doc.pd:
            raise SemanticError("map documents use vertex lines", "pd lines describe diagrams")
        ids, rotation, _ = DiagramParser._cycles(doc, require_degree=None)
        m = DiagramParser._build_map(doc, ids, rotation)
        return TilingQuotient(m, doc.source)

    @staticmethod
    def _scan(text: str) -> _Document:
        doc = _Document()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = _strip_comment(raw)
            stripped = line.strip()
            if not stripped:
                continue
            column = len(line) - len(line.lstrip()) + 1
            keyword = stripped.split()[0]
            if keyword == "version":
                parts = stripped.split()
                if len(parts) != 2:
                    raise ParseError("expected 'version <n>'", lineno, column)
                if parts[1] not in SUPPORTED_VERSIONS:
                    raise ParseError(f"unsupported format version '{parts[1]}'", lineno, column + len("version "))
            elif keyword == "surface":
                doc.declared = DiagramParser._surface(stripped, lineno, column)
            elif keyword == "source":
                match = _SOURCE.match(stripped)
                if not match:
                    raise ParseError('expected source "<description>"', lineno, column)
                doc.source = match.group(1)
            elif keyword == "pd":
                DiagramParser._pd_line(doc, line, lineno)
            elif keyword in ("crossing", "vertex"):
                DiagramParser._cycle_line(doc, stripped, lineno, column)
            elif keyword == "edge":
                DiagramParser._edge_line(doc, stripped, lineno, column)
            else:
                raise ParseError(f"unknown statement '{keyword}'", lineno, column)
        return doc

    @staticmethod
    def _surface(stripped: str, lineno: int, column: int) -> SurfaceInfo:
        match = _SURFACE.match(stripped)
        if not match:
            raise ParseError("expected 'surface genus=<g> orientable=<true|false>'", lineno, column)
        try:
            genus = int(match.group(1))
        except ValueError:
            raise ParseError(f"genus must be an integer, got '{match.group(1)}'", lineno, column + match.start(1))
        orientable = _to_bool(match.group(2), lineno, column + match.start(2))
        if genus < 0 or (not orientable and genus < 1):
            raise SemanticError("surface genus range", f"no {'orientable' if orientable else 'non-orientable'} "
                                f"surface of genus {genus}", lineno)
        return SurfaceInfo.declared(genus, orientable)

    @staticmethod
    def _pd_line(doc: _Document, line: str, lineno: int):
        body_at = line.index("pd") + 2
        body = line[body_at:]
        pos = 0
        for match in _PD_ENTRY.finditer(body):
            gap = body[pos:match.start()]
            if gap.strip().strip(","):
                raise ParseError(f"unexpected text '{gap.strip()}'", lineno, body_at + pos + 1)
            labels = [x.strip() for x in match.group(1).split(",")]
            column = body_at + match.start() + 1
            if len(labels) != 4 or not all(labels):
                raise SemanticError("degree 4", f"pd entry X[{match.group(1)}] needs four labels", lineno)
            doc.pd.append((labels, lineno, column))
            pos = match.end()
        if body[pos:].strip().strip(","):
            raise ParseError(f"unexpected text '{body[pos:].strip()}'", lineno, body_at + pos + 1)
        doc.kinds.add("pd")

    @staticmethod
    def _cycle_line(doc: _Document, stripped: str, lineno: int, column: int):
        match = _CROSSING.match(stripped)
        if not match:
            raise ParseError(f"expected '{stripped.split()[0]} <id>: <darts>'", lineno, column)
        kind, ident, rest = match.groups()
        over = None
        darts = []
        for token in rest.split():
            if token.startswith("over="):
                if kind == "vertex" or over is not None:
                    raise ParseError(f"unexpected '{token}'", lineno, column + stripped.index(token))
                over = token[len("over="):]
            else:
                darts.append(token)
        doc.cycles.append((ident, darts, over, lineno))
        doc.kinds.add(kind)

    @staticmethod
    def _edge_line(doc: _Document, stripped: str, lineno: int, column: int):
        parts = stripped.split()
        sign = 1
        if len(parts) == 4:
            if parts[3] not in ("sign=-1", "sign=+1", "sign=1"):
                raise ParseError(f"expected sign=-1 or sign=+1, got '{parts[3]}'", lineno,
                                 column + stripped.index(parts[3]))
            sign = -1 if parts[3] == "sign=-1" else 1
        elif len(parts) != 3:
            raise ParseError("expected 'edge <dart> <dart> [sign=-1]'", lineno, column)
        doc.edges.append((parts[1], parts[2], sign, lineno))

    @staticmethod
    def _dart_ids(tokens: List[str]) -> Dict[str, int]:
        if all(re.fullmatch(r"-?\d+", t) for t in tokens):
            return {t: int(t) for t in tokens}
        ids: Dict[str, int] = {}
        for t in tokens:
            ids.setdefault(t, len(ids) + 1)
        return ids

    @staticmethod
    def _cycles(doc: _Document, require_degree: Optional[int]):
        if not doc.cycles:
            raise SemanticError("at least one crossing", "document has no crossings")
        seen_ids, seen_darts = set(), set()
        tokens = []
        for ident, darts, _, lineno in doc.cycles:
            if ident in seen_ids:
                raise SemanticError("distinct crossing ids", f"'{ident}' is declared twice", lineno)
            seen_ids.add(ident)
            if require_degree is not None and len(darts) != require_degree:
                raise SemanticError("degree 4", f"crossing '{ident}' lists {len(darts)} darts", lineno)
            if not darts:
                raise SemanticError("nonempty rotation", f"vertex '{ident}' lists no darts", lineno)
            for d in darts:
                if d in seen_darts:
                    raise SemanticError("darts distinct", f"dart '{d}' appears twice", lineno)
                seen_darts.add(d)
                tokens.append(d)
        ids = DiagramParser._dart_ids(tokens)
        rotation = [tuple(ids[d] for d in darts) for _, darts, _, _ in doc.cycles]
        return ids, rotation, seen_darts

    @staticmethod
    def _build_map(doc: _Document, ids: Dict[str, int], rotation) -> CombinatorialMap:
        paired: Dict[str, int] = {}
        edges = []
        for a, b, sign, lineno in doc.edges:
            for d in (a, b):
                if d not in ids:
                    raise SemanticError("edge darts exist", f"dart '{d}' is not at any crossing", lineno)
                if d in paired:
                    raise SemanticError("pairing is an involution", f"dart '{d}' is in two edges", lineno)
                paired[d] = lineno
            if a == b:
                raise SemanticError("pairing has no fixed dart", f"edge joins dart '{a}' to itself", lineno)
            edges.append((ids[a], ids[b], sign))
        unpaired = [d for d in ids if d not in paired]
        if unpaired:
            raise SemanticError("every dart paired", f"unpaired darts: {', '.join(unpaired)}")
        try:
            return CombinatorialMap.from_edges(rotation, edges)
        except MalformedMap as exc:
            raise SemanticError("map invariants", str(exc))

    @staticmethod
    def _from_darts(doc: _Document) -> LinkDiagram:
        ids, rotation, _ = DiagramParser._cycles(doc, require_degree=4)
        m = DiagramParser._build_map(doc, ids, rotation)
        over = []
        for ident, darts, o, lineno in doc.cycles:
            if o is None:
                raise SemanticError("over dart at crossing", f"crossing '{ident}' has no over=", lineno)
            if o not in darts:
                raise SemanticError("over dart at crossing", f"over dart '{o}' is not at crossing '{ident}'", lineno)
            over.append(ids[o])
        return LinkDiagram(m, tuple(over))

    @staticmethod
    def _from_pd(doc: _Document) -> LinkDiagram:
        """PD entries list labels counterclockwise from the incoming under-strand."""
        where: Dict[str, List[int]] = {}
        rotation = []
        for i, (labels, lineno, _) in enumerate(doc.pd):
            # a crossing may close one loop (a kink), not two
            if len(set(labels)) < 3:
                raise SemanticError("pd crossing with at most one loop",
                                    f"X[{','.join(labels)}] closes two loops at one crossing", lineno)
            darts = tuple(4 * i + j + 1 for j in range(4))
            rotation.append(darts)
            for label, d in zip(labels, darts):
                where.setdefault(label, []).append(d)
        edges = []
        for label, darts in where.items():
            if len(darts) != 2:
                raise SemanticError("each pd label used twice", f"label '{label}' appears {len(darts)} times")
            edges.append((darts[0], darts[1]))
        try:
            m = CombinatorialMap.from_edges(rotation, edges)
        except MalformedMap as exc:
            raise SemanticError("map invariants", str(exc))
        return LinkDiagram(m, tuple(cyc[1] for cyc in rotation))

    @staticmethod
    def parse_ambient(file_path: str) -> AmbientAssertions:
        """Read ambient-manifold assertions from a dotenv style KEY=value file."""
        values = dotenv_values(file_path)
        known = {
            "MANIFOLD_HYPERBOLIC": "manifold_hyperbolic",
            "FINITE_VOLUME": "finite_volume",
            "GEODESIC_BOUNDARY": "geodesic_boundary",
            "SURFACE_ESSENTIAL": "surface_essential",
            "SURFACE_CLOSED": "surface_closed",
        }
        fields = {}
        for key, value in values.items():
            if key in known:
                fields[known[key]] = _to_bool(value or "", 0, 1)
            elif key != "DESCRIPTION":
                logger.warning("ignoring unknown ambient key %s", key)
        return AmbientAssertions(description=values.get("DESCRIPTION") or "", **fields)
