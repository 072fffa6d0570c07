from typing import List, Optional, Sequence, Tuple


class AltLinkError(Exception):
    """Base class for every error raised by altlinkchecker."""


class MalformedMap(AltLinkError):
    pass


class MalformedDiagram(MalformedMap):
    pass


class InvalidCurve(AltLinkError):
    pass


class DeclaredSurfaceSmaller(AltLinkError):
    def __init__(self, declared_chi: int, derived_chi: int):
        super().__init__(
            f"declared surface has euler characteristic {declared_chi}, "
            f"larger than the derived {derived_chi}: the projection cannot embed in it"
        )
        self.declared_chi = declared_chi
        self.derived_chi = derived_chi


class NotAlternatable(AltLinkError):
    """No alternating over/under assignment exists.

    `cycle` is an odd cycle of the pass graph, each entry a
    (crossing, strand) pair where strand 0 holds rotation positions 0 and 2.
    """

    def __init__(self, cycle: Sequence[Tuple[int, int]]):
        self.cycle: List[Tuple[int, int]] = list(cycle)
        super().__init__(f"pass graph has an odd cycle of length {len(self.cycle)}")


class PreconditionFailed(AltLinkError):
    def __init__(self, hypothesis: str, detail: str = ""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = f"precondition failed: {hypothesis}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class NoPerfectMatching(AltLinkError):
    pass


class ParseError(AltLinkError):
    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SemanticError(AltLinkError):
    def __init__(self, invariant: str, message: str, line: Optional[int] = None):
        self.invariant = invariant
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message} [{invariant}]")
