import logging
from typing import Any, Dict, List, Optional, Tuple

from . import diagram as dg
from . import maps
from . import primecheck
from .errors import DeclaredSurfaceSmaller, InvalidCurve, PreconditionFailed
from .models import (
    AmbientAssertions,
    Certificate,
    Checks,
    EmbeddedCurve,
    LinkDiagram,
    SurfaceInfo,
    TwoCutCandidate,
    Verdict,
    VertexPoint,
)

logger = logging.getLogger(__name__)

SPHERE_CITATION = "Menasco (alternating links in the 3-sphere)"
MAIN_CITATION = "Theorem 1"
PRIME_CITATION = primecheck.PRIME_CITATION
BUNDLE_CITATION = "Lemma 7"
AMBIENT_CITATION = "Theorem 3"
PRIME_IN_N = "L is prime in N"

CHECK_ORDER = ("connected", "alternating", "cellular", "reduced", "obviously_prime")


class HyperbolicityChecker:
    @staticmethod
    def detect_two_braid(diagram: LinkDiagram) -> bool:
        """True for the standard closed (2, n)-braid projection on the sphere."""
        surface = maps.surface_info(diagram.map)
        if not surface.is_sphere:
            raise PreconditionFailed("surface is the sphere", f"surface is the {surface.name}")
        if not dg.is_alternating(diagram):
            raise PreconditionFailed("alternating")
        n = diagram.crossing_count
        if n < 2:
            return False
        degrees = sorted(f.degree for f in maps.trace_faces(diagram.map))
        if degrees != sorted([2] * n + [n, n]):
            return False
        return len(dg.components(diagram)) == (1 if n % 2 else 2)

    @staticmethod
    def run_checks(diagram: LinkDiagram, declared: Optional[SurfaceInfo] = None) -> Tuple[Checks, Dict[str, Any]]:
        """All combinatorial checks, plus a witness for each failed one."""
        witnesses: Dict[str, Any] = {}
        comps = maps.components(diagram.map)
        connected = len(comps) == 1
        if not connected:
            witnesses["connected"] = [sorted(c) for c in comps]

        alternation = dg.is_alternating(diagram)
        if not alternation:
            witnesses["alternating"] = alternation.violation

        surface = maps.surface_info(diagram.map)
        try:
            cellular = dg.is_fully_alternating(diagram, declared).cellular
        except DeclaredSurfaceSmaller as exc:
            logger.warning("%s", exc)
            cellular = False
        if not cellular:
            witnesses["cellular"] = {
                "declared": {"genus": declared.genus, "orientable": declared.orientable, "chi": declared.euler_char},
                "derived": {"genus": surface.genus, "orientable": surface.orientable, "chi": surface.euler_char},
            }

        nugatory = dg.find_nugatory(diagram)
        if nugatory:
            witnesses["reduced"] = nugatory[0]

        obviously_prime = None
        if connected and alternation and not nugatory:
            scan = primecheck.first_failing_cut(diagram)
            obviously_prime = scan.obviously_prime
            if not obviously_prime:
                witnesses["obviously_prime"] = scan.witness

        two_braid = None
        if surface.is_sphere and alternation and not nugatory:
            two_braid = HyperbolicityChecker.detect_two_braid(diagram)
            if two_braid:
                degrees = sorted(f.degree for f in maps.trace_faces(diagram.map))
                witnesses["two_braid"] = {"crossings": diagram.crossing_count, "face_degrees": degrees}

        checks = Checks(
            connected=connected,
            alternating=alternation.alternating,
            cellular=cellular,
            reduced=not nugatory,
            obviously_prime=obviously_prime,
            surface=surface,
            two_braid=two_braid,
            component_count=len(dg.components(diagram)),
            reduced_crossing_count=dg.reduce(diagram).crossing_count,
            crossing_count=diagram.crossing_count,
        )
        return checks, witnesses

    @staticmethod
    def _first_failure(checks: Checks, witnesses: Dict[str, Any], citation: str,
                       prefix: str = "") -> Optional[Verdict]:
        for name in CHECK_ORDER:
            if getattr(checks, name) is False:
                return Verdict(
                    kind="FailsHypothesis",
                    citation=citation,
                    failed_check=prefix + name,
                    witness=witnesses.get(name),
                    reason=f"check '{prefix + name}' failed",
                )
        return None

    @staticmethod
    def certify(diagram: LinkDiagram, declared: Optional[SurfaceInfo] = None,
                ambient: Optional[AmbientAssertions] = None) -> Certificate:
        checks, witnesses = HyperbolicityChecker.run_checks(diagram, declared)
        surface = checks.surface
        logger.info("certifying %d-crossing diagram on %s", diagram.crossing_count, surface)

        if not checks.connected:
            verdict = HyperbolicityChecker._first_failure(checks, witnesses, None)
            citations: List[str] = []
        elif surface.is_sphere:
            citations = [SPHERE_CITATION]
            verdict = HyperbolicityChecker._first_failure(checks, witnesses, SPHERE_CITATION)
            if verdict is None and checks.two_braid:
                verdict = Verdict(kind="FailsHypothesis", citation=SPHERE_CITATION, failed_check="two_braid",
                                  witness=witnesses["two_braid"], reason="diagram is a closed 2-braid")
            if verdict is None:
                verdict = Verdict(kind="Hyperbolic", citation=SPHERE_CITATION)
        elif surface.orientable:
            citations = [MAIN_CITATION, PRIME_CITATION]
            verdict = HyperbolicityChecker._first_failure(checks, witnesses, MAIN_CITATION)
            if verdict is None:
                verdict = Verdict(kind="Hyperbolic", citation=MAIN_CITATION)
        elif surface.euler_char < 0:
            citations = [BUNDLE_CITATION]
            verdict = HyperbolicityChecker._first_failure(checks, witnesses, BUNDLE_CITATION)
            lifted, _ = dg.lift_diagram(diagram)
            checks.lift, lift_witnesses = HyperbolicityChecker.run_checks(lifted)
            if verdict is None:
                verdict = HyperbolicityChecker._first_failure(checks.lift, lift_witnesses, BUNDLE_CITATION, "lift.")
            if verdict is None:
                verdict = Verdict(kind="ConditionallyHyperbolic", citation=BUNDLE_CITATION, assumptions=[PRIME_IN_N])
        else:
            citations = []
            verdict = Verdict(
                kind="NotCovered",
                reason=f"no hyperbolicity criterion for diagrams on the {surface.name}",
            )

        certificate = Certificate(checks=checks, verdict=verdict, citations=citations)
        if ambient is not None:
            certificate.extensions.append(HyperbolicityChecker._ambient_extension(certificate, ambient))
            if certificate.extensions[-1].citation:
                certificate.citations.append(AMBIENT_CITATION)
        logger.info("verdict: %s", verdict.kind)
        return certificate

    @staticmethod
    def _ambient_extension(certificate: Certificate, ambient: AmbientAssertions) -> Verdict:
        missing = ambient.missing()
        if missing:
            return Verdict(kind="NotCovered", reason="unasserted: " + "; ".join(missing))
        surface = certificate.checks.surface
        if surface.euler_char >= 0:
            return Verdict(kind="NotCovered",
                           reason=f"a surface with euler characteristic {surface.euler_char} "
                                  "is not essential in a hyperbolic manifold")
        if certificate.verdict.kind not in ("Hyperbolic", "ConditionallyHyperbolic"):
            return Verdict(kind="NotCovered", reason="the diagram does not pass the checks on S")
        assumptions = ambient.as_assumptions()
        if certificate.verdict.kind == "ConditionallyHyperbolic":
            assumptions.append(PRIME_IN_N)
        return Verdict(kind="ConditionallyHyperbolic", citation=AMBIENT_CITATION, assumptions=assumptions)

    @staticmethod
    def replay_witness(diagram: LinkDiagram, verdict: Verdict, declared: Optional[SurfaceInfo] = None) -> bool:
        """Re-run the operation behind a FailsHypothesis witness; True when the failure reappears."""
        if verdict.kind != "FailsHypothesis" or verdict.failed_check is None:
            return False
        name = verdict.failed_check
        if name.startswith("lift."):
            lifted, _ = dg.lift_diagram(diagram)
            inner = Verdict(kind="FailsHypothesis", failed_check=name[len("lift."):], witness=verdict.witness)
            return HyperbolicityChecker.replay_witness(lifted, inner)
        witness = verdict.witness
        try:
            if name == "connected":
                return [sorted(c) for c in maps.components(diagram.map)] == witness and len(witness) > 1
            if name == "alternating":
                result = dg.is_alternating(diagram)
                return not result.alternating and result.violation == witness
            if name == "cellular":
                info = SurfaceInfo.declared(witness["declared"]["genus"], witness["declared"]["orientable"])
                try:
                    return not dg.is_fully_alternating(diagram, info).cellular
                except DeclaredSurfaceSmaller:
                    return True
            if name == "reduced":
                crossing, curve = witness
                return (isinstance(curve, EmbeddedCurve)
                        and curve.points == (VertexPoint(crossing),)
                        and maps.cut_along_curve(diagram.map, curve).bounds_disk)
            if name == "obviously_prime":
                if not isinstance(witness, TwoCutCandidate):
                    return False
                result = primecheck.classify_two_cut(diagram, witness)
                return result.bounds_disk and not result.embedded_arc
            if name == "two_braid":
                return HyperbolicityChecker.detect_two_braid(diagram)
        except (InvalidCurve, PreconditionFailed) as exc:
            logger.debug("witness replay failed: %s", exc)
            return False
        return False
