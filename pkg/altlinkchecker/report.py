"""Rich console rendering and JSON payloads for checks, certificates and statistics."""
from typing import Any, Dict, Optional

from rich.console import Console, Group
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from . import __version__
from .models import Certificate, Checks, DensityStats, EmbeddedCurve, SurfaceInfo, TwoCutCandidate, Verdict

VERDICT_STYLES = {
    "Hyperbolic": "bold green",
    "ConditionallyHyperbolic": "bold cyan",
    "FailsHypothesis": "bold red",
    "NotCovered": "bold yellow",
}


def surface_payload(surface: SurfaceInfo) -> Dict[str, Any]:
    return {"chi": surface.euler_char, "genus": surface.genus, "orientable": surface.orientable}


def witness_payload(witness: Any) -> Any:
    if witness is None:
        return None
    if isinstance(witness, TwoCutCandidate):
        return witness.to_dict()
    if isinstance(witness, tuple) and len(witness) == 2 and isinstance(witness[1], EmbeddedCurve):
        return {"crossing": witness[0], "curve": witness[1].to_dict()}
    return witness


def checks_payload(checks: Checks) -> Dict[str, Any]:
    payload = {
        "connected": checks.connected,
        "alternating": checks.alternating,
        "cellular": checks.cellular,
        "reduced": checks.reduced,
        "obviously_prime": checks.obviously_prime,
        "two_braid": checks.two_braid,
        "component_count": checks.component_count,
        "crossing_count": checks.crossing_count,
        "reduced_crossing_count": checks.reduced_crossing_count,
    }
    if checks.lift is not None:
        payload["lift"] = dict(checks_payload(checks.lift), surface=surface_payload(checks.lift.surface))
    return payload


def verdict_payload(verdict: Verdict) -> Dict[str, Any]:
    return {
        "kind": verdict.kind,
        "citation": verdict.citation,
        "assumptions": list(verdict.assumptions),
        "witness": witness_payload(verdict.witness) if verdict.kind == "FailsHypothesis" else None,
        "failed_check": verdict.failed_check,
        "reason": verdict.reason,
    }


def certificate_payload(certificate: Certificate, input_name: str) -> Dict[str, Any]:
    return {
        "version": __version__,
        "input": input_name,
        "surface": surface_payload(certificate.checks.surface),
        "checks": checks_payload(certificate.checks),
        "verdict": verdict_payload(certificate.verdict),
        "citations": list(certificate.citations),
        "extensions": [verdict_payload(v) for v in certificate.extensions],
    }


def check_payload(checks: Checks, input_name: str) -> Dict[str, Any]:
    return {
        "version": __version__,
        "input": input_name,
        "surface": surface_payload(checks.surface),
        "checks": checks_payload(checks),
        # check does not choose a criterion
        "verdict": None,
    }


def stats_payload(stats: DensityStats, input_name: str) -> Dict[str, Any]:
    return {
        "version": __version__,
        "input": input_name,
        "surface": surface_payload(stats.surface),
        "crossings_per_fundamental_domain": stats.crossings_per_fundamental_domain,
        "component_count": stats.component_count,
        "reduced_crossing_count": stats.reduced_crossing_count,
    }


def _mark(value: Optional[bool]) -> Text:
    if value is None:
        return Text("n/a", style="dim")
    return Text("yes", style="green") if value else Text("no", style="red")


def checks_table(checks: Checks, title: str = "Checks") -> Table:
    table = Table(title=title, border_style="dim white")
    table.add_column("Check", justify="left")
    table.add_column("Result", justify="center")
    for name in ("connected", "alternating", "cellular", "reduced", "obviously_prime", "two_braid"):
        table.add_row(name.replace("_", " "), _mark(getattr(checks, name)))
    table.add_row("surface", str(checks.surface))
    table.add_row("crossings", str(checks.crossing_count))
    table.add_row("reduced crossings", str(checks.reduced_crossing_count))
    table.add_row("link components", str(checks.component_count))
    return table


def _verdict_text(verdict: Verdict) -> Group:
    lines = [Text(f" {verdict.kind} ", style=VERDICT_STYLES.get(verdict.kind, "bold"))]
    if verdict.citation:
        lines.append(Text(f"by {verdict.citation}", style="white"))
    if verdict.failed_check:
        lines.append(Text(f"failed check: {verdict.failed_check}", style="red"))
    if verdict.reason and not verdict.failed_check:
        lines.append(Text(verdict.reason, style="dim white"))
    for assumption in verdict.assumptions:
        lines.append(Text(f"assuming {assumption}", style="cyan"))
    if verdict.kind == "FailsHypothesis" and verdict.witness is not None:
        lines.append(Text(f"witness: {witness_payload(verdict.witness)}", style="dim white", overflow="fold"))
    return Group(*lines)


def render_checks(console: Console, checks: Checks, input_name: str):
    console.print(checks_table(checks, title=input_name))
    if checks.lift is not None:
        console.print(checks_table(checks.lift, title=f"{input_name} (orientable double cover)"))


def render_certificate(console: Console, certificate: Certificate, input_name: str):
    render_checks(console, certificate.checks, input_name)
    console.print(Panel(_verdict_text(certificate.verdict), title="Verdict",
                        border_style=VERDICT_STYLES.get(certificate.verdict.kind, "blue").split()[-1]))
    for extension in certificate.extensions:
        console.print(Panel(_verdict_text(extension), title="Ambient manifold", border_style="blue"))


def render_stats(console: Console, stats: DensityStats, input_name: str):
    table = Table(title=input_name, border_style="dim white")
    table.add_column("Quantity", justify="left")
    table.add_column("Value", justify="right")
    table.add_row("crossings per fundamental domain", str(stats.crossings_per_fundamental_domain))
    table.add_row("link components", str(stats.component_count))
    table.add_row("reduced crossings", str(stats.reduced_crossing_count))
    table.add_row("surface", str(stats.surface))
    console.print(table)
