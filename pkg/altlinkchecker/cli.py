import argparse
import asyncio
import json
import logging
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from rich.console import Console
from rich.markup import escape
from tqdm.asyncio import tqdm

from . import __version__
from . import diagram as dg
from . import report
from . import weave
from .checker import HyperbolicityChecker
from .errors import AltLinkError, NotAlternatable, ParseError, SemanticError
from .parser import DiagramParser
from .serializer import serialize_diagram
from .utils import load_settings, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2

BATCH_COMMANDS = ("check", "certify", "stats")


@dataclass
class Outcome:
    path: str
    code: int = EXIT_OK
    payload: Optional[Dict[str, Any]] = None
    render: Optional[Callable[[Console], None]] = None
    document: Optional[str] = None
    error: str = ""


def _check(path: str, args) -> Outcome:
    diagram, declared = DiagramParser.parse_file(path)
    checks, _ = HyperbolicityChecker.run_checks(diagram, declared)
    return Outcome(path, payload=report.check_payload(checks, path),
                   render=lambda c: report.render_checks(c, checks, path))


def _certify(path: str, args) -> Outcome:
    diagram, declared = DiagramParser.parse_file(path)
    ambient = DiagramParser.parse_ambient(args.ambient) if args.ambient else None
    certificate = HyperbolicityChecker.certify(diagram, declared, ambient)
    return Outcome(path, payload=report.certificate_payload(certificate, path),
                   render=lambda c: report.render_certificate(c, certificate, path))


def _stats(path: str, args) -> Outcome:
    diagram, _ = DiagramParser.parse_file(path)
    stats = weave.density_stats(diagram)
    return Outcome(path, payload=report.stats_payload(stats, path),
                   render=lambda c: report.render_stats(c, stats, path))


def _reduce(path: str, args) -> Outcome:
    diagram, declared = DiagramParser.parse_file(path)
    reduced = dg.reduce(diagram)
    document = serialize_diagram(reduced, declared, comment=f"reduced from {path}")
    payload = {"version": __version__, "input": path, "crossing_count": diagram.crossing_count,
               "reduced_crossing_count": reduced.crossing_count, "document": document}
    return Outcome(path, payload=payload, document=document)


def _cover(path: str, args) -> Outcome:
    diagram, _ = DiagramParser.parse_file(path)
    lifted, _ = dg.lift_diagram(diagram)
    document = serialize_diagram(lifted, comment=f"orientable double cover of {path}")
    payload = {"version": __version__, "input": path, "crossing_count": lifted.crossing_count,
               "document": document}
    return Outcome(path, payload=payload, document=document)


def _weave(path: str, args) -> Outcome:
    quotient = DiagramParser.parse_map_file(path)
    degrees = {len(cyc) for cyc in quotient.map.rotation}
    if degrees == {3}:
        quotient = weave.augment_three_regular(quotient)
    woven = weave.weave_from_map(quotient)
    document = serialize_diagram(woven, comment=quotient.source or f"woven from {path}")
    payload = {"version": __version__, "input": path, "crossing_count": woven.crossing_count,
               "source": quotient.source, "document": document}
    return Outcome(path, payload=payload, document=document)


HANDLERS = {
    "check": _check,
    "certify": _certify,
    "stats": _stats,
    "reduce": _reduce,
    "cover": _cover,
    "weave": _weave,
}


def evaluate(command: str, path: str, args) -> Outcome:
    """Run one command on one file; every failure becomes an exit code."""
    try:
        return HANDLERS[command](path, args)
    except (ParseError, SemanticError) as exc:
        return Outcome(path, code=EXIT_INPUT, error=f"{path}: {exc}")
    except NotAlternatable as exc:
        return Outcome(path, code=EXIT_INPUT, error=f"{path}: {exc}; odd cycle {exc.cycle}")
    except OSError as exc:
        return Outcome(path, code=EXIT_INPUT, error=f"{path}: {exc.strerror or exc}")
    except AltLinkError as exc:
        return Outcome(path, code=EXIT_INPUT, error=f"{path}: {exc}")
    except Exception as exc:
        logger.debug("internal error on %s", path, exc_info=True)
        return Outcome(path, code=EXIT_INTERNAL, error=f"{path}: internal error: {exc}")


async def run_batch(command: str, paths: List[str], args, concurrency: int) -> List[Outcome]:
    sem = asyncio.Semaphore(concurrency)
    loop = asyncio.get_running_loop()

    async def check_wrapper(path):
        async with sem:
            return await loop.run_in_executor(None, evaluate, command, path, args)

    tasks = [check_wrapper(p) for p in paths]
    return await tqdm.gather(*tasks, desc=command, unit="file", file=sys.stderr, disable=len(paths) < 2)


def _read_batch(list_path: str) -> List[str]:
    with open(list_path, "r", encoding="utf-8") as f:
        lines = [line.split("#", 1)[0].strip() for line in f]
    return [line for line in lines if line]


def _emit(outcomes: List[Outcome], args, console: Console, errors: Console) -> int:
    for outcome in outcomes:
        if outcome.error:
            errors.print(f"[red]error[/red] {escape(outcome.error)}", highlight=False, soft_wrap=True)
    done = [o for o in outcomes if o.code == EXIT_OK]
    if args.json:
        payloads = [o.payload for o in done]
        text = json.dumps(payloads if args.batch else (payloads[0] if payloads else None), indent=2)
        if done:
            _write(text + "\n", args.output)
    else:
        for outcome in done:
            if outcome.document is not None:
                _write(outcome.document, args.output)
            elif outcome.render is not None:
                outcome.render(console)
    return max((o.code for o in outcomes), default=EXIT_OK)


def _write(text: str, output: Optional[str]):
    if output:
        with open(output, "w", encoding="utf-8") as f:
            f.write(text)
        logger.info("wrote %s", output)
    else:
        print(text, end="")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Print a JSON report instead of tables")
    common.add_argument("-o", "--output", type=str, default=None, help="Write the result to this file")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    common.add_argument("--env-file", type=str, default=None, help="Settings file (default: nearest .env)")

    parser = argparse.ArgumentParser(
        prog="altlinkchecker",
        description="Hyperbolicity checks for alternating link diagrams on surfaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "check": "Run the combinatorial checks on a diagram",
        "certify": "Certify hyperbolicity of the link complement",
        "reduce": "Remove nugatory crossings",
        "cover": "Lift a diagram to the orientable double cover",
        "weave": "Build an alternating weave from a 4-regular (or 3-regular) quotient map",
        "stats": "Crossing density and component statistics",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        p.add_argument("file", nargs="?", default=None, help="Input document")
        if name == "certify":
            p.add_argument("--ambient", type=str, default=None,
                           help="KEY=value file asserting properties of the ambient manifold")
        if name in BATCH_COMMANDS:
            p.add_argument("--batch", type=str, default=None, help="File listing one input document per line")
            p.add_argument("--concurrency", type=int, default=None, help="Parallel workers for --batch")
    return parser


async def async_main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "batch"):
        args.batch = None
    settings = load_settings(args.env_file)
    setup_logging("DEBUG" if args.verbose else settings.log_level)
    console = Console()
    errors = Console(stderr=True)

    if args.batch:
        try:
            paths = _read_batch(args.batch)
        except OSError as exc:
            errors.print(f"[red]error[/red] {escape(args.batch)}: {exc.strerror or exc}", highlight=False, soft_wrap=True)
            return EXIT_INPUT
        concurrency = args.concurrency or settings.concurrency
        logger.info("processing %d files with concurrency=%d", len(paths), concurrency)
        outcomes = await run_batch(args.command, paths, args, concurrency)
    elif args.file:
        outcomes = [evaluate(args.command, args.file, args)]
    else:
        parser.error("an input file (or --batch) is required")
    return _emit(outcomes, args, console, errors)


def main(argv: Optional[List[str]] = None) -> int:
    try:
        code = asyncio.run(async_main(argv))
    except KeyboardInterrupt:
        print("\nAborted.", file=sys.stderr)
        code = EXIT_INTERNAL
    sys.exit(code)


if __name__ == "__main__":
    main()
