"""Command line for hetcat: validate spec files, search universals, verify and draw.

Exit status 0 means verified, 1 a negative mathematical result and 2 malformed
input. Results go to stdout and every diagnostic to stderr.
"""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import logging
from pathlib import Path
import sys

import colorlog

from . import __version__
from .config import load_config
from .const import (
    DEFAULT_CONFIG_PATH,
    DOMAIN,
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
    EXIT_OK,
    LOG_FORMAT,
)
from .core import (
    Adjunction,
    BrainFunctor,
    HetcatError,
    HetcatNegativeResult,
    HetcatParameterError,
    HetcatValidationError,
    SpecParseError,
    ValidationReport,
    assemble_adjunction,
    brain_from_adjoints,
    build_left_semiadjunction,
    build_right_semiadjunction,
    check_brain,
    find_left_representation,
    find_right_representation,
    verify_all_wings,
)
from .dot import KIND_BUTTERFLY, KIND_SQUARE, emit_dot
from .gallery import FIXTURES, build_fixture, instruction_report, selection_report, verify_fixture
from .models import HetcatConfig
from .spec_parser import SpecDocument, parse_spec, serialize_spec
from .translation import translate

_LOGGER = logging.getLogger(__name__)
_HANDLER: logging.Handler | None = None

type Command = Callable[[argparse.Namespace, HetcatConfig], int]


class _NegativeReport(HetcatError):
    """A verification ran to completion and found violations."""

    def __init__(self, message: str, report: ValidationReport):
        super().__init__(message)
        self.report = report


def _setup_logging(config: HetcatConfig, verbose: bool) -> None:
    global _HANDLER

    root = logging.getLogger(DOMAIN)
    if _HANDLER is not None:
        root.removeHandler(_HANDLER)
    _HANDLER = colorlog.StreamHandler(sys.stderr)
    _HANDLER.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT, stream=sys.stderr))
    root.addHandler(_HANDLER)
    root.setLevel(logging.DEBUG if verbose else config.log_level.upper())
    for name, level in config.log_levels.items():
        logging.getLogger(name).setLevel(logging.DEBUG if verbose else level.upper())


def _load(path: str) -> SpecDocument:
    try:
        raw = Path(path).read_bytes()
    except OSError as err:
        raise HetcatParameterError(f"Cannot read {path}: {err.strerror}") from err
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as err:
        line_start = raw.rfind(b"\n", 0, err.start) + 1
        raise SpecParseError(
            f"invalid UTF-8 byte 0x{raw[err.start]:02x}",
            raw.count(b"\n", 0, err.start) + 1,
            err.start - line_start + 1,
            source=path,
        ) from err
    try:
        return parse_spec(text)
    except SpecParseError as err:
        raise SpecParseError(
            err.reason, err.line, err.column, err.expected, source=path
        ) from err


def _cmd_validate(args: argparse.Namespace, config: HetcatConfig) -> int:
    document = _load(args.file)
    for kind, name in document.order:
        print(translate("cli.valid", kind=kind, name=name))
    return EXIT_OK


def _represent(args: argparse.Namespace, config: HetcatConfig, left: bool) -> int:
    het = _load(args.file).het(args.het)
    find = find_left_representation if left else find_right_representation
    arrow = find(het, args.object, workers=config.workers)
    if arrow is None:
        print(translate("cli.not_representable", base=args.object), file=sys.stderr)
        return EXIT_NEGATIVE
    key = "cli.represented_left" if left else "cli.represented_right"
    print(translate(key, base=arrow.base, rep=arrow.rep, universal=arrow.universal.name))
    return EXIT_OK


def _cmd_represent_left(args: argparse.Namespace, config: HetcatConfig) -> int:
    return _represent(args, config, left=True)


def _cmd_represent_right(args: argparse.Namespace, config: HetcatConfig) -> int:
    return _represent(args, config, left=False)


def _adjunction(document: SpecDocument, het_name: str, config: HetcatConfig) -> Adjunction:
    het = document.het(het_name)
    return assemble_adjunction(
        build_left_semiadjunction(het, workers=config.workers),
        build_right_semiadjunction(het, workers=config.workers),
    )


def _cmd_adjunction(args: argparse.Namespace, config: HetcatConfig) -> int:
    adjunction = _adjunction(_load(args.file), args.het, config)
    for x in adjunction.het.sending.objects:
        print(f"F({x}) = {adjunction.left_adjoint(x)}, unit = {adjunction.unit(x)}")
    for a in adjunction.het.receiving.objects:
        print(f"G({a}) = {adjunction.right_adjoint(a)}, counit = {adjunction.counit(a)}")
    print(translate("cli.adjunction"))
    return EXIT_OK


def _print_brain(brain: BrainFunctor) -> int:
    wings = verify_all_wings(brain)
    if not wings.ok:
        raise _NegativeReport(f"Wings of {brain.functor.name} do not commute", wings)
    for x in brain.functor.source.objects:
        print(
            f"F({x}) = {brain.functor(x)}, "
            f"out = {brain.left.universal(x)}, in = {brain.right.universal(x)}"
        )
    print(translate("cli.brain"))
    return EXIT_OK


def _cmd_brain(args: argparse.Namespace, config: HetcatConfig) -> int:
    document = _load(args.file)
    brain = check_brain(
        document.functor(args.functor), document.het(args.het_out), document.het(args.het_in)
    )
    return _print_brain(brain)


def _cmd_brain_from_adjoints(args: argparse.Namespace, config: HetcatConfig) -> int:
    document = _load(args.file)
    brain = brain_from_adjoints(
        document.functor(args.left), document.functor(args.mid), document.functor(args.right)
    )
    return _print_brain(brain)


def _fixture_params(pairs: Sequence[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise HetcatParameterError(f"Expected key=value, got '{pair}'")
        params[key] = value
    return params


def _cmd_gallery(args: argparse.Namespace, config: HetcatConfig) -> int:
    fixture = build_fixture(args.name, _fixture_params(args.params))
    if args.emit_spec:
        document = SpecDocument.from_parts(fixture.categories, fixture.functors, fixture.hets)
        sys.stdout.write(serialize_spec(document))
        return EXIT_OK
    report = verify_fixture(fixture, workers=config.workers)
    failed = {violation.witness[0] for violation in report.violations}
    for key in fixture.expected:
        print(f"{key}: {'mismatch' if key in failed else 'ok'}")
    if not report.ok:
        raise _NegativeReport(translate("cli.fixture_failed", name=fixture.name), report)
    print(translate("cli.fixture_ok", name=fixture.name))
    return EXIT_OK


def _cmd_report_selection(args: argparse.Namespace, config: HetcatConfig) -> int:
    het = _load(args.file).het(args.het)
    semi = build_left_semiadjunction(het, workers=config.workers)
    sys.stdout.write(selection_report(semi, args.element))
    return EXIT_OK


def _cmd_report_instruction(args: argparse.Namespace, config: HetcatConfig) -> int:
    het = _load(args.file).het(args.het)
    semi = build_right_semiadjunction(het, workers=config.workers)
    sys.stdout.write(instruction_report(semi, args.element))
    return EXIT_OK


def _require(args: argparse.Namespace, kind: str, *names: str) -> None:
    flags = {"het_out": "--out", "het_in": "--in"}
    missing = [
        flags.get(name, f"--{name.replace('_', '-')}")
        for name in names
        if getattr(args, name) is None
    ]
    if missing:
        raise HetcatParameterError(f"emit-dot {kind} needs {', '.join(missing)}")


def _cmd_emit_dot(args: argparse.Namespace, config: HetcatConfig) -> int:
    document = _load(args.file)
    if args.kind == KIND_SQUARE:
        _require(args, args.kind, "het", "element")
        data = _adjunction(document, args.het, config)
        elements = (args.element,)
    else:
        _require(args, args.kind, "functor", "het_out", "het_in", "element_out", "element_in")
        data = check_brain(
            document.functor(args.functor),
            document.het(args.het_out),
            document.het(args.het_in),
        )
        elements = (args.element_out, args.element_in)
    sys.stdout.write(emit_dot(args.kind, data, *elements, rankdir=config.dot_rankdir))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=DOMAIN,
        description="Compute with finite categories, hets, universals and adjunctions.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help=f"configuration file (default {DEFAULT_CONFIG_PATH})")
    parser.add_argument("--verbose", action="store_true", help="log at debug level")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Command, help_text: str, with_file: bool = True):
        sub = commands.add_parser(name, help=help_text)
        if with_file:
            sub.add_argument("file")
        sub.set_defaults(handler=handler)
        return sub

    command("validate", _cmd_validate, "check every law of a spec file")
    for name, handler, flag in (
        ("represent-left", _cmd_represent_left, "receiving"),
        ("represent-right", _cmd_represent_right, "sending"),
    ):
        sub = command(name, handler, f"search a {flag} universal")
        sub.add_argument("--het", required=True)
        sub.add_argument("--object", required=True)
    command("adjunction", _cmd_adjunction, "assemble and verify an adjunction").add_argument(
        "--het", required=True
    )
    sub = command("brain", _cmd_brain, "verify a brain functor")
    sub.add_argument("--functor", required=True)
    sub.add_argument("--out", dest="het_out", required=True)
    sub.add_argument("--in", dest="het_in", required=True)
    sub = command("brain-from-adjoints", _cmd_brain_from_adjoints, "verify H ⊣ F ⊣ G")
    sub.add_argument("--left", required=True)
    sub.add_argument("--mid", required=True)
    sub.add_argument("--right", required=True)
    sub = command("gallery", _cmd_gallery, "build and verify a fixture", with_file=False)
    sub.add_argument("name", choices=sorted(FIXTURES))
    sub.add_argument("params", nargs="*", metavar="key=value")
    sub.add_argument("--emit-spec", action="store_true")
    for name, handler in (
        ("report-selection", _cmd_report_selection),
        ("report-instruction", _cmd_report_instruction),
    ):
        sub = command(name, handler, "narrate one het against its factorization")
        sub.add_argument("--het", required=True)
        sub.add_argument("--element", required=True)
    sub = command("emit-dot", _cmd_emit_dot, "draw a square or a butterfly", with_file=False)
    sub.add_argument("kind", choices=[KIND_SQUARE, KIND_BUTTERFLY])
    sub.add_argument("file")
    for flag in ("het", "element", "functor", "element-out", "element-in"):
        sub.add_argument(f"--{flag}")
    sub.add_argument("--out", dest="het_out")
    sub.add_argument("--in", dest="het_in")
    return parser


def _report_lines(report: ValidationReport) -> None:
    for violation in report.violations:
        print(f"  {violation}", file=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_INPUT_ERROR if err.code not in (0, None) else EXIT_OK

    try:
        config = load_config(args.config or DEFAULT_CONFIG_PATH, required=args.config is not None)
    except HetcatParameterError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _setup_logging(config, args.verbose)

    try:
        return args.handler(args, config)
    except (HetcatNegativeResult, _NegativeReport) as err:
        print(f"negative: {err}", file=sys.stderr)
        _report_lines(err.report)
        return EXIT_NEGATIVE
    except HetcatValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        _report_lines(err.report)
        return EXIT_INPUT_ERROR
    except HetcatError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT_ERROR
