# Copyright 2025 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command-line surface.

Subcommands:
 - validate-tree PATH
 - color-or-embed HOST TREE [--t N] [--root E] [--trace] [--out FILE]
 - check-certificate HOST TREE CERT [--t N]
 - chromatic PATH [--max-n CAP]
 - generate FAMILY [--r R] [--n N] [--t T] [--k K] [--seed S] [--out FILE]
 - ramsey --r R --k K --t T [--tree FILE] [--lower] [--slow] [--workers W]

Results go to stdout; logs go to stderr. Exit codes: 0 success, 1 semantic failure,
2 parse, I/O or configuration error, 3 budget or cap exceeded.
"""

# pylint: disable=no-self-argument
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple, Type, TypeVar

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from constructions import NamedFamily
from embedder import Trace, TraceEvent, color_or_embed, render_event, validate_certificate
from errors import (
    BudgetExceededError,
    FileFormatError,
    InvalidCliConfigError,
    InvalidHypergraphError,
    InvalidTreeError,
    ParameterMismatchError,
)
from hgfile import read_certificate, read_hypergraph, serialize_hypergraph, write_certificate
from hypergraph import Hypergraph, format_validation_error
from hypertree import RejectionReason, RTree, random_tree, recognize_rtree, tree_path, tree_star
from oracles import DEFAULT_MAX_VERTICES, OracleBudget, chromatic_number, is_k_colorable
from ramsey import verify_lower, verify_upper

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_BUDGET = 3

TREE_FAMILIES = ("tree-path", "tree-star", "tree-random")

ConfigT = TypeVar("ConfigT", bound="CommandConfig")


class CommandConfig(BaseModel):
    """Base of the per-subcommand configuration models.

    Attributes:
        model_config: Pydantic config, frozen and forbidding extra fields.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    @classmethod
    def from_args(cls: Type[ConfigT], args: argparse.Namespace) -> ConfigT:
        """Load and validate the configuration from parsed arguments.

        Only the arguments named like a field are used.

        Args:
            args: The parsed command line.

        Returns:
            The validated configuration.

        Raises:
            InvalidCliConfigError: If any field is invalid.
        """
        values = {name: value for name, value in vars(args).items() if name in cls.model_fields}
        try:
            return cls(**values)
        except ValidationError as exc:
            raise InvalidCliConfigError(format_validation_error(exc)) from exc


class ValidateTreeConfig(CommandConfig):
    """Configuration of validate-tree.

    Attributes:
        path: The tree file.
    """

    path: Path


class ColorOrEmbedConfig(CommandConfig):
    """Configuration of color-or-embed.

    Attributes:
        host: The host file.
        tree: The tree file.
        t: Palette size; inferred from the tree when None.
        root: Tree edge index used as e_1.
        trace: Whether to stream recolor events.
        out: Certificate output file.
    """

    host: Path
    tree: Path
    t: Optional[int] = None
    root: Optional[int] = None
    trace: bool = False
    out: Optional[Path] = None

    @field_validator("t", "root")
    def _validate_non_negative(  # noqa: N805
        cls, value: Optional[int]
    ) -> Optional[int]:
        """Validate that the value is not negative."""
        if value is not None and value < 0:
            raise ValueError(f"value must be non-negative instead of {value}")
        return value


class CheckCertificateConfig(CommandConfig):
    """Configuration of check-certificate.

    Attributes:
        host: The host file.
        tree: The tree file.
        cert: The certificate file.
        t: Palette size; inferred from the tree when None.
    """

    host: Path
    tree: Path
    cert: Path
    t: Optional[int] = None


class ChromaticConfig(CommandConfig):
    """Configuration of chromatic.

    Attributes:
        path: The hypergraph file.
        max_n: Largest vertex count the oracle accepts.
    """

    path: Path
    max_n: int = DEFAULT_MAX_VERTICES

    @field_validator("max_n")
    def _validate_cap(cls, value: int) -> int:  # noqa: N805
        """Validate that the cap is positive."""
        if value < 1:
            raise ValueError(f"cap must be positive instead of {value}")
        return value


class GenerateConfig(CommandConfig):
    """Configuration of generate.

    Attributes:
        family: The family tag.
        r: Uniformity.
        n: Vertex count.
        t: Edge count.
        k: Clique size.
        seed: Seed of tree-random.
        out: Output file; stdout when None.
    """

    family: Literal[
        "complete",
        "tight-gadget",
        "star-example",
        "ramsey-lower",
        "fano",
        "tree-path",
        "tree-star",
        "tree-random",
    ]
    r: Optional[int] = None
    n: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    out: Optional[Path] = None

    @model_validator(mode="after")
    def _validate_tree_parameters(self) -> GenerateConfig:
        """Validate that tree families have r and t."""
        if self.family in TREE_FAMILIES and (self.r is None or self.t is None):
            raise ValueError(f"family {self.family} needs parameters r, t")
        return self

    def comment(self) -> str:
        """Return the header comment describing the generated instance."""
        params = [f"{name}={getattr(self, name)}" for name in ("r", "n", "t", "k")]
        if self.family == "tree-random":
            params.append(f"seed={self.seed}")
        present = [param for param in params if not param.endswith("=None")]
        return " ".join([self.family, *present])


class RamseyConfig(CommandConfig):
    """Configuration of ramsey.

    Attributes:
        r: Uniformity.
        k: Clique size.
        t: Tree edge count.
        tree: Target tree file; the loose path when None.
        lower: Check the lower-bound construction instead of enumerating.
        slow: Raise the enumeration cap.
        workers: Worker processes of the enumeration.
    """

    r: int
    k: int
    t: int
    tree: Optional[Path] = None
    lower: bool = False
    slow: bool = False
    workers: int = 1

    @field_validator("r", "k")
    def _validate_at_least_two(cls, value: int) -> int:  # noqa: N805
        """Validate that the value is at least 2."""
        if value < 2:
            raise ValueError(f"value must be at least 2 instead of {value}")
        return value

    @field_validator("t", "workers")
    def _validate_positive(cls, value: int) -> int:  # noqa: N805
        """Validate that the value is positive."""
        if value < 1:
            raise ValueError(f"value must be positive instead of {value}")
        return value


def _emit(lines: Sequence[str]) -> None:
    for line in lines:
        print(line)


def _print_recolor(event: TraceEvent) -> None:
    if event.kind == "recolor":
        print(render_event(event))


def _load_tree(path: Path) -> RTree:
    """Read and recognize a tree file.

    Raises:
        OSError: If the file cannot be read.
        FileFormatError: If the file is malformed.
        InvalidTreeError: If the hypergraph is not an r-tree.
    """
    tree = read_hypergraph(path)
    recognized = recognize_rtree(tree)
    if isinstance(recognized, RejectionReason):
        raise InvalidTreeError(recognized.value)
    return recognized


def _resolve_t(tr: RTree, t: Optional[int]) -> int:
    if t is not None and t != tr.t:
        raise ParameterMismatchError(f"--t {t} does not match the tree's {tr.t} edges")
    return tr.t


def _load_instance(
    host_path: Path, tree_path_: Path, t: Optional[int]
) -> Tuple[Hypergraph, RTree, int]:
    """Read the host and tree files and check their parameters agree.

    Raises:
        OSError: If a file cannot be read.
        FileFormatError: If a file is malformed.
        InvalidTreeError: If the tree file is not an r-tree.
        ParameterMismatchError: If uniformities or t disagree.
    """
    host = read_hypergraph(host_path)
    tr = _load_tree(tree_path_)
    if host.r != tr.r:
        raise ParameterMismatchError(f"host is {host.r}-uniform but the tree is {tr.r}-uniform")
    return host, tr, _resolve_t(tr, t)


def cmd_validate_tree(config: ValidateTreeConfig) -> int:
    """Report whether a file holds an r-tree."""
    try:
        h = read_hypergraph(config.path)
    except (OSError, FileFormatError) as e:
        logger.error("Cannot read tree: %s", e)
        return EXIT_INPUT_ERROR

    try:
        recognized = recognize_rtree(h)
    except InvalidTreeError as e:
        logger.error("Not an r-tree: %s", e)
        print(str(e))
        return EXIT_FAILURE
    if isinstance(recognized, RejectionReason):
        print(recognized.value)
        return EXIT_FAILURE
    print(f"OK r={recognized.r} t={recognized.t}")
    return EXIT_OK


def cmd_color_or_embed(config: ColorOrEmbedConfig) -> int:
    """Produce a certificate for a host and tree, printing its kind and verdict."""
    try:
        host, tr, t = _load_instance(config.host, config.tree, config.t)
    except (OSError, FileFormatError, InvalidTreeError, ParameterMismatchError) as e:
        logger.error("Invalid input: %s", e)
        return EXIT_INPUT_ERROR

    trace = Trace(listener=_print_recolor if config.trace else None)
    try:
        cert = color_or_embed(host, tr, t, config.root, trace)
    except InvalidTreeError as e:
        logger.error("Invalid root choice: %s", e)
        return EXIT_INPUT_ERROR

    valid = validate_certificate(host, tr, t, cert)
    print(cert.kind.upper())
    print(f"valid={str(valid).lower()}")
    if config.out is not None:
        try:
            write_certificate(config.out, cert)
        except OSError as e:
            logger.error("Cannot write certificate: %s", e)
            return EXIT_INPUT_ERROR
    return EXIT_OK if valid else EXIT_FAILURE


def cmd_check_certificate(config: CheckCertificateConfig) -> int:
    """Re-validate a certificate file against its host and tree."""
    try:
        host, tr, t = _load_instance(config.host, config.tree, config.t)
        cert = read_certificate(config.cert)
    except (OSError, FileFormatError, InvalidTreeError, ParameterMismatchError) as e:
        logger.error("Invalid input: %s", e)
        return EXIT_INPUT_ERROR

    valid = validate_certificate(host, tr, t, cert)
    print(cert.kind.upper())
    print(f"valid={str(valid).lower()}")
    return EXIT_OK if valid else EXIT_FAILURE


def cmd_chromatic(config: ChromaticConfig) -> int:
    """Print the chromatic number and an optimal coloring."""
    try:
        h = read_hypergraph(config.path)
    except (OSError, FileFormatError) as e:
        logger.error("Cannot read hypergraph: %s", e)
        return EXIT_INPUT_ERROR

    budget = OracleBudget(max_vertices=config.max_n)
    try:
        chi = chromatic_number(h, budget)
        witness = is_k_colorable(h, chi, budget).witness
    except BudgetExceededError as e:
        logger.error("Oracle budget exceeded: %s", e)
        return EXIT_BUDGET

    print(chi)
    if witness is not None:
        print(" ".join(map(str, witness.colors)))
    return EXIT_OK


def _generated(config: GenerateConfig) -> Hypergraph:
    """Build the requested instance.

    Raises:
        InvalidHypergraphError: If the parameters violate the family's preconditions.
        InvalidTreeError: If the tree parameters are invalid.
        ValidationError: If the family parameters are missing.
    """
    r, t = config.r or 0, config.t or 0
    if config.family == "tree-path":
        return tree_path(r, t).tree
    if config.family == "tree-star":
        return tree_star(r, t).tree
    if config.family == "tree-random":
        return random_tree(r, t, config.seed).tree
    return NamedFamily(
        family=config.family, r=config.r, n=config.n, t=config.t, k=config.k
    ).build()


def cmd_generate(config: GenerateConfig) -> int:
    """Write a family member as a hypergraph file."""
    try:
        h = _generated(config)
    except ValidationError as e:
        logger.error("Invalid family parameters: %s", format_validation_error(e))
        return EXIT_INPUT_ERROR
    except (InvalidHypergraphError, InvalidTreeError) as e:
        logger.error("Invalid family parameters: %s", e)
        return EXIT_INPUT_ERROR

    text = serialize_hypergraph(h, [config.comment()])
    if config.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        config.out.write_text(text, encoding="utf-8")
    except OSError as e:
        logger.error("Cannot write %s: %s", config.out, e)
        return EXIT_INPUT_ERROR
    logger.info("Wrote %s to %s", config.comment(), config.out)
    return EXIT_OK


def cmd_ramsey(config: RamseyConfig) -> int:
    """Run the upper-bound enumeration or the lower-bound construction check."""
    if config.lower:
        try:
            lower = verify_lower(config.r, config.k, config.t)
        except (InvalidHypergraphError, InvalidTreeError) as e:
            logger.error("Invalid construction parameters: %s", e)
            return EXIT_INPUT_ERROR
        except BudgetExceededError as e:
            logger.error("Oracle budget exceeded: %s", e)
            return EXIT_BUDGET
        _emit(lower.records())
        return EXIT_OK if lower.red_clique_free and lower.tree_free else EXIT_FAILURE

    try:
        tr = _load_tree(config.tree) if config.tree else tree_path(config.r, config.t)
        upper = verify_upper(
            config.r, config.k, config.t, tr, allow_slow=config.slow, workers=config.workers
        )
    except (OSError, FileFormatError, InvalidTreeError, ParameterMismatchError) as e:
        logger.error("Invalid input: %s", e)
        return EXIT_INPUT_ERROR
    except BudgetExceededError as e:
        logger.error("Enumeration cap exceeded, pass --slow to raise it: %s", e)
        return EXIT_BUDGET
    _emit(upper.records())
    return EXIT_FAILURE if upper.failures else EXIT_OK


COMMANDS: Dict[str, Tuple[Type[CommandConfig], Callable[..., int]]] = {
    "validate-tree": (ValidateTreeConfig, cmd_validate_tree),
    "color-or-embed": (ColorOrEmbedConfig, cmd_color_or_embed),
    "check-certificate": (CheckCertificateConfig, cmd_check_certificate),
    "chromatic": (ChromaticConfig, cmd_chromatic),
    "generate": (GenerateConfig, cmd_generate),
    "ramsey": (RamseyConfig, cmd_ramsey),
}


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of all subcommands."""
    parser = argparse.ArgumentParser(
        prog="hypertree-coloring",
        description="Certifying hypergraph coloring and hypertree embedding.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="log level on stderr",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate-tree", help="check that a file holds an r-tree")
    validate.add_argument("path", type=Path)

    embed = sub.add_parser("color-or-embed", help="proper t-coloring or a copy of the tree")
    embed.add_argument("host", type=Path)
    embed.add_argument("tree", type=Path)
    embed.add_argument("--t", type=int, help="palette size, must equal the tree's edge count")
    embed.add_argument("--root", type=int, help="tree edge index used as the first edge")
    embed.add_argument("--trace", action="store_true", help="print recolor events")
    embed.add_argument("--out", type=Path, help="certificate output file")

    check = sub.add_parser("check-certificate", help="re-validate a certificate file")
    check.add_argument("host", type=Path)
    check.add_argument("tree", type=Path)
    check.add_argument("cert", type=Path)
    check.add_argument("--t", type=int, help="palette size, must equal the tree's edge count")

    chromatic = sub.add_parser("chromatic", help="exact chromatic number")
    chromatic.add_argument("path", type=Path)
    chromatic.add_argument("--max-n", type=int, default=DEFAULT_MAX_VERTICES)

    generate = sub.add_parser("generate", help="write a named family member")
    generate.add_argument("family")
    for name in ("r", "n", "t", "k"):
        generate.add_argument(f"--{name}", type=int)
    generate.add_argument("--seed", type=int, default=0)
    generate.add_argument("--out", type=Path, help="output file, stdout when omitted")

    ramsey = sub.add_parser("ramsey", help="Ramsey bound checks")
    for name in ("r", "k", "t"):
        ramsey.add_argument(f"--{name}", type=int, required=True)
    ramsey.add_argument("--tree", type=Path, help="target tree file, the loose path by default")
    ramsey.add_argument("--lower", action="store_true", help="check the lower-bound construction")
    ramsey.add_argument("--slow", action="store_true", help="allow up to 21 host edges")
    ramsey.add_argument("--workers", type=int, default=1)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run a subcommand and return its exit code.

    Args:
        argv: Command-line arguments without the program name; sys.argv when None.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR
    logging.basicConfig(
        level=args.log_level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )

    config_cls, handler = COMMANDS[args.command]
    try:
        config = config_cls.from_args(args)
    except InvalidCliConfigError as e:
        logger.error("Invalid configuration: %s", e)
        return EXIT_INPUT_ERROR
    return handler(config)


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
