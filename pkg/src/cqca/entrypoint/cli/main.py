import argparse
import logging
import os
import sys
from typing import List, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from cqca.core.errors import InvariantViolation

from .backend import BackendOperations
from .commands import CommandRegistry

# Set up logger
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_INVARIANT_VIOLATION = 3
LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR"]


def configure_logging(level: Optional[str]) -> None:
    """Configure the root logger once with a rich handler."""
    name = (level or os.getenv("CQCA_LOG_LEVEL") or "WARNING").upper()
    if name not in LOG_LEVELS:
        raise ValueError(f"Unknown log level '{name}', expected one of: {', '.join(LOG_LEVELS)}")
    logging.basicConfig(
        level=name,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
        force=True,
    )


class CqcaCLI:
    """Command line front end for the CQCA toolkit."""

    def __init__(self, console: Optional[Console] = None) -> None:
        self.console = console or Console()
        self.command_registry = CommandRegistry()
        self.backend_operations = BackendOperations(self.console)

    def build_parser(self) -> argparse.ArgumentParser:
        """One argparse subcommand per registered command."""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--config", default=None, help="YAML run configuration; flags override it")
        common.add_argument("--out", default=None, help="Output file (default: stdout)")
        common.add_argument("--seed", default=None, help="Seed for random sampling (default: CQCA_SEED or 0)")
        common.add_argument(
            "--log-level", dest="log_level", default=None, help="Log level (default: CQCA_LOG_LEVEL or WARNING)"
        )

        parser = argparse.ArgumentParser(
            prog="cqca", description="cqca - Clifford quantum cellular automata toolkit"
        )
        subparsers = parser.add_subparsers(dest="subcommand", metavar="<command>")
        for command in self.command_registry.get_all_commands().values():
            command.add_to_parser(subparsers, common)
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse arguments, run one command and map errors to exit codes."""
        parser = self.build_parser()
        namespace = parser.parse_args(argv)
        raw = vars(namespace)
        command_name = raw.pop("subcommand", None) or "help"

        try:
            configure_logging(raw.pop("log_level", None))
        except ValueError as e:
            self.console.print(f"[red]Error: {escape(str(e))}[/red]", highlight=False)
            return EXIT_INVALID_INPUT

        command = self.command_registry.get_command(command_name)
        if command is None:
            self.console.print(f"[red]Unknown command: {command_name}[/red]")
            self.console.print("Type 'cqca help' for available commands.")
            return EXIT_INVALID_INPUT

        try:
            args = command.validate_args(raw, from_config=bool(raw.get("config")))
            return command.execute(args, self)
        except InvariantViolation as e:
            self.console.print(f"[red]Error: {escape(str(e))}[/red]", highlight=False)
            logger.exception(f"Invariant violated in command {command_name}")
            return EXIT_INVARIANT_VIOLATION
        except (ValueError, ZeroDivisionError) as e:
            self.console.print(f"[red]Error: {escape(str(e))}[/red]", highlight=False)
            logger.debug(f"Invalid input for command {command_name}", exc_info=True)
            return EXIT_INVALID_INPUT


def main() -> None:
    """Main entry point for the CLI."""
    # Load environment variables from .env file
    load_dotenv()
    sys.exit(CqcaCLI().run())


if __name__ == "__main__":
    main()
