"""Base classes for CLI commands."""

import argparse
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, List, Optional

from rich.markup import escape

from cqca.data.models import ProductState

if TYPE_CHECKING:
    from ..main import CqcaCLI


class ArgumentType(Enum):
    """Types of command arguments for validation and parsing."""

    STRING = "string"
    FILE_PATH = "file_path"
    AUTOMATON = "automaton"
    PAULI_WORD = "pauli_word"
    PHASE_VECTOR = "phase_vector"
    BLOCH = "bloch"
    FLOAT = "float"
    INT = "int"
    INT_LIST = "int_list"
    FLAG = "flag"


@dataclass
class CommandArgument:
    """Definition of a command flag. `field` names the RunConfig field it fills."""

    name: str
    type: ArgumentType
    required: bool = False
    description: str = ""
    choices: Optional[List[str]] = None
    default: Any = None
    field: Optional[str] = None

    @property
    def flag(self) -> str:
        return f"--{self.name}"


@dataclass
class CommandDefinition:
    """Metadata definition for a command."""

    name: str
    description: str
    arguments: List[CommandArgument]
    examples: List[str]


COMMON_ARGUMENTS = [
    CommandArgument("config", ArgumentType.FILE_PATH, description="YAML run configuration; flags override it"),
    CommandArgument("out", ArgumentType.FILE_PATH, description="Output file (default: stdout)", field="out"),
    CommandArgument("seed", ArgumentType.INT, description="Seed for random sampling", field="seed"),
]


class BaseCommand(ABC):
    """Base class for all CLI commands."""

    @property
    @abstractmethod
    def definition(self) -> CommandDefinition:
        """Command definition with metadata."""
        pass

    @abstractmethod
    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        """Execute the command and return the process exit code."""
        pass

    def all_arguments(self) -> List[CommandArgument]:
        """Command flags followed by the flags every command accepts."""
        return self.definition.arguments + COMMON_ARGUMENTS

    def add_to_parser(
        self, subparsers: "argparse._SubParsersAction[argparse.ArgumentParser]", parent: argparse.ArgumentParser
    ) -> None:
        """Register this command as an argparse subcommand."""
        definition = self.definition
        parser = subparsers.add_parser(
            definition.name, help=definition.description, description=definition.description, parents=[parent]
        )
        for arg in definition.arguments:
            if arg.type == ArgumentType.FLAG:
                parser.add_argument(arg.flag, dest=arg.name, action="store_true", help=arg.description)
            else:
                parser.add_argument(arg.flag, dest=arg.name, default=None, help=arg.description)

    def validate_args(self, raw: Dict[str, Any], from_config: bool = False) -> Dict[str, Any]:
        """Validate and parse arguments. Required flags may come from a config file instead."""
        parsed: Dict[str, Any] = {}
        for arg_def in self.all_arguments():
            value = raw.get(arg_def.name)
            if value is None or value is False:
                if arg_def.required and not from_config:
                    raise ValueError(f"Usage: {self.get_usage()}")
                parsed[arg_def.name] = None if arg_def.type != ArgumentType.FLAG else False
                continue
            parsed[arg_def.name] = self._parse_argument(value, arg_def)
        return parsed

    def _parse_argument(self, value: Any, arg_def: CommandArgument) -> Any:
        """Parse a single argument based on its type."""
        if arg_def.type == ArgumentType.FLAG:
            return bool(value)
        if arg_def.type == ArgumentType.FLOAT:
            try:
                return float(value)
            except ValueError:
                raise ValueError(f"'{value}' is not a valid float for {arg_def.name}")
        elif arg_def.type == ArgumentType.INT:
            try:
                return int(value)
            except ValueError:
                raise ValueError(f"'{value}' is not a valid integer for {arg_def.name}")
        elif arg_def.type == ArgumentType.INT_LIST:
            try:
                return [int(item) for item in str(value).split(",")]
            except ValueError:
                raise ValueError(f"'{value}' is not a comma separated list of integers for {arg_def.name}")
        elif arg_def.type == ArgumentType.BLOCH:
            return ProductState.from_text(value)
        elif arg_def.choices and value not in arg_def.choices:
            raise ValueError(f"'{value}' must be one of: {', '.join(arg_def.choices)}")
        return value

    def get_usage(self) -> str:
        """Generate usage string."""
        parts = [f"cqca {self.definition.name}"]
        for arg in self.definition.arguments:
            token = arg.flag if arg.type == ArgumentType.FLAG else f"{arg.flag} <{arg.name}>"
            parts.append(token if arg.required else f"[{token}]")
        return " ".join(parts)

    def _print_error(self, cli: "CqcaCLI", message: str) -> None:
        """Print error message."""
        cli.console.print(f"[red]Error: {escape(message)}[/red]")
