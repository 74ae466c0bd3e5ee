"""Core CLI commands (help, automata)."""

from typing import TYPE_CHECKING, Any, Dict

from rich.markup import escape
from rich.table import Table

from cqca.core.csca import NAMED_AUTOMATA, classify, format_matrix

from .base import ArgumentType, BaseCommand, CommandArgument, CommandDefinition

if TYPE_CHECKING:
    from ..main import CqcaCLI


class HelpCommand(BaseCommand):
    """Show help for commands."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="help",
            description="Show available commands or help for a specific command",
            arguments=[
                CommandArgument(
                    "command",
                    ArgumentType.STRING,
                    description="Command to show help for",
                )
            ],
            examples=["help", "help --command stab-ent"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        command_name = args.get("command")
        if command_name:
            command = cli.command_registry.get_command(command_name)
            if command is None:
                self._print_error(cli, f"Unknown command: {command_name}")
                return 2
            definition = command.definition
            cli.console.print(f"[cyan]Usage:[/cyan] {escape(command.get_usage())}", highlight=False)
            cli.console.print(f"[cyan]Description:[/cyan] {definition.description}")
            if definition.examples:
                cli.console.print("[cyan]Examples:[/cyan]")
                for example in definition.examples:
                    cli.console.print(f"  cqca {example}", markup=False)
            return 0

        table = Table(title="Available Commands")
        table.add_column("Command", style="cyan")
        table.add_column("Description", style="white")
        for name, command in cli.command_registry.get_all_commands().items():
            table.add_row(name, command.definition.description)
        cli.console.print(table)
        cli.console.print("\nType 'cqca help --command <command>' for detailed help on a specific command.")
        return 0


class AutomataCommand(BaseCommand):
    """List the named automata with their classification."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="automata",
            description="List the named automata and their classes",
            arguments=[],
            examples=["automata"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        table = Table(title="Named Automata")
        table.add_column("Name", style="cyan")
        table.add_column("Matrix", style="white")
        table.add_column("Class", style="green")
        for name, a in NAMED_AUTOMATA.items():
            table.add_row(name, escape(format_matrix(a)), classify(a).summary())
        cli.console.print(table)
        return 0
