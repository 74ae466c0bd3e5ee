"""Time evolution commands (spacetime, expectation)."""

from typing import TYPE_CHECKING, Any, Dict

from cqca.core.csca import parse_automaton
from cqca.core.pauli import expectation_timeseries, parse_word
from cqca.core.spacetime import evolve_grid, render_ascii, render_pgm, render_rich, support_stats
from cqca.core.stabilizer_ent import from_word, stabilizer_expectation_timeseries
from cqca.data.models import CommandName, OutputFormat

from .automaton import AUTOMATON_ARGUMENT
from .base import ArgumentType, BaseCommand, CommandArgument, CommandDefinition

if TYPE_CHECKING:
    from ..main import CqcaCLI

STEPS_ARGUMENT = CommandArgument(
    "steps", ArgumentType.INT, description="Number of time steps T (default 20)", field="steps"
)


def word_argument(default: str) -> CommandArgument:
    return CommandArgument(
        "word",
        ArgumentType.PAULI_WORD,
        description=f"Pauli word, e.g. 'YXY' or '+1 -1:Z 0:Y 1:X' (default {default})",
        default=default,
        field="word",
    )


class SpacetimeCommand(BaseCommand):
    """Render the spacetime diagram of a single observable."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="spacetime",
            description="Evolve a Pauli word and write its spacetime diagram",
            arguments=[
                AUTOMATON_ARGUMENT,
                word_argument("Z"),
                STEPS_ARGUMENT,
                CommandArgument(
                    "format",
                    ArgumentType.STRING,
                    description="csv (support statistics), ascii or pgm",
                    choices=["csv", "ascii", "pgm"],
                    field="format",
                ),
            ],
            examples=[
                "spacetime --auto Gs --word Z --steps 8 --format ascii",
                "spacetime --auto F --word X --steps 128 --format pgm --out fractal.pgm",
            ],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.SPACETIME, self.all_arguments(), args)
        a = parse_automaton(config.automaton)
        grid = evolve_grid(a, parse_word(config.word or "Z"), config.steps)
        backend = cli.backend_operations
        if config.format == OutputFormat.ASCII:
            if config.out is None and cli.console.is_terminal:
                cli.console.print(render_rich(grid), end="")
            else:
                backend.emit_text(render_ascii(grid), config.out)
        elif config.format == OutputFormat.PGM:
            backend.emit_bytes(render_pgm(grid), config.out)
        else:
            rows = [
                (row.t, row.support_count, _blank(row.leftmost), _blank(row.rightmost))
                for row in support_stats(grid)
            ]
            backend.emit_csv(["t", "support_count", "leftmost", "rightmost"], rows, config.out)
        return 0


class ExpectationCommand(BaseCommand):
    """Expectation of an evolving observable in a product or stabilizer state."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="expectation",
            description="Expectation values of a^t(word) in a translation invariant product or stabilizer state",
            arguments=[
                AUTOMATON_ARGUMENT,
                word_argument("X"),
                STEPS_ARGUMENT,
                CommandArgument(
                    "bloch", ArgumentType.BLOCH, description="Bloch vector 'x,y,z' (default 0,0,1)", field="bloch"
                ),
                CommandArgument(
                    "stabilizer",
                    ArgumentType.PAULI_WORD,
                    description="Use the stabilizer state generated by this word instead of a product state",
                    field="stabilizer",
                ),
            ],
            examples=[
                "expectation --auto F --bloch 0.5,0,0 --word X --steps 12",
                "expectation --auto F --stabilizer YXY --word YXY --steps 8",
            ],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.EXPECTATION, self.all_arguments(), args)
        a = parse_automaton(config.automaton)
        word = parse_word(config.word or "X")
        if config.stabilizer is not None:
            values = stabilizer_expectation_timeseries(a, from_word(config.stabilizer), word, config.steps)
        else:
            values = expectation_timeseries(a, config.bloch, word, config.steps)
        rows = [(t, value.real, value.imag) for t, value in enumerate(values)]
        cli.backend_operations.emit_csv(["t", "re", "im"], rows, config.out)
        return 0


def _blank(value: Any) -> Any:
    return "" if value is None else value
