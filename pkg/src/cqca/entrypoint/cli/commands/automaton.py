"""Automaton commands (classify, glider, conjugate)."""

import logging
from typing import TYPE_CHECKING, Any, Dict

from cqca.core.csca import (
    STANDARD_GLIDER,
    classify,
    conjugator,
    conjugator_to_standard,
    format_matrix,
    glider_pair,
    parse_automaton,
    pow,
)
from cqca.core.errors import InvariantViolation
from cqca.core.symplectic import parse as parse_vector
from cqca.core.symplectic import wedge
from cqca.data.models import AutomatonKind, CommandName, GliderReport

from .base import ArgumentType, BaseCommand, CommandArgument, CommandDefinition

if TYPE_CHECKING:
    from ..main import CqcaCLI

logger = logging.getLogger(__name__)

AUTOMATON_ARGUMENT = CommandArgument(
    "auto",
    ArgumentType.AUTOMATON,
    description="Named automaton (Gs, G, F, H, P, P3, Gn:<n>, with optional ^k) or matrix '[[a;b];[c;d]]'",
    default="Gs",
    field="automaton",
)


class ClassifyCommand(BaseCommand):
    """Classify an automaton by its trace polynomial."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="classify",
            description="Classify an automaton as periodic, glider or fractal",
            arguments=[AUTOMATON_ARGUMENT],
            examples=["classify --auto Gs", "classify --auto F", "classify --auto '[[1;0];[u^-1+u;1]]'"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.CLASSIFY, self.all_arguments(), args)
        a = parse_automaton(config.automaton)
        result = classify(a)
        if result.kind == AutomatonKind.PERIODIC and result.period is not None:
            if not pow(a, result.period).is_identity():
                raise InvariantViolation(f"{a} does not have period {result.period}")
        if config.out:
            cli.backend_operations.emit_text(result.to_yaml(), config.out)
        else:
            cli.backend_operations.emit_text(result.summary() + "\n", None)
        return 0


class GliderCommand(BaseCommand):
    """Report the minimal glider of a glider automaton."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="glider",
            description="Show the minimal glider, its reflection and their wedge",
            arguments=[AUTOMATON_ARGUMENT],
            examples=["glider --auto Gs", "glider --auto G --out glider.yaml"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.GLIDER, self.all_arguments(), args)
        a = parse_automaton(config.automaton)
        xi, xi_bar, n = glider_pair(a)
        report = GliderReport(
            automaton=config.automaton,
            speed=n,
            glider=str(xi),
            conjugate=str(xi_bar),
            wedge=str(wedge(xi, xi_bar)),
        )
        cli.backend_operations.emit_text(report.to_yaml(), config.out)
        return 0


class ConjugateCommand(BaseCommand):
    """Solve b·ξ = η for a centered automaton b."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="conjugate",
            description="Find the automaton mapping a glider to (1 | u) or to a given target",
            arguments=[
                CommandArgument(
                    "xi", ArgumentType.PHASE_VECTOR, required=True, description="Glider '(p | m)'", field="xi"
                ),
                CommandArgument(
                    "target",
                    ArgumentType.PHASE_VECTOR,
                    description=f"Target vector (default {STANDARD_GLIDER})",
                    field="target",
                ),
            ],
            examples=["conjugate --xi '(1+u | u)'", "conjugate --xi '(1 | u+u^2)' --target '(1+u | u^2)'"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(
            CommandName.CONJUGATE, self.all_arguments(), args
        )
        if config.xi is None:
            raise ValueError(f"Usage: {self.get_usage()}")
        xi = parse_vector(config.xi)
        if config.target is None:
            b = conjugator_to_standard(xi)
        else:
            b = conjugator(xi, parse_vector(config.target))
        logger.info(f"Conjugator for {xi}: {b}")
        cli.backend_operations.emit_text(format_matrix(b) + "\n", config.out)
        return 0
