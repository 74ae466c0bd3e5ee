"""Entanglement commands (stab-ent, qf-ent)."""

import logging
from typing import TYPE_CHECKING, Any, Dict

import numpy as np

from cqca.core.csca import parse_automaton
from cqca.core.quasifree import entropy_timeseries, spectrum_timeseries
from cqca.core.stabilizer_ent import entanglement_rows, from_word, random_generator
from cqca.data.models import CommandName

from .automaton import AUTOMATON_ARGUMENT
from .base import ArgumentType, BaseCommand, CommandArgument, CommandDefinition
from .evolution import STEPS_ARGUMENT, word_argument

if TYPE_CHECKING:
    from ..main import CqcaCLI

logger = logging.getLogger(__name__)

RANDOM_WORD = "random"
RANDOM_MAX_HALF_LENGTH = 4


class StabEntCommand(BaseCommand):
    """Entanglement of an evolving translation invariant stabilizer state."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="stab-ent",
            description="Entanglement timeseries of a pure stabilizer state (qubit pairs)",
            arguments=[
                AUTOMATON_ARGUMENT,
                word_argument("YXY"),
                STEPS_ARGUMENT,
                CommandArgument(
                    "window",
                    ArgumentType.INT_LIST,
                    description="Also report finite regions of L sites, comma separated (e.g. 10,30)",
                    field="regions",
                ),
            ],
            examples=[
                "stab-ent --auto G --word YXY --steps 20",
                "stab-ent --auto G --word YXXXXXY --steps 30 --window 30",
                "stab-ent --auto F --word YXXXXXY --steps 30 --window 10,30",
                "stab-ent --auto F --word random --seed 7",
            ],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.STAB_ENT, self.all_arguments(), args)
        a = parse_automaton(config.automaton)
        word = config.word or "YXY"
        if word == RANDOM_WORD:
            generator = random_generator(np.random.default_rng(config.seed), RANDOM_MAX_HALF_LENGTH)
            logger.info(f"Sampled stabilizer generator {generator.xi} (seed {config.seed})")
        else:
            generator = from_word(word)
        windows = config.region_lengths()
        rows = entanglement_rows(a, generator.xi, config.steps, windows)
        header = ["t", "n", "E_bipartite"] + [f"E_region({L})" for L in windows]
        table = [[row.t, row.n, row.e_bipartite] + [row.e_region[L] for L in windows] for row in rows]
        cli.backend_operations.emit_csv(header, table, config.out)
        return 0


class QfEntCommand(BaseCommand):
    """Entanglement entropy of the quasifree family under the glider shift."""

    @property
    def definition(self) -> CommandDefinition:
        return CommandDefinition(
            name="qf-ent",
            description="Entropy S(t) of an L-site window of the quasifree state omega_A",
            arguments=[
                CommandArgument("A", ArgumentType.FLOAT, description="Family parameter A in [0, 1]", field="amplitude"),
                CommandArgument(
                    "window", ArgumentType.INT, required=True, description="Window length L", field="window"
                ),
                STEPS_ARGUMENT,
                CommandArgument(
                    "spectrum", ArgumentType.FLAG, description="Write the two-point eigenvalues instead of S"
                ),
            ],
            examples=["qf-ent --A 0 --window 60 --steps 40", "qf-ent --A 0.9 --window 60 --steps 40 --out s.csv"],
        )

    def execute(self, args: Dict[str, Any], cli: "CqcaCLI") -> int:
        config = cli.backend_operations.resolve_config(CommandName.QF_ENT, self.all_arguments(), args)
        assert config.window is not None
        if args.get("spectrum"):
            spectra = spectrum_timeseries(config.amplitude, config.window, config.steps)
            rows = [(t, i, float(value)) for t, values in enumerate(spectra) for i, value in enumerate(values)]
            cli.backend_operations.emit_csv(["t", "index", "lambda"], rows, config.out)
            return 0
        series = entropy_timeseries(config.amplitude, config.window, config.steps)
        cli.backend_operations.emit_csv(["t", "S"], enumerate(series), config.out)
        return 0
