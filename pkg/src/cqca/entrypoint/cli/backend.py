"""Backend operations: run configuration and output writers."""

import logging
import os
from fractions import Fraction
from pathlib import Path
from typing import TYPE_CHECKING, Any, Dict, Iterable, List, Optional, Sequence

from cqca.data.models import CommandName, RunConfig

if TYPE_CHECKING:
    from rich.console import Console

    from .commands.base import CommandArgument

logger = logging.getLogger(__name__)

CSV_PRECISION = 12


def format_value(value: Any) -> str:
    """CSV cell text: floats with 12 significant digits, everything else via str."""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return f"{value + 0.0:.{CSV_PRECISION}g}"
    if isinstance(value, complex):
        raise TypeError("complex values must be split into real and imaginary columns")
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """Comma separated, header row first, LF line endings."""
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


class BackendOperations:
    """Configuration resolution and output handling with consistent messages."""

    def __init__(self, console: "Console"):
        self.console = console

    def _print_success(self, message: str) -> None:
        """Print success message."""
        self.console.print(f"[green]✓ {message}[/green]")

    def resolve_config(
        self, command: CommandName, arguments: List["CommandArgument"], parsed: Dict[str, Any]
    ) -> RunConfig:
        """Merge config file, environment defaults and flags into a RunConfig."""
        data: Dict[str, Any] = {}
        config_path = parsed.get("config")
        if config_path:
            path = Path(config_path)
            if not path.exists():
                raise ValueError(f"Config file '{config_path}' not found")
            # 只合并文件中写出的字段，未写出的字段仍可取环境变量缺省值
            data = RunConfig.from_yaml(path.read_text(encoding="utf-8")).model_dump(exclude_unset=True)
            logger.info(f"Loaded run configuration from {config_path}")
        data["command"] = command
        env_seed = os.getenv("CQCA_SEED")
        if "seed" not in data and env_seed is not None:
            try:
                data["seed"] = int(env_seed)
            except ValueError:
                raise ValueError(f"CQCA_SEED must be an integer, got '{env_seed}'")
        for arg in arguments:
            value = parsed.get(arg.name)
            if arg.field and value is not None:
                data[arg.field] = value
        return RunConfig(**data)

    def output_path(self, out: str) -> Path:
        """Relative paths are placed under CQCA_OUTPUT_DIR when it is set."""
        path = Path(out)
        output_dir = os.getenv("CQCA_OUTPUT_DIR")
        if output_dir and not path.is_absolute():
            path = Path(output_dir) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def emit_text(self, text: str, out: Optional[str]) -> None:
        """Write text to the output file, or verbatim to the console."""
        if out is None:
            self.console.out(text, end="", highlight=False)
            return
        path = self.output_path(out)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        self._print_success(f"Wrote {path}")

    def emit_csv(self, header: Sequence[str], rows: Iterable[Sequence[Any]], out: Optional[str]) -> None:
        """Write a CSV table."""
        self.emit_text(render_csv(header, rows), out)

    def emit_bytes(self, data: bytes, out: Optional[str]) -> None:
        """Binary outputs always need a file."""
        if out is None:
            raise ValueError("binary output requires --out")
        path = self.output_path(out)
        path.write_bytes(data)
        self._print_success(f"Wrote {path} ({len(data)} bytes)")
