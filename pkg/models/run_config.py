from dataclasses import dataclass, replace
from typing import Optional

from config.settings import StringLinkSettings


@dataclass(frozen=True)
class RunConfig:
    """Resolved options of one CLI invocation: settings with the flags applied on top."""

    subcommand: Optional[str]
    output_format: str
    seed: int
    max_crossings: int
    input_path: Optional[str] = None

    @property
    def from_stdin(self) -> bool:
        return self.input_path == "-"

    @classmethod
    def from_settings(
        cls,
        settings: StringLinkSettings,
        subcommand: Optional[str] = None,
        output_format: Optional[str] = None,
        seed: Optional[int] = None,
        max_crossings: Optional[int] = None,
    ) -> "RunConfig":
        return cls(
            subcommand=subcommand,
            output_format=output_format or settings.output_format,
            seed=settings.seed if seed is None else seed,
            max_crossings=settings.max_crossings if max_crossings is None else max_crossings,
        )

    def with_input(self, path: str) -> "RunConfig":
        return replace(self, input_path=path)

    def with_limits(self, seed: Optional[int] = None, max_crossings: Optional[int] = None) -> "RunConfig":
        return replace(
            self,
            seed=self.seed if seed is None else seed,
            max_crossings=self.max_crossings if max_crossings is None else max_crossings,
        )
