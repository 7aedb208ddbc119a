"""Define the configurable parameters for a CLI run."""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass, field, fields
from typing import Any, Literal, Mapping, Optional, Type, TypeVar

from goldman_turaev import constants

_ENVIRONMENT_FIELDS = {
    "genus": constants.ENV_GENUS,
    "seed": constants.ENV_SEED,
    "max_len": constants.ENV_MAX_LEN,
    "samples": constants.ENV_SAMPLES,
}


def _defaults_from_environment(environ: Mapping[str, str]) -> dict[str, Any]:
    defaults = {}
    for name, variable in _ENVIRONMENT_FIELDS.items():
        raw = environ.get(variable)
        if raw is None or raw == "":
            continue
        try:
            defaults[name] = int(raw)
        except ValueError:
            raise ValueError(f"{variable} must be an integer, got {raw!r}") from None
    return defaults


@dataclass(kw_only=True)
class RunConfig:
    """Configuration for one CLI invocation.

    Values come from command-line flags first, then from GOLDMAN_TURAEV_* environment
    variables, then from the defaults below.
    """

    genus: int = field(
        default=constants.DEFAULT_GENUS,
        metadata={"description": "Genus g of the surface; letters run over a1..ag, b1..bg."},
    )

    seed: int = field(
        default=constants.DEFAULT_SEED,
        metadata={"description": "Unsigned 64-bit seed for the randomized check suites."},
    )

    max_len: int = field(
        default=constants.DEFAULT_MAX_LEN,
        metadata={"description": "Longest word enumerated exhaustively by the check suites."},
    )

    samples: int = field(
        default=constants.DEFAULT_SAMPLES,
        metadata={"description": "Number of random draws per check suite."},
    )

    output: Literal["text", "json"] = field(
        default="text",
        metadata={"description": "Output format."},
    )

    wedge: bool = field(
        default=False,
        metadata={"description": "Print antisymmetric tensors once per pair as u∧v."},
    )

    raw: bool = field(
        default=False,
        metadata={"description": "Report the cobracket before the quotient by the trivial class."},
    )

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError(f"genus must be at least 1, got {self.genus}")
        if not 0 <= self.seed < constants.SEED_LIMIT:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.max_len < 1:
            raise ValueError(f"max-len must be at least 1, got {self.max_len}")
        if self.samples < 0:
            raise ValueError(f"samples must be non-negative, got {self.samples}")
        if self.output not in ("text", "json"):
            raise ValueError(f"Unknown output mode {self.output!r}")

    @classmethod
    def from_namespace(
        cls: Type[T],
        args: Optional[argparse.Namespace] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> T:
        """Create a RunConfig from parsed arguments, ignoring unset flags.

        Args:
            args (Optional[argparse.Namespace]): Parsed command-line arguments.
            environ (Optional[Mapping[str, str]]): Environment to read defaults from;
                the process environment when omitted.

        Returns:
            T: An instance of RunConfig.
        """
        configurable = _defaults_from_environment(os.environ if environ is None else environ)
        given = {k: v for k, v in vars(args or argparse.Namespace()).items() if v is not None}
        configurable.update(given)
        _fields = {f.name for f in fields(cls) if f.init}
        return cls(**{k: v for k, v in configurable.items() if k in _fields})


T = TypeVar("T", bound=RunConfig)
