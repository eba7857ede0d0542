"""Subalgebra bases (Sagbi/Sasbi) over the rationals."""

from ._core import (
    Problem,
    CompletionResult,
    Representation,
    run_cli,
)

__all__ = ["Problem", "CompletionResult", "Representation", "run_cli"]
