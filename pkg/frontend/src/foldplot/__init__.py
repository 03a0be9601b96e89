"""foldplot: plots for multifold sweep CSV files.

Consumes only the CSV interface (four-column schema with a ``#`` metadata
block) and renders the two-panel layout: exact and leading-order log rho
curves on the left, relative error on the right.
"""

from .reader import EmptyInput, ParsedTable, SchemaError, read_table
from .render import FigureSpec, PANELS, render

__version__ = "0.1.0"

__all__ = [
    "EmptyInput",
    "FigureSpec",
    "PANELS",
    "ParsedTable",
    "SchemaError",
    "read_table",
    "render",
    "__version__",
]
