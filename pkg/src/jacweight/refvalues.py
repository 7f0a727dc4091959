"""Published reference values for the bundled fixture pairs.

Each row names two fixture codes, a mask weight, and the decimal
string printed in the source table.  Row order follows the table.
The targets map gives the conjectured limits of the average
intersection numbers per mask weight.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "REFERENCE_ROWS",
    "reference_string",
    "CONJECTURE_TARGETS",
    "matches_reference",
]

# (code C, code D, mask weight, printed value)
REFERENCE_ROWS: tuple[tuple[str, str, int, str], ...] = (
    ("e8", "e8", 1, "4.8"),
    ("e8", "e8", 2, "6.4"),
    ("e8", "e8", 3, "9.6"),
    ("e8x2", "e8x2", 1, "5.90769230769"),
    ("d16plus", "d16plus", 1, "5.90769230769"),
    ("d16plus", "e8x2", 1, "5.90769230769"),
    ("d16plus", "d16plus", 2, "7.87692307692"),
    ("e8x2", "e8x2", 2, "7.87692307692"),
    ("d16plus", "e8x2", 2, "7.87692307692"),
    ("d16plus", "d16plus", 3, "11.8153846154"),
    ("e8x2", "e8x2", 3, "11.8153846154"),
    ("d16plus", "e8x2", 3, "11.8153846154"),
    ("g24", "g24", 1, "6.02048106692"),
    ("d24plus", "d24plus", 1, "6.08859978358"),
    ("g24", "d24plus", 1, "5.94427244582"),
    ("d24plus", "d24plus", 2, "8.11813304477"),
    ("g24", "g24", 2, "8.02730808923"),
    ("g24", "d24plus", 2, "7.92569659443"),
    ("d24plus", "d24plus", 3, "12.1771995672"),
    ("g24", "g24", 3, "12.0409962134"),
    ("g24", "d24plus", 3, "11.8885448916"),
    ("g24", "g24", 4, "20.0581090736"),
    ("g24", "g24", 5, "36.0720806541"),
)

_LOOKUP = {(c, d, wt): s for c, d, wt, s in REFERENCE_ROWS}

CONJECTURE_TARGETS: dict[int, int] = {1: 6, 2: 8, 3: 12, 4: 20, 5: 36}


def reference_string(code_c: str, code_d: str, mask_weight: int) -> str | None:
    """Printed value for a pair, or None when the table has no row."""
    return _LOOKUP.get((code_c, code_d, mask_weight))


def matches_reference(value: Fraction, printed: str) -> bool:
    """Whether an exact value agrees with a printed decimal.

    Agreement means the absolute difference is at most one unit in
    the last printed digit, so values the table rounded either way
    still match.
    """
    ref = Fraction(printed)
    if "." in printed:
        decimals = len(printed.split(".")[1])
    else:
        decimals = 0
    ulp = Fraction(1, 10**decimals)
    return abs(value - ref) <= ulp
