# Standard library imports
import logging

# Local application/library specific imports
from poly import render_polynomial

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def render_generators(polys, names=None):
    """Render a list of polynomials in the input grammar."""
    return [render_polynomial(p, names) for p in polys]


def format_point(point):
    """
    Format a parameter assignment for tables and logs.

    Args:
        point (dict): Parameter name mapped to its text value.

    Returns:
        str: e.g. "t33=1, t52=-175/6".
    """
    return ", ".join(f"{name}={value}" for name, value in point.items())


def format_t_table(table_dict, dmax):
    """
    Format a T-table as a grid with rows i and columns d; "0" marks a
    vanishing entry and "*" a nonzero one.

    Args:
        table_dict (dict): {"i": {"d": "zero" | "nonzero"}} as in reports.
        dmax (int): Last degree column.

    Returns:
        str: The grid, one line per row.
    """
    header = "i\\d " + " ".join(f"{d:>2}" for d in range(1, dmax + 1))
    lines = [header]
    for i in sorted(table_dict, key=int):
        row = table_dict[i]
        cells = []
        for d in range(1, dmax + 1):
            value = row.get(str(d))
            cells.append(" ." if value is None else (" 0" if value == "zero" else " *"))
        lines.append(f"{i:>3} " + " ".join(cells))
    return "\n".join(lines)


def format_summary(document):
    """One-line summary of a report document for the console."""
    analysis = document["analysis"]
    return (
        f"{document['problem']['name']}: verdict={analysis['verdict']} "
        f"rt={analysis['rt']} rn={analysis['rn']} rt_gradient={analysis['rt_gradient']} "
        f"[{document['evidence_label']}, {document['semantics']}]"
    )


def format_mismatch(mismatch):
    """e.g. "reiffen-4-5: rt expected 2, got 3"."""
    return f"{mismatch.entry}: {mismatch.field} expected {mismatch.expected}, got {mismatch.got}"
