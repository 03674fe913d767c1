# Standard library imports
from itertools import combinations_with_replacement
import re

# Local application/library specific imports
from utils.validation_utils import UsageError


def multisets(size, k):
    """
    Return all k-element multisets of range(size) as sorted tuples.

    Args:
        size (int): Number of distinct items.
        k (int): Multiset cardinality.

    Returns:
        list[tuple]: The multisets, in lexicographic order.
    """
    return list(combinations_with_replacement(range(size), k))


def fresh_name(base, taken):
    """
    Return a variable name starting with base that is not in taken.

    Args:
        base (str): Preferred name.
        taken (Iterable[str]): Names already in use.

    Returns:
        str: base, or base followed by the first free numeric suffix.
    """
    taken = set(taken)
    if base not in taken:
        return base
    suffix = 1
    while f"{base}{suffix}" in taken:
        suffix += 1
    return f"{base}{suffix}"


def parse_index_ranges(text):
    """
    Parse T-table index lists such as "2:2-8" or "3:2, 3:5-6".

    Args:
        text (str): Comma separated "i:d" or "i:d1-d2" items.

    Returns:
        list[tuple]: The (i, d) pairs, in input order.
    """
    pairs = []
    for item in filter(None, (part.strip() for part in text.split(","))):
        match = re.fullmatch(r"(\d+)\s*:\s*(\d+)(?:\s*-\s*(\d+))?", item)
        if not match:
            raise UsageError(f"bad index range: {item!r}")
        i, start = int(match.group(1)), int(match.group(2))
        stop = int(match.group(3)) if match.group(3) else start
        if stop < start:
            raise UsageError(f"empty index range: {item!r}")
        pairs.extend((i, d) for d in range(start, stop + 1))
    return pairs


def split_list(text):
    """Split a comma separated list, dropping blanks."""
    return [part.strip() for part in text.split(",") if part.strip()]
