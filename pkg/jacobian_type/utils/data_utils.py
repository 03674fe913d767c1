# Standard library imports
import json
import logging
import os
import sys

# Related third-party imports
import jsonlines
import pandas as pd

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

SUMMARY_COLUMNS = ["point", "rn", "rt", "rt_gradient", "verdict", "status"]


def dump_json(document):
    """Serialize a report: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(document, path=None):
    """
    Write a report document to path, or to stdout when path is None or "-".

    Args:
        document (dict): JSON-serializable report.
        path (str, optional): Output file.
    """
    text = dump_json(document)
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as file:
        file.write(text)
    logger.info(f"Wrote report to {path}")


def write_jsonl(records, path):
    """
    Write one JSON object per line (corpus and sweep result streams).

    Args:
        records (Iterable[dict]): Records in output order.
        path (str): Output file, overwritten.
    """
    with jsonlines.open(path, mode="w") as writer:
        for record in records:
            writer.write(record)
    logger.info(f"Wrote results to {path}")


def read_jsonl(path):
    with jsonlines.open(path) as reader:
        return list(reader)


def read_points(path):
    """
    Read sweep parameter points from a CSV file.

    The header names the parameters; values stay text so that rationals
    such as -175/6 reach the field conversion unchanged.

    Args:
        path (str): CSV file.

    Returns:
        list[dict]: One {parameter: text} mapping per row.
    """
    df = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True)
    df.columns = [column.strip() for column in df.columns]
    points = [{key: value.strip() for key, value in row.items()} for row in df.to_dict("records")]
    logger.info(f"Read {len(points)} parameter points from {path}")
    return points


def summary_table(rows):
    """
    Aggregate per-point results into a DataFrame.

    Args:
        rows (list[dict]): Records with the SUMMARY_COLUMNS keys.

    Returns:
        pd.DataFrame: One row per point, in input order.
    """
    return pd.DataFrame(rows, columns=SUMMARY_COLUMNS)
