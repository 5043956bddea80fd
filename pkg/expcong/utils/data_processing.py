# Data processing utilities for the Exponential Congruence Toolkit
#
# Function: parse_int_range(text)      - "lo..hi" or a single integer -> range
# Function: parse_complex(text)        - Python complex literal -> complex
# Function: validate_record(record)    - check an output dict against the JSON schema
# Function: to_json / to_csv / to_plain - render output records on stdout
import logging
from typing import Any, Dict, List, Sequence

import jsonschema
import pandas as pd

from ..models.output import OutputRecord
from .exceptions import DomainError

logger = logging.getLogger(__name__)

OUTPUT_RECORD_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "OutputRecord",
    "type": "object",
    "required": ["command", "inputs", "result", "paper_ref"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string", "minLength": 1},
        "inputs": {"type": "object"},
        "result": {"type": "object"},
        "paper_ref": {"type": "string", "minLength": 1},
    },
}

# Fields whose values are [re, im] pairs; CSV splits them into two columns
COMPLEX_FIELDS = ('s', 'partial_sum', 'product', 'series', 'completed')


def parse_int_range(text: str) -> range:
    """
    Parse an inclusive integer range

    Args:
        text (str): "lo..hi" or a single integer

    Returns:
        range: range(lo, hi + 1)
    """
    raw = text.strip()
    try:
        if '..' in raw:
            lo_text, hi_text = raw.split('..', 1)
            lo, hi = int(lo_text), int(hi_text)
        else:
            lo = hi = int(raw)
    except ValueError as e:
        raise DomainError(f"malformed range {text!r}; expected lo..hi or an integer") from e
    if lo > hi:
        raise DomainError(f"empty range {text!r}: {lo} > {hi}")
    return range(lo, hi + 1)


def parse_complex(text: str) -> complex:
    """Parse a Python complex literal such as 2, 1.5 or 1.5+0.5j"""
    try:
        return complex(text.strip().replace(' ', ''))
    except ValueError as e:
        raise DomainError(f"malformed complex number {text!r}") from e


def complex_pair(z: complex) -> List[float]:
    z = complex(z)
    return [z.real, z.imag]


def validate_record(record: Dict) -> None:
    """Raise jsonschema.ValidationError when the record breaks the output schema"""
    jsonschema.validate(instance=record, schema=OUTPUT_RECORD_SCHEMA)


def to_json(records: Sequence[OutputRecord]) -> str:
    """One JSON object per line, each validated against the schema"""
    lines = []
    for record in records:
        validate_record(record.to_dict())
        lines.append(record.to_json())
    return "\n".join(lines)


def _split_complex(row: Dict[str, Any]) -> Dict[str, Any]:
    flat = {}
    for key, value in row.items():
        name = key.rsplit('.', 1)[-1]
        if name in COMPLEX_FIELDS and isinstance(value, list) and len(value) == 2:
            flat[f"{key}_re"], flat[f"{key}_im"] = value
        else:
            flat[key] = value
    return flat


def records_frame(records: Sequence[OutputRecord]) -> pd.DataFrame:
    """Flatten records to one row each: inputs.* and result.* columns"""
    rows = []
    for record in records:
        validate_record(record.to_dict())
        flat = pd.json_normalize(record.to_dict(), max_level=None).iloc[0].to_dict()
        rows.append(_split_complex(flat))
    return pd.DataFrame(rows)


def rows_frame(rows: Sequence[Dict[str, Any]]) -> pd.DataFrame:
    """Table of plain result rows (scan, expsum and verify tables)"""
    return pd.DataFrame([_split_complex(pd.json_normalize(r).iloc[0].to_dict()) for r in rows])


def to_csv(records: Sequence[OutputRecord]) -> str:
    """Header row plus one line per record"""
    return records_frame(records).to_csv(index=False, lineterminator="\n").rstrip("\n")


def to_plain(records: Sequence[OutputRecord]) -> str:
    """Human-readable key: value blocks, one per record"""
    blocks = []
    for record in records:
        lines = [f"command: {record.command}"]
        lines += [f"{key}: {value}" for key, value in record.inputs.items()]
        for key, value in record.result.items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                lines.append(f"{key}:")
                lines.append(rows_frame(value).to_string(index=False))
            else:
                lines.append(f"{key}: {value}")
        lines.append(f"paper_ref: {record.provenance}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks)


def render(records: Sequence[OutputRecord], fmt: str) -> str:
    """Render records in json, csv or plain format"""
    logger.debug(f"rendering {len(records)} record(s) as {fmt}")
    if fmt == 'json':
        return to_json(records)
    if fmt == 'csv':
        return to_csv(records)
    if fmt == 'plain':
        return to_plain(records)
    raise DomainError(f"unknown output format {fmt!r}")
