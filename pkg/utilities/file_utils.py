#!/usr/bin/env python3
"""
File utility functions for reading and writing JSON documents
"""

import json
import os
import tempfile

from utilities.errors import ProblemSpecError

# Largest integer a JSON consumer with double precision reads back exactly
EXACT_INT_LIMIT = 2**53


def default_serializer(obj):
    """
    Default serializer for JSON encoding of special types.

    Args:
        obj: Object to serialize

    Returns:
        Serialized representation of the object
    """
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    return str(obj)


def exact_ints(data):
    """
    Replace integers whose magnitude exceeds 2^53 by their decimal strings,
    recursively, so that they survive a round trip through any JSON reader.
    """
    if isinstance(data, bool):
        return data
    if isinstance(data, int):
        return str(data) if abs(data) > EXACT_INT_LIMIT else data
    if isinstance(data, dict):
        return {key: exact_ints(value) for key, value in data.items()}
    if isinstance(data, (list, tuple)):
        return [exact_ints(value) for value in data]
    return data


def dumps_canonical(data):
    """Compact, key-sorted JSON text (used for content hashes)."""
    return json.dumps(exact_ints(data), sort_keys=True, separators=(",", ":"),
                      default=default_serializer)


def write_json_to_file(data, file_path, indent=2, ensure_ascii=False, default=None):
    """
    Write data to a JSON file atomically: the document is written to a
    temporary file in the same directory and then moved over the target.

    Args:
        data: Data to write (will be serialized to JSON)
        file_path (str): Path to the output file
        indent (int): JSON indentation level (default: 2)
        ensure_ascii (bool): Whether to ensure ASCII encoding (default: False)
        default (callable): Custom serializer function (default: default_serializer)

    Returns:
        bool: True if successful

    Raises:
        OSError: If the file cannot be written
    """
    if default is None:
        default = default_serializer

    directory = os.path.dirname(os.path.abspath(file_path))
    fd, tmp_path = tempfile.mkstemp(prefix=".secoh-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as f:
            json.dump(exact_ints(data), f, ensure_ascii=ensure_ascii, indent=indent,
                      default=default)
            f.write("\n")
        os.replace(tmp_path, file_path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    return True


def parse_json_text(text):
    """
    Parse JSON text, turning syntax errors into ProblemSpecError with the
    line and column reported by the decoder.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ProblemSpecError(f"JSON syntax error: {e.msg}", line=e.lineno, column=e.colno)


def read_json_from_file(file_path):
    """
    Read data from a JSON file.

    Args:
        file_path (str): Path to the JSON file to read

    Returns:
        dict or list: Parsed JSON data

    Raises:
        ProblemSpecError: If the file cannot be read or parsed
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as file:
            text = file.read()
    except OSError as e:
        raise ProblemSpecError(f"Cannot read {file_path}: {e}")
    return parse_json_text(text)
