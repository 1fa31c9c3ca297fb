"""Record serialization: CSV with a commented config header, or JSON."""

import json

import numpy as np


def format_value(value):
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    return str(value)


def _json_value(value):
    """Native JSON types where possible; numpy scalars are converted."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    return str(value)


def write_records(records, columns, header, path, fmt="csv"):
    """Write records to path; header is an ordered mapping echoed verbatim.

    CSV layout: '# key = value' lines, one column-name row, then data rows.
    UTF-8, '\\n' endings. JSON mirrors the same content as one object.
    """
    if fmt == "csv":
        lines = [f"# {key} = {format_value(value)}" for key, value in header.items()]
        lines.append(",".join(columns))
        for rec in records:
            lines.append(",".join(format_value(rec.get(col)) for col in columns))
        data = "\n".join(lines) + "\n"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(data)
    elif fmt == "json":
        doc = {
            "config": {k: _json_value(v) for k, v in header.items()},
            "columns": list(columns),
            "records": [{col: _json_value(rec.get(col)) for col in columns} for rec in records],
        }
        with open(path, "w", encoding="utf-8", newline="") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return path


def read_records(path):
    """Parse a CSV written by write_records; values come back as strings."""
    header = {}
    columns = None
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            if line.startswith("#"):
                key, _, value = line[1:].partition("=")
                header[key.strip()] = value.strip()
            elif columns is None:
                columns = line.split(",")
            elif line:
                records.append(dict(zip(columns, line.split(","))))
    return header, columns or [], records
