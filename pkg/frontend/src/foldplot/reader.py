"""Lossless reader for the sweep CSV schema.

The parsed table keeps the original header and row text verbatim so a
dump round-trips byte-identically; floats are derived views for plotting.
"""

from __future__ import annotations

from dataclasses import dataclass

EXPECTED_HEADER = "t,log_rho_exact,log_rho_leading,rel_error"


class SchemaError(Exception):
    """The file does not carry the four-column sweep schema."""


class EmptyInput(Exception):
    """No data rows to plot."""


@dataclass(frozen=True)
class ParsedTable:
    metadata: tuple        # (key, value) pairs from the '#' block
    header: str            # verbatim header line
    raw_rows: tuple        # verbatim data lines
    columns: dict          # column name -> list[float]

    def dump(self) -> str:
        """The table exactly as read: header plus rows, LF endings."""
        return "\n".join((self.header, *self.raw_rows)) + "\n"

    def label(self) -> str:
        meta = dict(self.metadata)
        return meta.get("scenario", meta.get("kind", "sweep"))


def read_table(path: str) -> ParsedTable:
    """Parse a sweep CSV; raises SchemaError / EmptyInput accordingly."""
    with open(path, encoding="utf-8", newline="") as f:
        text = f.read()
    metadata = []
    header = None
    raw_rows = []
    for line in text.splitlines():
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line.lstrip("#").strip()
            if "=" in body:
                key, value = body.split("=", 1)
                metadata.append((key.strip(), value.strip()))
            continue
        if header is None:
            header = line
            continue
        raw_rows.append(line)
    if header is None:
        raise EmptyInput(f"{path}: no table found")
    if header != EXPECTED_HEADER:
        raise SchemaError(
            f"{path}: header {header!r} does not match {EXPECTED_HEADER!r}"
        )
    if not raw_rows:
        raise EmptyInput(f"{path}: table has no rows")

    names = header.split(",")
    columns = {name: [] for name in names}
    for lineno, row in enumerate(raw_rows, 1):
        fields = row.split(",")
        if len(fields) != len(names):
            raise SchemaError(f"{path}: row {lineno} has {len(fields)} fields")
        for name, field in zip(names, fields):
            try:
                columns[name].append(float(field))
            except ValueError as exc:
                raise SchemaError(f"{path}: row {lineno}: {exc}") from exc
    return ParsedTable(tuple(metadata), header, tuple(raw_rows), columns)
