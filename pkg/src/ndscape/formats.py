"""Text formats: ``.ndl`` landscapes, ``.xndl`` extended landscapes, CSV tables.

``.ndl``: first line ``NDL 1 <N>``, then ``2**N`` lines holding the fitness of
genotype ``j`` on line ``j`` (0-based, after the header) in shortest
round-trip decimal form.

``.xndl``: first line ``XNDL 1 <k>``, then ``k`` embedded ``.ndl`` sections,
each preceded by a line with its line count. Components are listed in slice
order, lowest bits first.

Distribution CSV: header ``degree,weight`` and rows ``0..N``. Lines starting
with ``#`` are comments and are skipped on read.
"""

from __future__ import annotations

import io
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .core import Landscape
from .extension import ExtendedLandscape


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, source: str = "<input>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


def _open_text(src) -> tuple[str, str]:
    if isinstance(src, (str, Path)):
        return Path(src).read_text(), str(src)
    return src.read(), getattr(src, "name", "<stream>")


def _ndl_lines(landscape: Landscape) -> list[str]:
    return [f"NDL 1 {landscape.n_bits}"] + [repr(v) for v in landscape.fitness.tolist()]


def dumps_ndl(landscape: Landscape) -> str:
    return "\n".join(_ndl_lines(landscape)) + "\n"


def _parse_ndl(lines: list[str], offset: int, source: str) -> Landscape:
    if not lines:
        raise FormatError("empty landscape section", offset + 1, source)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "NDL" or head[1] != "1":
        raise FormatError(f"expected 'NDL 1 <N>', got {lines[0]!r}", offset + 1, source)
    try:
        n = int(head[2])
    except ValueError:
        raise FormatError(f"bad bit count {head[2]!r}", offset + 1, source) from None
    if not 1 <= n <= 30:
        raise FormatError(f"bit count {n} out of range", offset + 1, source)
    body = lines[1:]
    if len(body) != 1 << n:
        # first missing line, or first surplus line
        raise FormatError(
            f"expected {1 << n} fitness lines, found {len(body)}",
            offset + 2 + min(len(body), 1 << n),
            source,
        )
    try:
        fit = np.array([float(x) for x in body], dtype=np.float64)
    except ValueError:
        for j, x in enumerate(body):
            try:
                float(x)
            except ValueError:
                raise FormatError(f"not a number: {x!r}", offset + 2 + j, source) from None
        raise
    bad = np.flatnonzero(~np.isfinite(fit))
    if len(bad):
        raise FormatError(f"non-finite fitness {body[bad[0]]!r}", offset + 2 + int(bad[0]), source)
    return Landscape(n, fit)


def loads_ndl(text: str, source: str = "<input>") -> Landscape:
    lines = text.splitlines()
    return _parse_ndl(lines, 0, source)


def write_ndl(landscape: Landscape, dest) -> None:
    _write_text(dumps_ndl(landscape), dest)


def read_ndl(src) -> Landscape:
    text, name = _open_text(src)
    return loads_ndl(text, name)


def dumps_xndl(extended: ExtendedLandscape) -> str:
    out = [f"XNDL 1 {len(extended.components)}"]
    for comp in extended.components:
        lines = _ndl_lines(comp)
        out.append(str(len(lines)))
        out.extend(lines)
    return "\n".join(out) + "\n"


def loads_xndl(text: str, source: str = "<input>") -> ExtendedLandscape:
    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", 1, source)
    head = lines[0].split()
    if len(head) != 3 or head[0] != "XNDL" or head[1] != "1":
        raise FormatError(f"expected 'XNDL 1 <k>', got {lines[0]!r}", 1, source)
    try:
        k = int(head[2])
    except ValueError:
        raise FormatError(f"bad component count {head[2]!r}", 1, source) from None
    if k < 1:
        raise FormatError("at least one component is required", 1, source)
    pos = 1
    comps = []
    for _ in range(k):
        if pos >= len(lines):
            raise FormatError("missing component section", pos + 1, source)
        try:
            count = int(lines[pos])
        except ValueError:
            raise FormatError(f"expected a line count, got {lines[pos]!r}", pos + 1, source) from None
        section = lines[pos + 1:pos + 1 + count]
        if len(section) != count:
            raise FormatError("truncated component section", len(lines), source)
        comps.append(_parse_ndl(section, pos + 1, source))
        pos += 1 + count
    if pos != len(lines):
        raise FormatError("trailing content after last component", pos + 1, source)
    return ExtendedLandscape(tuple(comps))


def write_xndl(extended: ExtendedLandscape, dest) -> None:
    _write_text(dumps_xndl(extended), dest)


def read_xndl(src) -> ExtendedLandscape:
    text, name = _open_text(src)
    return loads_xndl(text, name)


def _write_text(text: str, dest) -> None:
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def header_line(version: str, seed, cmd: str) -> str:
    return f"# ndscape {version} seed={seed} cmd={cmd}"


def write_csv(dest, columns: Iterable[str], rows: Iterable[Iterable], header: str | None = None) -> None:
    buf = io.StringIO()
    if header is not None:
        buf.write(header + "\n")
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(v) for v in row) + "\n")
    _write_text(buf.getvalue(), dest)


def _fmt(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    if isinstance(v, np.integer):
        return str(int(v))
    return str(v)


def read_csv_rows(src) -> tuple[list[str], list[tuple[int, list[str]]]]:
    """Return the header fields and ``(line_number, fields)`` for each data row."""
    text, name = _open_text(src)
    header = None
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if header is None:
            header = fields
        else:
            if len(fields) != len(header):
                raise FormatError(
                    f"expected {len(header)} fields, got {len(fields)}", lineno, name
                )
            rows.append((lineno, fields))
    if header is None:
        raise FormatError("missing CSV header", 1, name)
    return header, rows


def read_distribution(src) -> np.ndarray:
    name = src if isinstance(src, (str, Path)) else getattr(src, "name", "<stream>")
    header, rows = read_csv_rows(src)
    if header != ["degree", "weight"]:
        raise FormatError(f"expected header 'degree,weight', got {','.join(header)!r}", None, str(name))
    weights = []
    for expected, (lineno, (deg, w)) in enumerate(rows):
        try:
            d = int(deg)
            val = float(w)
        except ValueError:
            raise FormatError(f"bad row {deg},{w}", lineno, str(name)) from None
        if d != expected:
            raise FormatError(f"expected degree {expected}, got {d}", lineno, str(name))
        if not np.isfinite(val) or val < 0:
            raise FormatError(f"weight must be finite and non-negative, got {w}", lineno, str(name))
        weights.append(val)
    if not weights:
        raise FormatError("distribution has no rows", None, str(name))
    return np.array(weights, dtype=np.float64)


def write_distribution(weights, dest, header: str | None = None) -> None:
    w = np.asarray(weights, dtype=np.float64)
    write_csv(dest, ["degree", "weight"], ((d, float(x)) for d, x in enumerate(w)), header)


def read_landscape_any(src: TextIO | str | Path) -> Landscape | ExtendedLandscape:
    """Read an ``.ndl`` or ``.xndl`` file, dispatching on the first token."""
    text, name = _open_text(src)
    if text.startswith("XNDL"):
        return loads_xndl(text, name)
    return loads_ndl(text, name)
