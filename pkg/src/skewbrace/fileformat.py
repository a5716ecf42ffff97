"""The ``skb1`` brace file format and the ``ybe1`` export format.

skb1 layout::

    skb1
    <n>
    <n rows of the * table>
    <n rows of the o table>

Lines starting with ``#`` and blank lines are ignored.  Both tables must
have their identity at index 0; nothing is relabelled when reading.
"""
from __future__ import annotations

from .braces import Digroup
from .errors import NotAGroup, ParseError, ValidationError
from .groups import find_unit, make_group
from .ybe import YbeSolutionReport

FORMAT = "skb1"
YBE_FORMAT = "ybe1"


def _content_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_ints(lineno, line):
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(lineno, f"non-integer entry in {line!r}") from None


def parse_tables(text: str, header: str = FORMAT):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty file")
    lineno, first = lines[0]
    if first != header:
        raise ParseError(lineno, f"expected header {header!r}, got {first!r}")
    if len(lines) < 2:
        raise ParseError(lineno, "missing order line")
    lineno, line = lines[1]
    vals = _parse_ints(lineno, line)
    if len(vals) != 1 or vals[0] < 1:
        raise ParseError(lineno, "order must be one positive integer")
    n = vals[0]
    body = lines[2:]
    if len(body) != 2 * n:
        last = body[-1][0] if body else lineno
        raise ParseError(last, f"expected {2 * n} table rows, found {len(body)}")
    tables = ([], [])
    for k, (lineno, line) in enumerate(body):
        row = _parse_ints(lineno, line)
        if len(row) != n:
            raise ParseError(lineno, f"row has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ParseError(lineno, f"out-of-range entry {v}")
        tables[k // n].append(tuple(row))
    return tuple(tables[0]), tuple(tables[1])


def parse_brace_file(text: str) -> Digroup:
    """Parse skb1 text into a validated digroup (brace-ness is not checked)."""
    star, circ = parse_tables(text)
    groups = []
    for name, t in (("star", star), ("circ", circ)):
        unit = find_unit(t)
        if unit is None:
            raise ValidationError("not-a-group", f"{name}: no-unit")
        if unit != 0:
            raise ValidationError("identity-not-zero", f"{name} unit is {unit}")
        try:
            groups.append(make_group(t))
        except NotAGroup as exc:
            raise ValidationError("not-a-group", f"{name}: {exc.reason} {exc.witness}") from None
    return Digroup(*groups)


def _rows(table):
    return "".join(" ".join(str(v) for v in row) + "\n" for row in table)


def serialize_brace(d, comments=()) -> str:
    """skb1 text for a digroup or skew brace."""
    head = "".join(f"# {c}\n" for c in comments)
    return f"{head}{FORMAT}\n{d.order}\n{_rows(d.star.table)}{_rows(d.circ.table)}"


def read_brace_file(path) -> Digroup:
    with open(path, encoding="utf-8") as fh:
        return parse_brace_file(fh.read())


def write_brace_file(path, d, comments=()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_brace(d, comments))


def serialize_ybe(report: YbeSolutionReport) -> str:
    """ybe1 text: first components of r, then second components."""
    return (
        f"{YBE_FORMAT}\n{report.order}\n"
        f"{_rows(report.first_table())}{_rows(report.second_table())}"
    )


def parse_ybe(text: str):
    """Read ybe1 text back into the list of pairs r(x, y), row-major."""
    first, second = parse_tables(text, header=YBE_FORMAT)
    n = len(first)
    return n, [(first[x][y], second[x][y]) for x in range(n) for y in range(n)]
