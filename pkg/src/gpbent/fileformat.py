"""Line-oriented function files and JSON reports.

A function file looks like::

    # f(x, y) = I(x) + I(y) + x + y over Z_4
    N=4 n=2
    table: 0 2 2 0 2 0 0 2
           2 0 0 2 0 2 2 0

or, instead of a table, a generator line such as ``gen: affine t=1,3 c=2``,
``gen: quadratic_form Q=0,1;0,0``, ``gen: random seed=7``,
``gen: product_bent`` or ``gen: example_2_1``.  Table entries are listed in
little-endian index order (the first coordinate varies fastest).  ``#``
starts a comment.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .corpus import FAMILIES, GeneratorSpec
from .cyclotomic import CycInt
from .transforms import LogicFunction

_HEADER = re.compile(r"^N\s*=\s*(\d+)\s+n\s*=\s*(\d+)$")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class FunctionFile:
    N: int
    n: int
    table: list[int] | None = None
    generator: GeneratorSpec | None = None

    def function(self) -> LogicFunction:
        if self.table is not None:
            return LogicFunction(self.N, self.n, self.table)
        return self.generator.build()


def _int_list(text: str, line: int) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(line, f"expected comma-separated integers, got {text!r}") from None


def _parse_gen(body: str, N: int, n: int, line: int) -> GeneratorSpec:
    parts = body.split()
    if not parts:
        raise ParseError(line, "generator family missing")
    family, params = parts[0], {}
    if family not in FAMILIES:
        raise ParseError(line, f"unknown family {family!r}")
    for item in parts[1:]:
        key, sep, value = item.partition("=")
        if not sep:
            raise ParseError(line, f"expected key=value, got {item!r}")
        if key == "t":
            params["t"] = _int_list(value, line)
        elif key in ("c", "seed"):
            try:
                params[key] = int(value)
            except ValueError:
                raise ParseError(line, f"{key} must be an integer") from None
        elif key == "Q":
            params["Q"] = [_int_list(row, line) for row in value.split(";")]
        else:
            raise ParseError(line, f"unknown parameter {key!r}")
    try:
        spec = GeneratorSpec(family, N, n, params)
        spec.build()
    except ValueError as exc:
        raise ParseError(line, str(exc)) from None
    return spec


def parse_function_file(text: str) -> FunctionFile:
    header = None
    table: list[int] | None = None
    table_line = 0
    generator = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(lineno, "expected header 'N=<int> n=<int>'")
            header = (int(m.group(1)), int(m.group(2)))
            if header[0] < 2:
                raise ParseError(lineno, "N must be at least 2")
            continue
        N, n = header
        if line.startswith("table:"):
            if table is not None or generator is not None:
                raise ParseError(lineno, "function body given twice")
            table, table_line = [], lineno
            line = line[len("table:"):]
        elif line.startswith("gen:"):
            if table is not None or generator is not None:
                raise ParseError(lineno, "function body given twice")
            generator = _parse_gen(line[len("gen:"):], N, n, lineno)
            continue
        elif table is None:
            raise ParseError(lineno, "expected 'table:' or 'gen:'")
        for tok in line.split():
            try:
                v = int(tok)
            except ValueError:
                raise ParseError(lineno, f"bad table entry {tok!r}") from None
            if not 0 <= v < N:
                raise ParseError(lineno, f"table entry {v} outside [0, {N})")
            table.append(v)
    if header is None:
        raise ParseError(1, "missing header")
    N, n = header
    if table is None and generator is None:
        raise ParseError(len(text.splitlines()) or 1, "missing 'table:' or 'gen:' line")
    if table is not None and len(table) != N**n:
        raise ParseError(table_line, f"table has {len(table)} entries, expected {N**n}")
    return FunctionFile(N, n, table, generator)


def format_function_file(f: LogicFunction) -> str:
    return f"N={f.N} n={f.n}\ntable: {' '.join(map(str, f.table.tolist()))}\n"


# -- reports -------------------------------------------------------------------


def _clean(x: float) -> float:
    x = round(x, 12)
    return 0.0 if x == 0 else x


def cyc_to_json(value: CycInt, scale: int = 1) -> dict:
    """Exact coefficients plus an approximate rendering of ``value / scale``."""
    z = value.to_complex() / scale
    return {"exact": list(value.coeffs), "scale": scale, "approx": [_clean(z.real), _clean(z.imag)]}


def cyc_from_json(N: int, obj: dict) -> CycInt:
    return CycInt(N, tuple(obj["exact"]))


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def loads_report(text: str) -> dict:
    return json.loads(text)
