"""Graph text format and JSON report serialization.

Graph files::

    # comment lines start with '#'
    n 3
    0 1 3
    1 2 1
    0 2 1

The first non-comment line is ``n <count>``; each further line is
``u v m`` with ``0 <= u < v < n`` and ``m >= 1``. Blank lines are ignored.
"""

from __future__ import annotations

import json
import math

from multispec.multigraph import Multigraph

REAL_DIGITS = 12


class GraphFormatError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_graph(text: str) -> Multigraph:
    n = None
    mult: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise GraphFormatError(lineno, f"expected 'n <count>', got {line!r}")
            try:
                n = int(fields[1])
            except ValueError:
                raise GraphFormatError(lineno, f"bad vertex count {fields[1]!r}") from None
            if n < 0:
                raise GraphFormatError(lineno, "vertex count must be non-negative")
            continue
        if len(fields) != 3:
            raise GraphFormatError(lineno, f"expected 'u v m', got {line!r}")
        try:
            u, v, m = (int(x) for x in fields)
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer field in {line!r}") from None
        if u == v:
            raise GraphFormatError(lineno, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(lineno, f"vertex index out of range 0..{n - 1}")
        if u > v:
            raise GraphFormatError(lineno, f"pair must be written with u < v, got {u} {v}")
        if m < 1:
            raise GraphFormatError(lineno, f"multiplicity must be at least 1, got {m}")
        if (u, v) in mult:
            raise GraphFormatError(lineno, f"duplicate pair {u} {v}")
        mult[(u, v)] = m
    if n is None:
        raise GraphFormatError(0, "missing 'n <count>' header")
    return Multigraph(n, mult)


def render_graph(G: Multigraph) -> str:
    lines = [f"n {G.n}"]
    lines += [f"{u} {v} {m}" for (u, v), m in sorted(G.mult.items())]
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def clean_reals(obj):
    """Round every float to 12 significant digits; -0.0 and NaN handled for JSON."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if math.isnan(obj):
            return None
        r = float(f"{obj:.{REAL_DIGITS}g}")
        return 0.0 if r == 0 else r
    if isinstance(obj, dict):
        return {str(k): clean_reals(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [clean_reals(x) for x in obj]
    if hasattr(obj, "item"):
        return clean_reals(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dump_report(doc: dict) -> str:
    return json.dumps(clean_reals(doc), indent=2) + "\n"
