"""Plain-text edge list format.

First non-comment line is ``n m``; the following m lines are ``u v`` with
u < v, sorted lexicographically.  Lines starting with ``#`` and blank lines
are ignored.  This is the interchange format for every CLI subcommand, so
writers always emit the canonical sorted form, and readers reject anything
structurally off (wrong counts, bad labels) with the line number.
"""

from .graphs import build_graph

__all__ = ["read_edgelist", "write_edgelist", "loads_edgelist", "dumps_edgelist"]


def dumps_edgelist(g):
    lines = ["%d %d" % (g.n, g.m)]
    lines.extend("%d %d" % (u, v) for u, v in g.edge_array())
    return "\n".join(lines) + "\n"


def write_edgelist(g, path):
    with open(path, "w") as fh:
        fh.write(dumps_edgelist(g))


def _parse_ints(text, lineno, want):
    parts = text.split()
    if len(parts) != want:
        raise ValueError("line %d: expected %d integers, got %r"
                         % (lineno, want, text.strip()))
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ValueError("line %d: non-integer token in %r"
                         % (lineno, text.strip())) from None


def loads_edgelist(text):
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_ints(line, lineno, 2)
            if header[0] < 0 or header[1] < 0:
                raise ValueError("line %d: negative counts in header" % lineno)
            continue
        edges.append(_parse_ints(line, lineno, 2))
    if header is None:
        raise ValueError("no header line 'n m' found")
    n, m = header
    if len(edges) != m:
        raise ValueError("header says %d edges but file has %d" % (m, len(edges)))
    g = build_graph(n, edges)
    if g.m != m:
        raise ValueError("edge list contains duplicates (%d unique of %d)"
                         % (g.m, m))
    return g


def read_edgelist(path):
    with open(path) as fh:
        return loads_edgelist(fh.read())
