"""Line-oriented file formats and DOT export.

Graph files::

    graph <name> undirected|directed
    node <id>          # optional, for isolated vertices / fixing order
    edge <u> <v>

Gadget files::

    gadget <kind> <w|->
    p <id> <role> <args...>
    q <id> <role> <args...>
    edge <p-id> <q-id>
    sat <p-id> <q-id>

Roles are ``copy <u> <j>``, ``edgenode <u> <v> <j>`` or ``residual <u> <j>``.
Vertex ids are whitespace-free tokens.  Blank lines and ``#`` comments are
ignored.
"""

from __future__ import annotations

from .graphs import Dag, GraphError, UndirectedGraph
from .reductions import BipartiteGadget


class ParseError(ValueError):
    def __init__(self, message, line_no):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _lines(text):
    # '#' opens a comment only at line start or after whitespace; vertex ids
    # such as 'c#1' keep their hash marks.
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        for marker in (" #", "\t#"):
            line = line.split(marker, 1)[0]
        if line:
            yield no, line.split()


def parse_graph(text):
    """Parse a graph file; returns (name, UndirectedGraph | Dag)."""
    name = None
    directed = None
    vertices = []
    edges = []
    for no, tok in _lines(text):
        if tok[0] == "graph":
            if len(tok) != 3 or tok[2] not in ("undirected", "directed"):
                raise ParseError("expected 'graph <name> undirected|directed'", no)
            if name is not None:
                raise ParseError("duplicate graph header", no)
            name, directed = tok[1], tok[2] == "directed"
        elif tok[0] == "node":
            if name is None:
                raise ParseError("node before graph header", no)
            if len(tok) != 2:
                raise ParseError("expected 'node <id>'", no)
            vertices.append(tok[1])
        elif tok[0] == "edge":
            if name is None:
                raise ParseError("edge before graph header", no)
            if len(tok) != 3:
                raise ParseError("expected 'edge <u> <v>'", no)
            edges.append((tok[1], tok[2]))
        else:
            raise ParseError(f"unknown directive {tok[0]!r}", no)
    if name is None:
        raise ParseError("missing graph header", 1)
    try:
        g = Dag(vertices, edges) if directed else UndirectedGraph(vertices, edges)
    except GraphError as exc:
        raise ParseError(str(exc), 1) from exc
    return name, g


def write_graph(name, g):
    directed = isinstance(g, Dag)
    out = [f"graph {name} {'directed' if directed else 'undirected'}"]
    out.extend(f"node {v}" for v in g.vertices)
    pairs = g.arcs() if directed else g.edges()
    out.extend(f"edge {u} {v}" for u, v in pairs)
    return "\n".join(out) + "\n"


def _role_fields(role):
    tag = role[0]
    if tag == "copy":
        return ["copy", str(role[1]), str(role[2])]
    if tag == "edge":
        (u, v), j = role[1], role[2]
        return ["edgenode", str(u), str(v), str(j)]
    if tag == "residual":
        return ["residual", str(role[1]), str(role[2])]
    raise GraphError(f"unknown role {role!r}")


def _parse_role(tok, no):
    if tok[0] == "copy" and len(tok) == 3:
        return ("copy", tok[1], int(tok[2]))
    if tok[0] == "edgenode" and len(tok) == 4:
        return ("edge", (tok[1], tok[2]), int(tok[3]))
    if tok[0] == "residual" and len(tok) == 3:
        return ("residual", tok[1], int(tok[2]))
    raise ParseError(f"malformed role {' '.join(tok)!r}", no)


def write_gadget(b):
    out = [f"gadget {b.kind} {b.w if b.w is not None else '-'}"]
    for u in b.p:
        fields = _role_fields(b.roles[u]) if u in b.roles else []
        out.append(" ".join(["p", str(u)] + fields))
    for v in b.q:
        fields = _role_fields(b.roles[v]) if v in b.roles else []
        out.append(" ".join(["q", str(v)] + fields))
    for u, v in sorted(b.base_edges, key=lambda e: (b.p.index(e[0]), b.q.index(e[1]))):
        out.append(f"edge {u} {v}")
    for u, v in sorted(b.saturation_edges,
                       key=lambda e: (b.p.index(e[0]), b.q.index(e[1]))):
        out.append(f"sat {u} {v}")
    return "\n".join(out) + "\n"


def parse_gadget(text):
    kind = None
    w = None
    p, q = [], []
    roles = {}
    base, sat = set(), set()
    for no, tok in _lines(text):
        if tok[0] == "gadget":
            if len(tok) != 3:
                raise ParseError("expected 'gadget <kind> <w|->'", no)
            kind = tok[1]
            w = None if tok[2] == "-" else tok[2]
        elif tok[0] in ("p", "q"):
            if len(tok) < 2:
                raise ParseError(f"expected '{tok[0]} <id> [role]'", no)
            (p if tok[0] == "p" else q).append(tok[1])
            if len(tok) > 2:
                roles[tok[1]] = _parse_role(tok[2:], no)
        elif tok[0] in ("edge", "sat"):
            if len(tok) != 3:
                raise ParseError(f"expected '{tok[0]} <u> <v>'", no)
            (base if tok[0] == "edge" else sat).add((tok[1], tok[2]))
        else:
            raise ParseError(f"unknown directive {tok[0]!r}", no)
    if kind is None:
        raise ParseError("missing gadget header", 1)
    pset, qset = set(p), set(q)
    for u, v in base | sat:
        if u not in pset or v not in qset:
            raise ParseError(f"edge {u} {v} does not cross the partition", 1)
    return BipartiteGadget(kind=kind, p=tuple(p), q=tuple(q),
                           base_edges=frozenset(base),
                           saturation_edges=frozenset(sat),
                           roles=roles, source=None, w=w)


_SHAPES = {"copy": "circle", "edge": "box", "residual": "diamond"}


def gadget_dot(b, name="gadget"):
    """DOT rendering: role shapes, saturation edges dashed."""
    out = [f"graph {name} {{"]
    for side in (b.p, b.q):
        for v in side:
            shape = _SHAPES.get(b.roles.get(v, ("copy",))[0], "circle")
            out.append(f'  "{v}" [shape={shape}];')
    for u, v in sorted(b.base_edges):
        out.append(f'  "{u}" -- "{v}";')
    for u, v in sorted(b.saturation_edges):
        out.append(f'  "{u}" -- "{v}" [style=dashed];')
    out.append("}")
    return "\n".join(out) + "\n"


def graph_dot(g, name="graph"):
    out = [f"graph {name} {{"]
    for v in g.vertices:
        out.append(f'  "{v}";')
    for u, v in g.edges():
        out.append(f'  "{u}" -- "{v}";')
    out.append("}")
    return "\n".join(out) + "\n"
