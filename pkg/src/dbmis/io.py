"""Line-oriented text format for instances, reduction mappings and solutions.

Every file starts with ``v1 <kind>``.  Sections are a keyword with an explicit
record count followed by one record per line; all values are integers.
``#`` starts a comment.  Kinds and their sections::

    v1 ecgraph      n N / k K / edges M (u v color weight) / bounds C (v color g)
    v1 bmatching    the ecgraph sections, then b N (one bound per line)
    v1 digraph      n N / k K / arcs M (tail head color weight) / bounds C
    v1 dbmis        <matroid block> / hyperedges H (bound size ids...) / weights N (id w)
    v1 parity       <matroid block> / k K / sets S (weight ids...)
    v1 hier         vertices N / edges M (x y w) / family F (bound vertex color size ids...)
                    / copies N (vertex edge)
    v1 solution     solver NAME / kind KIND / size S / weight W / elements S ids...

A matroid block is one of::

    matroid graphic NV M           then M lines  id u v
    matroid uniform R S ids...
    matroid free S ids...
    matroid partition P S ids...   then P lines  cap size ids...
    matroid direct_sum C           then C matroid blocks
    matroid restriction S ids...   then one matroid block
    matroid copy S                 then S lines  new old, then one matroid block

Instances emitted by a reduction end with ``mapping NAME C`` and C lines
``target source`` that translate solution ids back to the source instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .bmatching import BMatchingInstance, HierarchicalBMatchingInstance, LaminarSet
from .branching import ColoredDigraph, make_digraph
from .errors import InvalidArgument
from .instance import DbmisInstance, make_instance
from .matroids import (
    Copy,
    DirectSum,
    FreeMatroid,
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    Restriction,
    UniformMatroid,
    make_free,
    make_graphic,
    make_partition,
    make_restriction,
    make_uniform,
)
from .parity import ParityInstance
from .pcforest import EdgeColoredMultigraph, make_ecgraph

__all__ = [
    "FORMAT_VERSION",
    "KINDS",
    "FormatError",
    "InstanceFile",
    "Solution",
    "kind_of",
    "render",
    "parse",
    "render_solution",
    "parse_solution",
]

FORMAT_VERSION = "v1"
KINDS = ("dbmis", "ecgraph", "digraph", "bmatching", "parity", "hier")


class FormatError(InvalidArgument):
    pass


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    instance: object
    mapping_name: str | None = None
    mapping: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class Solution:
    solver: str
    kind: str
    elements: tuple[int, ...]
    weight: int

    @property
    def size(self) -> int:
        return len(self.elements)


def kind_of(obj) -> str:
    if isinstance(obj, DbmisInstance):
        return "dbmis"
    if isinstance(obj, EdgeColoredMultigraph):
        return "ecgraph"
    if isinstance(obj, ColoredDigraph):
        return "digraph"
    if isinstance(obj, BMatchingInstance):
        return "bmatching"
    if isinstance(obj, ParityInstance):
        return "parity"
    if isinstance(obj, HierarchicalBMatchingInstance):
        return "hier"
    raise InvalidArgument(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# rendering


def _line(*tokens) -> str:
    return " ".join(str(t) for t in tokens)


def _render_matroid(m: Matroid, out: list[str]) -> None:
    if isinstance(m, GraphicMatroid):
        out.append(_line("matroid graphic", m.n_vertices, len(m.edges)))
        for x, (u, v) in zip(m.ids, m.edges):
            out.append(_line(x, u, v))
    elif isinstance(m, UniformMatroid):
        out.append(_line("matroid uniform", m.r, len(m.ground), *m.ground))
    elif isinstance(m, FreeMatroid):
        out.append(_line("matroid free", len(m.ground), *m.ground))
    elif isinstance(m, PartitionMatroid):
        out.append(_line("matroid partition", len(m.parts), len(m.ground), *m.ground))
        for part, cap in zip(m.parts, m.capacities):
            out.append(_line(cap, len(part), *sorted(part)))
    elif isinstance(m, DirectSum):
        out.append(_line("matroid direct_sum", len(m.children)))
        for child in m.children:
            _render_matroid(child, out)
    elif isinstance(m, Restriction):
        out.append(_line("matroid restriction", len(m.ground), *m.ground))
        _render_matroid(m.child, out)
    elif isinstance(m, Copy):
        out.append(_line("matroid copy", len(m.relabel)))
        for new, old in m.relabel:
            out.append(_line(new, old))
        _render_matroid(m.child, out)
    else:
        raise InvalidArgument(f"cannot serialize matroid kind {m.kind}")


def _render_graph_body(g: EdgeColoredMultigraph, out: list[str]) -> None:
    out.append(_line("n", g.n))
    out.append(_line("k", g.k))
    out.append(_line("edges", g.m))
    for e in g.edges:
        out.append(_line(e.u, e.v, e.color, e.weight))
    out.append(_line("bounds", len(g.bounds)))
    for (v, i), b in g.bounds:
        out.append(_line(v, i, b))


def render(obj, mapping_name: str | None = None, mapping: Iterable[tuple[int, int]] | None = None) -> str:
    kind = kind_of(obj)
    out = [_line(FORMAT_VERSION, kind)]
    if kind == "ecgraph":
        _render_graph_body(obj, out)
    elif kind == "bmatching":
        _render_graph_body(obj.graph, out)
        out.append(_line("b", len(obj.b)))
        out.extend(str(x) for x in obj.b)
    elif kind == "digraph":
        out.append(_line("n", obj.n))
        out.append(_line("k", obj.k))
        out.append(_line("arcs", obj.m))
        for a in obj.arcs:
            out.append(_line(a.tail, a.head, a.color, a.weight))
        out.append(_line("bounds", len(obj.bounds)))
        for (v, i), b in obj.bounds:
            out.append(_line(v, i, b))
    elif kind == "dbmis":
        _render_matroid(obj.matroid, out)
        out.append(_line("hyperedges", len(obj.hyperedges)))
        for e, b in zip(obj.hyperedges, obj.bounds):
            out.append(_line(b, len(e), *sorted(e)))
        out.append(_line("weights", len(obj.weights)))
        for x, w in obj.weights:
            out.append(_line(x, w))
    elif kind == "parity":
        _render_matroid(obj.matroid, out)
        out.append(_line("k", obj.k))
        out.append(_line("sets", len(obj.parity_sets)))
        for ps, w in zip(obj.parity_sets, obj.set_weights):
            out.append(_line(w, *ps))
    elif kind == "hier":
        out.append(_line("vertices", obj.n_vertices))
        out.append(_line("edges", len(obj.edges)))
        for (x, y), w in zip(obj.edges, obj.weights):
            out.append(_line(x, y, w))
        out.append(_line("family", len(obj.family)))
        for L in obj.family:
            out.append(_line(L.bound, L.vertex, L.color, len(L.members), *sorted(L.members)))
        out.append(_line("copies", len(obj.copy_of)))
        for v, e in obj.copy_of:
            out.append(_line(v, e))
    if mapping is not None:
        mapping = list(mapping)
        out.append(_line("mapping", mapping_name or "target->source", len(mapping)))
        for t, s in mapping:
            out.append(_line(t, s))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# parsing


class _Reader:
    def __init__(self, text: str) -> None:
        self.lines: list[tuple[int, list[str]]] = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            tokens = raw.split("#", 1)[0].split()
            if tokens:
                self.lines.append((lineno, tokens))
        self.pos = 0

    def done(self) -> bool:
        return self.pos >= len(self.lines)

    def peek(self) -> list[str]:
        if self.done():
            raise FormatError("unexpected end of file")
        return self.lines[self.pos][1]

    def next(self) -> list[str]:
        tokens = self.peek()
        self.pos += 1
        return tokens

    def where(self) -> str:
        if self.done():
            return "at end of file"
        return f"on line {self.lines[self.pos][0]}"

    def ints(self, tokens: list[str]) -> list[int]:
        try:
            return [int(t) for t in tokens]
        except ValueError:
            raise FormatError(f"expected integers {self.where()}: {' '.join(tokens)}") from None

    def record(self, n: int | None = None) -> list[int]:
        where = self.where()
        vals = self.ints(self.next())
        if n is not None and len(vals) != n:
            raise FormatError(f"expected {n} values {where}, got {len(vals)}")
        return vals

    def keyword(self, name: str, nvals: int = 1) -> list[int]:
        where = self.where()
        tokens = self.next()
        if tokens[0] != name:
            raise FormatError(f"expected '{name}' {where}, got '{tokens[0]}'")
        vals = self.ints(tokens[1:])
        if len(vals) < nvals:
            raise FormatError(f"'{name}' needs {nvals} value(s) {where}")
        return vals

    def counted(self, vals: list[int], count_at: int) -> list[int]:
        size = vals[count_at]
        ids = vals[count_at + 1 :]
        if len(ids) != size:
            raise FormatError(f"declared {size} ids but found {len(ids)} {self.where()}")
        return ids


def _parse_matroid(r: _Reader) -> Matroid:
    where = r.where()
    tokens = r.next()
    if len(tokens) < 2 or tokens[0] != "matroid":
        raise FormatError(f"expected a matroid block {where}")
    kind = tokens[1]
    vals = r.ints(tokens[2:])
    if kind == "graphic":
        nv, m = vals[:2]
        ids, edges = [], []
        for _ in range(m):
            x, u, v = r.record(3)
            ids.append(x)
            edges.append((u, v))
        return make_graphic(nv, edges, ids)
    if kind == "uniform":
        return make_uniform(vals[0], r.counted(vals, 1))
    if kind == "free":
        return make_free(r.counted(vals, 0))
    if kind == "partition":
        ground = r.counted(vals, 1)
        parts, caps = [], []
        for _ in range(vals[0]):
            rec = r.record()
            caps.append(rec[0])
            parts.append(rec[2:])
            if len(rec) - 2 != rec[1]:
                raise FormatError(f"partition part size mismatch {where}")
        return make_partition(parts, caps, ground)
    if kind == "direct_sum":
        return DirectSum(tuple(_parse_matroid(r) for _ in range(vals[0])))
    if kind == "restriction":
        allowed = r.counted(vals, 0)
        return make_restriction(_parse_matroid(r), allowed)
    if kind == "copy":
        pairs = tuple(tuple(r.record(2)) for _ in range(vals[0]))
        return Copy(_parse_matroid(r), pairs)  # type: ignore[arg-type]
    raise FormatError(f"unknown matroid kind '{kind}' {where}")


def _parse_graph_body(r: _Reader) -> EdgeColoredMultigraph:
    (n,) = r.keyword("n")[:1]
    (k,) = r.keyword("k")[:1]
    (m,) = r.keyword("edges")[:1]
    edges = [r.record(4) for _ in range(m)]
    (c,) = r.keyword("bounds")[:1]
    bounds = {}
    for _ in range(c):
        v, i, b = r.record(3)
        bounds[(v, i)] = b
    return make_ecgraph(n, edges, k, bounds)


def parse(text: str) -> InstanceFile:
    r = _Reader(text)
    header = r.next()
    if len(header) != 2 or header[0] != FORMAT_VERSION:
        raise FormatError(f"expected header '{FORMAT_VERSION} <kind>'")
    kind = header[1]
    if kind not in KINDS:
        raise FormatError(f"unknown instance kind '{kind}'")
    obj: object
    if kind == "ecgraph":
        obj = _parse_graph_body(r)
    elif kind == "bmatching":
        g = _parse_graph_body(r)
        (n,) = r.keyword("b")[:1]
        obj = BMatchingInstance(g, tuple(r.record(1)[0] for _ in range(n)))
    elif kind == "digraph":
        (n,) = r.keyword("n")[:1]
        (k,) = r.keyword("k")[:1]
        (m,) = r.keyword("arcs")[:1]
        arcs = [r.record(4) for _ in range(m)]
        (c,) = r.keyword("bounds")[:1]
        bounds = {}
        for _ in range(c):
            v, i, b = r.record(3)
            bounds[(v, i)] = b
        obj = make_digraph(n, arcs, k, bounds)
    elif kind == "dbmis":
        matroid = _parse_matroid(r)
        (h,) = r.keyword("hyperedges")[:1]
        hyperedges, bounds_ = [], []
        for _ in range(h):
            rec = r.record()
            if len(rec) < 2 or len(rec) - 2 != rec[1]:
                raise FormatError(f"hyperedge size mismatch {r.where()}")
            bounds_.append(rec[0])
            hyperedges.append(rec[2:])
        (nw,) = r.keyword("weights")[:1]
        weights = dict(tuple(r.record(2)) for _ in range(nw))  # type: ignore[misc]
        obj = make_instance(matroid, hyperedges, bounds_, weights)
        if len(weights) != len(matroid.ground):
            raise FormatError("weights section must list every ground element")
    elif kind == "parity":
        matroid = _parse_matroid(r)
        (k,) = r.keyword("k")[:1]
        (s,) = r.keyword("sets")[:1]
        sets, ws = [], []
        for _ in range(s):
            rec = r.record(k + 1)
            ws.append(rec[0])
            sets.append(tuple(rec[1:]))
        obj = ParityInstance(matroid, tuple(sets), k, tuple(ws))
    else:  # hier
        (nv,) = r.keyword("vertices")[:1]
        (m,) = r.keyword("edges")[:1]
        edges, ws = [], []
        for _ in range(m):
            x, y, w = r.record(3)
            edges.append((x, y))
            ws.append(w)
        (f,) = r.keyword("family")[:1]
        family = []
        for _ in range(f):
            rec = r.record()
            family.append(LaminarSet(frozenset(rec[4:]), rec[0], rec[1], rec[2]))
        (nc,) = r.keyword("copies")[:1]
        copies = tuple(tuple(r.record(2)) for _ in range(nc))
        obj = HierarchicalBMatchingInstance(nv, tuple(edges), tuple(ws), tuple(family), copies)  # type: ignore[arg-type]

    mapping_name = mapping = None
    if not r.done():
        tokens = r.next()
        if tokens[0] != "mapping" or len(tokens) != 3:
            raise FormatError(f"unexpected trailing content: {' '.join(tokens)}")
        mapping_name = tokens[1]
        count = r.ints(tokens[2:])[0]
        mapping = tuple(tuple(r.record(2)) for _ in range(count))
    if not r.done():
        raise FormatError(f"unexpected trailing content {r.where()}")
    return InstanceFile(kind, obj, mapping_name, mapping)  # type: ignore[arg-type]


def render_solution(sol: Solution) -> str:
    lines = [
        _line(FORMAT_VERSION, "solution"),
        _line("solver", sol.solver),
        _line("kind", sol.kind),
        _line("size", sol.size),
        _line("weight", sol.weight),
        _line("elements", sol.size, *sorted(sol.elements)),
    ]
    return "\n".join(lines) + "\n"


def parse_solution(text: str) -> Solution:
    r = _Reader(text)
    if r.next() != [FORMAT_VERSION, "solution"]:
        raise FormatError(f"expected header '{FORMAT_VERSION} solution'")
    fields = {}
    for name in ("solver", "kind"):
        tokens = r.next()
        if tokens[0] != name or len(tokens) != 2:
            raise FormatError(f"expected '{name} <value>'")
        fields[name] = tokens[1]
    size = r.keyword("size")[0]
    weight = r.keyword("weight")[0]
    vals = r.keyword("elements")
    elements = tuple(r.counted(vals, 0))
    if len(elements) != size:
        raise FormatError("size does not match the element count")
    return Solution(fields["solver"], fields["kind"], elements, weight)
