"""Edge-list input, canonical JSON decomposition documents, DOT export.

Documents are byte-deterministic: keys sorted, vertices sorted by (level,
label), edges sorted lexicographically with the lower-level endpoint
first. A document binds itself to its input through a content hash of the
canonical edge list, so verification can refuse mismatched pairs.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .errors import DocumentFormatError, EdgeListParseError, InvalidArgumentError
from .graphs import Graph, MultipartiteGraph
from .oracle import characterising_sequence
from .series import SeriesResult

__all__ = [
    "FORMAT_VERSION",
    "VertexRecord",
    "LevelRecord",
    "DecompositionDocument",
    "read_edge_list",
    "format_edge_list",
    "graph_content_hash",
    "build_document",
    "to_json",
    "write_decomposition",
    "parse_document",
    "document_to_multipartite",
    "reconstruct_graph",
    "to_dot",
]

FORMAT_VERSION = 1


def read_edge_list(path: str | Path) -> Graph:
    """Parse a whitespace edge list: 'u v' per line, 'v' alone declares a vertex.

    Lines starting with '#' and blank lines are skipped; duplicate edges
    collapse silently; self-loops and malformed lines are rejected with
    their line number. An edge list declaring no vertices is rejected.
    """
    vertices: set[str] = set()
    edges: set[tuple[str, str]] = set()
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) == 1:
                vertices.add(parts[0])
            elif len(parts) == 2:
                u, v = parts
                if u == v:
                    raise InvalidArgumentError(f"line {lineno}: self-loop on vertex {u!r}")
                vertices.update((u, v))
                edges.add((min(u, v), max(u, v)))
            else:
                raise EdgeListParseError(lineno, f"expected one or two labels, got {len(parts)}")
    if not vertices:
        raise InvalidArgumentError(f"{path}: edge list declares no vertices")
    return Graph(vertices, edges)


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text: isolated vertices first, then sorted edges."""
    lines = [v for v in g.vertices if g.degree(v) == 0]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def graph_content_hash(g: Graph) -> str:
    """Content hash of the canonical form of a graph."""
    lines = [f"v {v}" for v in g.vertices]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    digest = hashlib.sha256("\n".join(lines).encode("utf-8")).hexdigest()
    return f"sha256:{digest}"


@dataclass(frozen=True)
class VertexRecord:
    id: str
    label: str
    sequence: tuple[tuple[str, ...], ...] | None = None


@dataclass(frozen=True)
class LevelRecord:
    index: int
    vertices: tuple[VertexRecord, ...]


@dataclass(frozen=True)
class DecompositionDocument:
    """Serializable form of a decomposition run.

    Vertex ids are the canonical labels (unique by construction); vertices
    from level 2 upward carry their characterising sequence.
    """

    format_version: int
    source_hash: str
    operator: str
    status: str
    levels: tuple[LevelRecord, ...]
    edges: tuple[tuple[str, str], ...]


def build_document(result: SeriesResult, source_hash: str) -> DecompositionDocument:
    """Canonical document for a finished series run."""
    m = result.final
    levels = []
    for li, members in enumerate(m.levels):
        records = []
        for v in members:
            sequence = None
            if li >= 2:
                s = characterising_sequence(m, v)
                sequence = tuple(tuple(sorted(o)) for o in s.sets)
            records.append(VertexRecord(id=v, label=v, sequence=sequence))
        levels.append(LevelRecord(index=li, vertices=tuple(records)))
    return DecompositionDocument(
        format_version=FORMAT_VERSION,
        source_hash=source_hash,
        operator=result.operator.value,
        status=result.status.value,
        levels=tuple(levels),
        edges=tuple(sorted(m.edges())),
    )


def to_json(doc: DecompositionDocument) -> str:
    """Serialize a document; identical documents give identical bytes."""
    payload: dict[str, Any] = {
        "format_version": doc.format_version,
        "source_hash": doc.source_hash,
        "operator": doc.operator,
        "status": doc.status,
        "levels": [
            {
                "index": level.index,
                "vertices": [
                    {"id": vr.id, "label": vr.label}
                    | ({"sequence": [list(o) for o in vr.sequence]} if vr.sequence is not None else {})
                    for vr in level.vertices
                ],
            }
            for level in doc.levels
        ],
        "edges": [[a, b] for a, b in doc.edges],
    }
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def write_decomposition(result: SeriesResult, source_hash: str) -> str:
    """Canonical JSON text for a finished series run."""
    return to_json(build_document(result, source_hash))


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise DocumentFormatError(message)


def parse_document(text: str) -> DecompositionDocument:
    """Parse and validate a JSON decomposition document."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentFormatError(f"not valid JSON: {exc}") from None
    _expect(isinstance(payload, dict), "top level must be an object")
    for key in ("format_version", "source_hash", "operator", "status", "levels", "edges"):
        _expect(key in payload, f"missing key {key!r}")
    _expect(payload["format_version"] == FORMAT_VERSION, "unsupported format_version")
    _expect(isinstance(payload["source_hash"], str), "source_hash must be a string")
    _expect(payload["operator"] in ("weak", "factor", "clean"), "unknown operator")
    _expect(payload["status"] in ("terminated", "budget-exceeded"), "unknown status")
    _expect(isinstance(payload["levels"], list) and len(payload["levels"]) >= 2, "need at least two levels")

    ids: set[str] = set()
    levels = []
    for pos, level in enumerate(payload["levels"]):
        _expect(isinstance(level, dict), "levels must be objects")
        _expect(level.get("index") == pos, f"level index {level.get('index')!r} out of order")
        raw_vertices = level.get("vertices")
        _expect(isinstance(raw_vertices, list) and raw_vertices, f"level {pos} needs vertices")
        records = []
        for rv in raw_vertices:
            _expect(isinstance(rv, dict), "vertex records must be objects")
            vid = rv.get("id")
            _expect(isinstance(vid, str), "vertex id must be a string")
            _expect(vid not in ids, f"duplicate vertex id {vid!r}")
            ids.add(vid)
            label = rv.get("label")
            _expect(isinstance(label, str), "vertex label must be a string")
            sequence = None
            if "sequence" in rv:
                raw_seq = rv["sequence"]
                _expect(
                    isinstance(raw_seq, list)
                    and all(isinstance(o, list) and all(isinstance(v, str) for v in o) for o in raw_seq),
                    f"vertex {vid!r}: sequence must be a list of label lists",
                )
                sequence = tuple(tuple(o) for o in raw_seq)
            _expect(pos < 2 or sequence is not None, f"vertex {vid!r} at level {pos} needs a sequence")
            records.append(VertexRecord(id=vid, label=label, sequence=sequence))
        levels.append(LevelRecord(index=pos, vertices=tuple(records)))

    edges = []
    for raw in payload["edges"]:
        _expect(
            isinstance(raw, list) and len(raw) == 2 and all(isinstance(v, str) for v in raw),
            "edges must be pairs of ids",
        )
        a, b = raw
        _expect(a in ids and b in ids, f"edge [{a!r}, {b!r}] references an undeclared id")
        edges.append((a, b))

    return DecompositionDocument(
        format_version=FORMAT_VERSION,
        source_hash=payload["source_hash"],
        operator=payload["operator"],
        status=payload["status"],
        levels=tuple(levels),
        edges=tuple(edges),
    )


def document_to_multipartite(doc: DecompositionDocument) -> MultipartiteGraph:
    """Rebuild the multipartite graph a document describes."""
    levels = [[vr.id for vr in level.vertices] for level in doc.levels]
    return MultipartiteGraph(levels, doc.edges)


def reconstruct_graph(doc: DecompositionDocument) -> Graph:
    """Recover the original graph: level-0 vertices, clique unions as edges."""
    if len(doc.levels) < 2:
        raise DocumentFormatError("reconstruction needs at least two levels")
    level0 = [vr.id for vr in doc.levels[0].vertices]
    level0_set = set(level0)
    level1_set = {vr.id for vr in doc.levels[1].vertices}
    members: dict[str, list[str]] = {c: [] for c in level1_set}
    for a, b in doc.edges:
        if a in level0_set and b in level1_set:
            members[b].append(a)
        elif b in level0_set and a in level1_set:
            members[a].append(b)
    edges: set[tuple[str, str]] = set()
    for clique in members.values():
        clique.sort()
        for i, u in enumerate(clique):
            for v in clique[i + 1 :]:
                edges.add((u, v))
    return Graph(level0, edges)


def to_dot(m: MultipartiteGraph) -> str:
    """Graphviz text for visual inspection; one rank per level. Non-canonical."""

    def quote(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    out = ["graph decomposition {", "  rankdir=BT;"]
    for li, level in enumerate(m.levels):
        row = " ".join(quote(v) + ";" for v in level)
        out.append(f"  subgraph level_{li} {{ rank=same; {row} }}")
    for a, b in m.edges():
        out.append(f"  {quote(a)} -- {quote(b)};")
    out.append("}")
    return "\n".join(out) + "\n"
