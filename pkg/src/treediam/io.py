"""JSON interchange for graphs and decompositions.

Graph files:   {"vertices": [...], "edges": [{"id": ..., "ends": [u, v],
               "label": ...?}, ...], "roots": [...]?}
Decomposition files: {"nodes": [...], "tree_edges": [[u, v], ...],
               "bags": {"<node>": [...], ...}} referencing a graph file.
Streams are JSON lines, one graph object per line.

Ids are ints or strings; file order is not semantic and writers emit
canonical order so equal values serialize identically.
"""

import json

from .decomp import TreeDecomposition
from .embed import LabeledRootedGraph
from .multigraph import Multigraph
from .util import idkey, sorted_ids


class FormatError(ValueError):
    """Malformed graph or decomposition input."""


def _check_keys(obj, allowed, what):
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    unknown = set(obj) - set(allowed)
    if unknown:
        raise FormatError(f"{what} has unknown keys {sorted(unknown)!r}")


def _id(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise FormatError(f"{what} must be an int or string, got {value!r}")
    return value


def graph_from_obj(obj):
    """Parse a graph object into a LabeledRootedGraph."""
    _check_keys(obj, {"vertices", "edges", "roots"}, "graph")
    if "vertices" not in obj:
        raise FormatError("graph needs a 'vertices' list")
    vertices = [_id(v, "vertex id") for v in obj["vertices"]]
    ends = {}
    labels = {}
    for item in obj.get("edges", ()):
        _check_keys(item, {"id", "ends", "label"}, "edge")
        if "id" not in item or "ends" not in item:
            raise FormatError("every edge needs 'id' and 'ends'")
        eid = _id(item["id"], "edge id")
        pair = item["ends"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"edge {eid!r} 'ends' must be a 2-element list")
        if eid in ends:
            raise FormatError(f"duplicate edge id {eid!r}")
        ends[eid] = (_id(pair[0], "endpoint"), _id(pair[1], "endpoint"))
        if "label" in item:
            labels[eid] = item["label"]
    roots = [_id(r, "root") for r in obj.get("roots", ())]
    try:
        g = Multigraph(vertices, ends, labels)
        return LabeledRootedGraph(g, roots)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def graph_to_obj(g, roots=()):
    if isinstance(g, LabeledRootedGraph):
        roots = g.roots
        g = g.graph
    obj = {
        "vertices": sorted_ids(g.vertices),
        "edges": [
            {"id": e, "ends": list(pair)}
            | ({"label": g.label(e)} if g.label(e) is not None else {})
            for e, pair in g.edges()
        ],
    }
    if roots:
        obj["roots"] = sorted_ids(roots)
    return obj


def load_graph(path):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return graph_from_obj(obj)


def save_graph(g, path, roots=()):
    with open(path, "w") as fh:
        json.dump(graph_to_obj(g, roots), fh, indent=1)
        fh.write("\n")


def _match_bag_keys(nodes, bag_obj):
    """JSON object keys are strings; map them back onto node ids."""
    by_str = {}
    for n in nodes:
        key = str(n)
        if key in by_str:
            raise FormatError(f"ambiguous bag key {key!r} (int and str node)")
        by_str[key] = n
    out = {}
    for key, val in bag_obj.items():
        if key not in by_str:
            raise FormatError(f"bag key {key!r} is not a tree node")
        out[by_str[key]] = val
    return out


def decomp_from_obj(obj, host):
    """Parse a decomposition object against its host graph."""
    if isinstance(host, LabeledRootedGraph):
        host = host.graph
    _check_keys(obj, {"nodes", "tree_edges", "bags"}, "decomposition")
    if "nodes" not in obj or "bags" not in obj:
        raise FormatError("decomposition needs 'nodes' and 'bags'")
    nodes = [_id(n, "node id") for n in obj["nodes"]]
    edges = []
    for pair in obj.get("tree_edges", ()):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError("tree edges must be 2-element lists")
        edges.append((_id(pair[0], "node id"), _id(pair[1], "node id")))
    bags_raw = _match_bag_keys(nodes, obj["bags"])
    if set(bags_raw) != set(nodes):
        raise FormatError("bags must cover exactly the tree nodes")
    bags = {
        n: [_id(v, "bag vertex") for v in vs] for n, vs in bags_raw.items()
    }
    try:
        return TreeDecomposition(host, nodes, edges, bags)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def decomp_to_obj(d):
    return {
        "nodes": sorted_ids(d.nodes),
        "tree_edges": sorted(
            (sorted_ids(e) for e in d.tree_edges),
            key=lambda pair: (idkey(pair[0]), idkey(pair[1])),
        ),
        "bags": {str(n): sorted_ids(d.bags[n]) for n in sorted_ids(d.nodes)},
    }


def load_decomposition(path, host):
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return decomp_from_obj(obj, host)


def save_decomposition(d, path):
    with open(path, "w") as fh:
        json.dump(decomp_to_obj(d), fh, indent=1)
        fh.write("\n")


def iter_graph_lines(path):
    """Graphs from a JSON-lines stream, one object per line."""
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc
            yield graph_from_obj(obj)
