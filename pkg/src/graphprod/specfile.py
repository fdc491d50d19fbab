"""Loading and saving group specifications.

A spec is a JSON object:

    {"vertices": [{"name": "a", "group": {"kind": "cyclic", "order": 2}}, ...],
     "edges": [["a", "c"], ["b", "c"]],
     "limits": {"states": 1000000}}

Vertex order in the file is the declaration order used everywhere else
(canonical forms, serialization, reports). The optional `limits` object
carries integer resource knobs; unknown keys are kept verbatim so callers
can layer their own.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import GraphProductError
from .graph import SimplicialGraph, validate_graph
from .groups import CyclicGroup, IntegersGroup, TableGroup, VertexGroup, validate_group

DEFAULT_LIMITS = {
    "states": 10**6,    # cyclic shuffle search
    "oracle-cap": 8,    # rewrite closure word size
}


@dataclass(frozen=True, eq=False)
class GroupSpec:
    graph: SimplicialGraph
    groups: tuple[VertexGroup, ...]
    limits: dict = field(default_factory=dict)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.graph.vertices

    def group(self, vertex: int) -> VertexGroup:
        return self.groups[vertex]

    def limit(self, name: str) -> int:
        if name in self.limits:
            return self.limits[name]
        return DEFAULT_LIMITS[name]


def parse_spec(data) -> GroupSpec:
    if not isinstance(data, dict):
        raise GraphProductError("spec must be a JSON object")
    if "vertices" not in data:
        raise GraphProductError("spec needs a 'vertices' list")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise GraphProductError("'vertices' must be a nonempty list")
    names = []
    groups = []
    for entry in vertices:
        if not isinstance(entry, dict) or "name" not in entry or "group" not in entry:
            raise GraphProductError("each vertex needs 'name' and 'group'")
        names.append(entry["name"])
        groups.append(validate_group(entry["group"]))
    edges = data.get("edges", [])
    if not isinstance(edges, list) or any(
        not isinstance(e, (list, tuple)) or len(e) != 2 for e in edges
    ):
        raise GraphProductError("'edges' must be a list of pairs")
    graph = validate_graph(names, edges)
    limits = data.get("limits", {})
    if not isinstance(limits, dict) or any(
        not isinstance(v, int) for v in limits.values()
    ):
        raise GraphProductError("'limits' must map names to integers")
    return GroupSpec(graph, tuple(groups), dict(limits))


def load_spec(path) -> GroupSpec:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise GraphProductError(f"cannot read spec file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise GraphProductError(f"spec file is not valid JSON: {exc}") from exc
    return parse_spec(data)


def _group_to_data(group: VertexGroup) -> dict:
    if isinstance(group, CyclicGroup):
        return {"kind": "cyclic", "order": group.order}
    if isinstance(group, IntegersGroup):
        return {"kind": "integers"}
    if isinstance(group, TableGroup):
        return {
            "kind": "table",
            "elements": list(group.names),
            "table": [[group.names[x] for x in row] for row in group.table],
            "generators": [group.names[g] for g in group.generators],
        }
    raise GraphProductError(f"cannot serialize group {group!r}")


def spec_to_data(spec: GroupSpec) -> dict:
    data = {
        "vertices": [
            {"name": name, "group": _group_to_data(g)}
            for name, g in zip(spec.vertices, spec.groups)
        ],
        "edges": [
            [spec.vertices[i], spec.vertices[j]] for i, j in spec.graph.edges()
        ],
    }
    if spec.limits:
        data["limits"] = dict(spec.limits)
    return data


def save_spec(spec: GroupSpec, path) -> None:
    with open(path, "w") as fh:
        json.dump(spec_to_data(spec), fh, indent=1)
        fh.write("\n")
