"""Self-describing JSON documents for complexes, groups and reports.

A complex document carries vertex records {id, index?, tag}, facets as id
lists and an optional permutation group in one-line notation.  Parsing and
serialisation round-trip; reports are emitted with sorted keys so a
deterministic run is byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from . import __version__
from .errors import ValidationError
from .perms import PermGroup, Permutation
from .simplicial import SimplicialComplex, Vertex, face_key


def vertex_id(v: Vertex) -> str:
    return str(v)


def serialize_complex(
    K: SimplicialComplex, group: PermGroup | None = None
) -> dict[str, Any]:
    verts = []
    for v in K.vertices:
        rec: dict[str, Any] = {"id": vertex_id(v), "tag": v.tag}
        if v.index is not None:
            rec["index"] = v.index
        verts.append(rec)
    facets = [
        sorted(vertex_id(v) for v in sorted(f))
        for f in sorted(K.facets, key=face_key)
    ]
    doc: dict[str, Any] = {"vertices": verts, "facets": facets}
    if group is not None:
        doc["group"] = {
            "degree": group.degree,
            "generators": [list(g.images) for g in group.generators],
        }
    return doc


def parse_complex(doc: dict) -> tuple[SimplicialComplex, PermGroup | None]:
    if not isinstance(doc, dict):
        raise ValidationError("document must be a JSON object")
    try:
        vrecs = doc["vertices"]
        frecs = doc["facets"]
    except KeyError as missing:
        raise ValidationError(f"document lacks {missing} section") from None
    by_id: dict[str, Vertex] = {}
    for k, rec in enumerate(vrecs):
        if "id" not in rec:
            raise ValidationError(f"vertex #{k} has no id")
        vid = str(rec["id"])
        if vid in by_id:
            raise ValidationError(f"duplicate vertex id {vid!r} (vertex #{k})")
        index = rec.get("index")
        if index is not None:
            index = int(index)
            if index < 1:
                raise ValidationError(f"vertex {vid!r}: index must be >= 1")
        by_id[vid] = Vertex(index, int(rec.get("tag", 0)))
    if len(set(by_id.values())) != len(by_id):
        raise ValidationError("two vertex ids map to the same (index, tag) label")
    facets = []
    for k, ids in enumerate(frecs):
        try:
            facets.append(frozenset(by_id[str(x)] for x in ids))
        except KeyError as bad:
            raise ValidationError(f"facet #{k} references unknown id {bad}") from None
    K = SimplicialComplex(list(by_id.values()), facets)
    group = None
    if "group" in doc and doc["group"] is not None:
        grec = doc["group"]
        degree = int(grec.get("degree", 0))
        gens = []
        for k, images in enumerate(grec.get("generators", [])):
            try:
                gens.append(Permutation(tuple(int(x) for x in images)))
            except ValidationError:
                raise ValidationError(f"group generator #{k} is not a bijection")
        if not gens:
            gens = [Permutation.identity(max(degree, 1))]
        if degree and any(g.degree != degree for g in gens):
            raise ValidationError("generator length disagrees with group degree")
        group = PermGroup(degree or gens[0].degree, tuple(gens))
        top = max((v.index for v in K.vertices if v.index is not None), default=0)
        if group.degree < top:
            raise ValidationError("group degree smaller than the largest vertex index")
    return K, group


def make_report(command: str, payload: dict, caps: dict, deterministic: bool = True) -> dict:
    return {
        "tool": "macstab",
        "version": __version__,
        "command": command,
        "deterministic": bool(deterministic),
        "caps": dict(sorted(caps.items())),
        "conventions": {
            "orbit_representative": "lexicographically least subset in vertex order",
            "orientation": "vertices sorted by (index, tag), unindexed last",
        },
        "report": payload,
    }


def dumps_report(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
