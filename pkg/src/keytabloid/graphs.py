"""Rooted isomorphism of crystal graphs, plus JSON and DOT export."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field

from .crystal import CrystalGraph
from .tabloid import Tabloid, reading_word

__all__ = ["IsoResult", "check_isomorphism", "graph_to_json", "graph_to_dot", "node_label"]

# one colour per edge label, cycled for large n
COLORS = ["violet", "blue", "purple", "red", "orange", "darkgreen", "brown", "teal"]


@dataclass
class IsoResult:
    ok: bool
    mapping: dict[int, int] = field(default_factory=dict)
    witness: tuple | None = None  # (g node, h node, label, reason)

    def __bool__(self):
        return self.ok


def check_isomorphism(G: CrystalGraph, H: CrystalGraph) -> IsoResult:
    """Match G and H by a simultaneous BFS from their roots.

    Edges are deterministic per label, so the root pairing forces the whole
    correspondence; the first disagreement is returned as a witness.
    """
    if G.n != H.n:
        return IsoResult(False, witness=(G.root, H.root, None, "different rank"))
    if G.weights[G.root] != H.weights[H.root]:
        return IsoResult(False, witness=(G.root, H.root, None, "root weights differ"))
    fwd, back = {G.root: H.root}, {H.root: G.root}
    queue = deque([(G.root, H.root)])
    while queue:
        u, v = queue.popleft()
        for i in range(G.n):
            su, sv = G.successor(u, i), H.successor(v, i)
            if su is None and sv is None:
                continue
            if su is None or sv is None:
                return IsoResult(False, fwd, (u, v, i, "edge present on one side only"))
            if G.weights[su] != H.weights[sv]:
                return IsoResult(False, fwd, (u, v, i, "target weights differ"))
            if fwd.get(su, sv) != sv or back.get(sv, su) != su:
                return IsoResult(False, fwd, (u, v, i, "targets matched inconsistently"))
            if su not in fwd:
                fwd[su], back[sv] = sv, su
                queue.append((su, sv))
    if len(fwd) != len(G) or len(back) != len(H):
        return IsoResult(False, fwd, (G.root, H.root, None,
                                      f"covered {len(fwd)} of {len(G)} and {len(back)} of {len(H)}"))
    return IsoResult(True, fwd)


def node_label(node) -> str:
    if isinstance(node, Tabloid):
        return "".join(map(str, reading_word(node)))
    return "".join(map(str, node))


def graph_to_json(G: CrystalGraph) -> dict:
    return {
        "shape": list(G.shape) if G.shape is not None else None,
        "root": G.root,
        "nodes": [
            {"id": k, "reading_word": node_label(node), "weight": list(G.weights[k]),
             "maj": G.grades[k]}
            for k, node in enumerate(G.nodes)
        ],
        "edges": [{"from": u, "to": v, "label": i} for u, v, i in G.edge_list()],
    }


def graph_to_dot(G: CrystalGraph, name: str = "crystal") -> str:
    lines = [f"digraph {name} {{", "  node [shape=box, fontname=monospace];"]
    for k, node in enumerate(G.nodes):
        wt = ",".join(map(str, G.weights[k]))
        label = f"rw={node_label(node)}\\nwt=({wt})\\nmaj={G.grades[k]}"
        lines.append(f'  n{k} [label="{label}"];')
    for u, v, i in G.edge_list():
        lines.append(f'  n{u} -> n{v} [label="{i}", color="{COLORS[i % len(COLORS)]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
