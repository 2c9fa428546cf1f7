"""Constructed host graphs with their designated structure, and a text format for them.

A gadget file is an ordinary graph file; the extra data rides along in `#!`
comment lines, so any graph reader still accepts it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import GraphParseError
from ..graph import Graph, dump_graph, load_graph
from ..pattern import Pattern

CASE_TAGS = ("case1", "case2", "case3", "case4", "case5", "case6")
ALL_TAGS = CASE_TAGS + ("bounded_degree", "star_host", "ary_tree", "doubling")


@dataclass
class GadgetGraph:
    graph: Graph
    matched_pairs: list
    core_set: frozenset
    claimed_closure: int
    case_tag: str
    pattern: Pattern
    measured_closure: Optional[int] = None
    origin: dict = field(default_factory=dict)   # gadget vertex -> pattern vertex of its part
    extras: dict = field(default_factory=dict)

    @property
    def K(self) -> int:
        return len(self.matched_pairs)


def dump_gadget(gad: GadgetGraph) -> str:
    lines = [dump_graph(gad.graph).rstrip("\n")]
    p = gad.pattern
    lines.append(f"#! case {gad.case_tag}")
    lines.append(f"#! claimed_closure {gad.claimed_closure}")
    if gad.measured_closure is not None:
        lines.append(f"#! measured_closure {gad.measured_closure}")
    lines.append("#! pairs " + " ".join(f"{a},{b}" for a, b in gad.matched_pairs))
    lines.append("#! core " + " ".join(map(str, sorted(gad.core_set))))
    lines.append(f"#! pattern_k {p.k}")
    lines.append("#! pattern_edges " + " ".join(f"{u},{v}" for u, v in p.h.edges()))
    lines.append("#! U+ " + " ".join(map(str, sorted(p.clique_prescribed))))
    lines.append("#! U- " + " ".join(map(str, sorted(p.indep_prescribed))))
    if gad.origin:
        lines.append("#! origin " + " ".join(f"{v}:{gad.origin[v]}" for v in sorted(gad.origin)))
    if "coverage_subgraph" in gad.extras:
        lines.append("#! coverage " + " ".join(f"{u},{v}" for u, v in gad.extras["coverage_subgraph"]))
    for kind, layers in gad.extras.get("block_layers", ()):
        body = ";".join(",".join(f"{a}={w}" for a, w in sorted(layer.items())) for layer in layers)
        lines.append(f"#! block {kind} {body}")
    return "\n".join(lines) + "\n"


def _pairs(tokens, lineno, source):
    out = []
    for tok in tokens:
        a, sep, b = tok.partition(",")
        if not sep:
            raise GraphParseError(f"expected 'a,b' pair, got {tok!r}", lineno, source)
        out.append((int(a), int(b)))
    return out


def _block(tokens, lineno, source):
    if len(tokens) != 2:
        raise GraphParseError("expected '#! block KIND a=w,...;a=w,...'", lineno, source)
    layers = []
    for chunk in tokens[1].split(";"):
        layer = {}
        for item in chunk.split(","):
            a, sep, w = item.partition("=")
            if not sep:
                raise GraphParseError(f"expected 'a=w', got {item!r}", lineno, source)
            layer[int(a)] = int(w)
        layers.append(layer)
    return tokens[0], layers


def load_gadget(text: str, source: Optional[str] = None) -> GadgetGraph:
    g = load_graph(text, source)
    meta, blocks = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#!"):
            key, *rest = line[2:].split()
            if key == "block":
                blocks.append((rest, lineno))
            else:
                meta[key] = (rest, lineno)
    for key in ("case", "claimed_closure", "pattern_k"):
        if key not in meta:
            raise GraphParseError(f"gadget sidecar lacks '#! {key}' line", None, source)
    try:
        tag = meta["case"][0][0]
        k = int(meta["pattern_k"][0][0])
        h = Graph(k, _pairs(*meta.get("pattern_edges", ([], None)), source))
        pattern = Pattern(h, frozenset(map(int, meta.get("U+", ([], 0))[0])),
                          frozenset(map(int, meta.get("U-", ([], 0))[0])))
        origin = {}
        for tok in meta.get("origin", ([], 0))[0]:
            a, _, b = tok.partition(":")
            origin[int(a)] = int(b)
        gad = GadgetGraph(
            graph=g,
            matched_pairs=_pairs(*meta.get("pairs", ([], None)), source),
            core_set=frozenset(map(int, meta.get("core", ([], 0))[0])),
            claimed_closure=int(meta["claimed_closure"][0][0]),
            case_tag=tag,
            pattern=pattern,
            measured_closure=int(meta["measured_closure"][0][0]) if "measured_closure" in meta else None,
            origin=origin,
        )
        if "coverage" in meta:
            gad.extras["coverage_subgraph"] = _pairs(*meta["coverage"], source)
        if blocks:
            gad.extras["block_layers"] = [_block(rest, lineno, source) for rest, lineno in blocks]
    except (ValueError, IndexError) as exc:
        if isinstance(exc, GraphParseError):
            raise
        raise GraphParseError(f"malformed gadget sidecar: {exc}", None, source) from None
    if tag not in ALL_TAGS:
        raise GraphParseError(f"unknown gadget case {tag!r}", meta["case"][1], source)
    return gad


def read_gadget(path) -> GadgetGraph:
    with open(path) as fh:
        return load_gadget(fh.read(), source=str(path))
