"""Stallings graphs of finitely generated subgroups of free groups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import NotFullCover
from .words import Word, generator_of, invert_letter, is_inverse, reduce


@dataclass(frozen=True)
class CoverGraph:
    """Labelled directed graph with basepoint 0.

    ``edges`` holds triples ``(source, label, target)`` with ``label`` a
    generator; reading the inverse letter walks an edge backwards.
    """

    n_vertices: int
    edges: tuple[tuple[int, str, int], ...]
    generators: tuple[str, ...]
    basepoint: int = 0

    def __post_init__(self):
        out, inc = {}, {}
        for s, lab, t in self.edges:
            out[(s, lab)] = t
            inc[(t, lab)] = s
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)

    def step(self, vertex: int, letter: str) -> int | None:
        if is_inverse(letter):
            return self._in.get((vertex, generator_of(letter)))
        return self._out.get((vertex, letter))

    def is_full_cover(self) -> bool:
        return all(
            (v, g) in self._out and (v, g) in self._in
            for v in range(self.n_vertices)
            for g in self.generators
        )

    def key(self):
        return (self.n_vertices, tuple(sorted(self.edges)), self.generators)


def _canonical(edges: set[tuple[int, str, int]], generators, basepoint: int) -> CoverGraph:
    """Renumber vertices in BFS order from the basepoint, letters in alphabet order."""
    out, inc = {}, {}
    for s, lab, t in edges:
        out[(s, lab)] = t
        inc[(t, lab)] = s
    order = {basepoint: 0}
    queue = [basepoint]
    letters = sorted(generators) + sorted(invert_letter(g) for g in generators)
    while queue:
        v = queue.pop(0)
        for x in letters:
            w = inc.get((v, generator_of(x))) if is_inverse(x) else out.get((v, x))
            if w is not None and w not in order:
                order[w] = len(order)
                queue.append(w)
    relabelled = tuple(sorted((order[s], lab, order[t]) for s, lab, t in edges))
    return CoverGraph(len(order), relabelled, tuple(generators))


def fold(generators: Sequence[Word], alphabet: Iterable[str] | None = None) -> CoverGraph:
    """Folded core graph of the subgroup generated by ``generators``.

    Each generator becomes a petal at the basepoint.  Pairs of edges with a
    common label and a common source (or target) are identified until the
    graph is deterministic; among all available folds the one merging the
    smallest vertex pair goes first.
    """
    words = [reduce(w) for w in generators]
    if alphabet is None:
        alphabet = sorted({generator_of(x) for w in words for x in w})
    alphabet = tuple(alphabet)

    parent: list[int] = [0]
    edges: set[tuple[int, str, int]] = set()

    def new_vertex() -> int:
        parent.append(len(parent))
        return len(parent) - 1

    for w in words:
        if not w.letters:
            continue
        v = 0
        for i, x in enumerate(w.letters):
            u = 0 if i == len(w.letters) - 1 else new_vertex()
            if is_inverse(x):
                edges.add((u, generator_of(x), v))
            else:
                edges.add((v, x, u))
            v = u

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    while True:
        edges = {(find(s), lab, find(t)) for s, lab, t in edges}
        seen: dict[tuple, int] = {}
        candidates = []
        for s, lab, t in sorted(edges):
            for key, other in (((s, lab, "out"), t), ((t, lab, "in"), s)):
                if key in seen and seen[key] != other:
                    a, b = sorted((seen[key], other))
                    candidates.append((a, b))
                else:
                    seen.setdefault(key, other)
        if not candidates:
            break
        a, b = min(candidates)
        parent[b] = a

    return _canonical(edges, alphabet, find(0))


def spanning_paths(graph: CoverGraph) -> dict[int, Word]:
    """Shortest word leading from the basepoint to each vertex (BFS, alphabet order)."""
    letters = sorted(graph.generators) + sorted(invert_letter(g) for g in graph.generators)
    paths = {graph.basepoint: Word()}
    queue = [graph.basepoint]
    while queue:
        v = queue.pop(0)
        for x in letters:
            w = graph.step(v, x)
            if w is not None and w not in paths:
                paths[w] = paths[v] * Word((x,))
                queue.append(w)
    return paths


def _closed_everywhere(graph: CoverGraph, words: Sequence[Word]) -> bool:
    for v in range(graph.n_vertices):
        for w in words:
            u = v
            for x in w.letters:
                u = graph.step(u, x)
                if u is None:
                    return False
            if u != v:
                return False
    return True


def fold_normal(generators: Sequence[Word], alphabet: Iterable[str] | None = None, max_rounds: int = 64) -> CoverGraph:
    """Stallings graph of the normal closure of ``generators``.

    Conjugates t g t^-1 are added for t running over paths to every vertex
    (and one step past vertices with a missing edge) and the result is
    refolded, until the graph is a full cover on which every generator
    reads a closed loop from every vertex.  Only finite-index closures
    converge; ``max_rounds`` bounds the search otherwise.
    """
    base = [reduce(w) for w in generators]
    if alphabet is None:
        alphabet = sorted({generator_of(x) for w in base for x in w})
    alphabet = tuple(alphabet)
    letters = list(alphabet) + [invert_letter(g) for g in alphabet]
    words = set(base)
    for _ in range(max_rounds):
        graph = fold(sorted(words, key=lambda w: (len(w), w.letters)), alphabet)
        if graph.is_full_cover() and _closed_everywhere(graph, base):
            return graph
        paths = spanning_paths(graph)
        conjugators = set(paths.values())
        for v, t in paths.items():
            for x in letters:
                if graph.step(v, x) is None:
                    conjugators.add(reduce(t * Word((x,))))
        grown = set(words)
        for t in conjugators:
            for g in base:
                grown.add(reduce(t * g * t.inverse()))
        if grown == words:
            break
        words = grown
    raise NotFullCover("normal closure did not close up into a finite cover")


def graph_member(graph: CoverGraph, word: Word) -> bool:
    v = graph.basepoint
    for x in reduce(word).letters:
        v = graph.step(v, x)
        if v is None:
            return False
    return v == graph.basepoint


def sheets_and_rank(graph: CoverGraph) -> tuple[int, int]:
    """(number of sheets, rank of the subgroup) for a full cover."""
    if not graph.is_full_cover():
        raise NotFullCover("graph is not a full cover of the wedge of circles")
    return graph.n_vertices, len(graph.edges) - graph.n_vertices + 1


def to_dot(graph: CoverGraph, name: str = "cover") -> str:
    lines = [f'digraph "{name}" {{', "  node [shape=circle];"]
    for v in range(graph.n_vertices):
        shape = "doublecircle" if v == graph.basepoint else "circle"
        lines.append(f'  v{v} [label="{v}", shape={shape}];')
    for s, lab, t in sorted(graph.edges):
        lines.append(f'  v{s} -> v{t} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
