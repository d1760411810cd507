"""
Rauzy graphs of factor languages.

Vertices are the words of length ``ℓ-1``; the arc for a member ``w`` goes
from ``w[:-1]`` to ``w[1:]`` and carries ``w`` as its ``word`` attribute.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional

import networkx as nx

from ..words.word import reverse
from .factors import FactorLanguage

logger = logging.getLogger(__name__)


class RauzyGraph:
    """Rauzy graph of order ``ℓ`` backed by a ``networkx.DiGraph``."""

    def __init__(self, order: int, graph: nx.DiGraph):
        """
        Args:
            order: Length of the arc words
            graph: Digraph whose arcs carry their word in ``word``
        """
        if order < 2:
            raise ValueError(f"Rauzy graph order must be at least 2, got {order}")
        self.order = order
        self.graph = graph

    @property
    def vertices(self) -> List[str]:
        return sorted(self.graph.nodes)

    @property
    def arcs(self) -> List[str]:
        return sorted(data["word"] for _, _, data in self.graph.edges(data=True))

    def number_of_arcs(self) -> int:
        return int(self.graph.number_of_edges())

    def subgraph(self, vertices: FrozenSet[str]) -> "RauzyGraph":
        return RauzyGraph(self.order, self.graph.subgraph(vertices).copy())

    def reversed_words(self) -> "RauzyGraph":
        """The graph of the reversed language."""
        graph = nx.DiGraph()
        graph.add_nodes_from(reverse(v) for v in self.graph.nodes)
        for u, v, data in self.graph.edges(data=True):
            graph.add_edge(reverse(v), reverse(u), word=reverse(data["word"]))
        return RauzyGraph(self.order, graph)

    def same_as(self, other: "RauzyGraph") -> bool:
        """Equal as labelled graphs."""
        return (
            self.order == other.order
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def export(self) -> str:
        """Arc list, one arc word per line."""
        return "".join(f"{w}\n" for w in self.arcs)

    def __repr__(self) -> str:
        return (
            f"RauzyGraph(order={self.order}, vertices={self.graph.number_of_nodes()}, "
            f"arcs={self.graph.number_of_edges()})"
        )


def rauzy_graph(language: FactorLanguage) -> RauzyGraph:
    """Rauzy graph of order ``language.length``."""
    graph = nx.DiGraph()
    for w in language.sorted():
        graph.add_edge(w[:-1], w[1:], word=w)
    result = RauzyGraph(language.length, graph)
    logger.debug(f"Built {result!r}")
    return result


def weak_components(g: RauzyGraph) -> List[FrozenSet[str]]:
    """Weakly connected components, ordered by their least vertex."""
    components = [frozenset(c) for c in nx.weakly_connected_components(g.graph)]
    return sorted(components, key=min)


def component_containing(g: RauzyGraph, factor: str) -> Optional[RauzyGraph]:
    """The weak component with an arc word containing ``factor``."""
    for component in weak_components(g):
        sub = g.subgraph(component)
        if any(factor in w for w in sub.arcs):
            return sub
    return None


def components_reversal_symmetric(g: RauzyGraph) -> bool:
    """Whether reversing words permutes the weak components of ``g``."""
    components = set(weak_components(g))
    mirrored = {frozenset(reverse(v) for v in c) for c in components}
    return mirrored == components


@dataclass(frozen=True)
class SccDecomposition:
    """Strongly connected components and the acyclic graph between them.

    ``recurrent`` keeps the vertices of components that contain a cycle
    together with the arcs inside those components.
    """

    components: List[FrozenSet[str]]
    condensation: nx.DiGraph
    recurrent: RauzyGraph

    @property
    def nontrivial(self) -> List[FrozenSet[str]]:
        return [c for c in self.components if self._cyclic(c)]

    def _cyclic(self, component: FrozenSet[str]) -> bool:
        return any(v in self.recurrent.graph for v in component)


def scc_condensation(g: RauzyGraph) -> SccDecomposition:
    components = sorted(
        (frozenset(c) for c in nx.strongly_connected_components(g.graph)), key=min
    )
    condensation = nx.condensation(g.graph, scc=components)
    keep = set()
    for component in components:
        if len(component) > 1 or any(g.graph.has_edge(v, v) for v in component):
            keep.update(component)
    recurrent = nx.DiGraph()
    recurrent.add_nodes_from(keep)
    index = condensation.graph["mapping"]
    for u, v, data in g.graph.edges(data=True):
        if u in keep and index[u] == index[v]:
            recurrent.add_edge(u, v, **data)
    logger.debug(
        f"{len(components)} strongly connected components, "
        f"{recurrent.number_of_nodes()} recurrent vertices"
    )
    return SccDecomposition(components, condensation, RauzyGraph(g.order, recurrent))


def is_isomorphic(a: RauzyGraph, b: RauzyGraph) -> bool:
    """Digraph isomorphism, ignoring the words."""
    if a.graph.number_of_nodes() != b.graph.number_of_nodes():
        return False
    if a.graph.number_of_edges() != b.graph.number_of_edges():
        return False
    return bool(nx.is_isomorphic(a.graph, b.graph))
