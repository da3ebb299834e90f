# Copyright 2024 The noncommuting authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Non-commuting graphs, their augmented variant, Laplacians and structure.
"""

import json

from dataclasses import dataclass
from typing import Any, Optional

import networkx as nx
import numpy as np

from noncommuting.config import DEFAULT_VERTEX_CAP
from noncommuting.errors import VertexCapError
from noncommuting.groups import FiniteGroup, center


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Simple undirected graph on group elements. Row i of the adjacency matrix
    belongs to the group element vertex_labels[i].
    """

    adjacency: np.ndarray
    vertex_labels: tuple[int, ...]
    labels: tuple[str, ...]
    source: str = ''

    def __post_init__(self) -> None:
        self.adjacency.setflags(write=False)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    def is_null(self) -> bool:
        return self.vertex_count == 0

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1, dtype=np.int64)

    def to_networkx(self) -> nx.Graph:
        graph: nx.Graph = nx.from_numpy_array(self.adjacency)

        nx.set_node_attributes(
            graph, dict(enumerate(self.labels)), name='label'
        )

        return graph


@dataclass(frozen=True, eq=False)
class LaplacianMatrix:
    """
    L = D - A over the vertex set of a graph.
    """

    matrix: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.matrix.shape[0])


def _check_cap(g: FiniteGroup, cap: int) -> None:
    if g.order > cap:
        raise VertexCapError(
            f'{g.label} has {g.order} elements, above the vertex cap {cap}'
        )


def _graph_on(
    g: FiniteGroup, vertices: np.ndarray, keep: np.ndarray, source: str
) -> Graph:
    """
    Non-commutation graph of g on the given vertices; rows of vertices not in
    keep are zeroed.
    """
    commute: np.ndarray = g.commutation_matrix[np.ix_(vertices, vertices)]
    adjacency: np.ndarray = np.logical_not(commute).astype(np.uint8)

    adjacency[~keep, :] = 0
    adjacency[:, ~keep] = 0

    return Graph(
        adjacency=adjacency,
        vertex_labels=tuple(int(v) for v in vertices),
        labels=tuple(g.element_label(int(v)) for v in vertices),
        source=source
    )


def noncommuting_graph(
    g: FiniteGroup, cap: int = DEFAULT_VERTEX_CAP
) -> Graph:
    """
    Graph on the non-central elements of g, x ~ y iff xy != yx. An abelian
    group gives the null graph (no vertices).
    """
    _check_cap(g=g, cap=cap)

    central: frozenset[int] = center(g)
    vertices: np.ndarray = np.array(
        [x for x in g.elements if x not in central], dtype=np.int64
    )

    return _graph_on(
        g=g, vertices=vertices, keep=np.ones(len(vertices), dtype=bool),
        source=g.label
    )


def augmented_adjacency(
    g: FiniteGroup, cap: int = DEFAULT_VERTEX_CAP
) -> Graph:
    """
    Graph on all elements of g; central elements are isolated vertices.
    """
    _check_cap(g=g, cap=cap)

    vertices: np.ndarray = np.arange(g.order)
    central: frozenset[int] = center(g)
    keep: np.ndarray = np.array([x not in central for x in g.elements])

    return _graph_on(
        g=g, vertices=vertices, keep=keep, source=f'augmented({g.label})'
    )


def remove_isolated(graph: Graph) -> Graph:
    keep: np.ndarray = np.flatnonzero(graph.degrees() > 0)

    return Graph(
        adjacency=graph.adjacency[np.ix_(keep, keep)].copy(),
        vertex_labels=tuple(graph.vertex_labels[i] for i in keep),
        labels=tuple(graph.labels[i] for i in keep),
        source=graph.source
    )


def laplacian(graph: Graph) -> LaplacianMatrix:
    adjacency: np.ndarray = graph.adjacency.astype(np.int64)
    matrix: np.ndarray = np.diag(adjacency.sum(axis=1)) - adjacency

    matrix.setflags(write=False)

    return LaplacianMatrix(matrix=matrix)


def is_complete_multipartite(graph: Graph) -> Optional[list[int]]:
    """
    Part sizes (non-increasing) if the graph is complete multipartite, None
    otherwise.

    Non-adjacency must be an equivalence relation: every connected component
    of the complement is a clique of the complement.
    """
    if graph.is_null():
        return None

    complement: nx.Graph = nx.complement(graph.to_networkx())
    sizes: list[int] = []

    for component in nx.connected_components(complement):
        size: int = len(component)

        if complement.subgraph(component).number_of_edges() != (
            size * (size - 1) // 2
        ):
            return None

        sizes.append(size)

    return sorted(sizes, reverse=True)


def degree_sequence(graph: Graph) -> list[int]:
    return sorted((int(d) for d in graph.degrees()), reverse=True)


def edge_count(graph: Graph) -> int:
    return int(graph.degrees().sum()) // 2


def edges(graph: Graph) -> list[tuple[int, int]]:
    rows, columns = np.nonzero(np.triu(graph.adjacency, k=1))

    return [(int(u), int(v)) for u, v in zip(rows, columns)]


def to_edge_list(graph: Graph) -> str:
    """
    Edge list text, one 'u v' pair per line, 0-indexed vertices.
    """
    return ''.join(f'{u} {v}\n' for u, v in edges(graph))


def to_json(graph: Graph) -> dict[str, Any]:
    return {
        'vertices': graph.vertex_count,
        'edges': [list(edge) for edge in edges(graph)],
        'labels': list(graph.labels)
    }


def dumps(graph: Graph) -> str:
    return json.dumps(to_json(graph), indent=2)
