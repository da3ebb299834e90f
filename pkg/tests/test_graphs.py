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

import json

import numpy as np
import pytest

from noncommuting.errors import VertexCapError
from noncommuting.graphs import (
    Graph,
    augmented_adjacency,
    degree_sequence,
    dumps,
    edge_count,
    edges,
    is_complete_multipartite,
    laplacian,
    noncommuting_graph,
    remove_isolated,
    to_edge_list
)
from noncommuting.groups import (
    direct_product,
    make_cyclic,
    make_dihedral,
    make_gl2,
    make_symmetric
)


def _graph(rows: list[list[int]]) -> Graph:
    return Graph(
        adjacency=np.array(rows, dtype=np.uint8),
        vertex_labels=tuple(range(len(rows))),
        labels=tuple(str(i) for i in range(len(rows)))
    )


@pytest.mark.parametrize(
    'n, parts',
    [
        (3, [2, 1, 1, 1]),
        (4, [2, 2, 2]),
        (5, [4, 1, 1, 1, 1, 1]),
        (6, [4, 2, 2, 2]),
        (8, [6, 2, 2, 2, 2])
    ]
)
def test_dihedral_graph_is_complete_multipartite(n, parts):
    graph = noncommuting_graph(make_dihedral(n))

    assert graph.vertex_count == sum(parts)
    assert is_complete_multipartite(graph) == parts


def test_gl2_graph_parts():
    graph = noncommuting_graph(make_gl2(3))

    assert graph.vertex_count == 46
    assert is_complete_multipartite(graph) == [6] * 3 + [4] * 4 + [2] * 6


def test_symmetric_graph():
    graph = noncommuting_graph(make_symmetric(3))

    assert graph.vertex_count == 5
    assert degree_sequence(graph) == [4, 4, 4, 3, 3]


def test_abelian_group_gives_null_graph():
    graph = noncommuting_graph(make_cyclic(6))

    assert graph.is_null()
    assert is_complete_multipartite(graph) is None
    assert edge_count(graph) == 0


def test_adjacency_is_symmetric_without_loops():
    graph = noncommuting_graph(direct_product(make_dihedral(3), make_dihedral(4)))
    adjacency = graph.adjacency

    assert np.array_equal(adjacency, adjacency.T)
    assert not np.diag(adjacency).any()
    assert set(np.unique(adjacency)) <= {0, 1}


def test_edge_count_and_edge_list():
    graph = noncommuting_graph(make_dihedral(4))

    assert edge_count(graph) == 12
    assert len(edges(graph)) == 12
    assert to_edge_list(graph).count('\n') == 12
    assert all(u < v for u, v in edges(graph))


def test_json_export():
    graph = noncommuting_graph(make_dihedral(3))
    data = json.loads(dumps(graph))

    assert data['vertices'] == 5
    assert len(data['edges']) == edge_count(graph)
    assert data['labels'][0] == 'r'


def test_augmented_adjacency_keeps_center_isolated():
    group = make_dihedral(4)
    graph = augmented_adjacency(group)

    assert graph.vertex_count == 8
    assert not graph.adjacency[:2].any()
    assert not graph.adjacency[:, :2].any()

    reduced = remove_isolated(graph)

    assert np.array_equal(reduced.adjacency, noncommuting_graph(group).adjacency)
    assert reduced.labels == noncommuting_graph(group).labels


def test_laplacian_rows_sum_to_zero():
    graph = noncommuting_graph(make_dihedral(5))
    matrix = laplacian(graph).matrix

    assert laplacian(graph).dimension == 9
    assert not matrix.sum(axis=1).any()
    assert list(np.diag(matrix)) == list(graph.degrees())


def test_vertex_cap():
    with pytest.raises(VertexCapError):
        noncommuting_graph(make_dihedral(4), cap=5)

    with pytest.raises(VertexCapError):
        augmented_adjacency(make_dihedral(4), cap=7)


def test_path_is_not_complete_multipartite():
    path = _graph(
        [[0, 1, 0, 0], [1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 0]]
    )

    assert is_complete_multipartite(path) is None


def test_star_is_complete_bipartite():
    star = _graph([[0, 1, 1], [1, 0, 0], [1, 0, 0]])

    assert is_complete_multipartite(star) == [2, 1]


def test_networkx_view_carries_labels():
    graph = noncommuting_graph(make_dihedral(3)).to_networkx()

    assert graph.number_of_nodes() == 5
    assert graph.nodes[0]['label'] == 'r'
