"""Association networks from pairwise mutual information.

Pruning applies the data-processing inequality to every triplet of the
complete graph: an edge that is strictly the weakest of some triangle is
removed. All removals are marked first and applied together, so the result
does not depend on the order in which triplets are visited.
"""

import io
import logging

import networkx as nx
import numpy as np
import pandas as pd

from shrink_entropy.exceptions import (
    InputFormatError,
    InvalidInputError,
    UnsupportedEstimatorError,
)
from shrink_entropy.models import MiGraph

logger = logging.getLogger(__name__)

EXPORT_FORMATS: tuple[str, ...] = ("dot", "graphml", "csv")
EDGE_LIST_COLUMNS = ["source", "target", "mi"]

Edge = tuple[str, str, float]


def dpi_prune(graph: MiGraph, epsilon: float = 0.0) -> MiGraph:
    """Remove every edge that is the strict minimum of some triplet.

    Edge ``(i, j)`` is marked when a third node ``k`` exists with
    ``w_ij < min(w_ik, w_jk) - epsilon``. Triplets range over the complete
    weight matrix, regardless of the current mask.

    Parameters
    ----------
    graph : MiGraph
        Weighted graph; its weights are treated as complete.
    epsilon : float
        Tolerance; ties within ``epsilon`` keep both edges.

    Returns
    -------
    MiGraph
        Same weights with the marked edges removed from the mask.

    Raises
    ------
    InvalidInputError
        If ``epsilon`` is negative.
    """
    if epsilon < 0.0:
        raise InvalidInputError("dpi_prune", f"epsilon must be >= 0, got {epsilon}")
    weights = graph.weights
    marked = np.zeros(weights.shape, dtype=bool)
    # Row/column k of a zero-diagonal matrix never marks (i, k) or (k, j).
    for k in range(graph.size):
        rival = np.minimum.outer(weights[:, k], weights[k, :])
        marked |= weights < rival - epsilon
    np.fill_diagonal(marked, False)
    mask = graph.mask & ~marked
    removed = int(np.count_nonzero(graph.mask & marked)) // 2
    logger.info(f"DPI pruning removed {removed} edges among {graph.size} nodes")
    return MiGraph(labels=graph.labels, weights=weights, mask=mask)


def _surviving(graph: MiGraph) -> np.ndarray:
    return np.triu(graph.mask & (graph.weights > 0.0), k=1)


def nonzero_edges(graph: MiGraph) -> list[Edge]:
    """Surviving edges by descending weight, ties by node-name pair."""
    rows, cols = np.nonzero(_surviving(graph))
    edges = [
        (graph.labels[i], graph.labels[j], float(graph.weights[i, j]))
        for i, j in zip(rows, cols)
    ]
    return sorted(edges, key=lambda edge: (-edge[2], edge[0], edge[1]))


def degree_ranking(graph: MiGraph) -> list[tuple[str, int]]:
    """Nodes by descending number of surviving edges; ties keep input order."""
    upper = _surviving(graph)
    degrees = (upper | upper.T).sum(axis=1)
    ranking = [(label, int(degree)) for label, degree in zip(graph.labels, degrees)]
    return sorted(ranking, key=lambda item: -item[1])


# =============================================================================
# Export
# =============================================================================


def _edges_in_input_order(graph: MiGraph) -> list[Edge]:
    rows, cols = np.nonzero(_surviving(graph))
    return [
        (graph.labels[i], graph.labels[j], float(graph.weights[i, j]))
        for i, j in zip(rows, cols)
    ]


def _quote(label: str) -> str:
    escaped = label.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _to_dot(graph: MiGraph) -> str:
    edges = _edges_in_input_order(graph)
    connected = {label for a, b, _ in edges for label in (a, b)}
    lines = ["graph {"]
    # isolated nodes
    lines.extend(
        f"  {_quote(label)};" for label in graph.labels if label not in connected
    )
    lines.extend(
        f"  {_quote(a)} -- {_quote(b)} [weight={w:.6f}];" for a, b, w in edges
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_graphml(graph: MiGraph) -> str:
    g = nx.Graph()
    g.add_nodes_from(graph.labels)
    for a, b, w in _edges_in_input_order(graph):
        g.add_edge(a, b, weight=round(w, 6))
    return "\n".join(nx.generate_graphml(g)) + "\n"


def _to_edge_csv(graph: MiGraph) -> str:
    frame = pd.DataFrame(_edges_in_input_order(graph), columns=EDGE_LIST_COLUMNS)
    result: str = frame.to_csv(index=False, float_format="%.6f", lineterminator="\n")
    return result


def export_graph(graph: MiGraph, fmt: str) -> str:
    """Serialize the surviving edges as DOT, GraphML or an edge-list CSV.

    Nodes appear in input order, each undirected edge once, weights with six
    decimals.

    Raises
    ------
    UnsupportedEstimatorError
        If ``fmt`` is not one of ``dot``, ``graphml`` or ``csv``.
    """
    if fmt == "dot":
        return _to_dot(graph)
    if fmt == "graphml":
        return _to_graphml(graph)
    if fmt == "csv":
        return _to_edge_csv(graph)
    raise UnsupportedEstimatorError("export_graph", fmt)


def read_edge_list(text: str) -> list[Edge]:
    """Parse an edge-list CSV written by :func:`export_graph`.

    Raises
    ------
    InputFormatError
        If the header or a weight is malformed.
    """
    try:
        frame = pd.read_csv(
            io.StringIO(text), dtype={"source": str, "target": str, "mi": float}
        )
    except (ValueError, pd.errors.ParserError) as e:
        raise InputFormatError("edge list", str(e)) from e
    if list(frame.columns) != EDGE_LIST_COLUMNS:
        raise InputFormatError("edge list", f"expected header {EDGE_LIST_COLUMNS}")
    return [
        (str(row.source), str(row.target), float(row.mi))
        for row in frame.itertuples(index=False)
    ]
