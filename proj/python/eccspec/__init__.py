"""Eccentricity matrices of graphs: invariants, spectra and bound checks."""

from ._core import (
    ContractError,
    DisconnectedError,
    Graph,
    GraphError,
    InvariantError,
    NumericError,
    ParseError,
    bounds,
    canonical_form,
    char_poly,
    check_ids,
    complete,
    complete_bipartite,
    complete_multipartite,
    compute,
    connected_graphs,
    crown,
    cycle,
    determinant,
    distance_matrix,
    eccentricity_matrix,
    eigenvalues,
    family,
    is_connected,
    path,
    random_connected_graph,
    spectrum,
    star,
    trees,
    verify,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
