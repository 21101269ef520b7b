"""Graph analytics for line-based transit networks.

Build a validated station graph, compute exact centrality measures
(degree, closeness, eccentricity, node and edge betweenness), rank
stations, summarize lines, and evaluate topology-change scenarios.
"""

from .analytics import (
    DIRECTIONS,
    LineSummary,
    RankedEntry,
    RankedList,
    line_summary,
    rank,
    rank_correlation,
    top_count,
    top_fraction,
)
from .centrality import (
    CentralityTable,
    DistanceRow,
    all_measures,
    betweenness,
    bfs_row,
    closeness,
    eccentricity,
    edge_betweenness,
)
from .errors import (
    AnalysisError,
    DisconnectedError,
    NetcentralError,
    ParseError,
    UsageError,
    ValidationError,
)
from .ingestion import (
    NetworkDocument,
    document_to_network,
    load_bundled_tusrs,
    parse_network,
    serialize_network,
)
from .model import (
    Line,
    Link,
    Station,
    StationClass,
    TransitNetwork,
    build_network,
    class_census,
    classify_station,
    degree,
)
from .oracle import oracle_measures
from .scenario import (
    AddLink,
    MergeStations,
    RemoveLink,
    Scenario,
    ScenarioDiff,
    apply_scenario,
    scenario_diff,
)

__version__ = "0.1.0"

__all__ = [
    "AddLink",
    "AnalysisError",
    "CentralityTable",
    "DIRECTIONS",
    "DisconnectedError",
    "DistanceRow",
    "Line",
    "LineSummary",
    "Link",
    "MergeStations",
    "NetcentralError",
    "NetworkDocument",
    "ParseError",
    "RankedEntry",
    "RankedList",
    "RemoveLink",
    "Scenario",
    "ScenarioDiff",
    "Station",
    "StationClass",
    "TransitNetwork",
    "UsageError",
    "ValidationError",
    "all_measures",
    "apply_scenario",
    "betweenness",
    "bfs_row",
    "build_network",
    "class_census",
    "classify_station",
    "closeness",
    "degree",
    "document_to_network",
    "eccentricity",
    "edge_betweenness",
    "line_summary",
    "load_bundled_tusrs",
    "oracle_measures",
    "parse_network",
    "rank",
    "rank_correlation",
    "scenario_diff",
    "serialize_network",
    "top_count",
    "top_fraction",
]
