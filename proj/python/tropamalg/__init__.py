from ._tropamalg import (
    DomainError,
    FlagFan,
    LatticeMap,
    Matroid,
    WeightedChainFan,
    bergman_fan,
    check_balancing,
    compose,
    decide_amalgam,
    degree,
    fans_equal,
    fibre_product,
    graph_correspondence,
    graph_correspondence_direct,
    matroid_from_degree1_fan,
    oracle_proper_amalgam,
    product,
    pushforward,
    weil_divisor,
)

__all__ = [
    "DomainError",
    "FlagFan",
    "LatticeMap",
    "Matroid",
    "WeightedChainFan",
    "bergman_fan",
    "check_balancing",
    "compose",
    "decide_amalgam",
    "degree",
    "fans_equal",
    "fibre_product",
    "graph_correspondence",
    "graph_correspondence_direct",
    "matroid_from_degree1_fan",
    "oracle_proper_amalgam",
    "product",
    "pushforward",
    "weil_divisor",
]
