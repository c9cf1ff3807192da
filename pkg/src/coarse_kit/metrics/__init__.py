# Metrics Package - Infinito-metricas, bolas y metrizacion de cadenas
#
# Modulos:
#   ext_metric.py  - ExtMetric, diametros, familias de bolas, uniones disjuntas, ventanas Z^n
#   chains.py      - ScaleChain, generate_chain, metrize, reporte de equivalencia

from coarse_kit.metrics.ext_metric import (
    INF,
    ExtMetric,
    RadiusFunction,
    BoxWindow,
    diameter,
    is_uniformly_bounded,
    ball,
    ball_family,
    sublinear_ball_family,
    linear_radius,
    disjoint_union,
    path_metric,
    finite_components,
    scale_pair_family,
    triangle_violations,
    uniformity_bound,
)
from coarse_kit.metrics.chains import (
    ScaleChain,
    generate_chain,
    metrize,
    chain_metric_equivalence,
    sharpened_triangle_violations,
)

__all__ = [
    "INF", "ExtMetric", "RadiusFunction", "BoxWindow", "diameter",
    "is_uniformly_bounded", "ball", "ball_family", "sublinear_ball_family",
    "linear_radius", "disjoint_union", "path_metric", "finite_components",
    "scale_pair_family", "triangle_violations", "uniformity_bound",
    "ScaleChain", "generate_chain", "metrize", "chain_metric_equivalence",
    "sharpened_triangle_violations",
]
