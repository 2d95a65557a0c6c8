"""Exact-arithmetic construction of the SU(N) A1 quantum groupoid."""

from .bialgebra import AlgebraElement, EndoVector, GradedEndo, QuantumGroupoid, TensorElement
from .graph import Graph, build_a1
from .pathspace import ElementaryPath, PathVector, make_path, parse_path
from .scalar import Scalar

__all__ = ["AlgebraElement", "EndoVector", "ElementaryPath", "Graph", "GradedEndo", "PathVector",
           "QuantumGroupoid", "Scalar", "TensorElement", "build_a1", "make_path", "parse_path"]
__version__ = "0.1.0"
