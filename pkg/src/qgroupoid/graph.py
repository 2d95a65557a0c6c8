"""SU(N) A1 graphs and quantum-number utilities.

The A1 graph of SU(N) has N vertices.  Generator ``k`` (1 <= k <= N-1)
moves a vertex forward by ``k`` modulo N, so every ordered pair of distinct
vertices is joined by exactly one oriented edge.  For N = 3 generator 1 is
the fundamental representation (forward steps) and generator 2 its
conjugate (backward steps); vertices 0, 1, 2 display as 1, 3, 3̄.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .errors import DomainError, InvalidOrderError

# generators are plain ints 1..N-1
Generator = int
Vertex = int

SU3_ALIASES = ("1", "3", "3̄")


@dataclass(frozen=True)
class Graph:
    n_vertices: int

    def __post_init__(self):
        if not isinstance(self.n_vertices, int) or self.n_vertices < 2:
            raise InvalidOrderError(f"graph order must be an integer >= 2, got {self.n_vertices!r}")

    @property
    def N(self) -> int:
        return self.n_vertices

    @property
    def vertices(self) -> range:
        return range(self.n_vertices)

    @property
    def generators(self) -> range:
        return range(1, self.n_vertices)

    def check_vertex(self, v: Vertex) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n_vertices:
            raise DomainError(f"vertex {v!r} out of range for N={self.n_vertices}")

    def check_generator(self, k: Generator) -> None:
        if not isinstance(k, int) or not 1 <= k < self.n_vertices:
            raise DomainError(f"generator {k!r} out of range for N={self.n_vertices}")

    def step_target(self, v: Vertex, gen: Generator) -> Vertex:
        self.check_vertex(v)
        self.check_generator(gen)
        return (v + gen) % self.n_vertices

    def generator_between(self, u: Vertex, v: Vertex) -> Generator:
        """The unique generator carrying ``u`` to ``v`` (u != v)."""
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise DomainError("no edge joins a vertex to itself")
        return (v - u) % self.n_vertices

    def conjugate(self, gen: Generator) -> Generator:
        return conjugate_generator(self.n_vertices, gen)

    def edges(self) -> list[tuple[Vertex, Generator, Vertex]]:
        """All directed edges as (source, generator, target), ordered by generator then source."""
        N = self.n_vertices
        return [(v, k, (v + k) % N) for k in self.generators for v in self.vertices]

    def vertex_label(self, v: Vertex) -> str:
        if self.n_vertices == 3:
            return SU3_ALIASES[v]
        return str(v + 1)


def build_a1(N: int) -> Graph:
    """Build the A1 graph of SU(N)."""
    return Graph(N)


def step_target(g: Graph, v: Vertex, gen: Generator) -> Vertex:
    return g.step_target(v, gen)


def conjugate_generator(N: int, gen: Generator) -> Generator:
    if not 1 <= gen < N:
        raise DomainError(f"generator {gen!r} out of range for N={N}")
    return N - gen


def quantum_integer(n: int, kappa: int) -> complex:
    """[n]_q at q = exp(i*pi/kappa)."""
    if kappa < 2:
        raise DomainError("kappa must be >= 2")
    q = cmath.exp(1j * cmath.pi / kappa)
    return (q ** n - q ** (-n)) / (q - 1 / q)


@dataclass(frozen=True)
class WeightLabel:
    """SU(3) weight (lambda1, lambda2) at level l; kappa = N + l."""

    lambda1: int
    lambda2: int
    level: int
    N: int = 3

    def __post_init__(self):
        if self.lambda1 < 0 or self.lambda2 < 0:
            raise DomainError("Dynkin labels must be nonnegative")
        if self.lambda1 + self.lambda2 > self.level:
            raise DomainError("weight lies outside the level-l alcove")

    @property
    def kappa(self) -> int:
        return self.N + self.level


def qdim(weight: WeightLabel) -> float:
    k = weight.kappa
    l1, l2 = weight.lambda1, weight.lambda2
    value = (quantum_integer(l1 + 1, k) * quantum_integer(l2 + 1, k)
             * quantum_integer(l1 + l2 + 2, k)) / quantum_integer(2, k)
    return value.real
