"""Creation/annihilation operators on path spaces and the ladder decomposition.

Two families of two-step back-tracks exist on an A1 graph:

* ``Triangle(k)`` (k = 0..N-3) replaces an edge u -> w by a two-edge detour
  u -> j -> w.  The N-2 admissible intermediates are ordered by the
  generator of their first step, and kind ``k`` picks the k-th of them.
* ``Loop(k)`` (k = 0..N-2) inserts the two-step loop u -> u+k+1 -> u.

For N = 3 these are the three operators T (triangle), F (loop starting with
a forward step) and B (loop starting with a backward step).

Every operator carries a cell constant.  The default gauge uses the real
positive value theta = sqrt(beta) with beta = sqrt(2) for all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ArityError, GradingError, PositionError
from .graph import Graph
from .pathspace import ElementaryPath, PathVector, enumerate_paths, inner_product
from .scalar import ONE, THETA, Scalar


@dataclass(frozen=True, order=True)
class OperatorKind:
    family: str  # "triangle" or "loop"
    index: int

    @property
    def added_steps(self) -> int:
        return 1 if self.family == "triangle" else 2

    def label(self, N: int | None = None) -> str:
        if N == 3:
            return {("triangle", 0): "T", ("loop", 0): "F", ("loop", 1): "B"}[(self.family, self.index)]
        return f"{'T' if self.family == 'triangle' else 'L'}{self.index}"

    def __str__(self) -> str:
        return self.label()


def Triangle(k: int) -> OperatorKind:
    return OperatorKind("triangle", k)


def Loop(k: int) -> OperatorKind:
    return OperatorKind("loop", k)


# SU(3) names
T = Triangle(0)
F = Loop(0)
B = Loop(1)

LadderWord = tuple  # tuple[OperatorKind, ...], innermost operator first


def operator_kinds(g: Graph) -> list[OperatorKind]:
    return [Triangle(k) for k in range(g.N - 2)] + [Loop(k) for k in range(g.N - 1)]


def kind_from_label(g: Graph, label: str) -> OperatorKind:
    for k in operator_kinds(g):
        if k.label(g.N) == label or str(k) == label:
            return k
    raise ValueError(f"unknown operator kind {label!r} for N={g.N}")


@dataclass(frozen=True)
class CellConstants:
    """Creation coefficient shared by every kind; annihilation uses its conjugate."""

    creation: Scalar = THETA

    @property
    def annihilation(self) -> Scalar:
        return self.creation.conjugate()

    @property
    def beta(self) -> Scalar:
        return self.creation * self.annihilation


DEFAULT_CELLS = CellConstants()


def _triangle_splits(N: int, m: int) -> list[int]:
    """First-step generators of the two-edge detours replacing an edge of generator m."""
    return [a for a in range(1, N) if a != m]


def segment_kind(g: Graph, u: int, j: int, w: int) -> OperatorKind:
    """Kind of the two-step segment u -> j -> w."""
    N = g.N
    a = (j - u) % N
    if u == w:
        return Loop(a - 1)
    return Triangle(_triangle_splits(N, (w - u) % N).index(a))


def _create_path(N: int, kind: OperatorKind, pos: int, p: ElementaryPath) -> ElementaryPath:
    n = len(p) - 1
    if kind.family == "triangle":
        if n == 0:
            raise ArityError("a triangle operator cannot act on a path with zero steps")
        if not 0 <= pos < n:
            raise PositionError(f"triangle position {pos} outside 0..{n - 1}")
        u, w = p[pos], p[pos + 1]
        j = (u + _triangle_splits(N, (w - u) % N)[kind.index]) % N
        return ElementaryPath(p[:pos + 1] + (j,) + p[pos + 1:])
    if not 0 <= pos <= n:
        raise PositionError(f"loop position {pos} outside 0..{n}")
    u = p[pos]
    return ElementaryPath(p[:pos + 1] + ((u + kind.index + 1) % N, u) + p[pos + 1:])


def _annihilate_path(N: int, kind: OperatorKind, pos: int, p: ElementaryPath) -> ElementaryPath | None:
    n = len(p) - 1
    if not 0 <= pos <= n - 2:
        raise PositionError(f"annihilation position {pos} outside 0..{n - 2}")
    u, j, w = p[pos], p[pos + 1], p[pos + 2]
    a = (j - u) % N
    if kind.family == "triangle":
        if u == w or _triangle_splits(N, (w - u) % N)[kind.index] != a:
            return None
        return ElementaryPath(p[:pos + 1] + p[pos + 2:])
    if u != w or a != kind.index + 1:
        return None
    return ElementaryPath(p[:pos + 1] + p[pos + 3:])


def _check_kind(g: Graph, kind: OperatorKind) -> None:
    limit = g.N - 2 if kind.family == "triangle" else g.N - 1
    if kind.family not in ("triangle", "loop") or not 0 <= kind.index < limit:
        raise ValueError(f"operator kind {kind} does not exist for N={g.N}")


def create(g: Graph, kind: OperatorKind, position: int, v: PathVector,
           cells: CellConstants = DEFAULT_CELLS) -> PathVector:
    _check_kind(g, kind)
    c = cells.creation
    return PathVector([(_create_path(g.N, kind, position, p), a * c) for p, a in v.items()])


def annihilate(g: Graph, kind: OperatorKind, position: int, v: PathVector,
               cells: CellConstants = DEFAULT_CELLS) -> PathVector:
    _check_kind(g, kind)
    c = cells.annihilation
    out = []
    for p, a in v.items():
        q = _annihilate_path(g.N, kind, position, p)
        if q is not None:
            out.append((q, a * c))
    return PathVector(out)


def jones(g: Graph, position: int, v: PathVector, cells: CellConstants = DEFAULT_CELLS) -> PathVector:
    """U_i: sum over kinds of create(k, i) after annihilate(k, i)."""
    total = PathVector.zero()
    for kind in operator_kinds(g):
        a = annihilate(g, kind, position, v, cells)
        if a:
            total = total + create(g, kind, position, a, cells)
    return total


@dataclass
class CheckReport:
    name: str
    status: str
    instances: int
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def cc_dagger_check(g: Graph, position: int = 0, max_steps: int = 2,
                    cells: CellConstants = DEFAULT_CELLS,
                    kinds: Sequence[OperatorKind] | None = None) -> CheckReport:
    """Check annihilate(i) . create(k) == beta * delta_ik on every basis path of up to ``max_steps`` steps."""
    beta = cells.beta
    kinds = list(kinds) if kinds is not None else operator_kinds(g)
    instances = 0
    for n in range(max_steps + 1):
        for p in enumerate_paths(g, n):
            vec = PathVector.of(p)
            for k in kinds:
                if (k.family == "triangle" and not 0 <= position < n) or not 0 <= position <= n:
                    continue
                created = create(g, k, position, vec, cells)
                for i in kinds:
                    got = annihilate(g, i, position, created, cells)
                    want = vec * beta if i == k else PathVector.zero()
                    instances += 1
                    if got != want:
                        return CheckReport("cc_dagger", "fail", instances,
                                           {"path": str(p), "create": str(k), "annihilate": str(i)})
    return CheckReport("cc_dagger", "pass", instances)


# -- decomposition --------------------------------------------------------

@lru_cache(maxsize=None)
def _decompose_path(N: int, p: ElementaryPath, cells: CellConstants) -> tuple:
    if len(p) <= 2:
        return ((((), p), ONE),)
    g = Graph(N)
    inv_beta = cells.beta.inverse()
    acc: dict = {}
    vec = PathVector.of(p)
    for kind in operator_kinds(g):
        reduced = annihilate(g, kind, 0, vec, cells)
        for q, a in reduced.items():
            for (word, xi), c in _decompose_path(N, q, cells):
                key = (word + (kind,), xi)
                acc[key] = acc.get(key, Scalar()) + a * c * inv_beta
    return tuple((k, c) for k, c in acc.items() if c)


def decompose(g: Graph, v: PathVector, cells: CellConstants = DEFAULT_CELLS) -> list[tuple[LadderWord, ElementaryPath, Scalar]]:
    """Coordinates of ``v`` over ladder words (peeled at position 0) applied to essential paths.

    Returns ``[(word, xi, c)]`` with ``v == sum(c * word(xi))``.
    """
    counts = v.step_counts()
    if len(counts) > 1:
        raise GradingError(f"vector mixes step counts {sorted(counts)}")
    acc: dict = {}
    for p, a in v.items():
        for key, c in _decompose_path(g.N, p, cells):
            acc[key] = acc.get(key, Scalar()) + a * c
    terms = [(w, xi, c) for (w, xi), c in acc.items() if c]
    terms.sort(key=lambda t: (len(t[0]), t[0], tuple(t[1])))
    return terms


def apply_word(g: Graph, word: Iterable[OperatorKind], xi: PathVector,
               cells: CellConstants = DEFAULT_CELLS) -> PathVector:
    v = xi
    for kind in word:
        v = create(g, kind, 0, v, cells)
    return v


def reconstruct(g: Graph, terms, cells: CellConstants = DEFAULT_CELLS) -> PathVector:
    total = PathVector.zero()
    for word, xi, c in terms:
        total = total + apply_word(g, word, PathVector.of(xi), cells) * c
    return total


def word_inner_product(w1: LadderWord, xi: ElementaryPath, w2: LadderWord, omega: ElementaryPath,
                       cells: CellConstants = DEFAULT_CELLS) -> Scalar:
    if tuple(w1) != tuple(w2) or tuple(xi) != tuple(omega):
        return Scalar()
    return cells.beta ** len(w1)


def expanded_word_inner_product(g: Graph, w1, xi, w2, omega, cells: CellConstants = DEFAULT_CELLS) -> Scalar:
    """The same inner product computed by expanding both vectors in the path basis."""
    a = apply_word(g, w1, PathVector.of(xi), cells)
    b = apply_word(g, w2, PathVector.of(omega), cells)
    return inner_product(a, b)


def format_word(g: Graph, word: LadderWord) -> str:
    if not word:
        return "1"
    # outermost operator written leftmost
    return "".join(k.label(g.N) + "†" for k in reversed(word))
