"""Free vector space of paths on an A1 graph, with exact coefficients."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .errors import MalformedPathError
from .graph import Graph
from .scalar import ONE, ZERO, Scalar

LengthTuple = tuple  # (N-1)-tuple of generator counts


class LinComb:
    """Immutable finite formal linear combination ``{key: Scalar}``.

    Zero coefficients are pruned on construction, so two combinations are
    equal exactly when their dictionaries are.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Hashable, Scalar] | Iterable[tuple[Hashable, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for key, coeff in items:
            coeff = Scalar.coerce(coeff)
            acc[key] = acc[key] + coeff if key in acc else coeff
        self._terms = {k: c for k, c in acc.items() if not c.is_zero()}

    @classmethod
    def _wrap(cls, terms: dict):
        # caller guarantees no zero coefficients
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = ONE):
        return cls([(key, coeff)])

    @classmethod
    def zero(cls):
        return cls._wrap({})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key: Hashable) -> Scalar:
        return self._terms.get(key, ZERO)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, LinComb):
            if other == 0:
                return self
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            if k in acc:
                s = acc[k] + c
                if s.is_zero():
                    del acc[k]
                else:
                    acc[k] = s
            else:
                acc[k] = c
        return type(self)._wrap(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, alpha):
        if isinstance(alpha, LinComb):
            return NotImplemented
        alpha = Scalar.coerce(alpha)
        if alpha.is_zero():
            return type(self).zero()
        return type(self)._wrap({k: c * alpha for k, c in self._terms.items()})

    __rmul__ = __mul__

    def map_keys(self, f: Callable[[Hashable], Hashable | None], conj: bool = False):
        """Apply a key map (``None`` drops the term); optionally conjugate coefficients."""
        out = []
        for k, c in self._terms.items():
            nk = f(k)
            if nk is not None:
                out.append((nk, c.conjugate() if conj else c))
        return type(self)(out)

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kc: sort_key(kc[0]))

    def __repr__(self):
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"({c})*{format_key(k)}" for k, c in self.sorted_items())
        return f"{type(self).__name__}({body})"


def sort_key(key):
    """Deterministic ordering for nested tuples of vertex sequences."""
    if isinstance(key, tuple) and key and isinstance(key[0], tuple):
        return tuple(sort_key(k) for k in key)
    return (len(key), tuple(key)) if isinstance(key, tuple) else key


def format_key(key) -> str:
    if isinstance(key, ElementaryPath):
        return str(key)
    if isinstance(key, tuple):
        return "(" + " ⊗ ".join(format_key(k) for k in key) + ")"
    return str(key)


class ElementaryPath(tuple):
    """A vertex sequence (v0, ..., vn).  Build validated instances with :func:`make_path`."""

    __slots__ = ()

    @property
    def steps(self) -> int:
        return len(self) - 1

    @property
    def first(self) -> int:
        return self[0]

    @property
    def last(self) -> int:
        return self[-1]

    def reversed(self) -> ElementaryPath:
        return ElementaryPath(self[::-1])

    def __str__(self) -> str:
        return ",".join(str(v) for v in self)

    def __repr__(self) -> str:
        return f"[{','.join(str(v) for v in self)}]"


class PathVector(LinComb):
    """Finite linear combination of elementary paths."""

    __slots__ = ()

    @classmethod
    def of(cls, path, coeff: Scalar = ONE) -> PathVector:
        return cls([(ElementaryPath(path), coeff)])

    def step_counts(self) -> set[int]:
        return {p.steps for p in self.keys()}


def make_path(g: Graph, vertices: Iterable[int]) -> ElementaryPath:
    vs = tuple(vertices)
    if not vs:
        raise MalformedPathError("a path needs at least one vertex")
    for v in vs:
        if not isinstance(v, int) or not 0 <= v < g.N:
            raise MalformedPathError(f"vertex {v!r} out of range for N={g.N}")
    for u, v in zip(vs, vs[1:]):
        if u == v:
            raise MalformedPathError(f"no edge joins {u} to itself")
    return ElementaryPath(vs)


def parse_path(g: Graph, literal: str) -> ElementaryPath:
    """Parse the literal syntax ``"0,1,2"``."""
    try:
        vs = [int(tok) for tok in literal.split(",")]
    except ValueError as exc:
        raise MalformedPathError(f"bad path literal {literal!r}") from exc
    return make_path(g, vs)


def length(g: Graph, p: ElementaryPath) -> LengthTuple:
    """Per-generator step counts; entry k-1 counts steps along generator k."""
    N = g.N
    counts = [0] * (N - 1)
    for u, v in zip(p, p[1:]):
        counts[(v - u) % N - 1] += 1
    return tuple(counts)


def generator_sequence(g: Graph, p: ElementaryPath) -> tuple[int, ...]:
    N = g.N
    return tuple((v - u) % N for u, v in zip(p, p[1:]))


def endpoints(p: ElementaryPath) -> tuple[int, int]:
    return p[0], p[-1]


def inner_product(u: PathVector, v: PathVector) -> Scalar:
    """Sesquilinear (conjugate-linear in the first slot); elementary paths orthonormal."""
    if len(u) > len(v):
        small, large, conj_small = v, u, False
    else:
        small, large, conj_small = u, v, True
    total = ZERO
    for p, c in small.items():
        d = large.coefficient(p)
        if not d.is_zero():
            total = total + (c.conjugate() * d if conj_small else c * d.conjugate())
    return total


def concat_paths(p: ElementaryPath, q: ElementaryPath) -> ElementaryPath | None:
    if p[-1] != q[0]:
        return None
    return ElementaryPath(p + q[1:])


def concat(u: PathVector, v: PathVector) -> PathVector:
    out = []
    for p, a in u.items():
        for q, b in v.items():
            r = concat_paths(p, q)
            if r is not None:
                out.append((r, a * b))
    return PathVector(out)


def star(u: PathVector) -> PathVector:
    return u.map_keys(ElementaryPath.reversed, conj=True)


@lru_cache(maxsize=None)
def _paths(N: int, n: int) -> tuple[ElementaryPath, ...]:
    if n == 0:
        return tuple(ElementaryPath((v,)) for v in range(N))
    out = []
    for p in _paths(N, n - 1):
        last = p[-1]
        for w in range(N):
            if w != last:
                out.append(ElementaryPath(p + (w,)))
    return tuple(out)


def enumerate_paths(g: Graph, n: int) -> tuple[ElementaryPath, ...]:
    """Lexicographically ordered basis of the n-step path space."""
    if n < 0:
        raise ValueError("step count must be nonnegative")
    return _paths(g.N, n)


def paths_by_length(g: Graph, n: int) -> dict[LengthTuple, list[ElementaryPath]]:
    groups: dict = {}
    for p in enumerate_paths(g, n):
        groups.setdefault(length(g, p), []).append(p)
    return groups


def is_essential(p: ElementaryPath) -> bool:
    return p.steps <= 1


def enumerate_essential(g: Graph) -> dict[LengthTuple, list[ElementaryPath]]:
    """Essential basis grouped by length tuple: vertices first, then edges per generator.

    Within a group paths are ordered by starting vertex.
    """
    N = g.N
    zero = (0,) * (N - 1)
    groups = {zero: [ElementaryPath((v,)) for v in g.vertices]}
    for k in g.generators:
        t = tuple(1 if i == k - 1 else 0 for i in range(N - 1))
        groups[t] = [ElementaryPath((v, (v + k) % N)) for v in g.vertices]
    return groups


def essential_paths(g: Graph) -> list[ElementaryPath]:
    return [p for group in enumerate_essential(g).values() for p in group]


def essential_between(g: Graph, u: int, v: int) -> ElementaryPath:
    """The unique essential path from ``u`` to ``v``."""
    return ElementaryPath((u,)) if u == v else ElementaryPath((u, v))
