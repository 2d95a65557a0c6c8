"""Temperley-Lieb relations for the Jones operators on path spaces.

Rescaling every cell constant so that |c|**2 = beta turns U_i into
beta * M_i, where M_i is the beta-independent part of the operator.  The
relations are therefore checked as matrix identities whose entries are
polynomials in beta, and only then evaluated at the requested value.  This
keeps the check exact for values of beta (such as sqrt(3)) that live outside
the coefficient field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import sympy

from .graph import Graph
from .ladder import DEFAULT_CELLS, jones
from .pathspace import ElementaryPath, PathVector, enumerate_paths
from .scalar import Scalar


class BetaPolynomial:
    """Univariate polynomial in beta with rational coefficients (lowest degree first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def beta(cls) -> BetaPolynomial:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> BetaPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, BetaPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == BetaPolynomial.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return BetaPolynomial([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return BetaPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return BetaPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BetaPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = BetaPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation in any ring containing the rationals (Scalar, Fraction, ...)."""
        acc = 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mod__(self, divisor: BetaPolynomial) -> BetaPolynomial:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = divisor.coeffs
        while len(rem) >= len(d) and rem:
            factor = rem[-1] / d[-1]
            shift = len(rem) - len(d)
            for i, c in enumerate(d):
                rem[shift + i] -= factor * c
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return BetaPolynomial(rem)

    def to_sympy(self, symbol=None):
        x = symbol if symbol is not None else sympy.Symbol("beta")
        return sum((sympy.Rational(c.numerator, c.denominator) * x ** i
                    for i, c in enumerate(self.coeffs)), sympy.Integer(0))

    def nonnegative_real_roots(self) -> list:
        """Exact nonnegative real roots (distinct, ascending) as sympy numbers."""
        if self.is_zero():
            raise ValueError("the zero polynomial vanishes everywhere")
        x = sympy.Symbol("beta")
        roots = sympy.Poly(self.to_sympy(x), x).real_roots()
        out = []
        for r in roots:
            r = sympy.nsimplify(r) if r.is_algebraic else r
            if r >= 0 and not any(sympy.simplify(r - s) == 0 for s in out):
                out.append(r)
        return sorted(out, key=float)

    def __repr__(self):
        return f"BetaPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        return str(sympy.expand(self.to_sympy()))


def _as_poly(x) -> BetaPolynomial:
    if isinstance(x, BetaPolynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return BetaPolynomial.constant(x)
    raise TypeError(f"cannot use {type(x).__name__} as a polynomial")


class PolyMatrix:
    """Sparse square matrix over BetaPolynomial, stored column-wise: ``{col: {row: poly}}``."""

    def __init__(self, cols: dict | None = None):
        self.cols = {c: {r: p for r, p in col.items() if p} for c, col in (cols or {}).items()}
        self.cols = {c: col for c, col in self.cols.items() if col}

    @classmethod
    def identity(cls, basis) -> PolyMatrix:
        one = BetaPolynomial.constant(1)
        return cls({b: {b: one} for b in basis})

    def scale(self, poly) -> PolyMatrix:
        poly = _as_poly(poly)
        return PolyMatrix({c: {r: p * poly for r, p in col.items()} for c, col in self.cols.items()})

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        cols = {c: dict(col) for c, col in self.cols.items()}
        for c, col in other.cols.items():
            tgt = cols.setdefault(c, {})
            for r, p in col.items():
                tgt[r] = tgt[r] + p if r in tgt else p
        return PolyMatrix(cols)

    def __neg__(self) -> PolyMatrix:
        return self.scale(-1)

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        cols = {}
        for c, col in other.cols.items():
            out: dict = {}
            for k, pk in col.items():
                for r, prk in self.cols.get(k, {}).items():
                    term = prk * pk
                    out[r] = out[r] + term if r in out else term
            cols[c] = out
        return PolyMatrix(cols)

    def column(self, c) -> dict:
        return self.cols.get(c, {})


BetaValue = Union[Scalar, BetaPolynomial]


def _vanishes(poly: BetaPolynomial, beta: BetaValue) -> bool:
    if isinstance(beta, BetaPolynomial):
        # beta given as a root of an irreducible minimal polynomial
        return (poly % beta).is_zero()
    return Scalar.coerce(poly(Scalar.coerce(beta))).is_zero()


def _evaluate(poly: BetaPolynomial, beta: BetaValue):
    if isinstance(beta, BetaPolynomial):
        return str(poly % beta)
    return str(poly(Scalar.coerce(beta)))


def jones_matrix(g: Graph, n: int, position: int) -> PolyMatrix:
    """U_position on the n-step basis as beta * M with beta-free M."""
    beta0 = DEFAULT_CELLS.beta
    beta = BetaPolynomial.beta()
    cols = {}
    for p in enumerate_paths(g, n):
        image = jones(g, position, PathVector.of(p)) * beta0.inverse()
        col = {}
        for q, c in image.items():
            if not c.is_rational():
                raise ValueError("normalised Jones operator has irrational entries")
            col[q] = beta * c.coefficients[0]
        cols[p] = col
    return PolyMatrix(cols)


# each relation maps (U, i, j) -> residual matrix that must vanish
def _tl1(U, i):
    beta = BetaPolynomial.beta()
    return U[i] @ U[i] - U[i].scale(beta)


def _tl2(U, i):
    return (U[i] @ U[i + 1] @ U[i] - U[i]) - (U[i + 1] @ U[i] @ U[i + 1] - U[i + 1])


def _tl3(U, i, j):
    return U[i] @ U[j] - U[j] @ U[i]


def _tl4(U, i):
    left = U[i] - U[i + 2] @ U[i + 1] @ U[i] + U[i + 1]
    right = U[i + 1] @ U[i + 2] @ U[i + 1] - U[i + 1]
    return left @ right


@dataclass
class TLReport:
    relation: str
    n: int
    positions: list = field(default_factory=list)
    status: str = "pass"
    witness: dict | None = None
    informational: bool = False

    def to_json(self) -> dict:
        return {"relation": self.relation, "n": self.n, "positions": [list(p) for p in self.positions],
                "status": self.status, "witness": self.witness, "informational": self.informational}


def _first_failure(residual: PolyMatrix, basis, beta: BetaValue):
    for p in basis:
        col = residual.column(p)
        bad = {q: poly for q, poly in col.items() if not _vanishes(poly, beta)}
        if bad:
            return {"path": str(p),
                    "difference": {str(q): _evaluate(poly, beta) for q, poly in sorted(bad.items())}}
    return None


def check_tl(g: Graph, n: int, beta: BetaValue) -> list[TLReport]:
    """Check TL1-TL4 on the full n-step basis at every valid position.

    ``beta`` is either a field element or the minimal polynomial of an
    algebraic number outside the field.  Relations with no valid position for
    this ``n`` are reported with status ``"vacuous"``.
    """
    if n < 2:
        raise ValueError("TL relations need paths with at least two steps")
    basis = enumerate_paths(g, n)
    top = n - 2
    U = {i: jones_matrix(g, n, i) for i in range(top + 1)}
    informational = g.N != 3
    plans = {
        "TL1": [(i,) for i in range(top + 1)],
        "TL2": [(i,) for i in range(top)],
        "TL3": [(i, j) for i in range(top + 1) for j in range(top + 1) if j - i > 1],
        "TL4": [(i,) for i in range(top - 1)],
    }
    funcs = {"TL1": _tl1, "TL2": _tl2, "TL3": _tl3, "TL4": _tl4}
    reports = []
    for name, positions in plans.items():
        rep = TLReport(name, n, positions, "vacuous" if not positions else "pass",
                       informational=informational)
        for pos in positions:
            witness = _first_failure(funcs[name](U, *pos), basis, beta)
            if witness is not None:
                rep.status = "fail"
                rep.witness = {"positions": list(pos), **witness}
                break
        reports.append(rep)
    return reports


def tl4_scalar_polynomial() -> BetaPolynomial:
    """TL4 residual when every U_i acts as beta times the identity."""
    one = {0: {0: BetaPolynomial.constant(1)}}
    U = {i: PolyMatrix(one).scale(BetaPolynomial.beta()) for i in range(3)}
    return _tl4(U, 0).column(0)[0]


def tl4_scalar_roots() -> tuple[BetaPolynomial, list]:
    poly = tl4_scalar_polynomial()
    return poly, poly.nonnegative_real_roots()


@dataclass
class ScalarActionReport:
    n: int
    paths: int
    positions: int
    status: str
    failures: list = field(default_factory=list)


def scalar_action_check(g: Graph, n: int) -> ScalarActionReport:
    """Confirm jones(i) == beta * identity on every n-step basis path."""
    beta = DEFAULT_CELLS.beta
    basis = enumerate_paths(g, n)
    positions = range(n - 1)
    failures = []
    for p in basis:
        v = PathVector.of(p)
        for i in positions:
            if jones(g, i, v) != v * beta:
                failures.append((str(p), i))
    return ScalarActionReport(n, len(basis), len(positions), "fail" if failures else "pass", failures)
