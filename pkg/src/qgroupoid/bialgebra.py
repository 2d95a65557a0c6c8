"""The weak *-bialgebra of graded endomorphisms of essential paths.

Basis elements are pairs ``xi ⊗ xi'`` of essential paths with equal length
tuples.  The product concatenates both legs and projects back onto essential
paths through the ladder decomposition; the coproduct splits through the
essential basis of the matching grade; the counit is the path inner product.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple

from .errors import DomainError, UnsupportedVariantError
from .graph import Graph, build_a1
from .ladder import DEFAULT_CELLS, CellConstants, _decompose_path
from .pathspace import (ElementaryPath, LinComb, concat_paths, enumerate_essential,
                        enumerate_paths, length, paths_by_length)
from .scalar import ONE, ZERO, Scalar


class GradedEndo(NamedTuple):
    left: ElementaryPath
    right: ElementaryPath


class EndoVector(LinComb):
    """Element of the graded endomorphisms of the full path space (keys need not be essential)."""

    __slots__ = ()

    @classmethod
    def of(cls, left, right, coeff: Scalar = ONE):
        return cls([(GradedEndo(ElementaryPath(left), ElementaryPath(right)), coeff)])


class AlgebraElement(EndoVector):
    """Element of A: keys are graded pairs of essential paths."""

    __slots__ = ()


class TensorElement(LinComb):
    """Element of a tensor power of endomorphisms; keys are tuples of GradedEndo."""

    __slots__ = ()

    @property
    def arity(self) -> int:
        for k in self.keys():
            return len(k)
        return 0


def tensor(*factors: LinComb) -> TensorElement:
    """Tensor product of linear combinations (keys of tensor factors are flattened)."""
    out = []
    for combo in itertools.product(*(f.items() for f in factors)):
        key: tuple = ()
        coeff = ONE
        for f, (k, c) in zip(factors, combo):
            key += k if isinstance(f, TensorElement) else (k,)
            coeff = coeff * c
        out.append((key, coeff))
    return TensorElement(out)


@dataclass(frozen=True)
class EndoLabel:
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}_{self.index}"

    def latex(self) -> str:
        fam = re.sub(r"\^\((\d+)\)", r"^{(\1)}", self.family)
        return f"{fam}_{{{self.index}}}"


def family_name(N: int, gen: int | None) -> str:
    if gen is None:
        return "z"
    if N == 3:
        return "x" if gen == 1 else "y"
    if N == 2:
        return "x"
    if 2 * gen <= N:
        return f"x^({gen})"
    return f"y^({N - gen})"


def family_generator(N: int, family: str) -> int | None:
    for gen in [None, *range(1, N)]:
        if family_name(N, gen) == family:
            return gen
    raise DomainError(f"unknown family {family!r} for N={N}")


def _uses_end_index(N: int, gen: int) -> bool:
    # conjugate families (y) are indexed by their final vertex
    return N > 2 and 2 * gen > N


class QuantumGroupoid:
    """The algebra A = End^gr(E) of the SU(N) A1 graph with all its structure maps."""

    def __init__(self, N: int | Graph, cells: CellConstants = DEFAULT_CELLS):
        self.graph = N if isinstance(N, Graph) else build_a1(N)
        self.N = self.graph.N
        self.cells = cells
        self.beta = cells.beta
        self.essential = enumerate_essential(self.graph)
        self.grade_of = {p: t for t, ps in self.essential.items() for p in ps}
        self.basis = [GradedEndo(a, b) for ps in self.essential.values() for a in ps for b in ps]
        self.basis_index = {k: i for i, k in enumerate(self.basis)}
        self._proj_cache: dict = {}
        self._prod_cache: dict = {}
        self._beta_pows = [ONE]

    # -- labels ----------------------------------------------------------

    def label(self, p: ElementaryPath) -> EndoLabel:
        N = self.N
        if len(p) == 1:
            return EndoLabel("z", p[0])
        gen = (p[1] - p[0]) % N
        idx = p[1] if _uses_end_index(N, gen) else p[0]
        return EndoLabel(family_name(N, gen), idx)

    def path_of_label(self, family: str, index: int) -> ElementaryPath:
        N = self.N
        gen = family_generator(N, family)
        i = index % N
        if gen is None:
            return ElementaryPath((i,))
        if _uses_end_index(N, gen):
            return ElementaryPath(((i + N - gen) % N, i))
        return ElementaryPath((i, (i + gen) % N))

    def endo_label(self, key: GradedEndo) -> str:
        return f"{self.label(key.left)}⊗{self.label(key.right)}"

    def parse_endo(self, text: str) -> GradedEndo:
        """Parse ``"x_0⊗x_1"`` (``*`` or ``(x)`` also accepted as the tensor sign)."""
        parts = re.split(r"⊗|\*|\(x\)", text.replace(" ", ""))
        if len(parts) != 2:
            raise DomainError(f"bad endomorphism label {text!r}")
        paths = []
        for part in parts:
            m = re.fullmatch(r"(.+)_(\d+)", part)
            if not m:
                raise DomainError(f"bad path label {part!r}")
            paths.append(self.path_of_label(m.group(1), int(m.group(2))))
        key = GradedEndo(*paths)
        if key not in self.basis_index:
            raise DomainError(f"{text!r} is not a graded endomorphism")
        return key

    def element(self, *labels: str) -> AlgebraElement:
        return AlgebraElement([(self.parse_endo(s), ONE) for s in labels])

    def format(self, x: LinComb) -> str:
        if not x:
            return "0"
        parts = []
        for k, c in x.sorted_items():
            if isinstance(k, GradedEndo):
                name = self._key_name(k)
            else:
                name = " ⊠ ".join(self._key_name(e) for e in k)
            parts.append(name if c == 1 else f"({c})·{name}")
        return " + ".join(parts)

    def _key_name(self, k: GradedEndo) -> str:
        if len(k.left) <= 2 and len(k.right) <= 2:
            return self.endo_label(k)
        return f"[{k.left}]⊗[{k.right}]"

    # -- helpers ---------------------------------------------------------

    def beta_power(self, n: int) -> Scalar:
        while len(self._beta_pows) <= n:
            self._beta_pows.append(self._beta_pows[-1] * self.beta)
        return self._beta_pows[n]

    def grade(self, p: ElementaryPath) -> tuple:
        return self.grade_of.get(p) or length(self.graph, p)

    def unit(self) -> AlgebraElement:
        zeros = self.essential[(0,) * (self.N - 1)]
        return AlgebraElement([(GradedEndo(v, u), ONE) for v in zeros for u in zeros])

    # -- projector -------------------------------------------------------

    def project_paths(self, eta: ElementaryPath, eta2: ElementaryPath) -> AlgebraElement:
        """P(eta ⊗ eta') for elementary paths."""
        key = (eta, eta2)
        hit = self._proj_cache.get(key)
        if hit is not None:
            return hit
        result = AlgebraElement.zero()
        if length(self.graph, eta) == length(self.graph, eta2):
            left = _decompose_path(self.N, eta, self.cells)
            right_by_word: dict = {}
            for (word, omega), c in _decompose_path(self.N, eta2, self.cells):
                right_by_word.setdefault(word, []).append((omega, c))
            terms = []
            for (word, xi), a in left:
                for omega, b in right_by_word.get(word, ()):
                    if self.grade(xi) == self.grade(omega):
                        terms.append((GradedEndo(xi, omega), self.beta_power(len(word)) * a * b))
            result = AlgebraElement(terms)
        self._proj_cache[key] = result
        return result

    def project(self, eta: LinComb, eta2: LinComb | None = None) -> AlgebraElement:
        """P(eta ⊗ eta') for path vectors, or P(x) for an EndoVector ``x`` (bilinear)."""
        if eta2 is not None:
            out = AlgebraElement.zero()
            for p, a in eta.items():
                for q, b in eta2.items():
                    out = out + self.project_paths(p, q) * (a * b)
            return out
        out = AlgebraElement.zero()
        for k, c in eta.items():
            out = out + self.project_paths(k.left, k.right) * c
        return out

    # -- product ---------------------------------------------------------

    def _basis_product(self, k: GradedEndo, l: GradedEndo) -> AlgebraElement:
        key = (k, l)
        hit = self._prod_cache.get(key)
        if hit is not None:
            return hit
        left = concat_paths(k.left, l.left)
        right = concat_paths(k.right, l.right)
        if left is None or right is None:
            result = AlgebraElement.zero()
        else:
            result = self.project_paths(left, right)
        self._prod_cache[key] = result
        return result

    def _bilinear(self, a: LinComb, b: LinComb, basis_product: Callable) -> AlgebraElement:
        acc: dict = {}
        for k, x in a.items():
            for l, y in b.items():
                prod = basis_product(k, l)
                if not prod:
                    continue
                xy = x * y
                for m, z in prod.items():
                    acc[m] = acc[m] + xy * z if m in acc else xy * z
        return AlgebraElement(acc)

    def multiply(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        return self._bilinear(a, b, self._basis_product)

    def _hammaoui_product(self, k: GradedEndo, l: GradedEndo) -> AlgebraElement:
        gk, gl = self.grade(k.left), self.grade(l.left)
        if {gk, gl} == {(1, 0), (0, 1)}:
            return AlgebraElement.zero()
        return self._basis_product(k, l)

    def multiply_hammaoui(self, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
        """Variant product with every x·y and y·x product set to zero (N = 3 only)."""
        if self.N != 3:
            raise UnsupportedVariantError("the Hammaoui product is only defined for N=3")
        return self._bilinear(a, b, self._hammaoui_product)

    def product(self, variant: str = "standard") -> Callable[[AlgebraElement, AlgebraElement], AlgebraElement]:
        if variant == "standard":
            return self.multiply
        if variant == "hammaoui":
            if self.N != 3:
                raise UnsupportedVariantError("the Hammaoui product is only defined for N=3")
            return self.multiply_hammaoui
        raise DomainError(f"unknown product variant {variant!r}")

    # -- involutions -----------------------------------------------------

    def star(self, a: EndoVector) -> EndoVector:
        return a.map_keys(lambda k: GradedEndo(k.left.reversed(), k.right.reversed()), conj=True)

    def antipode(self, a: EndoVector) -> EndoVector:
        return a.map_keys(lambda k: GradedEndo(k.right.reversed(), k.left.reversed()))

    # -- coalgebra -------------------------------------------------------

    def coproduct(self, a: EndoVector) -> TensorElement:
        out = []
        for k, c in a.items():
            for mid in self.essential[self.grade(k.left)]:
                out.append(((GradedEndo(k.left, mid), GradedEndo(mid, k.right)), c))
        return TensorElement(out)

    def coproduct_op(self, a: EndoVector) -> TensorElement:
        out = []
        for k, c in a.items():
            for mid in self.essential[self.grade(k.left)]:
                out.append(((GradedEndo(mid, k.right), GradedEndo(k.left, mid)), c))
        return TensorElement(out)

    def coproduct_paths(self, x: EndoVector) -> TensorElement:
        """Delta on End^gr(P): split through every path of the left leg's grade."""
        out = []
        for k, c in x.items():
            for mid in paths_by_length(self.graph, k.left.steps)[length(self.graph, k.left)]:
                out.append(((GradedEndo(k.left, mid), GradedEndo(mid, k.right)), c))
        return TensorElement(out)

    def counit(self, a: EndoVector) -> Scalar:
        total = ZERO
        for k, c in a.items():
            if k.left == k.right:
                total = total + c
        return total

    # -- tensor-level maps -----------------------------------------------

    def legwise(self, t: TensorElement, maps: Iterable[Callable]) -> LinComb:
        """Apply one map per tensor leg.  Legs mapped to Scalars are contracted away."""
        maps = list(maps)
        total = None
        for key, c in t.items():
            factors = []
            scalar = c
            for m, k in zip(maps, key):
                img = m(AlgebraElement([(k, ONE)]))
                if isinstance(img, Scalar):
                    scalar = scalar * img
                else:
                    factors.append(img)
            if len(factors) == 1:
                term = factors[0] * scalar
            else:
                term = tensor(*factors) * scalar
            total = term if total is None else total + term
        if total is None:
            return TensorElement.zero()
        return total

    def tensor_product(self, s: TensorElement, t: TensorElement, variant: str = "standard") -> TensorElement:
        """Legwise product of two tensors in A ⊠ ... ⊠ A."""
        mul = self.product(variant)
        total = TensorElement.zero()
        for ks, a in s.items():
            for kt, b in t.items():
                legs = [mul(AlgebraElement([(x, ONE)]), AlgebraElement([(y, ONE)])) for x, y in zip(ks, kt)]
                if all(legs):
                    total = total + tensor(*legs) * (a * b)
        return total

    def concat(self, x: EndoVector, y: EndoVector) -> EndoVector:
        """Legwise concatenation (xi ⊗ xi') ⋆ (rho ⊗ rho') = (xi ⋆ rho) ⊗ (xi' ⋆ rho')."""
        out = []
        for k, a in x.items():
            for l, b in y.items():
                left = concat_paths(k.left, l.left)
                right = concat_paths(k.right, l.right)
                if left is not None and right is not None:
                    out.append((GradedEndo(left, right), a * b))
        return EndoVector(out)

    def tensor_concat(self, s: TensorElement, t: TensorElement) -> TensorElement:
        """Legwise concatenation of endomorphism tensors (no projection)."""
        out = []
        for ks, a in s.items():
            for kt, b in t.items():
                key = []
                for x, y in zip(ks, kt):
                    left = concat_paths(x.left, y.left)
                    right = concat_paths(x.right, y.right)
                    if left is None or right is None:
                        break
                    key.append(GradedEndo(left, right))
                else:
                    out.append((tuple(key), a * b))
        return TensorElement(out)

    def project_tensor(self, t: TensorElement) -> TensorElement:
        acc: dict = {}
        for key, c in t.items():
            legs = [self.project_paths(k.left, k.right) for k in key]
            if not all(legs):
                continue
            for combo in itertools.product(*(leg.items() for leg in legs)):
                coeff = c
                for _, x in combo:
                    coeff = coeff * x
                nk = tuple(k for k, _ in combo)
                acc[nk] = acc[nk] + coeff if nk in acc else coeff
        return TensorElement(acc)

    def tensor_star(self, t: TensorElement) -> TensorElement:
        return self.legwise(t, [self.star] * max(t.arity, 1))

    # -- bases used by the verification sweeps --------------------------

    def graded_path_pairs(self, n: int) -> Iterable[tuple[ElementaryPath, ElementaryPath]]:
        """All pairs of n-step paths sharing a length tuple."""
        for group in paths_by_length(self.graph, n).values():
            for p in group:
                for q in group:
                    yield p, q

    def basis_element(self, k: GradedEndo) -> AlgebraElement:
        return AlgebraElement([(k, ONE)])

    def dimension(self) -> int:
        return len(self.basis)


def path_basis(g: Graph, max_steps: int) -> list[ElementaryPath]:
    return [p for n in range(max_steps + 1) for p in enumerate_paths(g, n)]
