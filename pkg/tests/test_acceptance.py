"""Acceptance suite: one group of tests per criterion, summarised as PASS/FAIL lines."""

import math
import random

import pytest

from oracles import brute_paths, mp_sign, oracle_multiply
from reference_tables import SU3_CELLS, SU3_FAMILIES, SU4_CELLS, SU4_FAMILIES, parsed
from qgroupoid.axioms import POSITIVITY_SAMPLES, POSITIVITY_SEED, random_element, verify_all, verify_axiom
from qgroupoid.bialgebra import QuantumGroupoid
from qgroupoid.graph import build_a1, quantum_integer
from qgroupoid.ladder import annihilate, cc_dagger_check, create, decompose, operator_kinds, reconstruct
from qgroupoid.pathspace import PathVector, enumerate_paths, inner_product
from qgroupoid.scalar import Scalar
from qgroupoid.table import multiplication_table
from qgroupoid.temperley import check_tl, tl4_scalar_roots

crit = pytest.mark.criterion


# 1 ---------------------------------------------------------------------

@crit(1, "dimension law for path spaces")
@pytest.mark.parametrize("N,max_n", [(3, 10), (4, 6), (5, 6)])
def test_dimension_law(N, max_n):
    g = build_a1(N)
    for n in range(max_n + 1):
        paths = enumerate_paths(g, n)
        assert len(paths) == N * (N - 1) ** n
        if N == 3:
            assert len(paths) == 3 * 2 ** n
        assert sorted(map(tuple, paths)) == sorted(brute_paths(N, n))


# 2 ---------------------------------------------------------------------

@crit(2, "position-0 decomposition reconstructs paths, kind images orthogonal")
@pytest.mark.parametrize("N,max_n", [(3, 8), (4, 5), (5, 5)])
def test_decomposition(N, max_n):
    g = build_a1(N)
    kinds = operator_kinds(g)
    for n in range(0, max_n + 1):
        for p in enumerate_paths(g, n):
            v = PathVector.of(p)
            assert reconstruct(g, decompose(g, v)) == v
        if n < 2:
            continue
        images = {}
        for k in kinds:
            src = n - (1 if k.family == "triangle" else 2)
            images[k] = [create(g, k, 0, PathVector.of(q)) for q in enumerate_paths(g, src)]
        supports = {k: set().union(*(set(w.keys()) for w in ws)) for k, ws in images.items()}
        for i, k1 in enumerate(kinds):
            for k2 in kinds[i + 1:]:
                # images are spanned by elementary paths, so disjoint supports means orthogonal
                assert not supports[k1] & supports[k2]
        assert sum(map(len, supports.values())) == len(enumerate_paths(g, n))
    if N == 3:
        # explicit inner products on a small grade
        for k1 in kinds:
            for k2 in kinds:
                if k1 != k2:
                    for a in enumerate_paths(g, 1):
                        for b in enumerate_paths(g, 1):
                            x = create(g, k1, 0, PathVector.of(a)) if k1.family == "triangle" else \
                                create(g, k1, 0, PathVector.of(a[1:]))
                            y = create(g, k2, 0, PathVector.of(b)) if k2.family == "triangle" else \
                                create(g, k2, 0, PathVector.of(b[1:]))
                            assert inner_product(x, y) == 0


# 3 ---------------------------------------------------------------------

@crit(3, "C C-dagger = beta delta at beta = sqrt 2")
@pytest.mark.parametrize("N", [3, 4, 5])
def test_cc_dagger(N):
    g = build_a1(N)
    for pos in range(2):
        rep = cc_dagger_check(g, pos, max_steps=3)
        assert rep.passed and rep.instances > 0
    beta = Scalar.sqrt2()
    for k in operator_kinds(g):
        for k2 in operator_kinds(g):
            for p in enumerate_paths(g, 2):
                v = PathVector.of(p)
                src = annihilate(g, k2, 0, create(g, k, 0, v))
                assert src == (v * beta if k == k2 else PathVector.zero())


# 4 ---------------------------------------------------------------------

@crit(4, "TL1-TL4 at beta = sqrt 2 and the admissible beta roots")
@pytest.mark.parametrize("n", range(2, 8))
def test_tl_relations(n):
    for rep in check_tl(build_a1(3), n, Scalar.sqrt2()):
        assert rep.status in ("pass", "vacuous"), rep.witness


@crit(4, "TL1-TL4 at beta = sqrt 2 and the admissible beta roots")
def test_tl4_roots():
    import sympy
    _, roots = tl4_scalar_roots()
    assert roots == [0, 1, sympy.sqrt(2)]


# 5 ---------------------------------------------------------------------

def _rules(table):
    return {k: (c.rule.offset, c.rule.result_family, c.rule.result_offset) for k, c in table.cells.items()}


@crit(5, "multiplication tables reproduced for N = 3 and N = 4")
def test_table_su3():
    table = multiplication_table(3)
    assert table.regular
    assert _rules(table) == parsed(SU3_CELLS, SU3_FAMILIES, 3)
    # every one of the 729 basis products obeys its cell rule
    qg = QuantumGroupoid(3)
    classified = 0
    for k in qg.basis:
        for l in qg.basis:
            rl, rr = qg.label(k.left), qg.label(l.left)
            rule = table.cell(rl.family, rr.family).rule
            prod = qg.multiply(qg.basis_element(k), qg.basis_element(l))
            i_ok = (qg.label(l.left).index - qg.label(k.left).index) % 3 == rule.offset
            j_ok = (qg.label(l.right).index - qg.label(k.right).index) % 3 == rule.offset
            if i_ok and j_ok:
                (key, c), = prod.items()
                assert qg.label(key.left).family == rule.result_family
                assert qg.label(key.left).index == (qg.label(k.left).index + rule.result_offset) % 3
                assert c == 1
            else:
                assert not prod
            classified += 1
    assert classified == 729


@crit(5, "multiplication tables reproduced for N = 3 and N = 4")
def test_table_su4():
    table = multiplication_table(4)
    assert table.regular
    assert _rules(table) == parsed(SU4_CELLS, SU4_FAMILIES, 4)


# 6 ---------------------------------------------------------------------

@crit(6, "weak bialgebra axiom suite")
def test_axiom_suite_su3():
    reports = verify_all(QuantumGroupoid(3))
    assert {r.axiom: r.status for r in reports if not r.passed} == {}
    assert next(r for r in reports if r.axiom == "associativity").instances == 27 ** 3


@crit(6, "weak bialgebra axiom suite")
def test_associativity_su4():
    rep = verify_axiom("associativity", qg=4)
    assert rep.passed and rep.instances == 64 ** 3


@crit(6, "weak bialgebra axiom suite")
@pytest.mark.parametrize("axiom_id", ["coassociativity", "unit", "counit", "coproduct-homomorphism",
                                      "star-antihomomorphism", "counit-multiplicativity",
                                      "antipode-star", "antipode-coproduct", "antipode-product",
                                      "antipode-exchange"])
def test_axioms_su4(axiom_id):
    assert verify_axiom(axiom_id, qg=4).passed


# 7 ---------------------------------------------------------------------

@crit(7, "projector coherence up to four steps")
@pytest.mark.parametrize("axiom_id", ["projector-star", "counit-projector", "projector-absorption-left",
                                      "projector-absorption-right", "coproduct-projector"])
def test_projector_coherence(axiom_id):
    rep = verify_axiom(axiom_id, step_bound=4, qg=3)
    assert rep.passed and rep.step_bound == 4, rep.witness


# 8 ---------------------------------------------------------------------

@crit(8, "Hammaoui counterexample")
def test_hammaoui():
    qg = QuantumGroupoid(3)
    x0, y0, y2 = qg.element("x_0⊗x_0"), qg.element("y_0⊗y_0"), qg.element("y_2⊗y_2")
    h, m = qg.multiply_hammaoui, qg.multiply
    assert not h(h(x0, y0), y2)
    assert h(x0, h(y0, y2)) == y2
    assert m(m(x0, y0), y2) == y2
    assert m(x0, m(y0, y2)) == y2


# 9 ---------------------------------------------------------------------

@crit(9, "counit positivity on random elements")
def test_positivity():
    qg = QuantumGroupoid(3)
    rng = random.Random(POSITIVITY_SEED)
    for _ in range(POSITIVITY_SAMPLES):
        a = random_element(qg, rng)
        value = qg.counit(qg.multiply(a, qg.star(a)))
        assert value.sign() >= 0
        assert mp_sign(value) >= 0
    assert verify_axiom("counit-positivity", qg=qg).passed


# 10 --------------------------------------------------------------------

@crit(10, "quantum dimensions at kappa = 4")
def test_quantum_dimensions():
    assert abs(quantum_integer(2, 4) - math.sqrt(2)) < 1e-12
    assert abs(quantum_integer(3, 4) - 1) < 1e-12


# 11 --------------------------------------------------------------------

@crit(11, "multiply agrees with the brute-force oracle")
@pytest.mark.parametrize("N", [3, 4])
def test_oracle_equivalence(N):
    qg = QuantumGroupoid(N)
    for k in qg.basis:
        for l in qg.basis:
            got = qg.multiply(qg.basis_element(k), qg.basis_element(l))
            got = {(tuple(a.left), tuple(a.right)): c for a, c in got.items()}
            assert got == oracle_multiply(N, (tuple(k.left), tuple(k.right)), (tuple(l.left), tuple(l.right)))
