import pytest

from qgroupoid.axioms import AXIOM_IDS, DEFAULT_STEP_BOUND, get_axiom, is_expected_failure, verify_all, verify_axiom
from qgroupoid.bialgebra import QuantumGroupoid
from qgroupoid.errors import CatalogueError, UnsupportedVariantError

Q3 = QuantumGroupoid(3)


@pytest.fixture(scope="module")
def standard_reports():
    return {r.axiom: r for r in verify_all(Q3)}


def test_catalogue_passes_for_su3(standard_reports):
    failed = {k: r.witness for k, r in standard_reports.items() if not r.passed}
    assert failed == {}


def test_instance_counts(standard_reports):
    assert standard_reports["associativity"].instances == 27 ** 3
    assert standard_reports["coproduct-homomorphism"].instances == 27 ** 2
    assert standard_reports["counit-positivity"].instances == 1000
    assert standard_reports["antipode-exchange"].instances == 27


def test_path_quantified_reports_carry_bound(standard_reports):
    for axiom_id, rep in standard_reports.items():
        if get_axiom(axiom_id).path_quantified:
            assert rep.step_bound == DEFAULT_STEP_BOUND
            assert rep.notes[0] == f"verified up to {DEFAULT_STEP_BOUND} steps"
        else:
            assert rep.step_bound is None


def test_hammaoui_associativity_witness():
    rep = verify_axiom("associativity", "hammaoui", qg=Q3)
    assert rep.status == "fail" and is_expected_failure(rep)
    assert rep.witness["inputs"] == ["x_0⊗x_0", "y_0⊗y_0", "y_2⊗y_2"]
    assert (rep.witness["lhs"], rep.witness["rhs"]) == ("0", "y_2⊗y_2")
    assert rep.to_json()["status"] == "fail"


@pytest.mark.parametrize("axiom_id", ["counit-multiplicativity", "antipode-exchange"])
def test_hammaoui_breaks_more_than_associativity(axiom_id):
    # zeroing the cross products also breaks the counit and antipode structure
    rep = verify_axiom(axiom_id, "hammaoui", qg=Q3)
    assert rep.status == "fail" and not is_expected_failure(rep)


def test_hammaoui_keeps_product_free_axioms():
    for axiom_id in ("coassociativity", "unit", "antipode-star", "star-antihomomorphism"):
        assert verify_axiom(axiom_id, "hammaoui", qg=Q3).passed


def test_smaller_step_bound():
    rep = verify_axiom("projector-star", step_bound=2, qg=Q3)
    assert rep.passed and rep.step_bound == 2


def test_su4_fast_axioms():
    qg = QuantumGroupoid(4)
    for axiom_id in ("coassociativity", "counit", "antipode-exchange", "coproduct-homomorphism"):
        assert verify_axiom(axiom_id, qg=qg).passed


def test_errors():
    with pytest.raises(CatalogueError):
        verify_axiom("no-such-axiom")
    with pytest.raises(UnsupportedVariantError):
        verify_axiom("unit", "hammaoui", qg=4)
    assert len(AXIOM_IDS) == len(set(AXIOM_IDS)) == 22
