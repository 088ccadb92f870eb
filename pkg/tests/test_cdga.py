import json
import random
from fractions import Fraction

import pytest
import yaml
from pydantic import ValidationError

from decider_errors import DegreeOneError, InputError
from exact_linalg import RationalMatrix
from cdga import (CdgaMorphism, Element, FinitePresentation, FreeCDGA, FreeCdgaDocument, GeneratorSet,
                  GradedAlgebra, GradedVector, PresentationDocument, TermDocument, basis_of_degree,
                  dump_document, free_cdga_from_document, free_cdga_to_document, mul,
                  presentation_from_document, presentation_to_document)
from tests.oracles import naive_monomials
from tests.random_models import random_element, random_free_cdga


def closed_odd_pair() -> tuple[GeneratorSet, Element, Element]:
    gens = GeneratorSet.of([("a", 3), ("b", 3), ("c", 2)])
    return gens, Element.generator(gens, "a"), Element.generator(gens, "b")


# --- generators and monomials ----------------------------------------------------


@pytest.mark.parametrize("pairs, error", [
    ([("t", 1)], DegreeOneError),
    ([("t", 0)], InputError),
    ([("x", 2), ("x", 4)], InputError),
    ([("not a name", 2)], InputError),
])
def test_generator_set_validation(pairs, error):
    with pytest.raises(error):
        GeneratorSet.of(pairs)


def test_monomial_basis_matches_brute_force():
    rng = random.Random(31)
    for _ in range(30):
        gens = GeneratorSet.of((f"g{i}", rng.randint(2, 7)) for i in range(rng.randint(1, 5)))
        for degree in range(0, 16):
            fast = basis_of_degree(gens, degree)
            assert set(fast) == set(naive_monomials(gens, degree))
            assert len(fast) == len(set(fast))
            assert list(fast) == sorted(fast, reverse=True)


def test_odd_generators_anticommute_and_square_to_zero():
    gens, a, b = closed_odd_pair()
    assert mul(a, b) == -mul(b, a)
    assert mul(a, a).is_zero
    c = Element.generator(gens, "c")
    assert mul(a, c) == mul(c, a)


def test_element_rejects_mismatched_generator_sets():
    gens, a, _ = closed_odd_pair()
    other = Element.generator(GeneratorSet.of([("a", 3)]), "a")
    with pytest.raises(InputError):
        _ = a + other


def test_element_text():
    gens = GeneratorSet.of([("x", 2), ("y", 3)])
    x, y = Element.generator(gens, "x"), Element.generator(gens, "y")
    assert str(x * x - y.scale(0)) == "x^2"
    assert str(Element.zero(gens)) == "0"
    assert str((x * y).scale(Fraction(-1, 2)) + x * x * x) == "x^3 - 1/2*x*y"


# --- free CDGAs ------------------------------------------------------------------


def test_algebra_axioms_on_random_models():
    """Leibniz rule, d∘d = 0, associativity and graded commutativity, 1000 cases."""
    rng = random.Random(1000)
    cases = 0
    while cases < 1000:
        algebra = random_free_cdga(rng)
        for _ in range(25):
            p, q, r = (rng.randint(0, 5) for _ in range(3))
            a = random_element(rng, algebra, p)
            b = random_element(rng, algebra, q)
            c = random_element(rng, algebra, r)
            d = algebra.apply_diff
            sign = -1 if p % 2 else 1
            assert d(mul(a, b)) == mul(d(a), b) + mul(a, d(b)).scale(sign)
            assert d(d(a)).is_zero
            assert mul(mul(a, b), c) == mul(a, mul(b, c))
            assert mul(a, b) == mul(b, a).scale(-1 if p * q % 2 else 1)
            cases += 1


def test_free_cdga_rejects_bad_differentials():
    gens = GeneratorSet.of([("x", 2), ("y", 3), ("z", 4)])
    x, y = Element.generator(gens, "x"), Element.generator(gens, "y")
    with pytest.raises(InputError):
        FreeCDGA.build(gens, {"y": x})
    with pytest.raises(InputError):
        # d(d z) = x^3 is not zero
        FreeCDGA.build(GeneratorSet.of([("x", 2), ("y", 3), ("z", 4)]), {"y": x * x, "z": x * y})
    with pytest.raises(InputError):
        FreeCDGA.build(gens, {"w": x})


def test_sphere_model_cohomology(sphere_model):
    dims = [sphere_model.cohomology_dimension(k) for k in range(9)]
    assert dims == [1, 0, 1, 0, 0, 0, 0, 0, 0]


def test_is_exact_returns_a_primitive(sphere_model):
    x, y = sphere_model.generator("x"), sphere_model.generator("y")
    assert sphere_model.is_exact(x * x) == y
    assert sphere_model.apply_diff(sphere_model.is_exact(x * x * x)) == x * x * x
    assert sphere_model.is_exact(x) is None
    assert sphere_model.is_exact(sphere_model.zero()).is_zero


def test_is_exact_refuses_unclosed_elements(sphere_model):
    with pytest.raises(InputError):
        sphere_model.is_exact(sphere_model.generator("y"))


def test_differential_matrix_matches_apply_diff():
    rng = random.Random(5)
    for _ in range(20):
        algebra = random_free_cdga(rng)
        degree = rng.randint(2, 9)
        a = random_element(rng, algebra, degree)
        matrix = algebra.differential_matrix(degree)
        assert matrix.apply(algebra.vector(a, degree)) == algebra.vector(algebra.apply_diff(a), degree + 1)


def test_both_models_follow_the_protocol(sphere_model, cp2):
    assert isinstance(sphere_model, GradedAlgebra)
    assert isinstance(cp2, GradedAlgebra)


# --- finite presentations ----------------------------------------------------------


def test_presentation_products(cp2):
    x = cp2.basis_element("x")
    assert cp2.mul(x, x) == cp2.basis_element("x2")
    assert cp2.mul(cp2.one(), x) == x
    # x^3 lands above the top degree
    assert cp2.mul(cp2.mul(x, x), x).is_zero


def test_presentation_cohomology(cp2, hp2):
    assert [cp2.cohomology_dimension(k) for k in range(6)] == [1, 0, 1, 0, 1, 0]
    assert [hp2.cohomology_dimension(k) for k in range(10)] == [1, 0, 0, 0, 1, 0, 0, 0, 1, 0]


def test_presentation_with_differential():
    model = FinitePresentation.build({0: ["one"], 4: ["a"], 5: ["b"]}, differentials={4: [[1]]})
    b = model.basis_element("b")
    assert model.is_exact(b) == model.basis_element("a")
    assert model.cohomology_dimension(4) == 0
    assert model.cohomology_dimension(5) == 0
    with pytest.raises(InputError):
        model.is_exact(model.basis_element("a"))


def test_zero_differential_presentation_has_no_non_zero_exact_class(cp2):
    assert cp2.is_exact(cp2.basis_element("x2")) is None
    assert cp2.is_exact(cp2.zero(4)).is_zero


@pytest.mark.parametrize("basis, products, differentials", [
    ({0: ["one", "other"]}, [], None),
    ({0: ["one"], 3: ["a", "b"], 6: ["c"]}, [("a", "a", [1])], None),
    ({0: ["one"], 2: ["a"], 3: ["b"], 4: ["c"]}, [], {2: [[1]], 3: [[1]]}),
    ({0: ["one"], 2: ["x"], 4: ["x2"]}, [("x", "y", [1])], None),
    ({0: ["one"], 2: ["x"]}, [("x", "x", [1])], None),
])
def test_presentation_validation(basis, products, differentials):
    with pytest.raises(InputError):
        FinitePresentation.build(basis, products, differentials)


def test_graded_vector_arithmetic():
    a = GradedVector(2, (Fraction(1), Fraction(2)))
    assert (a + a).coords == (Fraction(2), Fraction(4))
    assert (a - a).is_zero
    assert (3 * a).coords == (Fraction(3), Fraction(6))
    with pytest.raises(InputError):
        _ = a + GradedVector(4, (Fraction(1),))


def test_graded_vector_scaling_is_exact():
    a = GradedVector(4, (Fraction(2),))
    assert a.scale("1/2").coords == (Fraction(1),)
    with pytest.raises(InputError, match="exact rational"):
        a.scale(0.5)
    with pytest.raises(InputError):
        _ = a * 1.5


def test_rebased_presentation_rescales_products(cp2):
    doubled = cp2.rebased({2: RationalMatrix.from_rows([[2]])})
    x = doubled.basis_element("x")
    assert doubled.mul(x, x).coords == (Fraction(4),)
    assert [doubled.cohomology_dimension(k) for k in range(5)] == [1, 0, 1, 0, 1]


def test_rebased_presentation_rescales_the_differential():
    model = FinitePresentation.build({0: ["one"], 4: ["a"], 5: ["b"]}, differentials={4: [[1]]})
    scaled = model.rebased({4: RationalMatrix.from_rows([[3]])})
    assert scaled.differential_matrix(4) == RationalMatrix.from_rows([[3]])
    with pytest.raises(InputError):
        model.rebased({0: RationalMatrix.from_rows([[2]])})


# --- morphisms -------------------------------------------------------------------


def test_morphism_chain_condition(sphere_model):
    x, y = sphere_model.generator("x"), sphere_model.generator("y")
    scaled = CdgaMorphism.build(sphere_model, sphere_model, {"x": x.scale(2), "y": y.scale(4)})
    assert scaled.apply(x * y) == (x * y).scale(8)
    with pytest.raises(InputError):
        CdgaMorphism.build(sphere_model, sphere_model, {"x": x.scale(2), "y": y})
    assert CdgaMorphism.identity(sphere_model).chain_failures() == []


def test_morphism_into_a_presentation(sphere_model, cp2):
    with pytest.raises(InputError):
        CdgaMorphism.build(sphere_model, cp2, {"x": cp2.basis_element("x")})
    # not checked above the validation bound
    morphism = CdgaMorphism.build(sphere_model, cp2, {"x": cp2.basis_element("x")}, validate_through=3)
    assert morphism.apply(sphere_model.generator("x") * sphere_model.generator("x")) == cp2.basis_element("x2")


def test_morphism_rejects_wrong_degrees(sphere_model, cp2):
    with pytest.raises(InputError):
        CdgaMorphism.build(sphere_model, cp2, {"x": cp2.basis_element("x2")}, validate_through=3)
    with pytest.raises(InputError):
        CdgaMorphism.build(sphere_model, cp2, {"z": cp2.basis_element("x")})


# --- documents -------------------------------------------------------------------


def test_free_cdga_document(sphere_model):
    document = free_cdga_to_document(sphere_model)
    assert document.differential["y"][0].coefficient == "1/1"
    assert document.differential["y"][0].monomial == {"x": 2}
    assert free_cdga_from_document(FreeCdgaDocument.model_validate(
        yaml.safe_load(dump_document(document)))) == sphere_model


def test_presentation_document(cp2):
    document = presentation_to_document(cp2)
    assert document.products == [("x", "x", ["1/1"])]
    assert presentation_from_document(PresentationDocument.model_validate(
        json.loads(dump_document(document, as_json=True)))) == cp2


def test_documents_refuse_floats():
    with pytest.raises(ValidationError):
        TermDocument(coefficient=0.5)
    assert TermDocument(coefficient=3).coefficient == "3/1"
