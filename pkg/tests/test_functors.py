from fractions import Fraction

import pytest

from octomod.bimodule import Element, ModuleShape, O1
from octomod.functors import (
    MapSequence, adjoint_tau, adjoint_tau_inverse, alpha_elementary, alpha_map,
    conjugate_functor, double_dual_embedding, double_dual_point, dual_module,
    enveloping_decompose, enveloping_reassemble, enveloping_uniqueness_rank,
    hom_contravariant, hom_covariant, hom_left_exactness_check, image, is_exact_at, kernel,
    phi_double_star, weak_functor_checks,
)
from octomod.homalg import (
    HomModuleIso, odot_left, odot_right, regular_compose, right_mult_operator,
)
from octomod.linalg import identity
from octomod.octonion import E, ONE, Octonion
from octomod.paralinear import (
    RIGHT, ParaLinearMap, RealLinearMap, ext_from_images, is_o_linear,
    second_associator_left, second_associator_right,
)
from octomod.tensor import induced_map

from .oracles import LEFT_E1_COMPONENTS

O2 = ModuleShape(2)
ID = ParaLinearMap.identity(O1)


def R(p, shape=O1):
    return right_mult_operator(p, shape)


def test_conjugate_functor(gen):
    assert conjugate_functor(ID) == ParaLinearMap.identity(O1.conjugate(), RIGHT)
    p = Octonion([0, 1, 2, 0, 0, -1, 0, 0])
    c = conjugate_functor(R(p))
    assert c.chirality is RIGHT and c.dom.conjugated
    for k in range(8):
        x = O1.unit(k)
        assert c(Element(c.dom, x.coords)).coords == (x.coords[0] * p,)
    for seed in range(5):
        g = gen(seed)
        ch = g.chirality()
        X, Y, Z = g.shape(), g.shape(), g.shape()
        f, h = g.para_linear(Y, Z, ch), g.para_linear(X, Y, ch)
        assert conjugate_functor(conjugate_functor(f)) == f
        assert conjugate_functor(regular_compose(f, h)) == \
            regular_compose(conjugate_functor(f), conjugate_functor(h))


def test_hom_functors_on_identity():
    assert hom_covariant(O2, ID) == ParaLinearMap.identity(O2)
    assert hom_contravariant(O2, ID) == ParaLinearMap.identity(O2, RIGHT)


def test_covariant_hom_on_rank_one(gen):
    f = gen(1).para_linear(O1, O1)
    T = hom_covariant(O1, f)
    iso = HomModuleIso(O1, O1)
    for i in range(8):
        g = R(E[i])
        assert T(iso.forward(g)) == iso.forward(regular_compose(f, g))


def test_hom_functor_laws(gen):
    for seed in range(4):
        g = gen(seed)
        ch = g.chirality()
        M, X, Y, Z = g.shape(), g.shape(), g.shape(), g.shape()
        f1, f2, p = g.para_linear(Y, Z, ch), g.para_linear(X, Y, ch), g.octonion()
        assert hom_covariant(M, regular_compose(f1, f2)) == \
            regular_compose(hom_covariant(M, f1), hom_covariant(M, f2))
        assert hom_contravariant(M, regular_compose(f1, f2)) == \
            regular_compose(hom_contravariant(M, f2), hom_contravariant(M, f1))
        assert hom_covariant(M, odot_left(p, f2)) == odot_left(p, hom_covariant(M, f2))
        assert hom_contravariant(M, odot_left(p, f2)) == odot_left(p, hom_contravariant(M, f2))
        assert hom_contravariant(M, odot_right(f2, p)) == odot_right(hom_contravariant(M, f2), p)


def test_adjoint_identity_example():
    tau = adjoint_tau(O1, O1, O1, ID)
    assert HomModuleIso(O1, O1).backward(tau(Element.of(ONE))) == ID


def test_adjoint_round_trip_and_naturality(gen):
    for seed in range(5):
        g = gen(seed)
        M, X, Y = g.shape(), g.shape(), g.shape()
        alpha = g.para_linear(ModuleShape(M.rank * X.rank), Y)
        tau = adjoint_tau(M, X, Y, alpha)
        assert adjoint_tau_inverse(M, X, Y, tau) == alpha
        p = g.octonion()
        f = R(p, X)
        assert adjoint_tau(M, X, Y, regular_compose(alpha, induced_map(M, f))) == regular_compose(tau, f)


def test_double_dual_evaluation_at_one():
    xpp = double_dual_point(O1, Element.of(ONE))
    dual = dual_module(O1)
    for i in range(8):
        assert xpp(dual.forward(R(E[i]))) == Element.of(E[i])


def test_double_dual_second_associator(gen):
    for seed in range(10):
        g = gen(seed)
        M = g.shape()
        x, p, f = g.element(M), g.octonion(), g.para_linear(M, O1)
        xpp = double_dual_point(M, x)
        assert second_associator_right(p, xpp, dual_module(M).forward(f)) == second_associator_left(p, x, f)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_double_dual_embedding_is_injective(n):
    tau = double_dual_embedding(ModuleShape(n))
    assert is_o_linear(tau)
    assert tau.real_map().real_rank() == 8 * n


def test_double_dual_naturality(gen):
    for seed in range(3):
        g = gen(seed)
        X, Y = g.shape(), g.shape()
        phi = g.para_linear(X, Y)
        assert regular_compose(phi_double_star(phi), double_dual_embedding(X)) == \
            regular_compose(double_dual_embedding(Y), phi)


def test_alpha_map_examples(gen):
    assert alpha_map(identity(8), O2) == RealLinearMap.identity(O2)
    a = alpha_map(alpha_elementary(3, 5), O1)
    assert a(O1.unit(5)) == O1.unit(3)
    assert all(not a(O1.unit(k)) for k in range(8) if k != 5)
    g = gen(0)
    f = g.o_linear(O1, O2)
    alpha = [[g.rational() for _ in range(8)] for _ in range(8)]
    assert f.real_map().compose(alpha_map(alpha, O1)) == alpha_map(alpha, O2).compose(f.real_map())


def test_enveloping_fixture_left_e1():
    f = RealLinearMap.from_function(O1, O1, lambda x: Element.of(E[1] * x.coords[0]))
    parts = enveloping_decompose(f)
    nonzero = {k: v for k, v in parts.items() if not v.is_zero()}
    assert set(nonzero) == set(LEFT_E1_COMPONENTS)
    for k, c in LEFT_E1_COMPONENTS.items():
        assert nonzero[k] == ID.scale(c)
    assert enveloping_reassemble(parts, O1) == f


def test_enveloping_zero_and_random(gen):
    parts = enveloping_decompose(RealLinearMap.zero(O2, O1))
    assert all(v.is_zero() for v in parts.values())
    f = gen(2).real_linear(O2, O2)
    parts = enveloping_decompose(f)
    assert all(is_o_linear(v) for v in parts.values())
    assert enveloping_reassemble(parts, O2) == f


def test_enveloping_uniqueness():
    assert enveloping_uniqueness_rank(O1, O1) == (64, 64)
    assert enveloping_uniqueness_rank(O2, O1) == (128, 128)


def split_sequence():
    inc = ext_from_images(O1, O2, [Element.of(ONE, 0)])
    pr = ext_from_images(O2, O1, [O1.zero(), Element.of(ONE)])
    return inc, pr


def test_kernel_and_image():
    assert kernel(R(Octonion([1, 2, 0, 0, 3, 0, 0, 1]))) == []
    inc, pr = split_sequence()
    assert len(image(inc)) == 8
    assert len(kernel(pr)) == 8


def test_exactness_examples():
    seq = MapSequence.of([ID], zero_start=True)
    assert is_exact_at(seq, 1)
    inc, pr = split_sequence()
    ses = MapSequence.of([inc, pr], zero_start=True, zero_end=True)
    assert all(is_exact_at(ses, k) for k in range(4))
    bad = MapSequence.of([inc, ParaLinearMap.zero(O2, O1)], zero_start=True)
    assert not is_exact_at(bad, 2)


@pytest.mark.parametrize("M", [O1, O2])
def test_hom_is_left_exact(M):
    inc, pr = split_sequence()
    ses = MapSequence.of([inc, pr], zero_start=True, zero_end=True)
    assert hom_left_exactness_check(M, ses).status == "pass"


def test_hom_left_exactness_degenerate_and_invalid():
    degenerate = MapSequence([None, None, O1], [None, None])
    assert hom_left_exactness_check(O1, degenerate).status == "pass"
    not_exact = MapSequence.of([ID, ID], zero_start=True)
    with pytest.raises(ValueError):
        hom_left_exactness_check(O1, not_exact)


def test_map_sequence_validates_shapes():
    with pytest.raises(ValueError):
        MapSequence([O1, O2], [ID])


def test_weak_functors():
    report = weak_functor_checks(trials=3)
    assert report.status == "pass"
    assert report.witness is not None


def test_exact_rational_arithmetic_only():
    f = ID.scale(Fraction(1, 3))
    assert f.re_matrix[0][0] == Fraction(1, 3)
