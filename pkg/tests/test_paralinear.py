import pytest

from octomod.bimodule import Element, ModuleShape, O1, left_act, right_act
from octomod.homalg import left_mult_operator, right_mult_operator
from octomod.linalg import transpose
from octomod.octonion import E, ONE, Octonion
from octomod.paralinear import (
    LEFT, RIGHT, NotParaLinear, ParaLinearMap, RealLinearMap, eval_by_formula, ext,
    ext_by_polarization, ext_from_images, from_real_linear, is_o_linear, is_para_linear,
    lift, para_linearity_witness, paralinear_dimension, re_star, re_upper_star,
    second_associator_left,
)


def real_map(fn, dom=O1, cod=O1):
    return RealLinearMap.from_function(dom, cod, fn)


def test_eval_reconstructs_right_multiplication():
    f = ParaLinearMap(LEFT, O1, O1, [[(E[k] * E[1]).c[0] for k in range(8)]])
    assert f == right_mult_operator(E[1], O1)
    for k in range(8):
        assert f(O1.unit(k)) == Element.of(E[k] * E[1])
        assert eval_by_formula(f, O1.unit(k)) == f(O1.unit(k))
    assert f(O1.zero()) == O1.zero()


def test_identity_from_real_part():
    f = ParaLinearMap(LEFT, O1, O1, [[1, 0, 0, 0, 0, 0, 0, 0]])
    assert f == ParaLinearMap.identity(O1)
    assert f.full_matrix == ParaLinearMap.identity(O1).real_map().matrix


def test_second_associator_examples():
    x = Element.of(E[2])
    assert second_associator_left(E[1], x, right_mult_operator(E[4], O1)) == Element.of(E[7] * -2)
    ident = ParaLinearMap.identity(O1)
    assert not second_associator_left(E[3], x, ident)
    assert not second_associator_left(Octonion.real(5), x, right_mult_operator(E[4], O1))


def test_para_linearity_of_multiplications():
    rmul = real_map(lambda x: right_act(x, E[1]))
    lmul = real_map(lambda x: left_act(E[1], x))
    assert is_para_linear(rmul, LEFT)
    assert not is_para_linear(lmul, LEFT)
    assert para_linearity_witness(lmul, LEFT) is not None
    assert is_para_linear(lmul, RIGHT)
    with pytest.raises(NotParaLinear):
        from_real_linear(lmul, LEFT)
    scalar = real_map(lambda x: x.scale(3))
    assert is_para_linear(scalar, LEFT) and is_para_linear(scalar, RIGHT)


def test_o_linearity():
    assert not is_o_linear(right_mult_operator(E[1], O1))
    assert is_o_linear(ParaLinearMap.identity(ModuleShape(2)))
    assert is_o_linear(right_mult_operator(Octonion.real(3), O1))
    assert not is_o_linear(ext_from_images(O1, O1, [Element.of(E[1])]))


def test_lift_examples():
    re_map = real_map(lambda x: Element.of(x.coords[0].c[0]))
    assert lift(re_map) == ParaLinearMap.identity(O1)
    p = Octonion([1, 2, 0, -1, 0, 3, 0, 1])
    assert lift(real_map(lambda x: Element.of((x.coords[0] * p).c[0]))) == right_mult_operator(p, O1)
    assert lift(RealLinearMap.zero(O1, O1)).is_zero()
    with pytest.raises(ValueError):
        lift(real_map(lambda x: x))


def test_ext_examples():
    g = ext_from_images(O1, O1, [Element.of(E[1])])
    for k in range(8):
        assert g(O1.unit(k)) == Element.of(E[k] * E[1])
    assert ext(RealLinearMap.identity(O1)) == ParaLinearMap.identity(O1)
    assert ext(RealLinearMap.identity(O1), RIGHT) == ParaLinearMap.identity(O1, RIGHT)


def test_dual_route_for_ext(gen):
    for seed in range(10):
        g = gen(seed)
        M, N = g.shape(g.rng.random() < 0.5), g.shape(g.rng.random() < 0.5)
        h = g.real_linear(M, N)
        for ch in (LEFT, RIGHT):
            assert ext(h, ch) == ext_by_polarization(h, ch)


def test_bijections_round_trip(gen):
    for seed in range(10):
        g = gen(seed)
        ch = g.chirality()
        M, N = g.shape(), g.shape()
        f = g.para_linear(M, N, ch)
        assert lift(re_star(f), ch) == f
        assert ext(re_upper_star(f), ch) == f


def test_generated_maps_are_para_linear(gen):
    for seed in range(10):
        g = gen(seed)
        ch = g.chirality()
        f = g.para_linear(g.shape(True), g.shape(), ch)
        assert is_para_linear(f.real_map(), ch)
        assert from_real_linear(f.real_map(), ch) == f


@pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_dimension_is_8nm(n, m):
    for ch in (LEFT, RIGHT):
        assert paralinear_dimension(n, m, ch) == 8 * n * m


def test_rank_one_solutions_are_right_multiplications():
    d, maps = paralinear_dimension(1, 1, LEFT, basis=True)
    assert d == 8
    for g in maps:
        p = Element.from_flat(O1, [row[0] for row in g.matrix]).coords[0]
        assert g == right_mult_operator(p, O1).real_map()
    d, maps = paralinear_dimension(1, 1, RIGHT, basis=True)
    for g in maps:
        p = Element.from_flat(O1, transpose(g.matrix)[0]).coords[0]
        assert g == left_mult_operator(p, O1).real_map()


def test_json_round_trip(gen):
    f = gen(3).para_linear(ModuleShape(2, True), O1, RIGHT)
    assert ParaLinearMap.from_json(f.to_json()) == f


def test_shape_errors():
    with pytest.raises(ValueError):
        ParaLinearMap(LEFT, O1, O1, [[1, 2]])
    with pytest.raises(ValueError):
        ParaLinearMap.identity(O1) + ParaLinearMap.identity(O1, RIGHT)
    with pytest.raises(ValueError):
        ParaLinearMap.identity(O1)(Element.of(ONE, ONE))
