import pytest

from octomod.bimodule import Element, ModuleShape, O1, left_act, right_act
from octomod.homalg import regular_compose, right_mult_operator, transpose
from octomod.octonion import E, ONE, Octonion
from octomod.paralinear import LEFT, RIGHT, ParaLinearMap
from octomod.tensor import TensorModule, elementary_tensor, induced_map, tensor_defect

OO = TensorModule(O1, O1)


def test_elementary_tensor_examples():
    assert elementary_tensor(OO, Element.of(E[1]), Element.of(E[2])) == Element.of(E[3])
    x = Element.of(Octonion([1, -2, 0, 3, 0, 0, 1, 5]))
    assert elementary_tensor(OO, Element.of(ONE), x) == x


def test_defect_examples():
    m, p, m2 = Element.of(E[1]), E[4], Element.of(E[2])
    lhs = elementary_tensor(OO, right_act(m, p), m2) - elementary_tensor(OO, m, left_act(p, m2))
    assert lhs == Element.of(E[7] * 2)
    assert tensor_defect(OO, m, p, m2) == lhs
    assert not tensor_defect(OO, m, Octonion.real(3), m2)
    assert not tensor_defect(OO, Element.of(ONE * 4), p, m2)


def test_coordinate_layout():
    T = TensorModule(ModuleShape(2), ModuleShape(3))
    assert T.shape.rank == 6
    assert T.index(1, 2) == 5
    t = elementary_tensor(T, ModuleShape(2).unit(8), ModuleShape(3).unit(16))
    assert t == T.shape.unit(8 * T.index(1, 2))


def test_defect_identity_random(gen):
    for seed in range(10):
        g = gen(seed)
        M, N = g.shape(), g.shape()
        T = TensorModule(M, N)
        m, p, m2 = g.element(M), g.octonion(), g.element(N)
        lhs = elementary_tensor(T, right_act(m, p), m2) - elementary_tensor(T, m, left_act(p, m2))
        assert lhs == tensor_defect(T, m, p, m2)


def test_shape_mismatch():
    with pytest.raises(ValueError):
        elementary_tensor(OO, Element.of(ONE, ONE), Element.of(ONE))


def test_induced_examples():
    assert induced_map(O1, ParaLinearMap.identity(O1)) == ParaLinearMap.identity(O1)
    p = Octonion([2, 1, 0, -1, 0, 3, 0, 0])
    assert induced_map(O1, right_mult_operator(p, O1)) == right_mult_operator(p, O1)
    with pytest.raises(ValueError):
        induced_map(O1, ParaLinearMap.identity(O1), "rr")
    with pytest.raises(ValueError):
        induced_map(O1, ParaLinearMap.identity(O1), "xx")


@pytest.mark.parametrize("ch,variant", [(LEFT, "ll"), (RIGHT, "rr")])
def test_induced_is_functorial(gen, ch, variant):
    for seed in range(6):
        g = gen(seed)
        M, X, Y, Z = g.shape(), g.shape(), g.shape(), g.shape()
        f, h = g.para_linear(Y, Z, ch), g.para_linear(X, Y, ch)
        assert induced_map(M, regular_compose(f, h), variant) == \
            regular_compose(induced_map(M, f, variant), induced_map(M, h, variant))


def test_mixed_variants_are_transposes(gen):
    for seed in range(6):
        g = gen(seed)
        M, X, Y = g.shape(), g.shape(), g.shape()
        f = g.para_linear(X, Y, LEFT)
        assert induced_map(M, f, "lr") == transpose(induced_map(M, f, "ll"))
        fr = f.with_chirality(RIGHT)
        assert induced_map(M, fr, "rl") == transpose(induced_map(M, fr, "rr"))
