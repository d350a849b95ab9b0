"""Algebra on spaces of para-linear maps.

Scalar multiplications (all on full real matrices, ``L``/``R`` the action
matrices of the domain or codomain):

    left maps   f (.) r :  x -> f(x) r - A_r(x, f)
                r (.) f :  x -> f(x r) + A_r(x, f)
    right maps  r (.) f :  x -> r f(x) + B_r(f, x)
                f (.) r :  x -> f(r x) - B_r(f, x)

Regular composition keeps para-linearity by correcting ``f o g`` with a
purely imaginary bracket, so its real part is simply ``f_R o g``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .bimodule import (
    Element, ModuleShape, ShapeMismatch, check_shape, left_act, left_matrix,
    right_act, right_matrix,
)
from .octonion import E, Octonion, conj
from .paralinear import (
    LEFT, RIGHT, Chirality, ParaLinearMap, RealLinearMap, ext_from_images,
    from_real_linear, second_associator_left, second_associator_right,
)


def _compress(chirality, dom, cod, full):
    """Read off ``f_R`` from a full matrix known to be para-linear."""
    return ParaLinearMap(chirality, dom, cod, [list(full[8 * b]) for b in range(cod.rank)])


def _as_octonion(r):
    return r if isinstance(r, Octonion) else Octonion.real(r)


# ---------------------------------------------------------------------------
# scalar multiplications

def _full_and_chirality(f, chirality):
    if isinstance(f, ParaLinearMap):
        return f.full_matrix, f.chirality
    if chirality is None:
        raise ValueError("a real-linear map needs an explicit chirality")
    return f.matrix, Chirality.coerce(chirality)


def odot_right_matrix(f, r, chirality=None):
    """Full matrix of ``f (.) r`` straight from the defining formula.

    ``f`` may also be a RealLinearMap, using the left or right formula.
    """
    r = _as_octonion(r)
    F, ch = _full_and_chirality(f, chirality)
    if ch is LEFT:
        t = linalg.mat_mul(right_matrix(r, f.cod), F)
        t = linalg.mat_sub(t, linalg.mat_mul(F, left_matrix(r, f.dom)))
        return linalg.mat_add(t, linalg.mat_mul(left_matrix(r, f.cod), F))
    t = linalg.mat_mul(F, left_matrix(r, f.dom))
    t = linalg.mat_sub(t, linalg.mat_mul(right_matrix(r, f.cod), F))
    return linalg.mat_add(t, linalg.mat_mul(F, right_matrix(r, f.dom)))


def odot_left_matrix(r, f, chirality=None):
    """Full matrix of ``r (.) f`` straight from the defining formula."""
    r = _as_octonion(r)
    F, ch = _full_and_chirality(f, chirality)
    if ch is LEFT:
        t = linalg.mat_mul(F, right_matrix(r, f.dom))
        t = linalg.mat_add(t, linalg.mat_mul(F, left_matrix(r, f.dom)))
        return linalg.mat_sub(t, linalg.mat_mul(left_matrix(r, f.cod), F))
    t = linalg.mat_mul(left_matrix(r, f.cod), F)
    t = linalg.mat_add(t, linalg.mat_mul(right_matrix(r, f.cod), F))
    return linalg.mat_sub(t, linalg.mat_mul(F, right_matrix(r, f.dom)))


def odot_right(f, r):
    """``f (.) r`` for a left or right para-linear ``f``."""
    return _compress(f.chirality, f.dom, f.cod, odot_right_matrix(f, r))


def odot_left(r, f):
    """``r (.) f`` for a left or right para-linear ``f``."""
    return _compress(f.chirality, f.dom, f.cod, odot_left_matrix(r, f))


def odot_right_real(f, r, chirality):
    """``f (.) r`` on Hom_R(M, M') with the left or right formula."""
    return RealLinearMap(f.dom, f.cod, odot_right_matrix(f, r, chirality))


def odot_left_real(r, f, chirality):
    return RealLinearMap(f.dom, f.cod, odot_left_matrix(r, f, chirality))


def odot_right_by_values(f, r, x):
    """``(f (.) r)(x)`` from the element-level definition."""
    r = _as_octonion(r)
    if f.chirality is LEFT:
        return right_act(f(x), r) - second_associator_left(r, x, f)
    return f(left_act(r, x)) - second_associator_right(r, f, x)


def odot_left_by_values(r, f, x):
    """``(r (.) f)(x)`` from the element-level definition."""
    r = _as_octonion(r)
    if f.chirality is LEFT:
        return f(right_act(x, r)) + second_associator_left(r, x, f)
    return left_act(r, f(x)) + second_associator_right(r, f, x)


def map_module_associator(p, q, f):
    """``[p, q, f] = (pq) (.) f - p (.) (q (.) f)`` in the Hom bimodule."""
    return odot_left(p * q, f) - odot_left(p, odot_left(q, f))


def map_mixed_associator(p, f, q):
    """``[p, f, q] = (p (.) f) (.) q - p (.) (f (.) q)``."""
    return odot_right(odot_left(p, f), q) - odot_left(p, odot_right(f, q))


def map_right_associator(f, p, q):
    """``[f, p, q] = (f (.) p) (.) q - f (.) (pq)``."""
    return odot_right(odot_right(f, p), q) - odot_right(f, p * q)


# ---------------------------------------------------------------------------
# real part of a map

def re_of_map(f):
    """O-linear map agreeing with ``Re f`` on the real part of the domain."""
    images = []
    for eps in f.dom.real_basis():
        y = f.f_r(eps)
        images.append(y)
    return ext_from_images(f.dom, f.cod, images, f.chirality)


def re_of_map_by_formula(f):
    """``5/12 f - 1/12 sum e_i (.) f (.) e_i`` in the Hom bimodule."""
    acc = f.scale(Fraction(5, 12))
    s = ParaLinearMap.zero(f.dom, f.cod, f.chirality)
    for i in range(1, 8):
        s = s + odot_right(odot_left(E[i], f), E[i])
    return acc - s.scale(Fraction(1, 12))


def hom_components(f):
    """``f_(i) = Re(ebar_i (.) f)`` so that ``f = sum e_i (.) f_(i)``."""
    return [re_of_map(odot_left(conj(E[i]), f)) for i in range(8)]


def hom_reassemble(parts):
    out = ParaLinearMap.zero(parts[0].dom, parts[0].cod, parts[0].chirality)
    for i, fi in enumerate(parts):
        out = out + odot_left(E[i], fi)
    return out


# ---------------------------------------------------------------------------
# regular composition

def _check_composable(f, g):
    if isinstance(g, ParaLinearMap) and f.chirality is not g.chirality:
        raise ValueError("regular composition needs two maps of the same chirality")
    check_shape(f.dom, g.cod, "inner module")


def regular_compose(f, g):
    """``f (*) g`` for two maps of the same chirality.

    ``g`` may also be merely real-linear; the result is still para-linear.
    """
    _check_composable(f, g)
    G = g.full_matrix if isinstance(g, ParaLinearMap) else g.matrix
    return ParaLinearMap(f.chirality, g.dom, f.cod, linalg.mat_mul(f.re_matrix, G))


def regular_compose_left(f, g):
    if f.chirality is not LEFT or g.chirality is not LEFT:
        raise ValueError("regular_compose_left takes left para-linear maps")
    return regular_compose(f, g)


def regular_compose_right(f, g):
    if f.chirality is not RIGHT or g.chirality is not RIGHT:
        raise ValueError("regular_compose_right takes right para-linear maps")
    return regular_compose(f, g)


def compose_bracket_left(f, g, x):
    """``[f, g, x] = -sum_j e_j Re f(A_{e_j}(x, g))``."""
    out = f.cod.zero()
    for j in range(1, 8):
        out = out - left_act(E[j], f.f_r(second_associator_left(E[j], x, g)))
    return out


def compose_bracket_right(x, f, g):
    """``[x, f, g] = sum_j Re f(B_{e_j}(g, x)) e_j``."""
    out = f.cod.zero()
    for j in range(1, 8):
        out = out + right_act(f.f_r(second_associator_right(E[j], g, x)), E[j])
    return out


def regular_compose_by_bracket(f, g):
    """``f o g`` plus the bracket, assembled on the real basis, then checked
    for para-linearity.  Independent of :func:`regular_compose`."""
    _check_composable(f, g)

    def fn(x):
        if f.chirality is LEFT:
            return f(g(x)) + compose_bracket_left(f, g, x)
        return f(g(x)) + compose_bracket_right(x, f, g)

    return from_real_linear(RealLinearMap.from_function(g.dom, f.cod, fn), f.chirality)


def map_associator(f, g, h):
    """``[f, g, h] = (f (*) g) (*) h - f (*) (g (*) h)``."""
    return regular_compose(regular_compose(f, g), h) - regular_compose(f, regular_compose(g, h))


# ---------------------------------------------------------------------------
# multiplication operators, transpose

def right_mult_operator(p, shape):
    """``R_p: x -> x p`` as a left para-linear map."""
    return _compress(LEFT, shape, shape, right_matrix(_as_octonion(p), shape))


def left_mult_operator(p, shape):
    """``L_p: x -> p x`` as a right para-linear map."""
    return _compress(RIGHT, shape, shape, left_matrix(_as_octonion(p), shape))


def transpose(f):
    """The opposite-chirality para-linear map with the same real part."""
    return f.with_chirality(f.chirality.flip())


# ---------------------------------------------------------------------------
# Hom as a free bimodule

@dataclass(frozen=True)
class HomModuleIso:
    """Model of Hom(M, M') (left or right para-linear) as ``O^{nm}``.

    Coordinate ``b*n + a`` holds the octonion ``F_ba`` with ``f(x)_b = sum_a
    x^a F_ba`` (left maps).  Right maps go through their transpose.
    """

    dom: ModuleShape
    cod: ModuleShape
    chirality: object = LEFT

    def __post_init__(self):
        if self.dom.conjugated or self.cod.conjugated:
            raise ValueError("Hom modules are modelled for standard shapes only")

    @property
    def hom_shape(self):
        return ModuleShape(self.dom.rank * self.cod.rank)

    def forward(self, f):
        if f.chirality is not self.chirality:
            raise ValueError("expected a %s para-linear map" % self.chirality.value)
        check_shape(self.dom, f.dom, "domain")
        check_shape(self.cod, f.cod, "codomain")
        n = self.dom.rank
        coords = []
        for b in range(self.cod.rank):
            row = f.re_matrix[b]
            for a in range(n):
                c = row[8 * a:8 * a + 8]
                coords.append(Octonion([c[0]] + [-x for x in c[1:]]))
        return Element(self.hom_shape, coords)

    def backward(self, y):
        check_shape(self.hom_shape, y.shape)
        n = self.dom.rank
        rm = []
        for b in range(self.cod.rank):
            row = []
            for a in range(n):
                c = y.coords[b * n + a].c
                row.extend([c[0]] + [-x for x in c[1:]])
            rm.append(row)
        return ParaLinearMap(self.chirality, self.dom, self.cod, rm)

    def elementary(self, b, a):
        """The O-linear map sending coordinate ``a`` to coordinate ``b``."""
        return self.backward(self.hom_shape.unit(8 * (b * self.dom.rank + a)))

    def basis_maps(self):
        return [self.backward(u) for u in self.hom_shape.basis()]

    def forward_by_components(self, f):
        """Coordinates assembled from ``f = sum e_i (.) f_(i)``; each O-linear
        ``f_(i)`` contributes the real matrix of its values on Re M."""
        parts = hom_components(f)
        n = self.dom.rank
        coords = [Octonion() for _ in range(self.hom_shape.rank)]
        for i, fi in enumerate(parts):
            for b in range(self.cod.rank):
                for a in range(n):
                    v = fi.re_matrix[b][8 * a]
                    if v:
                        coords[b * n + a] = coords[b * n + a] + E[i] * v
        return Element(self.hom_shape, coords)


def hom_module(dom, cod, chirality=LEFT):
    return HomModuleIso(dom, cod, chirality)


__all__ = [
    "odot_left", "odot_right", "odot_left_matrix", "odot_right_matrix",
    "odot_left_by_values", "odot_right_by_values", "odot_left_real", "odot_right_real",
    "map_module_associator", "map_mixed_associator", "map_right_associator",
    "re_of_map", "re_of_map_by_formula", "hom_components", "hom_reassemble",
    "regular_compose", "regular_compose_left", "regular_compose_right",
    "compose_bracket_left", "compose_bracket_right", "regular_compose_by_bracket",
    "map_associator", "right_mult_operator", "left_mult_operator", "transpose",
    "HomModuleIso", "hom_module", "ShapeMismatch",
]
