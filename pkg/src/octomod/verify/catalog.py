"""Named identities, each checked exactly on seeded random instances.

Every check receives a :class:`Gen` for one trial and calls :func:`same`
for each equality it asserts.  Checks flagged ``discovery`` encode a
candidate formula expected to be wrong; their failure is reported, never fatal.
"""

from dataclasses import dataclass

from .. import linalg
from ..bimodule import (
    Element, ModuleShape, O1, left_act, mixed_associator, module_associator,
    polarize, re_formula, re_project, reassemble, right_act, right_module_associator,
)
from ..functors import (
    MapSequence, adjoint_tau, adjoint_tau_inverse, alpha_map, conjugate_functor,
    double_dual_embedding, double_dual_point, dual_module, enveloping_decompose,
    enveloping_reassemble, hom_contravariant, hom_covariant, hom_left_exactness_check,
    phi_double_star,
)
from ..homalg import (
    HomModuleIso, compose_bracket_left, compose_bracket_right, hom_components,
    hom_reassemble, left_mult_operator, map_associator, map_mixed_associator,
    map_module_associator, map_right_associator, odot_left, odot_left_by_values,
    odot_left_matrix, odot_left_real, odot_right, odot_right_by_values, odot_right_matrix,
    odot_right_real, re_of_map, re_of_map_by_formula, regular_compose,
    regular_compose_by_bracket, right_mult_operator, transpose,
)
from ..octonion import E, ONE, Octonion, associator, conj, norm_sq, re
from ..paralinear import (
    LEFT, RIGHT, ParaLinearMap, RealLinearMap, eval_by_formula, ext, ext_by_polarization,
    ext_from_images, is_o_linear, is_para_linear, lift, paralinear_dimension, re_star,
    re_upper_star, second_associator_left as A, second_associator_right as B,
)
from ..tensor import TensorModule, elementary_tensor, induced_map, tensor_defect


class Mismatch(AssertionError):
    def __init__(self, label, lhs, rhs):
        super().__init__(label)
        self.label = label
        self.lhs = lhs
        self.rhs = rhs


def same(lhs, rhs, label=""):
    if lhs != rhs:
        raise Mismatch(label, lhs, rhs)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    group: str
    statement: str
    fn: object
    discovery: bool = False


CATALOG = {}


def identity(name, statement, group="core", discovery=False):
    def register(fn):
        if name in CATALOG:
            raise ValueError("duplicate identity name %r" % name)
        CATALOG[name] = IdentityCheck(name, group, statement, fn, discovery)
        return fn
    return register


# small helpers ---------------------------------------------------------------

def L(p, x):
    return left_act(p, x)


def R(x, p):
    return right_act(x, p)


def _module(g, label=None):
    """Random shape, standard or conjugated."""
    return g.shape(conjugated=g.rng.random() < 0.5, label=label)


def _as_conjugate(x):
    return Element(x.shape.conjugate(), x.coords)


def _conjugate_real(f):
    """``f^C``: the same real map between the conjugate modules."""
    return RealLinearMap(f.dom.conjugate(), f.cod.conjugate(), f.matrix)


# ---------------------------------------------------------------------------
# octonion algebra

@identity("octonion_alternativity", "(aa)b = a(ab) and (ab)b = a(bb)")
def _(g):
    a, b = g.octonion("a"), g.octonion("b")
    same((a * a) * b, a * (a * b), "left")
    same((a * b) * b, a * (b * b), "right")


@identity("octonion_norm_multiplicative", "|ab|^2 = |a|^2 |b|^2")
def _(g):
    a, b = g.octonion("a"), g.octonion("b")
    same(norm_sq(a * b), norm_sq(a) * norm_sq(b))


@identity("octonion_conjugation_antiautomorphism", "conj(ab) = conj(b) conj(a), a conj(a) = |a|^2")
def _(g):
    a, b = g.octonion("a"), g.octonion("b")
    same(conj(a * b), conj(b) * conj(a), "anti")
    same(a * conj(a), Octonion.real(norm_sq(a)), "norm")


@identity("octonion_associator_alternating", "[a,b,c] is alternating; Re(ab) = Re(ba)")
def _(g):
    a, b, c = g.octonion("a"), g.octonion("b"), g.octonion("c")
    t = associator(a, b, c)
    same(t, -associator(b, a, c), "swap12")
    same(t, -associator(a, c, b), "swap23")
    same(t, associator(b, c, a), "cycle")
    same(re(a * b), re(b * a), "trace")


# ---------------------------------------------------------------------------
# real part of a bimodule

@identity("re_formula_equals_projection", "5/12 x - 1/12 sum e_i x e_i is the coordinate real part")
def _(g):
    x = g.element(_module(g), "x")
    same(re_formula(x), re_project(x))


@identity("re_idempotent_and_real_scaling", "Re Re x = Re x and Re(p Re x) = Re(p) Re x")
def _(g):
    M = _module(g)
    x, p = g.element(M, "x"), g.octonion("p")
    same(re_formula(re_formula(x)), re_formula(x), "idempotent")
    same(re_formula(L(p, re_formula(x))), re_formula(x).scale(re(p)), "scaling")


@identity("re_kills_associators_and_commutators", "Re[p,q,x] = 0 and Re(px - xp) = 0")
def _(g):
    M = _module(g)
    x, p, q = g.element(M, "x"), g.octonion("p"), g.octonion("q")
    same(re_formula(module_associator(p, q, x)), M.zero(), "associator")
    same(re_formula(L(p, x) - R(x, p)), M.zero(), "commutator")


@identity("polarization_reassembles", "x = sum e_i x_i with x_i = Re(ebar_i x) real")
def _(g):
    x = g.element(_module(g), "x")
    parts = polarize(x)
    same(all(xi.is_real() for xi in parts), True, "real parts")
    same(reassemble(parts), x, "reassembly")


@identity("bimodule_associator_cyclic", "[p,q,m] = [m,p,q] = [q,m,p], also on conjugate modules")
def _(g):
    M = _module(g)
    m, p, q = g.element(M, "m"), g.octonion("p"), g.octonion("q")
    t = module_associator(p, q, m)
    same(t, right_module_associator(m, p, q), "left=right")
    same(t, mixed_associator(q, m, p), "left=mixed")
    same(module_associator(p, p, m), M.zero(), "alternative")


@identity("nucleus_equals_real_part", "m is nuclear and central iff m is real")
def _(g):
    M = _module(g)
    m = g.real_element(M, "m")
    p, q = g.octonion("p"), g.octonion("q")
    same(module_associator(p, q, m), M.zero(), "real is nuclear")
    same(L(p, m), R(m, p), "real is central")
    x = g.element(M, "x")
    central = all(L(E[i], x) == R(x, E[i]) for i in range(1, 8))
    nuclear = all(module_associator(E[i], E[j], x) == M.zero() for i in range(1, 8) for j in range(1, 8))
    same(central and nuclear, x.is_real(), "only reals")


# ---------------------------------------------------------------------------
# second associators of real-linear maps

def _real_map_setup(g):
    M, N = _module(g), _module(g)
    return g.real_linear(M, N, "f"), g.element(M, "x"), g.octonion("p"), g.octonion("q")


@identity("second_associator_product_rule",
          "A_pq(x,f) = f[p,q,x] - [p,q,f(x)] + p A_q(x,f) + A_p(qx,f)")
def _(g):
    f, x, p, q = _real_map_setup(g)
    rhs = f(module_associator(p, q, x)) - module_associator(p, q, f(x)) + L(p, A(q, x, f)) + A(p, L(q, x), f)
    same(A(p * q, x, f), rhs)


@identity("second_associator_product_rule_right",
          "B_pq(f,x) = f[x,p,q] - [f(x),p,q] + B_p(f,x) q + B_q(f,xp)")
def _(g):
    f, x, p, q = _real_map_setup(g)
    rhs = (f(right_module_associator(x, p, q)) - right_module_associator(f(x), p, q)
           + R(B(p, f, x), q) + B(q, f, R(x, p)))
    same(B(p * q, f, x), rhs)


@identity("second_associator_real_and_conjugate", "A and B vanish for real p and change sign under p -> pbar")
def _(g):
    f, x, p, _ = _real_map_setup(g)
    a = Octonion.real(g.rational("alpha"))
    zero = f.cod.zero()
    same(A(a, x, f), zero, "A real")
    same(B(a, f, x), zero, "B real")
    same(A(conj(p), x, f), -A(p, x, f), "A conj")
    same(B(conj(p), f, x), -B(p, f, x), "B conj")


@identity("second_associator_square", "A_{p^2}(x,f) = p A_p(x,f) + A_p(px,f), and the right mirror")
def _(g):
    f, x, p, _ = _real_map_setup(g)
    same(A(p * p, x, f), L(p, A(p, x, f)) + A(p, L(p, x), f), "left")
    same(B(p * p, f, x), R(B(p, f, x), p) + B(p, f, R(x, p)), "right")


@identity("second_associator_conjugate_shift",
          "A_p(pbar x,f) = p A_p(x,f), A_p(px,f) = pbar A_p(x,f), and the right mirrors")
def _(g):
    f, x, p, _ = _real_map_setup(g)
    pb = conj(p)
    same(A(p, L(pb, x), f), L(p, A(p, x, f)), "pbar x")
    same(A(p, L(p, x), f), L(pb, A(p, x, f)), "p x")
    same(B(p, f, R(x, pb)), R(B(p, f, x), p), "x pbar")
    same(B(p, f, R(x, p)), R(B(p, f, x), pb), "x p")


@identity("second_associator_power_shift",
          "A_p(pbar^k x,f) = p^k A_p(x,f) and A_{p^(k+1)} = p A_{p^k} + pbar^k A_p")
def _(g):
    f, x, p, _ = _real_map_setup(g)
    k = g.integer(1, 4, "k")
    pk, pbk = p ** k, conj(p) ** k
    same(A(p, L(pbk, x), f), L(pk, A(p, x, f)), "shift")
    same(A(p ** (k + 1), x, f), L(p, A(pk, x, f)) + L(pbk, A(p, x, f)), "power")


# scalar multiplications on Hom_R ------------------------------------------------

def _scalar_setup(g):
    f, x, p, q = _real_map_setup(g)
    return f, x, p, q, g.octonion("r")


@identity("scalar_left_map_f_odot_r",
          "A_p(x, f.r) = [p,f(x),r] + A_p(x,f) r - A_r(px,f) + p A_r(x,f)")
def _(g):
    f, x, p, _, r = _scalar_setup(g)
    fr = odot_right_real(f, r, LEFT)
    rhs = mixed_associator(p, f(x), r) + R(A(p, x, f), r) - A(r, L(p, x), f) + L(p, A(r, x, f))
    same(A(p, x, fr), rhs)


@identity("scalar_left_map_right_associator",
          "[f,p,q](x) = [f(x),p,q] - A_p(x,f) q - A_q(x, f.p) + A_pq(x,f)")
def _(g):
    f, x, p, q, _ = _scalar_setup(g)
    fp = odot_right_real(f, p, LEFT)
    assoc = odot_right_real(fp, q, LEFT) - odot_right_real(f, p * q, LEFT)
    rhs = right_module_associator(f(x), p, q) - R(A(p, x, f), q) - A(q, x, fp) + A(p * q, x, f)
    same(assoc(x), rhs)


@identity("scalar_left_map_r_odot_f",
          "A_p(x, r.f) = f[p,x,r] + A_p(xr,f) + A_r(px,f) - p A_r(x,f)")
def _(g):
    f, x, p, _, r = _scalar_setup(g)
    rf = odot_left_real(r, f, LEFT)
    rhs = f(mixed_associator(p, x, r)) + A(p, R(x, r), f) + A(r, L(p, x), f) - L(p, A(r, x, f))
    same(A(p, x, rf), rhs)


@identity("scalar_left_map_left_associator",
          "[p,q,f](x) = A_pq(x,f) - A_q(xp,f) - A_p(x, q.f) - f[x,p,q]")
def _(g):
    f, x, p, q, _ = _scalar_setup(g)
    qf = odot_left_real(q, f, LEFT)
    assoc = odot_left_real(p * q, f, LEFT) - odot_left_real(p, qf, LEFT)
    rhs = A(p * q, x, f) - A(q, R(x, p), f) - A(p, x, qf) - f(right_module_associator(x, p, q))
    same(assoc(x), rhs)


def _right_r_odot_f(g):
    f, x, p, _, r = _scalar_setup(g)
    return B(p, odot_left_real(r, f, RIGHT), x), f, x, p, r


@identity("scalar_right_map_r_odot_f",
          "B_p(r.f, x) = [r,f(x),p] + B_r(f,x) p + r B_p(f,x) - B_r(f,xp)")
def _(g):
    lhs, f, x, p, r = _right_r_odot_f(g)
    rhs = mixed_associator(r, f(x), p) + R(B(r, f, x), p) + L(r, B(p, f, x)) - B(r, f, R(x, p))
    same(lhs, rhs)


@identity("scalar_right_map_r_odot_f_uncorrected",
          "B_p(r.f, x) = [r,f(x),p] + B_r(f,xp) + r B_p(f,x) - B_r(f,xp)", discovery=True)
def _(g):
    lhs, f, x, p, r = _right_r_odot_f(g)
    rhs = mixed_associator(r, f(x), p) + B(r, f, R(x, p)) + L(r, B(p, f, x)) - B(r, f, R(x, p))
    same(lhs, rhs)


@identity("scalar_right_map_left_associator",
          "[p,q,f](x) = B_pq(f,x) - p B_q(f,x) - B_p(q.f, x) + [p,q,f(x)]")
def _(g):
    f, x, p, q, _ = _scalar_setup(g)
    qf = odot_left_real(q, f, RIGHT)
    assoc = odot_left_real(p * q, f, RIGHT) - odot_left_real(p, qf, RIGHT)
    rhs = B(p * q, f, x) - L(p, B(q, f, x)) - B(p, qf, x) + module_associator(p, q, f(x))
    same(assoc(x), rhs)


@identity("scalar_right_map_f_odot_r",
          "B_p(f.r, x) = f[r,x,p] - B_r(f,x) p + B_p(f,rx) + B_r(f,xp)")
def _(g):
    f, x, p, _, r = _scalar_setup(g)
    fr = odot_right_real(f, r, RIGHT)
    rhs = f(mixed_associator(r, x, p)) - R(B(r, f, x), p) + B(p, f, L(r, x)) + B(r, f, R(x, p))
    same(B(p, fr, x), rhs)


def _right_map_right_associator(g):
    f, x, p, q, _ = _scalar_setup(g)
    fp = odot_right_real(f, p, RIGHT)
    assoc = odot_right_real(fp, q, RIGHT) - odot_right_real(f, p * q, RIGHT)
    base = B(p * q, f, x) - B(q, fp, x) - B(p, f, L(q, x))
    return assoc(x), base, f(module_associator(p, q, x))


@identity("scalar_right_map_right_associator",
          "[f,p,q](x) = B_pq(f,x) - B_q(f.p, x) - B_p(f,qx) - f[p,q,x]")
def _(g):
    lhs, base, t = _right_map_right_associator(g)
    same(lhs, base - t)


@identity("scalar_right_map_right_associator_uncorrected",
          "[f,p,q](x) = B_pq(f,x) - B_q(f.p, x) - B_p(f,qx) + f[p,q,x]", discovery=True)
def _(g):
    lhs, base, t = _right_map_right_associator(g)
    same(lhs, base + t)


@identity("scalar_left_map_mixed_associator",
          "[q,f,p](x) = A_q(x,f) p - A_p(x, q.f) + A_p(xq,f) - A_q(x, f.p)")
def _(g):
    f, x, p, q, _ = _scalar_setup(g)
    qf, fp = odot_left_real(q, f, LEFT), odot_right_real(f, p, LEFT)
    assoc = odot_right_real(qf, p, LEFT) - odot_left_real(q, fp, LEFT)
    rhs = R(A(q, x, f), p) - A(p, x, qf) + A(p, R(x, q), f) - A(q, x, fp)
    same(assoc(x), rhs)


@identity("scalar_right_map_mixed_associator",
          "[q,f,p](x) = q B_p(f,x) - B_p(q.f, x) + B_q(f,px) - B_q(f.p, x)")
def _(g):
    f, x, p, q, _ = _scalar_setup(g)
    qf, fp = odot_left_real(q, f, RIGHT), odot_right_real(f, p, RIGHT)
    assoc = odot_right_real(qf, p, RIGHT) - odot_left_real(q, fp, RIGHT)
    rhs = L(q, B(p, f, x)) - B(p, qf, x) + B(q, f, L(p, x)) - B(q, fp, x)
    same(assoc(x), rhs)


# ---------------------------------------------------------------------------
# para-linear maps

def _left_setup(g):
    M, N = _module(g), _module(g)
    return g.para_linear(M, N, LEFT, "f"), g.element(M, "x"), g.octonion("p"), g.octonion("q")


@identity("paralinear_pAp_eq_App_bar", "p A_p(x,f) = A_p(x,f) pbar for left para-linear f")
def _(g):
    f, x, p, _ = _left_setup(g)
    a = A(p, x, f)
    same(L(p, a), R(a, conj(p)))


@identity("paralinear_re_antisymmetry", "Re(A_p(x,f) q) = -Re(A_q(x,f) p)")
def _(g):
    f, x, p, q = _left_setup(g)
    same(re_project(R(A(p, x, f), q)), -re_project(R(A(q, x, f), p)))


@identity("paralinear_re_of_f_on_associators",
          "Re f[p,q,x] = Re(A_p(x,f) q) and Re f[p,x,q] = Re(p A_q(x,f))")
def _(g):
    f, x, p, q = _left_setup(g)
    same(re_project(f(module_associator(p, q, x))), re_project(R(A(p, x, f), q)), "[p,q,x]")
    same(re_project(f(mixed_associator(p, x, q))), re_project(L(p, A(q, x, f))), "[p,x,q]")


@identity("paralinear_characterization",
          "A_p(x,f) = sum e_i f_R([e_i,p,x]); B_p(f,x) = sum f_R([x,p,e_i]) e_i")
def _(g):
    f, x, p, _ = _left_setup(g)
    rhs = f.cod.zero()
    for i in range(8):
        rhs = rhs + L(E[i], f.f_r(module_associator(E[i], p, x)))
    same(A(p, x, f), rhs, "left")
    h = g.para_linear(x.shape, f.cod, RIGHT, "h")
    rhs = f.cod.zero()
    for i in range(8):
        rhs = rhs + R(h.f_r(right_module_associator(x, p, E[i])), E[i])
    same(B(p, h, x), rhs, "right")


@identity("paralinear_reconstruction",
          "f is recovered from f_R; A_p(x,f) = 0 and B_p(f,x) = 0 for real x")
def _(g):
    ch = g.chirality()
    M, N = _module(g), _module(g)
    f = g.para_linear(M, N, ch, "f")
    x, p = g.element(M, "x"), g.octonion("p")
    same(eval_by_formula(f, x), f(x), "formula")
    same(is_para_linear(f.real_map(), ch), True, "para-linear")
    xr = g.real_element(M, "x_real")
    same(A(p, xr, f) if ch is LEFT else B(p, f, xr), N.zero(), "real x")


@identity("lift_re_star_round_trip", "lift and Re_* are inverse bijections")
def _(g):
    ch = g.chirality()
    M, N = _module(g), _module(g)
    f = g.para_linear(M, N, ch, "f")
    same(lift(re_star(f), ch), f, "lift o Re_*")
    h = g.real_into_re(M, N, "g")
    same(re_star(lift(h, ch)), h, "Re_* o lift")


@identity("ext_re_upper_star_round_trip", "ext and Re^* are inverse bijections; two constructions of ext agree")
def _(g):
    ch = g.chirality()
    M, N = _module(g), _module(g)
    f = g.para_linear(M, N, ch, "f")
    same(ext(re_upper_star(f), ch), f, "ext o Re^*")
    h = g.real_linear(M, N, "g")
    e = ext(h, ch)
    for eps in M.real_basis():
        same(e(eps), h(eps), "agrees on Re M")
    same(e, ext_by_polarization(h, ch), "two routes")


@identity("paralinear_dimension", "para-linear maps O^n -> O^m form a space of dimension 8nm")
def _(g):
    n, m = g.rank(), g.rank()
    ch = g.chirality()
    same(paralinear_dimension(n, m, ch), 8 * n * m)


# ---------------------------------------------------------------------------
# Hom bimodules

def _map_setup(g, standard=False):
    ch = g.chirality()
    M = g.shape() if standard else _module(g)
    N = g.shape() if standard else _module(g)
    return g.para_linear(M, N, ch, "f"), g.element(M, "x"), g.octonion("p"), g.octonion("q")


@identity("hom_scalar_actions_para_linear", "r.f and f.r are para-linear and match their pointwise definitions")
def _(g):
    f, x, p, _ = _map_setup(g)
    same(odot_left(p, f)(x), odot_left_by_values(p, f, x), "r.f values")
    same(odot_right(f, p)(x), odot_right_by_values(f, p, x), "f.r values")
    for mat in (odot_left_matrix(p, f), odot_right_matrix(f, p)):
        same(is_para_linear(RealLinearMap(f.dom, f.cod, mat), f.chirality), True, "para-linear")


@identity("hom_bimodule_associator_relations",
          "[p,q,f] = [q,f,p] = [f,p,q]; 1.f = f; Hom is an alternative bimodule")
def _(g):
    f, _, p, q = _map_setup(g)
    t = map_module_associator(p, q, f)
    same(t, map_mixed_associator(q, f, p), "left=mixed")
    same(t, map_right_associator(f, p, q), "left=right")
    same(odot_left(ONE, f), f, "unit")
    same(map_module_associator(p, p, f), f.scale(0), "alternative")


@identity("hom_translation_identities", "A_r(xr,f) = r A_r(x,f) = A_r(x,f) rbar")
def _(g):
    f, x, r, _ = _left_setup(g)
    same(A(r, R(x, r), f), L(r, A(r, x, f)), "xr")
    same(R(A(r, x, f), conj(r)), A(r, R(x, r), f), "rbar")


@identity("hom_real_part_is_o_linear", "Re f is O-linear, equals 5/12 f - 1/12 sum e_i.f.e_i, and fixes O-linear maps")
def _(g):
    f, _, _, _ = _map_setup(g)
    rf = re_of_map(f)
    same(is_o_linear(rf), True, "O-linear")
    same(rf, re_of_map_by_formula(f), "formula")
    same(re_of_map(rf), rf, "idempotent")


@identity("hom_polarization", "f = sum e_i.f_(i) with (e_i.f_(i))(x) = f_(i)(x) e_i; Hom(O^n,O^m) is free")
def _(g):
    f, x, p, _ = _map_setup(g, standard=True)
    parts = hom_components(f)
    same(hom_reassemble(parts), f, "reassembly")
    if f.chirality is LEFT:
        for i, fi in enumerate(parts):
            same(odot_left(E[i], fi)(x), R(fi(x), E[i]), "e_%d" % i)
    iso = HomModuleIso(f.dom, f.cod, f.chirality)
    y = iso.forward(f)
    same(iso.backward(y), f, "round trip")
    same(iso.forward_by_components(f), y, "by components")
    same(iso.forward(odot_left(p, f)), L(p, y), "left module map")
    same(iso.forward(odot_right(f, p)), R(y, p), "right module map")


# ---------------------------------------------------------------------------
# regular composition

def _compose_setup(g, ch=None, standard=False):
    ch = ch or g.chirality()
    X, Y, Z = [(g.shape() if standard else _module(g)) for _ in range(3)]
    return g.para_linear(Y, Z, ch, "f"), g.para_linear(X, Y, ch, "g"), g.element(X, "x"), g.octonion("p")


@identity("regular_composition_two_routes", "f(*)g via f_R o g equals f o g plus the bracket")
def _(g):
    f, h, _, _ = _compose_setup(g)
    same(regular_compose(f, h), regular_compose_by_bracket(f, h))


@identity("regular_composition_real_inner", "f(*)g is para-linear for g merely real-linear")
def _(g):
    ch = g.chirality()
    X, Y, Z = _module(g), _module(g), _module(g)
    f, h = g.para_linear(Y, Z, ch, "f"), g.real_linear(X, Y, "g")
    same(regular_compose(f, h), regular_compose_by_bracket(f, h))


@identity("composition_second_associator_rule",
          "A_p(x,f(*)g) = A_p(g(x),f) + f(A_p(x,g)) + [f,g,px] - p[f,g,x], and the right analog")
def _(g):
    f, h, x, p = _compose_setup(g, LEFT)
    fg = regular_compose(f, h)
    rhs = A(p, h(x), f) + f(A(p, x, h)) + compose_bracket_left(f, h, L(p, x)) - L(p, compose_bracket_left(f, h, x))
    same(A(p, x, fg), rhs, "left")
    f, h = f.with_chirality(RIGHT), h.with_chirality(RIGHT)
    fg = regular_compose(f, h)
    rhs = (B(p, f, h(x)) + f(B(p, h, x)) - compose_bracket_right(R(x, p), f, h)
           + R(compose_bracket_right(x, f, h), p))
    same(B(p, fg, x), rhs, "right")


@identity("composition_bracket_vanishing", "[f,g,x] = 0 if f or g is O-linear or x is real; then f(*)g = f o g")
def _(g):
    ch = g.chirality()
    X, Y, Z = _module(g), _module(g), _module(g)
    f, h = g.para_linear(Y, Z, ch, "f"), g.para_linear(X, Y, ch, "g")
    fo, ho = g.o_linear(Y, Z, ch, "f_O"), g.o_linear(X, Y, ch, "g_O")
    for a, b in ((fo, h), (f, ho)):
        same(regular_compose(a, b).real_map(), a.real_map().compose(b.real_map()), "O-linear factor")
    xr = g.real_element(X, "x_real")
    bracket = compose_bracket_left(f, h, xr) if ch is LEFT else compose_bracket_right(xr, f, h)
    same(bracket, Z.zero(), "real x")


def _triple(g, ch):
    X, Y, Z, W = [_module(g) for _ in range(4)]
    return g.para_linear(Z, W, ch, "f"), g.para_linear(Y, Z, ch, "g"), g.para_linear(X, Y, ch, "h")


@identity("composition_associator_real_part_zero", "Re[f,g,h] = 0, and [f,g,h] = 0 if one argument is O-linear")
def _(g):
    ch = g.chirality()
    f, h1, h2 = _triple(g, ch)
    same(re_of_map(map_associator(f, h1, h2)).is_zero(), True, "real part")
    same(map_associator(ext(re_upper_star(re_of_map(f)), ch), h1, h2).is_zero(), True, "f O-linear")
    same(map_associator(f, re_of_map(h1), h2).is_zero(), True, "g O-linear")
    same(map_associator(f, h1, re_of_map(h2)).is_zero(), True, "h O-linear")


@identity("composition_associator_pointwise",
          "[f,g,h](x) + f[g,h,x] = [f,g,h(x)] - [f,g(*)h,x] + [f(*)g,h,x]")
def _(g):
    f, h1, h2 = _triple(g, LEFT)
    x = g.element(h2.dom, "x")
    lhs = map_associator(f, h1, h2)(x) + f(compose_bracket_left(h1, h2, x))
    rhs = (compose_bracket_left(f, h1, h2(x)) - compose_bracket_left(f, regular_compose(h1, h2), x)
           + compose_bracket_left(regular_compose(f, h1), h2, x))
    same(lhs, rhs)


@identity("composition_bracket_conjugate", "[x,f,g] = [f^C, g^C, x] for right maps")
def _(g):
    f, h, x, _ = _compose_setup(g, RIGHT)
    lhs = compose_bracket_right(x, f, h)
    rhs = compose_bracket_left(conjugate_functor(f), conjugate_functor(h), _as_conjugate(x))
    same(lhs.coords, rhs.coords)


@identity("right_multiplication_lemmas",
          "[R_p,f,x] = -A_p(x,f), R_p(*)f = f.p, [f,R_p,x] = A_p(x,f), f(*)R_p = p.f")
def _(g):
    f, x, p, _ = _left_setup(g)
    Rp_cod, Rp_dom = right_mult_operator(p, f.cod), right_mult_operator(p, f.dom)
    same(compose_bracket_left(Rp_cod, f, x), -A(p, x, f), "[R_p,f,x]")
    same(regular_compose(Rp_cod, f), odot_right(f, p), "R_p(*)f")
    same(compose_bracket_left(f, Rp_dom, x), A(p, x, f), "[f,R_p,x]")
    same(regular_compose(f, Rp_dom), odot_left(p, f), "f(*)R_p")


@identity("right_multiplication_composition", "R_q(*)R_p = R_pq on left maps; L_p(*)L_q = L_pq on right maps")
def _(g):
    M = _module(g)
    p, q = g.octonion("p"), g.octonion("q")
    same(regular_compose(right_mult_operator(q, M), right_mult_operator(p, M)), right_mult_operator(p * q, M), "R")
    same(regular_compose(left_mult_operator(p, M), left_mult_operator(q, M)), left_mult_operator(p * q, M), "L")


@identity("right_multiplication_composition_pq_order", "R_p(*)R_q = R_pq", discovery=True)
def _(g):
    p, q = g.octonion("p"), g.octonion("q")
    same(regular_compose(right_mult_operator(p, O1), right_mult_operator(q, O1)), right_mult_operator(p * q, O1))


# ---------------------------------------------------------------------------
# right maps, conjugate modules, transpose

@identity("right_dual_second_associator", "B_p(f,x) = A_p(x,f^C) with f^C the same map on conjugate modules")
def _(g):
    f, x, p, _ = _real_map_setup(g)
    same(B(p, f, x).coords, A(p, _as_conjugate(x), _conjugate_real(f)).coords)


@identity("conjugate_scalar_swap", "f^C.r = rbar.f and r.f^C = f.rbar")
def _(g):
    f, _, r, _ = _map_setup(g)
    fc = conjugate_functor(f)
    same(odot_right(fc, r).full_matrix, odot_left(conj(r), f).full_matrix, "f^C.r")
    same(odot_left(r, fc).full_matrix, odot_right(f, conj(r)).full_matrix, "r.f^C")


@identity("transpose_bimodule_involution", "transpose is an involution commuting with r.f and f.r; it keeps f_R")
def _(g):
    f, _, r, _ = _map_setup(g)
    t = transpose(f)
    same(transpose(t), f, "involution")
    same(t.chirality, f.chirality.flip(), "chirality")
    same(re_star(t), re_star(f), "real part")
    same(transpose(odot_left(r, f)), odot_left(r, t), "left action")
    same(transpose(odot_right(f, r)), odot_right(t, r), "right action")


@identity("left_and_right_para_linear_iff_o_linear", "a map is both left and right para-linear iff it is O-linear")
def _(g):
    ch = g.chirality()
    M, N = _module(g), _module(g)
    if g.choice([True, False], "o_linear"):
        f = g.o_linear(M, N, ch, "f")
    else:
        f = g.para_linear(M, N, ch, "f")
    same(is_para_linear(f.real_map(), ch.flip()), is_o_linear(f))


# ---------------------------------------------------------------------------
# conjugate functor, Hom functors

@identity("conjugate_functor_laws", "C(C(f)) = f, C keeps the real map, C(f(*)g) = C(f)(*)C(g)", group="functor")
def _(g):
    f, h, _, _ = _compose_setup(g)
    cf = conjugate_functor(f)
    same(conjugate_functor(cf), f, "involution")
    same(cf.full_matrix, f.full_matrix, "same real map")
    same(conjugate_functor(regular_compose(f, h)), regular_compose(cf, conjugate_functor(h)), "composition")
    same(conjugate_functor(ParaLinearMap.identity(h.dom, h.chirality)),
         ParaLinearMap.identity(h.dom.conjugate(), h.chirality.flip()), "identity")


@identity("hom_functor_covariant", "T(f1(*)f2) = T(f1)(*)T(f2) and T(id) = id", group="functor")
def _(g):
    f, h, _, _ = _compose_setup(g, standard=True)
    M = g.shape(label="M")
    same(hom_covariant(M, regular_compose(f, h)), regular_compose(hom_covariant(M, f), hom_covariant(M, h)), "law")
    ident = ParaLinearMap.identity(h.dom, h.chirality)
    same(hom_covariant(M, ident), ParaLinearMap.identity(HomModuleIso(M, h.dom).hom_shape, h.chirality), "identity")


@identity("hom_functor_contravariant", "S(f1(*)f2) = S(f2)(*)S(f1) and S(id) = id", group="functor")
def _(g):
    f, h, _, _ = _compose_setup(g, standard=True)
    M = g.shape(label="M")
    same(hom_contravariant(M, regular_compose(f, h)),
         regular_compose(hom_contravariant(M, h), hom_contravariant(M, f)), "law")
    ident = ParaLinearMap.identity(h.dom, h.chirality)
    same(hom_contravariant(M, ident),
         ParaLinearMap.identity(HomModuleIso(h.dom, M).hom_shape, h.chirality.flip()), "identity")


@identity("hom_functors_o_linear", "T and S commute with p.f and f.p", group="functor")
def _(g):
    f, _, p, _ = _map_setup(g, standard=True)
    M = g.shape(label="M")
    for F in (hom_covariant, hom_contravariant):
        same(F(M, odot_left(p, f)), odot_left(p, F(M, f)), F.__name__ + " left")
        same(F(M, odot_right(f, p)), odot_right(F(M, f), p), F.__name__ + " right")


# ---------------------------------------------------------------------------
# tensor products

@identity("tensor_real_slot_lemma",
          "p(m x m') = pm x m', mp x m' = m x pm', (m x m')p = m x m'p when one of p, m, m' is real",
          group="functor")
def _(g):
    M, N = g.shape(), g.shape()
    T = TensorModule(M, N)
    slot = g.choice(["p", "m", "m'"], "real_slot")
    p = Octonion.real(g.rational("p")) if slot == "p" else g.octonion("p")
    m = g.real_element(M, "m") if slot == "m" else g.element(M, "m")
    m2 = g.real_element(N, "m'") if slot == "m'" else g.element(N, "m'")
    t = elementary_tensor(T, m, m2)
    same(L(p, t), elementary_tensor(T, L(p, m), m2), "left")
    same(elementary_tensor(T, R(m, p), m2), elementary_tensor(T, m, L(p, m2)), "middle")
    same(R(t, p), elementary_tensor(T, m, R(m2, p)), "right")


@identity("tensor_defect_identity", "mp x m' - m x pm' = sum (m_i x m'_j) [e_i,p,e_j]", group="functor")
def _(g):
    M, N = g.shape(), g.shape()
    T = TensorModule(M, N)
    m, p, m2 = g.element(M, "m"), g.octonion("p"), g.element(N, "m'")
    lhs = elementary_tensor(T, R(m, p), m2) - elementary_tensor(T, m, L(p, m2))
    same(lhs, tensor_defect(T, m, p, m2))


@identity("tensor_real_part", "Re(M x M') = Re M x Re M'; the tensor is real-bilinear", group="functor")
def _(g):
    M, N = g.shape(), g.shape()
    T = TensorModule(M, N)
    m, m2 = g.real_element(M, "m"), g.real_element(N, "m'")
    same(elementary_tensor(T, m, m2).is_real(), True, "real")
    x, y, z = g.element(M, "x"), g.element(M, "y"), g.element(N, "z")
    c = g.rational("c")
    same(elementary_tensor(T, x + y.scale(c), z),
         elementary_tensor(T, x, z) + elementary_tensor(T, y, z).scale(c), "bilinear")


@identity("tensor_induced_functorial", "1 x (f(*)g) = (1 x f)(*)(1 x g) and 1 x id = id", group="functor")
def _(g):
    ch = g.chirality()
    variant = "ll" if ch is LEFT else "rr"
    f, h, _, _ = _compose_setup(g, ch, standard=True)
    M = g.shape(label="M")
    same(induced_map(M, regular_compose(f, h), variant),
         regular_compose(induced_map(M, f, variant), induced_map(M, h, variant)), "law")
    T = TensorModule(M, h.dom)
    same(induced_map(M, ParaLinearMap.identity(h.dom, ch), variant), ParaLinearMap.identity(T.shape, ch), "identity")


@identity("tensor_variants_transpose", "the lr and rl variants are transposes of ll and rr", group="functor")
def _(g):
    f, _, _, _ = _map_setup(g, standard=True)
    M = g.shape(label="M")
    if f.chirality is LEFT:
        same(induced_map(M, f, "lr"), transpose(induced_map(M, f, "ll")))
    else:
        same(induced_map(M, f, "rl"), transpose(induced_map(M, f, "rr")))


# ---------------------------------------------------------------------------
# adjunction

def _adjoint_setup(g):
    M, X, Y = g.shape(label="M"), g.shape(label="X"), g.shape(label="Y")
    alpha = g.para_linear(TensorModule(M, X).shape, Y, LEFT, "alpha")
    return M, X, Y, alpha


@identity("adjoint_round_trip", "tau^-1(tau(alpha)) = alpha and tau(tau^-1(beta)) = beta", group="functor")
def _(g):
    M, X, Y, alpha = _adjoint_setup(g)
    same(adjoint_tau_inverse(M, X, Y, adjoint_tau(M, X, Y, alpha)), alpha, "alpha")
    beta = g.para_linear(X, HomModuleIso(M, Y).hom_shape, LEFT, "beta")
    same(adjoint_tau(M, X, Y, adjoint_tau_inverse(M, X, Y, beta)), beta, "beta")


@identity("adjoint_naturality", "tau(alpha(*)(1 x f)) = tau(alpha)(*)f and tau(g(*)alpha) = T(g)(*)tau(alpha)",
          group="functor")
def _(g):
    M, X, Y, alpha = _adjoint_setup(g)
    tau = adjoint_tau(M, X, Y, alpha)
    X2, Y2 = g.shape(label="X'"), g.shape(label="Y'")
    f = g.para_linear(X2, X, LEFT, "f")
    same(adjoint_tau(M, X2, Y, regular_compose(alpha, induced_map(M, f))), regular_compose(tau, f), "in X")
    h = g.para_linear(Y, Y2, LEFT, "g")
    same(adjoint_tau(M, X, Y2, regular_compose(h, alpha)), regular_compose(hom_covariant(M, h), tau), "in Y")


@identity("adjoint_o_linear", "tau(r.alpha) = r.tau(alpha) and tau(alpha.r) = tau(alpha).r", group="functor")
def _(g):
    M, X, Y, alpha = _adjoint_setup(g)
    r = g.octonion("r")
    tau = adjoint_tau(M, X, Y, alpha)
    same(adjoint_tau(M, X, Y, odot_left(r, alpha)), odot_left(r, tau), "left")
    same(adjoint_tau(M, X, Y, odot_right(alpha, r)), odot_right(tau, r), "right")


# ---------------------------------------------------------------------------
# double dual

@identity("double_dual_second_associator", "B_p(x'',f) = A_p(x,f) for x'' evaluation at x", group="functor")
def _(g):
    M = g.shape(label="M")
    x, p = g.element(M, "x"), g.octonion("p")
    f = g.para_linear(M, O1, LEFT, "f")
    xpp = double_dual_point(M, x)
    same(xpp(dual_module(M).forward(f)), f(x), "evaluation")
    same(B(p, xpp, dual_module(M).forward(f)), A(p, x, f))


@identity("double_dual_o_linear_injective", "tau_M(rx) = r.tau_M(x) and tau_M has real rank 8n", group="functor")
def _(g):
    M = g.shape(label="M")
    x, r = g.element(M, "x"), g.octonion("r")
    bidual = HomModuleIso(dual_module(M).hom_shape, O1, RIGHT)
    point = lambda y: bidual.forward(double_dual_point(M, y))
    same(point(L(r, x)), bidual.forward(odot_left(r, double_dual_point(M, x))), "O-linear")
    tau = double_dual_embedding(M)
    same(is_o_linear(tau), True, "O-linear map")
    same(tau.real_map().real_rank(), M.dim, "injective")


@identity("double_dual_naturality", "phi^{*l*r}(*)tau_X = tau_Y(*)phi", group="functor")
def _(g):
    X, Y = g.shape(label="X"), g.shape(label="Y")
    phi = g.para_linear(X, Y, LEFT, "phi")
    same(regular_compose(phi_double_star(phi), double_dual_embedding(X)),
         regular_compose(double_dual_embedding(Y), phi))


# ---------------------------------------------------------------------------
# enveloping category, exactness, weak functors

@identity("enveloping_reassembly", "f = sum f_ij o alpha^ij_M with every f_ij O-linear", group="functor")
def _(g):
    M, N = _module(g), _module(g)
    f = g.real_linear(M, N, "f")
    parts = enveloping_decompose(f)
    same(all(is_o_linear(fij) for fij in parts.values()), True, "O-linear parts")
    same(enveloping_reassemble(parts, M), f, "reassembly")


@identity("alpha_commutes_with_o_linear", "f o alpha_M = alpha_N o f for O-linear f", group="functor")
def _(g):
    M, N = _module(g), _module(g)
    f = g.o_linear(M, N, g.chirality(), "f")
    alpha = [[g.rational() for _ in range(8)] for _ in range(8)]
    same(f.real_map().compose(alpha_map(alpha, M)), alpha_map(alpha, N).compose(f.real_map()))


@identity("hom_left_exactness", "Hom(M,-) keeps 0 -> X -> X+Y -> Y exact", group="functor")
def _(g):
    M, X, Y = g.shape(label="M"), g.shape(label="X"), g.shape(label="Y")
    S = ModuleShape(X.rank + Y.rank)
    inc = ext_from_images(X, S, [S.unit(8 * a) for a in range(X.rank)])
    pr = ext_from_images(S, Y, [Y.zero()] * X.rank + [Y.unit(8 * b) for b in range(Y.rank)])
    report = hom_left_exactness_check(M, MapSequence.of([inc, pr], zero_start=True, zero_end=True))
    same(report.status, "pass")


@identity("weak_functor_composition",
          "iota and FRe preserve f(*)g when one factor is O-linear", group="functor")
def _(g):
    ch = g.chirality()
    X, Y, Z = _module(g), _module(g), _module(g)

    def fre(f):
        return [[f.re_matrix[b][8 * a] for a in range(f.dom.rank)] for b in range(f.cod.rank)]

    pairs = [(g.para_linear(Y, Z, ch, "f"), g.o_linear(X, Y, ch, "g_O")),
             (g.o_linear(Y, Z, ch, "f_O"), g.para_linear(X, Y, ch, "g"))]
    for outer, inner in pairs:
        comp = regular_compose(outer, inner)
        same(comp.real_map(), outer.real_map().compose(inner.real_map()), "iota")
        same(fre(comp), linalg.mat_mul(fre(outer), fre(inner)), "FRe")


@identity("natural_lift", "lift(g o f) = lift(g)(*)f for g into Re M", group="functor")
def _(g):
    ch = g.chirality()
    X, Y, M = _module(g), _module(g), _module(g)
    f = g.para_linear(X, Y, ch, "f")
    h = g.real_into_re(Y, M, "g")
    same(lift(h.compose(f.real_map()), ch), regular_compose(lift(h, ch), f))


@identity("natural_extension", "ext(f o g) = f(*)ext(g) for g out of Re M", group="functor")
def _(g):
    ch = g.chirality()
    X, Y, M = _module(g), _module(g), _module(g)
    f = g.para_linear(X, Y, ch, "f")
    h = g.real_linear(M, X, "g")
    same(ext(f.real_map().compose(h), ch), regular_compose(f, ext(h, ch)))


__all__ = ["CATALOG", "IdentityCheck", "Mismatch", "same", "identity"]
