"""Functors between the categories of left/right para-linear maps.

Hom spaces are always replaced by free bimodules through
:class:`HomModuleIso`, so every functor value is a concrete
:class:`ParaLinearMap` and functor laws are plain matrix identities.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from . import linalg
from .bimodule import O1, basis_action, check_shape, left_act, polarize
from .homalg import HomModuleIso, regular_compose
from .octonion import E, Octonion
from .paralinear import (
    LEFT, RIGHT, ParaLinearMap, RealLinearMap, ext_from_images, from_real_linear,
)
from .report import FAIL, PASS, IdentityReport
from .tensor import TensorModule


# ---------------------------------------------------------------------------
# conjugate functor

def conjugate_functor(f):
    """``C(f)``: the same real map between the conjugate modules, viewed with
    the opposite chirality."""
    return ParaLinearMap(f.chirality.flip(), f.dom.conjugate(), f.cod.conjugate(), f.re_matrix)


# ---------------------------------------------------------------------------
# Hom functors

def _functor_on_hom(src, dst, fn, chirality):
    """Real-linear map ``src.hom_shape -> dst.hom_shape`` given by
    ``g -> fn(g)`` on maps, compressed to a para-linear map (checked)."""
    cols = []
    for u in src.hom_shape.basis():
        cols.append(dst.forward(fn(src.backward(u))).flat())
    g = RealLinearMap(src.hom_shape, dst.hom_shape, linalg.transpose(cols))
    return from_real_linear(g, chirality)


def hom_covariant(M, f):
    """``f_*: Hom(M, X) -> Hom(M, Y)``, ``g -> f (*) g``; same chirality as ``f``."""
    src = HomModuleIso(M, f.dom, f.chirality)
    dst = HomModuleIso(M, f.cod, f.chirality)
    return _functor_on_hom(src, dst, lambda g: regular_compose(f, g), f.chirality)


def hom_contravariant(M, f):
    """``f^*: Hom(Y, M) -> Hom(X, M)``, ``g -> g (*) f``; opposite chirality.

    For left ``f`` this is the right para-linear ``f^{*l}``.
    """
    src = HomModuleIso(f.cod, M, f.chirality)
    dst = HomModuleIso(f.dom, M, f.chirality)
    return _functor_on_hom(src, dst, lambda g: regular_compose(g, f), f.chirality.flip())


# ---------------------------------------------------------------------------
# tensor-Hom adjunction

def _real_units(shape):
    return shape.real_basis()


def adjoint_tau(M, X, Y, alpha):
    """``tau(alpha): X -> Hom(M, Y)`` with ``tau(alpha)(x)(m) = alpha(m (x) x)``
    on real ``m``, ``x``; ``alpha`` is a left map ``M (x) X -> Y``."""
    T = TensorModule(M, X)
    check_shape(T.shape, alpha.dom, "domain of alpha")
    check_shape(Y, alpha.cod, "codomain of alpha")
    hom = HomModuleIso(M, Y, LEFT)
    images = []
    for c in range(X.rank):
        # m (x) x on real basis vectors is the real unit at (a, c)
        vals = [alpha(T.shape.unit(8 * T.index(a, c))) for a in range(M.rank)]
        images.append(hom.forward(ext_from_images(M, Y, vals, LEFT)))
    return ext_from_images(X, hom.hom_shape, images, LEFT)


def adjoint_tau_inverse(M, X, Y, beta):
    """Inverse of :func:`adjoint_tau`: ``alpha(m (x) x) = beta(x)(m)``."""
    T = TensorModule(M, X)
    hom = HomModuleIso(M, Y, LEFT)
    check_shape(X, beta.dom, "domain of beta")
    check_shape(hom.hom_shape, beta.cod, "codomain of beta")
    images = [None] * T.shape.rank
    for c, eps_c in enumerate(_real_units(X)):
        g = hom.backward(beta(eps_c))
        for a, eps_a in enumerate(_real_units(M)):
            images[T.index(a, c)] = g(eps_a)
    return ext_from_images(T.shape, Y, images, LEFT)


# ---------------------------------------------------------------------------
# double dual

def dual_module(M):
    """``M* = Hom_LO(M, O)`` modelled as a free module."""
    return HomModuleIso(M, O1, LEFT)


def double_dual_point(M, x):
    """``x'': M* -> O``, ``F -> F(x)``, as a right para-linear map (checked)."""
    dual = dual_module(M)
    g = RealLinearMap.from_function(dual.hom_shape, O1, lambda u: dual.backward(u)(x))
    return from_real_linear(g, RIGHT)


def double_dual_embedding(M):
    """``tau_M: M -> M**`` as a left para-linear map (it is O-linear)."""
    dual = dual_module(M)
    bidual = HomModuleIso(dual.hom_shape, O1, RIGHT)
    g = RealLinearMap.from_function(M, bidual.hom_shape, lambda x: bidual.forward(double_dual_point(M, x)))
    return from_real_linear(g, LEFT)


def phi_double_star(phi):
    """``phi^{*l*r}: X** -> Y**`` for a left map ``phi: X -> Y``."""
    return hom_contravariant(O1, hom_contravariant(O1, phi))


# ---------------------------------------------------------------------------
# enveloping decomposition

def alpha_elementary(i, j):
    """8x8 matrix of ``alpha^{ij}``: ``e_k -> delta_jk e_i``."""
    m = linalg.zeros(8, 8)
    m[i][j] = Fraction(1)
    return m


def alpha_map(alpha, M):
    """``alpha_M``: the real map with ``alpha_M(p eps_a) = alpha(p) eps_a``."""
    alpha = [[Fraction(v) for v in row] for row in alpha]
    cols = [None] * M.dim
    for a, eps in enumerate(M.real_basis()):
        for k in range(8):
            j, s = basis_action(k, "left", M.conjugated)[0]
            img = left_act(Octonion([row[k] for row in alpha]), eps).flat()
            cols[8 * a + j] = img if s > 0 else [-v for v in img]
    return RealLinearMap(M, M, linalg.transpose(cols))


def enveloping_decompose(f):
    """The 64 O-linear maps ``f_ij`` with ``f = sum f_ij o alpha^{ij}_M``.

    ``f_ij(eps_a)`` is the ``i``-th real component of ``f(e_j eps_a)``.
    """
    M = f.dom
    parts = {}
    images = {}
    for a, eps in enumerate(M.real_basis()):
        for j in range(8):
            comps = polarize(f(left_act(E[j], eps)))
            for i in range(8):
                images.setdefault((i, j), []).append(comps[i])
    for (i, j), imgs in images.items():
        parts[(i, j)] = ext_from_images(M, f.cod, imgs, LEFT)
    return parts


@lru_cache(maxsize=None)
def _elementary_alpha_map(i, j, M):
    return alpha_map(alpha_elementary(i, j), M)


def enveloping_reassemble(parts, M):
    out = None
    for (i, j), fij in sorted(parts.items()):
        term = fij.real_map().compose(_elementary_alpha_map(i, j, M))
        out = term if out is None else out + term
    return out


def enveloping_uniqueness_rank(M, N):
    """Rank of ``(f_ij) -> sum f_ij o alpha^{ij}_M`` over all O-linear
    families; equal to ``64 nm`` exactly when decompositions are unique."""
    cols = []
    alphas = {(i, j): _elementary_alpha_map(i, j, M) for i in range(8) for j in range(8)}
    for (i, j), am in sorted(alphas.items()):
        for a in range(M.rank):
            for b in range(N.rank):
                imgs = [N.zero()] * M.rank
                imgs[a] = N.unit(8 * b)
                g = ext_from_images(M, N, imgs, LEFT).real_map().compose(am)
                cols.append({k: v for k, v in enumerate(x for row in g.matrix for x in row) if v})
    return linalg.rank(cols), 64 * M.rank * N.rank


# ---------------------------------------------------------------------------
# exactness

def _real_matrix(f):
    return f.full_matrix if isinstance(f, ParaLinearMap) else f.matrix


def kernel(f):
    """Basis (as flat real vectors) of the kernel of the underlying real map."""
    return linalg.kernel(_real_matrix(f))


def image(f):
    """Basis (as flat real vectors) of the image of the underlying real map."""
    return linalg.column_space(_real_matrix(f))


def _dim(shape):
    return 0 if shape is None else shape.dim


@dataclass
class MapSequence:
    """``objects[0] -> objects[1] -> ...`` with ``maps[k]: objects[k] -> objects[k+1]``.

    A ``None`` object is the zero module; a ``None`` map is the zero map.
    """

    objects: list
    maps: list = field(default_factory=list)

    def __post_init__(self):
        if len(self.objects) != len(self.maps) + 1:
            raise ValueError("a sequence of %d maps needs %d objects" % (len(self.maps), len(self.maps) + 1))
        for k, f in enumerate(self.maps):
            if f is None:
                continue
            check_shape(self.objects[k], f.dom, "domain of map %d" % k)
            check_shape(self.objects[k + 1], f.cod, "codomain of map %d" % k)

    @classmethod
    def of(cls, maps, zero_start=False, zero_end=False):
        """Chain of composable maps, optionally padded by zero modules."""
        if not maps:
            raise ValueError("need at least one map")
        objects = [maps[0].dom] + [f.cod for f in maps]
        maps = list(maps)
        if zero_start:
            objects.insert(0, None)
            maps.insert(0, None)
        if zero_end:
            objects.append(None)
            maps.append(None)
        return cls(objects, maps)

    def matrix(self, k):
        """Real matrix of map ``k`` (zeros for a zero map)."""
        f = self.maps[k]
        if f is None:
            return linalg.zeros(_dim(self.objects[k + 1]), _dim(self.objects[k]))
        return _real_matrix(f)


def is_exact_at(seq, position):
    """Exactness at ``objects[position]``: image of the incoming map equals the
    kernel of the outgoing one.  Missing ends count as zero maps."""
    if not 0 <= position < len(seq.objects):
        raise IndexError("no object at position %d" % position)
    n = _dim(seq.objects[position])
    if n == 0:
        return True
    if position > 0 and _dim(seq.objects[position - 1]):
        img = linalg.column_space(seq.matrix(position - 1))
    else:
        img = []
    if position < len(seq.maps) and _dim(seq.objects[position + 1]):
        ker = linalg.kernel(seq.matrix(position))
    else:
        ker = [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    return linalg.same_span(img, ker)


def hom_sequence(M, seq):
    """Apply ``Hom(M, -)`` to a sequence of left maps."""
    objects = [None if X is None else HomModuleIso(M, X, LEFT).hom_shape for X in seq.objects]
    maps = [None if f is None else hom_covariant(M, f) for f in seq.maps]
    return MapSequence(objects, maps)


def hom_left_exactness_check(M, ses):
    """Check that ``0 -> Hom(M, X) -> Hom(M, X') -> Hom(M, X'')`` is exact,
    given ``ses`` starting ``0 -> X -> X' -> X''`` and exact in between."""
    if ses.objects[0] is not None:
        raise ValueError("the sequence must start at the zero module")
    interior = range(1, len(ses.objects) - 1)
    for k in interior:
        if not is_exact_at(ses, k):
            raise ValueError("input sequence is not exact at position %d" % k)
    hseq = hom_sequence(M, ses)
    for k in interior:
        if k > 2:
            break
        if not is_exact_at(hseq, k):
            return IdentityReport("hom_left_exact", 1, 0, FAIL, {"module": M.to_json(), "position": k})
    return IdentityReport("hom_left_exact", 1, 0, PASS)


def weak_functor_checks(trials=25, seed=0, max_rank=2, bound=5):
    """``iota`` and ``FRe`` preserve composition when one factor is O-linear,
    and the natural lift/extension squares commute.

    Also searches for a pair of non-O-linear maps where ``iota`` fails to
    preserve composition; the witness is kept on the report.
    """
    from .verify import run_check

    name = "weak_functors"
    for part in ("weak_functor_composition", "natural_lift", "natural_extension"):
        r = run_check(part, trials, seed, max_rank, bound)
        if r.status != PASS:
            return IdentityReport(name, trials, seed, FAIL, dict(r.counterexample, check=part))
    report = IdentityReport(name, trials, seed, PASS)
    report.witness = _iota_witness(seed)
    report.note = "iota is weak: witness found" if report.witness else "no witness of weakness found"
    return report


def _iota_witness(seed, attempts=50):
    from .verify.generators import Gen, trial_rng

    for k in range(attempts):
        g = Gen(trial_rng(seed, "iota_witness", k), 1, 3)
        a, b = g.non_o_linear(O1, O1, LEFT), g.non_o_linear(O1, O1, LEFT)
        if regular_compose(a, b).real_map() != a.real_map().compose(b.real_map()):
            return {"outer": a.to_json(), "inner": b.to_json()}
    return None


__all__ = [
    "conjugate_functor", "hom_covariant", "hom_contravariant",
    "adjoint_tau", "adjoint_tau_inverse",
    "dual_module", "double_dual_point", "double_dual_embedding", "phi_double_star",
    "alpha_elementary", "alpha_map", "enveloping_decompose", "enveloping_reassemble",
    "enveloping_uniqueness_rank", "kernel", "image", "MapSequence", "is_exact_at",
    "hom_sequence", "hom_left_exactness_check", "weak_functor_checks",
]
