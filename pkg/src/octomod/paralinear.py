"""Real-linear and para-linear maps between free bimodules.

A para-linear map is stored by its real part ``f_R = Re o f``: an
``m x 8n`` matrix whose row ``b`` gives the real coefficient of coordinate
``b`` of the value.  The whole map is recovered from it by

    left:   f(x) = sum_{i=0..7} e_i . f_R(ebar_i . x)
    right:  f(x) = sum_{i=0..7} f_R(x . ebar_i) . e_i

which is the usual ``f_R(x) + sum e_i f_R(ebar_i x)`` (resp.
``f_R(x) - sum f_R(x e_i) e_i``) with the ``i = 0`` term folded in.
"""

from enum import Enum
from fractions import Fraction

from . import linalg
from .bimodule import (
    Element, ModuleShape, ShapeMismatch, basis_action, check_shape, left_act,
    left_matrix, polarize, re_project, right_act, right_matrix,
)
from .octonion import E, conj, format_rational, parse_rational


class Chirality(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    def flip(self):
        return Chirality.RIGHT if self is Chirality.LEFT else Chirality.LEFT

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError("chirality must be 'left' or 'right', got %r" % (value,)) from None


LEFT = Chirality.LEFT
RIGHT = Chirality.RIGHT


class NotParaLinear(ValueError):
    """Raised when a real-linear map fails the para-linearity test.

    ``witness`` is ``(k, u, value)``: the offending real part for ``p = e_k``
    at the ``u``-th real basis vector of the domain.
    """

    def __init__(self, chirality, witness):
        self.chirality = chirality
        self.witness = witness
        k, u, val = witness
        super().__init__(
            "not %s para-linear: Re of the second associator at p=e%d, basis x#%d is %s"
            % (chirality.value, k, u, val))


def _matrix(rows):
    return [[x if type(x) is Fraction else Fraction(x) for x in r] for r in rows]


class RealLinearMap:
    """Arbitrary real-linear map ``dom -> cod`` as an ``8m x 8n`` matrix."""

    __slots__ = ("dom", "cod", "matrix")

    def __init__(self, dom, cod, matrix):
        matrix = _matrix(matrix)
        if len(matrix) != cod.dim or any(len(r) != dom.dim for r in matrix):
            raise ShapeMismatch("matrix must be %dx%d for %s -> %s" % (cod.dim, dom.dim, dom, cod))
        self.dom = dom
        self.cod = cod
        self.matrix = matrix

    @classmethod
    def from_function(cls, dom, cod, fn):
        cols = [fn(u).flat() for u in dom.basis()]
        return cls(dom, cod, linalg.transpose(cols))

    @classmethod
    def identity(cls, shape):
        return cls(shape, shape, linalg.identity(shape.dim))

    @classmethod
    def zero(cls, dom, cod):
        return cls(dom, cod, linalg.zeros(cod.dim, dom.dim))

    def __call__(self, x):
        check_shape(self.dom, x.shape)
        return Element.from_flat(self.cod, linalg.mat_vec(self.matrix, x.flat()))

    def compose(self, other):
        """Ordinary composition ``self o other``."""
        check_shape(self.dom, other.cod, "inner codomain")
        return RealLinearMap(other.dom, self.cod, linalg.mat_mul(self.matrix, other.matrix))

    def __add__(self, other):
        self._same(other)
        return RealLinearMap(self.dom, self.cod, linalg.mat_add(self.matrix, other.matrix))

    def __sub__(self, other):
        self._same(other)
        return RealLinearMap(self.dom, self.cod, linalg.mat_sub(self.matrix, other.matrix))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return RealLinearMap(self.dom, self.cod, linalg.mat_scale(c, self.matrix))

    def _same(self, other):
        check_shape(self.dom, other.dom, "domain")
        check_shape(self.cod, other.cod, "codomain")

    def __eq__(self, other):
        if not isinstance(other, RealLinearMap):
            return NotImplemented
        return (self.dom, self.cod, self.matrix) == (other.dom, other.cod, other.matrix)

    __hash__ = None

    def __repr__(self):
        return "RealLinearMap(%s -> %s)" % (self.dom, self.cod)

    def is_zero(self):
        return linalg.is_zero(self.matrix)

    def maps_into_real(self):
        return all(not any(self.matrix[8 * b + i]) for b in range(self.cod.rank) for i in range(1, 8))

    def real_rank(self):
        return linalg.rank(self.matrix)


def _full_matrix(chirality, dom, cod, re_matrix):
    out = linalg.zeros(cod.dim, dom.dim)
    side = "left" if chirality is LEFT else "right"
    for i in range(8):
        dtab = basis_action(i, side, dom.conjugated)
        # e_i acting on the real unit of the codomain
        j2, s2 = basis_action(i, side, cod.conjugated)[0]
        sbar = 1 if i == 0 else -1
        for a in range(dom.rank):
            base = 8 * a
            for t in range(8):
                j, s = dtab[t]
                col = base + j
                sign = s * sbar * s2
                for b in range(cod.rank):
                    v = re_matrix[b][col]
                    if v:
                        out[8 * b + j2][base + t] += v if sign > 0 else -v
    return out


class ParaLinearMap:
    """Para-linear map of a given chirality, stored by ``f_R``."""

    __slots__ = ("chirality", "dom", "cod", "re_matrix", "_full")

    def __init__(self, chirality, dom, cod, re_matrix):
        re_matrix = _matrix(re_matrix)
        if len(re_matrix) != cod.rank or any(len(r) != dom.dim for r in re_matrix):
            raise ShapeMismatch("re_matrix must be %dx%d for %s -> %s" % (cod.rank, dom.dim, dom, cod))
        self.chirality = Chirality.coerce(chirality)
        self.dom = dom
        self.cod = cod
        self.re_matrix = re_matrix
        self._full = None

    # construction ---------------------------------------------------------

    @classmethod
    def identity(cls, shape, chirality=LEFT):
        rm = linalg.zeros(shape.rank, shape.dim)
        for b in range(shape.rank):
            rm[b][8 * b] = Fraction(1)
        return cls(chirality, shape, shape, rm)

    @classmethod
    def zero(cls, dom, cod, chirality=LEFT):
        return cls(chirality, dom, cod, linalg.zeros(cod.rank, dom.dim))

    # evaluation -----------------------------------------------------------

    @property
    def full_matrix(self):
        if self._full is None:
            self._full = _full_matrix(self.chirality, self.dom, self.cod, self.re_matrix)
        return self._full

    def real_map(self):
        return RealLinearMap(self.dom, self.cod, self.full_matrix)

    def __call__(self, x):
        check_shape(self.dom, x.shape)
        return Element.from_flat(self.cod, linalg.mat_vec(self.full_matrix, x.flat()))

    def f_r(self, x):
        """``Re f(x)`` as an element of Re cod."""
        check_shape(self.dom, x.shape)
        vals = linalg.mat_vec(self.re_matrix, x.flat())
        return Element(self.cod, vals)

    # vector space structure ----------------------------------------------

    def _same(self, other):
        if self.chirality is not other.chirality:
            raise ValueError("cannot combine %s and %s para-linear maps" % (self.chirality.value, other.chirality.value))
        check_shape(self.dom, other.dom, "domain")
        check_shape(self.cod, other.cod, "codomain")

    def __add__(self, other):
        self._same(other)
        return ParaLinearMap(self.chirality, self.dom, self.cod, linalg.mat_add(self.re_matrix, other.re_matrix))

    def __sub__(self, other):
        self._same(other)
        return ParaLinearMap(self.chirality, self.dom, self.cod, linalg.mat_sub(self.re_matrix, other.re_matrix))

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        return ParaLinearMap(self.chirality, self.dom, self.cod, linalg.mat_scale(c, self.re_matrix))

    def __eq__(self, other):
        if not isinstance(other, ParaLinearMap):
            return NotImplemented
        return (self.chirality, self.dom, self.cod, self.re_matrix) == (
            other.chirality, other.dom, other.cod, other.re_matrix)

    __hash__ = None

    def is_zero(self):
        return linalg.is_zero(self.re_matrix)

    def __repr__(self):
        return "ParaLinearMap(%s, %s -> %s)" % (self.chirality.value, self.dom, self.cod)

    def with_chirality(self, chirality):
        return ParaLinearMap(chirality, self.dom, self.cod, self.re_matrix)

    # serialization --------------------------------------------------------

    def to_json(self):
        return {
            "chirality": self.chirality.value,
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "re_matrix": [[format_rational(x) for x in r] for r in self.re_matrix],
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            Chirality.coerce(data["chirality"]),
            ModuleShape.from_json(data["dom"]),
            ModuleShape.from_json(data["cod"]),
            [[parse_rational(x) for x in r] for r in data["re_matrix"]],
        )


def eval_by_formula(f, x):
    """Evaluate ``f`` straight from the reconstruction formula, using only
    ``f_R`` and the module actions (cross-check for the cached matrix)."""
    check_shape(f.dom, x.shape)
    out = f.cod.zero()
    for i in range(8):
        if f.chirality is LEFT:
            out = out + left_act(E[i], f.f_r(left_act(conj(E[i]), x)))
        else:
            out = out + right_act(f.f_r(right_act(x, conj(E[i]))), E[i])
    return out


# ---------------------------------------------------------------------------
# second associators

def second_associator_left(p, x, f):
    """``A_p(x, f) = f(px) - p f(x)``."""
    return f(left_act(p, x)) - left_act(p, f(x))


def second_associator_right(p, f, x):
    """``B_p(f, x) = f(x) p - f(xp)``."""
    return right_act(f(x), p) - f(right_act(x, p))


def _defect_matrix(matrix, dom, cod, k, chirality):
    p = E[k]
    if chirality is LEFT:
        return linalg.mat_sub(linalg.mat_mul(matrix, left_matrix(p, dom)),
                              linalg.mat_mul(left_matrix(p, cod), matrix))
    return linalg.mat_sub(linalg.mat_mul(right_matrix(p, cod), matrix),
                          linalg.mat_mul(matrix, right_matrix(p, dom)))


def para_linearity_witness(g, chirality):
    """First ``(k, u, value)`` with a nonzero real part of the second
    associator at ``p = e_k`` and real basis vector ``u``; None if para-linear.

    Checking ``p`` over e1..e7 and ``x`` over the real basis suffices since
    ``(p, x) -> Re A_p(x, g)`` is bilinear and vanishes for real ``p``.
    """
    chirality = Chirality.coerce(chirality)
    for k in range(1, 8):
        d = _defect_matrix(g.matrix, g.dom, g.cod, k, chirality)
        for u in range(g.dom.dim):
            for b in range(g.cod.rank):
                v = d[8 * b][u]
                if v:
                    return (k, u, v)
    return None


def is_para_linear(g, chirality):
    return para_linearity_witness(g, chirality) is None


def from_real_linear(g, chirality):
    """Compress a para-linear real map to its ``f_R`` form, or raise."""
    chirality = Chirality.coerce(chirality)
    w = para_linearity_witness(g, chirality)
    if w is not None:
        raise NotParaLinear(chirality, w)
    rm = [list(g.matrix[8 * b]) for b in range(g.cod.rank)]
    return ParaLinearMap(chirality, g.dom, g.cod, rm)


def is_o_linear(f):
    """True iff ``f`` sends the real part of its domain into the real part of its codomain."""
    full = f.full_matrix
    for a in range(f.dom.rank):
        col = 8 * a
        for b in range(f.cod.rank):
            if any(full[8 * b + i][col] for i in range(1, 8)):
                return False
    return True


# ---------------------------------------------------------------------------
# lift / extension bijections

def lift(g, chirality=LEFT):
    """Para-linear map whose real part is ``g`` (``g`` must land in Re cod).

    left:  x -> g(x) - sum e_i g(e_i x);  right:  x -> g(x) - sum g(x e_i) e_i.
    """
    chirality = Chirality.coerce(chirality)
    if not g.maps_into_real():
        raise ValueError("lift needs a map into the real part of the codomain")

    def fn(x):
        out = g(x)
        for i in range(1, 8):
            if chirality is LEFT:
                out = out - left_act(E[i], g(left_act(E[i], x)))
            else:
                out = out - right_act(g(right_act(x, E[i])), E[i])
        return out

    return from_real_linear(RealLinearMap.from_function(g.dom, g.cod, fn), chirality)


def re_star(f):
    """``Re o f`` as a real-linear map into Re cod."""
    out = linalg.zeros(f.cod.dim, f.dom.dim)
    for b in range(f.cod.rank):
        out[8 * b] = list(f.re_matrix[b])
    return RealLinearMap(f.dom, f.cod, out)


def ext(g, chirality=LEFT):
    """Para-linear map agreeing with ``g`` on Re dom.

    Only the values ``g(eps_a)`` on the real basis are used; the extension is
    ``p eps_a -> p g(eps_a)`` (left) or ``eps_a p -> g(eps_a) p`` (right).
    """
    return ext_from_images(g.dom, g.cod, [g(eps) for eps in g.dom.real_basis()], chirality)


def ext_by_polarization(g, chirality=LEFT):
    """Same map as :func:`ext`, built by splitting ``x`` into real
    components and checking para-linearity of the result."""
    chirality = Chirality.coerce(chirality)

    def fn(x):
        out = g.cod.zero()
        if chirality is LEFT:
            for i, xi in enumerate(polarize(x)):
                out = out + left_act(E[i], g(xi))
        else:
            for i in range(8):
                xi = re_project(right_act(x, conj(E[i])))
                out = out + right_act(g(xi), E[i])
        return out

    return from_real_linear(RealLinearMap.from_function(g.dom, g.cod, fn), chirality)


def re_upper_star(f):
    """``f o Re``: the restriction of ``f`` to Re dom, precomposed with Re."""
    return f.real_map().compose(RealLinearMap(f.dom, f.dom, _re_projection_matrix(f.dom)))


def _re_projection_matrix(shape):
    m = linalg.zeros(shape.dim, shape.dim)
    for a in range(shape.rank):
        m[8 * a][8 * a] = Fraction(1)
    return m


def ext_from_images(dom, cod, images, chirality=LEFT):
    """Extension of ``eps_a -> images[a]``.

    Its real part is read off directly: the real basis vector at ``8a + j``
    is ``s e_k . eps_a`` (or ``s eps_a . e_k``), which goes to the real part
    of ``s e_k . images[a]``.  Both ``Re(e_k y)`` and ``Re(y e_k)`` equal
    ``y_0`` for ``k = 0`` and ``-y_k`` otherwise; a conjugated codomain
    acts through ``conj(e_k)`` and flips that sign.
    """
    chirality = Chirality.coerce(chirality)
    if len(images) != dom.rank:
        raise ShapeMismatch("need %d images, got %d" % (dom.rank, len(images)))
    side = "left" if chirality is LEFT else "right"
    rm = linalg.zeros(cod.rank, dom.dim)
    for a, y in enumerate(images):
        check_shape(cod, y.shape, "image")
        for k in range(8):
            j, s = basis_action(k, side, dom.conjugated)[0]
            if k and not cod.conjugated:
                s = -s
            for b in range(cod.rank):
                c = y.coords[b].c[k]
                rm[b][8 * a + j] = c if s > 0 else -c
    return ParaLinearMap(chirality, dom, cod, rm)


# ---------------------------------------------------------------------------
# dimension of the space of para-linear maps

def paralinear_constraints(dom, cod, chirality=LEFT):
    """Sparse linear constraints on the ``8m x 8n`` entries (row-major) of a
    real matrix expressing that it is para-linear."""
    chirality = Chirality.coerce(chirality)
    nd, nc = dom.dim, cod.dim
    rows = []
    for k in range(1, 8):
        Ld = left_matrix(E[k], dom) if chirality is LEFT else right_matrix(E[k], dom)
        Lc = left_matrix(E[k], cod) if chirality is LEFT else right_matrix(E[k], cod)
        for b in range(cod.rank):
            r = 8 * b
            for u in range(nd):
                row = {}
                # (G Ld)[r][u] - (Lc G)[r][u] for left; sign flipped for right
                for j in range(nd):
                    c = Ld[j][u]
                    if c:
                        row[r * nd + j] = row.get(r * nd + j, 0) + c
                for j in range(nc):
                    c = Lc[r][j]
                    if c:
                        row[j * nd + u] = row.get(j * nd + u, 0) - c
                rows.append(row)
    return rows


def paralinear_dimension(n, m, chirality=LEFT, basis=False):
    """Real dimension of para-linear maps ``O^n -> O^m`` from the constraint rank.

    With ``basis=True`` also returns a basis of solutions as RealLinearMaps.
    """
    dom, cod = ModuleShape(n), ModuleShape(m)
    rows = paralinear_constraints(dom, cod, chirality)
    unknowns = dom.dim * cod.dim
    if not basis:
        return unknowns - linalg.rank(rows)
    sols = linalg.nullspace(rows, unknowns)
    maps = [RealLinearMap(dom, cod, [v[r * dom.dim:(r + 1) * dom.dim] for r in range(cod.dim)]) for v in sols]
    return len(sols), maps
