"""Free octonionic bimodules ``O^n`` and their conjugates.

Real coordinates are flattened as ``8*a + i`` = coefficient of ``e_i`` in
coordinate ``a``.  Every matrix in the package uses this layout.

A conjugated shape carries the twisted actions ``p.x = x pbar`` and
``x.p = pbar x``; its underlying set and real part are unchanged.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import zeros
from .octonion import (
    E, ONE, TABLE, Octonion, conj, octonion_from_json, octonion_to_json,
)


@dataclass(frozen=True)
class ModuleShape:
    rank: int
    conjugated: bool = False

    def __post_init__(self):
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError("module rank must be a positive integer, got %r" % (self.rank,))

    @property
    def dim(self):
        """Real dimension ``8 * rank``."""
        return 8 * self.rank

    def conjugate(self):
        return ModuleShape(self.rank, not self.conjugated)

    def standard(self):
        return ModuleShape(self.rank, False)

    def zero(self):
        return Element(self, [Octonion()] * self.rank)

    def basis(self):
        """The 8n real basis vectors, in flattened order."""
        return [self.unit(k) for k in range(self.dim)]

    def unit(self, k):
        coords = [Octonion()] * self.rank
        coords[k // 8] = E[k % 8]
        return Element(self, coords)

    def real_basis(self):
        """Basis ``eps_a`` of Re M (the unit in coordinate ``a``)."""
        return [self.unit(8 * a) for a in range(self.rank)]

    def __str__(self):
        return "O^%d%s" % (self.rank, "^C" if self.conjugated else "")

    def to_json(self):
        return {"rank": self.rank, "conjugated": self.conjugated}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["rank"]), bool(data.get("conjugated", False)))


O1 = ModuleShape(1)


class ShapeMismatch(ValueError):
    pass


def check_shape(expected, got, what="element"):
    if expected != got:
        raise ShapeMismatch("%s lives in %s, expected %s" % (what, got, expected))


class Element:
    """A point of a free bimodule: ``shape`` plus ``rank`` octonion coordinates."""

    __slots__ = ("shape", "coords")

    def __init__(self, shape, coords):
        coords = tuple(c if isinstance(c, Octonion) else Octonion.real(c) for c in coords)
        if len(coords) != shape.rank:
            raise ShapeMismatch("%s needs %d coordinates, got %d" % (shape, shape.rank, len(coords)))
        self.shape = shape
        self.coords = coords

    @classmethod
    def of(cls, *coords, conjugated=False):
        return cls(ModuleShape(len(coords), conjugated), coords)

    @classmethod
    def from_flat(cls, shape, vec):
        if len(vec) != shape.dim:
            raise ShapeMismatch("%s has real dimension %d, got %d" % (shape, shape.dim, len(vec)))
        return cls(shape, [Octonion(vec[8 * a:8 * a + 8]) for a in range(shape.rank)])

    def flat(self):
        return [x for c in self.coords for x in c.c]

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.shape == other.shape and self.coords == other.coords

    def __hash__(self):
        return hash((self.shape, self.coords))

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return "Element(%s: %s)" % (self.shape, ", ".join(str(c) for c in self.coords))

    def __add__(self, other):
        check_shape(self.shape, other.shape)
        return Element(self.shape, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        check_shape(self.shape, other.shape)
        return Element(self.shape, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Element(self.shape, [-a for a in self.coords])

    def scale(self, c):
        """Multiply by a real scalar."""
        c = Fraction(c)
        return Element(self.shape, [a * c for a in self.coords])

    def is_real(self):
        return all(c.is_real() for c in self.coords)

    def to_json(self):
        d = self.shape.to_json()
        d["coords"] = [octonion_to_json(c) for c in self.coords]
        return d

    @classmethod
    def from_json(cls, data):
        return cls(ModuleShape.from_json(data), [octonion_from_json(c) for c in data["coords"]])


def left_act(p, x):
    if x.shape.conjugated:
        pb = conj(p)
        return Element(x.shape, [c * pb for c in x.coords])
    return Element(x.shape, [p * c for c in x.coords])


def right_act(x, p):
    if x.shape.conjugated:
        pb = conj(p)
        return Element(x.shape, [pb * c for c in x.coords])
    return Element(x.shape, [c * p for c in x.coords])


def re_project(x):
    """Coordinatewise real part; this is the projection onto Re M."""
    return Element(x.shape, [Octonion.real(c.c[0]) for c in x.coords])


def re_formula(x):
    """Real part through the module actions alone: 5/12 x - 1/12 sum e_i x e_i."""
    acc = x.scale(Fraction(5, 12))
    s = x.shape.zero()
    for i in range(1, 8):
        s = s + right_act(left_act(E[i], x), E[i])
    return acc - s.scale(Fraction(1, 12))


def polarize(x):
    """Real components ``x_i = Re(ebar_i x)`` with ``x = sum e_i x_i``."""
    return [re_project(left_act(conj(E[i]), x)) for i in range(8)]


def reassemble(parts):
    out = parts[0].shape.zero()
    for i, xi in enumerate(parts):
        out = out + left_act(E[i], xi)
    return out


def module_associator(p, q, m):
    """``(pq)m - p(qm)`` using the left action."""
    return left_act(p * q, m) - left_act(p, left_act(q, m))


def right_module_associator(m, p, q):
    """``(mp)q - m(pq)``."""
    return right_act(right_act(m, p), q) - right_act(m, p * q)


def mixed_associator(p, m, q):
    """``(pm)q - p(mq)``."""
    return right_act(left_act(p, m), q) - left_act(p, right_act(m, q))


# ---------------------------------------------------------------------------
# action tables on the real basis

@lru_cache(maxsize=None)
def basis_action(k, side, conjugated):
    """For each i, ``(j, s)`` with (e_k acting on e_i) = s e_j in O or O^C.

    ``side`` is "left" (e_k . e_i) or "right" (e_i . e_k).
    """
    out = []
    for i in range(8):
        if side == "left":
            if conjugated:
                j, s = TABLE[i][k]          # e_i * conj(e_k)
                s = s if k == 0 else -s
            else:
                j, s = TABLE[k][i]
        else:
            if conjugated:
                j, s = TABLE[k][i]          # conj(e_k) * e_i
                s = s if k == 0 else -s
            else:
                j, s = TABLE[i][k]
        out.append((j, s))
    return tuple(out)


def action_matrix(p, shape, side):
    """Real ``8n x 8n`` matrix of ``x -> p.x`` (side="left") or ``x -> x.p``."""
    n = shape.dim
    m = zeros(n, n)
    for k in range(8):
        c = p.c[k]
        if not c:
            continue
        tab = basis_action(k, side, shape.conjugated)
        for a in range(shape.rank):
            base = 8 * a
            for i in range(8):
                j, s = tab[i]
                m[base + j][base + i] += c if s > 0 else -c
    return m


def left_matrix(p, shape):
    return action_matrix(p, shape, "left")


def right_matrix(p, shape):
    return action_matrix(p, shape, "right")


__all__ = [
    "ModuleShape", "Element", "ShapeMismatch", "O1", "ONE",
    "left_act", "right_act", "re_project", "re_formula", "polarize", "reassemble",
    "module_associator", "right_module_associator", "mixed_associator",
    "basis_action", "action_matrix", "left_matrix", "right_matrix", "check_shape",
]
