"""Octonionic tensor product ``M (x)_O M' = (Re M (x)_R Re M') (x)_R O``.

The product of ranks ``n`` and ``m`` is modelled as ``O^{nm}`` with
coordinate ``(a, b)`` at index ``a*m + b`` (second index fastest).
"""

from dataclasses import dataclass

from .bimodule import Element, ModuleShape, check_shape, polarize
from .octonion import E, Octonion, associator
from .paralinear import LEFT, RIGHT, Chirality, ext_from_images


@dataclass(frozen=True)
class TensorModule:
    left: ModuleShape
    right: ModuleShape

    @property
    def shape(self):
        return ModuleShape(self.left.rank * self.right.rank)

    def index(self, a, b):
        return a * self.right.rank + b

    def to_json(self):
        return {"left": self.left.to_json(), "right": self.right.to_json()}


def _components(x):
    """Per coordinate, the real components ``(x_i)_a`` of ``x = sum e_i x_i``."""
    parts = polarize(x)
    return [[parts[i].coords[a].c[0] for i in range(8)] for a in range(x.shape.rank)]


def elementary_tensor(T, m, m2):
    """``m (x)_O m' = sum_{i,j} (m_i (x) m'_j) (x) e_i e_j``."""
    check_shape(T.left, m.shape, "left factor")
    check_shape(T.right, m2.shape, "right factor")
    u = [Octonion(c) for c in _components(m)]
    v = [Octonion(c) for c in _components(m2)]
    return Element(T.shape, [ua * vb for ua in u for vb in v])


def tensor_defect(T, m, p, m2):
    """``sum_{i,j} (m_i (x) m'_j) (x) [e_i, p, e_j]``, the right-hand side of
    ``mp (x) m' - m (x) pm'``."""
    check_shape(T.left, m.shape, "left factor")
    check_shape(T.right, m2.shape, "right factor")
    cm, cm2 = _components(m), _components(m2)
    assoc = [[associator(E[i], p, E[j]) for j in range(8)] for i in range(8)]
    coords = []
    for a in range(T.left.rank):
        for b in range(T.right.rank):
            acc = Octonion()
            for i in range(8):
                if not cm[a][i]:
                    continue
                for j in range(8):
                    w = cm[a][i] * cm2[b][j]
                    if w:
                        acc = acc + assoc[i][j] * w
            coords.append(acc)
    return Element(T.shape, coords)


VARIANTS = {
    # variant: (chirality of f, chirality of the induced map)
    "ll": (LEFT, LEFT),
    "lr": (LEFT, RIGHT),
    "rr": (RIGHT, RIGHT),
    "rl": (RIGHT, LEFT),
}


def induced_map(M, f, variant="ll"):
    """``1_M (x) f``: the extension of ``m (x) x -> m (x)_O f(x)`` on
    ``Re M (x) Re X`` to ``M (x)_O X -> M (x)_O Y``."""
    try:
        need, out = VARIANTS[variant]
    except KeyError:
        raise ValueError("variant must be one of %s" % ", ".join(VARIANTS)) from None
    if f.chirality is not need:
        raise ValueError("variant %r takes a %s para-linear map" % (variant, need.value))
    src, dst = TensorModule(M, f.dom), TensorModule(M, f.cod)
    images = []
    for eps_a in M.real_basis():
        for eps_c in f.dom.real_basis():
            images.append(elementary_tensor(dst, eps_a, f(eps_c)))
    return ext_from_images(src.shape, dst.shape, images, out)


__all__ = ["TensorModule", "elementary_tensor", "tensor_defect", "induced_map", "VARIANTS", "Chirality"]
