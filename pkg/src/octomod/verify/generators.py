"""Seeded random generators for exact identity checks."""

import hashlib
import random
from fractions import Fraction

from ..bimodule import Element, ModuleShape
from ..octonion import Octonion, format_octonion, format_rational
from ..paralinear import LEFT, RIGHT, ParaLinearMap, RealLinearMap, ext, is_o_linear


def trial_seed(seed, name, k):
    """Per-trial seed, independent of the order trials are run in."""
    digest = hashlib.sha256(("%d:%s:%d" % (seed, name, k)).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def trial_rng(seed, name, k):
    return random.Random(trial_seed(seed, name, k))


def gen_rational(rng, bound):
    if bound < 1:
        raise ValueError("coefficient bound must be at least 1")
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def gen_octonion(rng, bound):
    return Octonion([gen_rational(rng, bound) for _ in range(8)])


def gen_element(rng, shape, bound):
    return Element(shape, [gen_octonion(rng, bound) for _ in range(shape.rank)])


def gen_para_linear(rng, dom, cod, chirality, bound):
    """Random ``f_R``; every such matrix defines a para-linear map."""
    rm = [[gen_rational(rng, bound) for _ in range(dom.dim)] for _ in range(cod.rank)]
    return ParaLinearMap(chirality, dom, cod, rm)


def gen_real_linear(rng, dom, cod, bound):
    return RealLinearMap(dom, cod, [[gen_rational(rng, bound) for _ in range(dom.dim)] for _ in range(cod.dim)])


def gen_o_linear(rng, dom, cod, chirality, bound):
    """Extension of a random real matrix Re dom -> Re cod."""
    m = [[Fraction(0)] * dom.dim for _ in range(cod.dim)]
    for b in range(cod.rank):
        for a in range(dom.rank):
            m[8 * b][8 * a] = gen_rational(rng, bound)
    return ext(RealLinearMap(dom, cod, m), chirality)


def serialize(value):
    """JSON-friendly rendering of anything a check may generate or compare."""
    if isinstance(value, Octonion):
        return format_octonion(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (Element, ParaLinearMap, ModuleShape)):
        return value.to_json()
    if isinstance(value, RealLinearMap):
        return {"dom": value.dom.to_json(), "cod": value.cod.to_json(),
                "matrix": [[format_rational(x) for x in r] for r in value.matrix]}
    if isinstance(value, (list, tuple)):
        return [serialize(v) for v in value]
    if isinstance(value, dict):
        return {str(k): serialize(v) for k, v in value.items()}
    return value if isinstance(value, (int, str, bool, type(None))) else str(value)


class Gen:
    """Generator bound to one trial; records every drawn input in ``log``."""

    def __init__(self, rng, max_rank=2, bound=5):
        self.rng = rng
        self.max_rank = max_rank
        self.bound = bound
        self.log = {}

    def _keep(self, label, value):
        key = label or "v%d" % len(self.log)
        self.log[key] = serialize(value)
        return value

    def rank(self):
        return self.rng.randint(1, self.max_rank)

    def shape(self, conjugated=False, label=None):
        return self._keep(label, ModuleShape(self.rank(), conjugated))

    def chirality(self, label="chirality"):
        ch = self.rng.choice([LEFT, RIGHT])
        self._keep(label, ch.value)
        return ch

    def choice(self, options, label=None):
        return self._keep(label, self.rng.choice(options))

    def integer(self, lo, hi, label=None):
        return self._keep(label, self.rng.randint(lo, hi))

    def rational(self, label=None):
        return self._keep(label, gen_rational(self.rng, self.bound))

    def octonion(self, label=None):
        return self._keep(label, gen_octonion(self.rng, self.bound))

    def element(self, shape, label=None):
        return self._keep(label, gen_element(self.rng, shape, self.bound))

    def real_element(self, shape, label=None):
        return self._keep(label, Element(shape, [gen_rational(self.rng, self.bound) for _ in range(shape.rank)]))

    def para_linear(self, dom, cod, chirality=LEFT, label=None):
        return self._keep(label, gen_para_linear(self.rng, dom, cod, chirality, self.bound))

    def real_linear(self, dom, cod, label=None):
        return self._keep(label, gen_real_linear(self.rng, dom, cod, self.bound))

    def real_into_re(self, dom, cod, label=None):
        """Random real-linear map landing in Re cod."""
        m = [[Fraction(0)] * dom.dim for _ in range(cod.dim)]
        for b in range(cod.rank):
            m[8 * b] = [gen_rational(self.rng, self.bound) for _ in range(dom.dim)]
        return self._keep(label, RealLinearMap(dom, cod, m))

    def o_linear(self, dom, cod, chirality=LEFT, label=None):
        return self._keep(label, gen_o_linear(self.rng, dom, cod, chirality, self.bound))

    def non_o_linear(self, dom, cod, chirality=LEFT, label=None):
        while True:
            f = gen_para_linear(self.rng, dom, cod, chirality, self.bound)
            if not is_o_linear(f):
                return self._keep(label, f)
