"""Acceptance suite: one PASS/FAIL line per criterion, exact equality throughout.

Run with ``pytest tests/test_acceptance.py -v`` (lines go straight to the
terminal, so ``-s`` is not needed).
"""

import random
import time

import pytest

from octomod.bimodule import Element, ModuleShape, O1, polarize, re_formula, re_project, reassemble
from octomod.functors import (
    MapSequence, double_dual_embedding, enveloping_decompose, enveloping_reassemble,
    hom_contravariant, hom_covariant, hom_left_exactness_check, hom_sequence, is_exact_at,
)
from octomod.homalg import (
    left_mult_operator, odot_left, odot_right, regular_compose, right_mult_operator, transpose,
)
from octomod.octonion import E, conj, norm_sq, parse_octonion, re
from octomod.paralinear import (
    LEFT, RIGHT, ParaLinearMap, RealLinearMap, ext, ext_from_images, is_o_linear, lift,
    paralinear_dimension, re_star, re_upper_star,
)
from octomod.verify import Gen, names, run_check
from octomod.verify.generators import gen_octonion

from .oracles import LEFT_E1_COMPONENTS, MULTIPLICATION_TABLE, RP_RQ_PRODUCT_ORDER, TRIPLES

SEED = 42
O2 = ModuleShape(2)


@pytest.fixture
def criterion(capsys):
    """Run ``body`` timed against ``limit`` seconds and print its verdict line."""
    def run(number, title, limit, body):
        start = time.perf_counter()
        error = None
        detail = ""
        try:
            detail = body() or ""
        except AssertionError as exc:
            error = exc
            detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
        elapsed = time.perf_counter() - start
        if error is None and elapsed >= limit:
            error = AssertionError("took %.2fs, limit %ds" % (elapsed, limit))
            detail = str(error)
        verdict = "PASS" if error is None else "FAIL"
        line = "%s criterion %2d  %s  (%.2fs / %ds)" % (verdict, number, title, elapsed, limit)
        if detail:
            line += "  " + detail
        with capsys.disabled():
            print("\n" + line)
        if error is not None:
            raise error
    return run


def _gen(name, k=0):
    return Gen(random.Random("%d:%s:%d" % (SEED, name, k)), max_rank=2, bound=5)


def _hard_failures(reports):
    return ["%s %s" % (r.name, r.counterexample) for r in reports if r.status != "pass"]


def test_01_multiplication_table(criterion):
    def body():
        products = 0
        for (i, j, k), s in TRIPLES:
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                assert E[a] * E[b] == E[c] * s, (a, b)
                products += 1
        assert products == 21
        for i in range(8):
            for j, cell in enumerate(MULTIPLICATION_TABLE[i].split()):
                assert E[i] * E[j] == parse_octonion(cell), (i, j)
        return "21 triple products, 64 table entries"
    criterion(1, "multiplication table", 1, body)


def test_02_division_algebra(criterion):
    def body():
        rng = random.Random(SEED)
        for _ in range(1000):
            a, b = gen_octonion(rng, 5), gen_octonion(rng, 5)
            assert a * (a * b) == (a * a) * b and (b * a) * a == b * (a * a)
            assert norm_sq(a * b) == norm_sq(a) * norm_sq(b)
            assert conj(a * b) == conj(b) * conj(a)
            assert re(a * b) == re(b * a)
        return "1000 pairs"
    criterion(2, "alternativity, norm, conjugation", 5, body)


def test_03_real_part_operator(criterion):
    def body():
        rng = random.Random(SEED)
        O3 = ModuleShape(3)
        for _ in range(500):
            x = Element(O3, [gen_octonion(rng, 5) for _ in range(3)])
            rx = re_project(x)
            assert re_formula(x) == rx
            assert re_project(rx) == rx
            assert reassemble(polarize(x)) == x
        return "500 elements of O^3"
    criterion(3, "real part operator", 5, body)


def test_04_paralinear_dimension(criterion):
    def body():
        for n in (1, 2, 3):
            for m in (1, 2, 3):
                for ch in (LEFT, RIGHT):
                    assert paralinear_dimension(n, m, ch) == 8 * n * m, (n, m, ch)
        for ch, operator in ((LEFT, right_mult_operator), (RIGHT, left_mult_operator)):
            dim, basis = paralinear_dimension(1, 1, ch, basis=True)
            assert dim == 8
            for g in basis:
                f1 = g(Element.of(E[0])).coords[0]
                assert g == operator(f1, O1).real_map()
        return "8nm for n,m <= 3; rank one solutions are multiplications by f(1)"
    criterion(4, "para-linear dimension", 10, body)


def test_05_identity_catalog(criterion):
    def body():
        reports = [run_check(n, 100, SEED, 2, 5) for n in names("core")]
        hard = [r for r in reports if not r.discovery]
        failed = _hard_failures(hard)
        assert not failed, failed[0]
        return "%d hard checks x 100 trials (%d discovery checks reported separately)" % (
            len(hard), len(reports) - len(hard))
    criterion(5, "core identity catalog", 120, body)


def test_06_composition_order(criterion):
    def body():
        rng = random.Random(SEED)
        seen = set()
        for _ in range(200):
            p, q = gen_octonion(rng, 5), gen_octonion(rng, 5)
            fg = regular_compose(right_mult_operator(p, O1), right_mult_operator(q, O1))
            values = [fg(Element.of(E[k])).coords[0] for k in range(8)]
            is_qp = values == [E[k] * (q * p) for k in range(8)]
            is_pq = values == [E[k] * (p * q) for k in range(8)]
            assert is_qp != is_pq, "basis oracle is inconclusive for p=%s q=%s" % (p, q)
            seen.add("qp" if is_qp else "pq")
        assert seen == {RP_RQ_PRODUCT_ORDER}, seen
        return "R_p(*)R_q = R_qp on all 200 pairs; R_pq is refuted"
    criterion(6, "regular composition order", 5, body)


def test_07_bijections_and_transpose(criterion):
    def body():
        for k in range(100):
            g = _gen("bijections", k)
            ch = g.chirality()
            M, N = g.shape(), g.shape()
            h = g.real_into_re(M, N)
            assert re_star(lift(h, ch)) == h
            f = g.para_linear(M, N, ch)
            assert lift(re_star(f), ch) == f
            assert ext(re_upper_star(f), ch) == f
            u = g.real_linear(M, N)
            e = ext(u, ch)
            assert re_upper_star(e) == RealLinearMap.from_function(M, N, lambda x: u(re_project(x)))
            t = transpose(f)
            assert t.chirality is not f.chirality and transpose(t) == f
            assert re_star(t) == re_star(f)
            r, f2 = g.octonion(), g.para_linear(M, N, ch)
            assert transpose(f + f2) == t + transpose(f2)
            assert transpose(odot_left(r, f)) == odot_left(r, t)
            assert transpose(odot_right(f, r)) == odot_right(t, r)
        return "100 lift, ext and transpose instances"
    criterion(7, "lift, extension and transpose", 10, body)


def test_08_functor_laws(criterion):
    def body():
        for M in (O1, O2):
            assert hom_covariant(M, ParaLinearMap.identity(O2)) == ParaLinearMap.identity(ModuleShape(2 * M.rank))
            assert hom_contravariant(M, ParaLinearMap.identity(O2)) == \
                ParaLinearMap.identity(ModuleShape(2 * M.rank), RIGHT)
        checks = ["conjugate_functor_laws", "hom_functor_covariant", "hom_functor_contravariant",
                  "hom_functors_o_linear"]
        failed = _hard_failures([run_check(n, 50, SEED, 2, 5) for n in checks])
        assert not failed, failed[0]
        return "identities preserved; 50 composable pairs per law"
    criterion(8, "functor laws", 30, body)


def test_09_adjoint_pair(criterion):
    def body():
        checks = ["adjoint_round_trip", "adjoint_naturality", "adjoint_o_linear"]
        failed = _hard_failures([run_check(n, 25, SEED, 2, 5) for n in checks])
        assert not failed, failed[0]
        return "25 instances: round trip, both naturality squares"
    criterion(9, "tensor-hom adjunction", 30, body)


def test_10_enveloping_decomposition(criterion):
    def body():
        for M in (O1, O2):
            for k in range(100):
                f = _gen("enveloping", k).real_linear(M, M)
                parts = enveloping_decompose(f)
                assert enveloping_reassemble(parts, M) == f
        for k in (0, 1):
            parts = enveloping_decompose(_gen("enveloping-o-linear", k).real_linear(O2, O1))
            assert all(is_o_linear(v) for v in parts.values())
        f = RealLinearMap.from_function(O1, O1, lambda x: Element.of(E[1] * x.coords[0]))
        nonzero = {key: v for key, v in enveloping_decompose(f).items() if not v.is_zero()}
        assert set(nonzero) == set(LEFT_E1_COMPONENTS)
        for key, c in LEFT_E1_COMPONENTS.items():
            assert nonzero[key] == ParaLinearMap.identity(O1).scale(c)
        return "100 maps on each of O and O^2; left-e1 fixture"
    criterion(10, "enveloping decomposition", 10, body)


def test_11_hom_exactness(criterion):
    def body():
        inc = ext_from_images(O1, O2, [Element.of(E[0], 0)])
        proj = ext_from_images(O2, O1, [O1.zero(), Element.of(E[0])])
        ses = MapSequence.of([inc, proj], zero_start=True, zero_end=True)
        assert all(is_exact_at(ses, k) for k in range(4))
        for M in (O1, O2):
            assert hom_left_exactness_check(M, ses).status == "pass"
            hom = hom_sequence(M, ses)
            assert all(is_exact_at(hom, k) for k in range(4)), M
        return "0 -> O -> O^2 -> O -> 0 under Hom(M, -) for M = O, O^2"
    criterion(11, "exactness of Hom", 10, body)


def test_12_double_dual(criterion):
    def body():
        failed = _hard_failures([run_check("double_dual_second_associator", 100, SEED, 2, 5)])
        assert not failed, failed[0]
        for n in (1, 2, 3):
            tau = double_dual_embedding(ModuleShape(n))
            assert is_o_linear(tau)
            assert tau.real_map().real_rank() == 8 * n, n
        failed = _hard_failures([run_check("double_dual_naturality", 25, SEED, 2, 5)])
        assert not failed, failed[0]
        return "100 second-associator instances; rank 8n for n <= 3; 25 naturality squares"
    criterion(12, "double dual", 30, body)
