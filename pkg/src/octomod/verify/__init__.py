"""Seeded exact checks of the identity catalog."""

import json

from ..report import DISCOVERY_FAIL, FAIL, PASS, IdentityReport
from .catalog import CATALOG, IdentityCheck, Mismatch
from .generators import (
    Gen, gen_element, gen_octonion, gen_para_linear, serialize, trial_rng, trial_seed,
)

DEFAULT_TRIALS = 100
DEFAULT_SEED = 42
DEFAULT_MAX_RANK = 2
DEFAULT_BOUND = 5


class UnknownIdentity(KeyError):
    pass


def names(group=None):
    return [n for n, c in CATALOG.items() if group is None or c.group == group]


def run_check(name, trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, max_rank=DEFAULT_MAX_RANK,
              coeff_bound=DEFAULT_BOUND):
    """Run one identity on ``trials`` independent instances; stop at the
    first counterexample."""
    try:
        check = CATALOG[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    if trials < 0:
        raise ValueError("trials must be non-negative")
    if max_rank < 1 or coeff_bound < 1:
        raise ValueError("max_rank and coeff_bound must be at least 1")
    warnings = ["no trials run; pass is vacuous"] if trials == 0 else []
    for k in range(trials):
        g = Gen(trial_rng(seed, name, k), max_rank, coeff_bound)
        try:
            check.fn(g)
        except Mismatch as exc:
            cx = {"trial": k, "inputs": g.log, "where": exc.label,
                  "lhs": serialize(exc.lhs), "rhs": serialize(exc.rhs)}
            status = DISCOVERY_FAIL if check.discovery else FAIL
            return IdentityReport(name, trials, seed, status, cx, check.discovery,
                                  check.statement, warnings)
    return IdentityReport(name, trials, seed, PASS, None, check.discovery, check.statement, warnings)


def run_all(trials=DEFAULT_TRIALS, seed=DEFAULT_SEED, max_rank=DEFAULT_MAX_RANK,
            coeff_bound=DEFAULT_BOUND, group=None):
    return [run_check(n, trials, seed, max_rank, coeff_bound) for n in names(group)]


def all_ok(reports):
    return all(r.ok for r in reports)


def format_lines(reports):
    return "\n".join(r.line() for r in reports)


def reports_to_json(reports):
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)


__all__ = [
    "CATALOG", "IdentityCheck", "IdentityReport", "UnknownIdentity", "Gen",
    "run_check", "run_all", "all_ok", "names", "format_lines", "reports_to_json",
    "gen_octonion", "gen_element", "gen_para_linear", "trial_seed",
    "DEFAULT_TRIALS", "DEFAULT_SEED", "DEFAULT_MAX_RANK", "DEFAULT_BOUND",
]
