"""Outcome record for a named identity check."""

from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
DISCOVERY_FAIL = "discovery-fail"


@dataclass
class IdentityReport:
    name: str
    trials: int
    seed: int
    status: str = PASS
    counterexample: dict = None
    discovery: bool = False
    note: str = ""
    warnings: list = field(default_factory=list)
    witness: dict = None

    def __post_init__(self):
        if (self.counterexample is None) != (self.status == PASS):
            raise ValueError("a counterexample is present exactly when the status is not pass")

    @property
    def ok(self):
        """False only for hard failures; discovery checks never fail a run."""
        return self.status != FAIL

    def line(self):
        tag = {PASS: "PASS", FAIL: "FAIL", DISCOVERY_FAIL: "DISC"}[self.status]
        out = "%s %s trials=%d seed=%d" % (tag, self.name, self.trials, self.seed)
        if self.note:
            out += "  # " + self.note
        for w in self.warnings:
            out += "  [warning: %s]" % w
        return out

    def to_json(self):
        return {
            "name": self.name,
            "trials": self.trials,
            "seed": self.seed,
            "status": self.status,
            "discovery": self.discovery,
            "note": self.note,
            "warnings": list(self.warnings),
            "counterexample": self.counterexample,
            "witness": self.witness,
        }
