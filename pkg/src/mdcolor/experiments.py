"""Seeded G(n, p) sampling and md = 1 certificate rates.

Random numbers come from numpy's PCG64 generator. A graph consumes one uniform
double per vertex pair, pairs taken in lexicographic order (0,1), (0,2), ...,
and the pair becomes an edge when its double is below p. Trial ``t`` of an
experiment with seed ``s`` draws from the stream seeded by SeedSequence([s, t]),
so trials can be replayed or run in any order.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from mdcolor.certificate import md1_certificate
from mdcolor.errors import DomainError
from mdcolor.graph import Graph
from mdcolor.solver import has_three_common_neighbors


class ImplicationViolation(RuntimeError):
    """A graph had the common-neighbour property but no closure certificate."""


def _check_p(p: float) -> None:
    if not (isinstance(p, (int, float)) and not math.isnan(p) and 0.0 <= p <= 1.0):
        raise DomainError(f"edge probability must lie in [0, 1], got {p!r}")


def gnp_from_rng(n: int, p: float, rng: np.random.Generator) -> Graph:
    _check_p(p)
    pairs = list(combinations(range(n), 2))
    draws = rng.random(len(pairs))
    return Graph(n, tuple(pr for pr, x in zip(pairs, draws) if x < p))


def sample_gnp(n: int, p: float, seed: int) -> Graph:
    if n < 0:
        raise DomainError("n must be non-negative")
    return gnp_from_rng(n, p, np.random.Generator(np.random.PCG64(seed)))


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


@dataclass
class TrialRow:
    trial: int
    m: int
    connected: bool
    property: bool
    certified: bool


@dataclass
class ExperimentReport:
    n: int
    p: float
    trials: int
    seed: int
    count_connected: int = 0
    count_property: int = 0
    count_certified: int = 0
    rows: list[TrialRow] = field(default_factory=list, repr=False)

    @property
    def fraction_connected(self) -> float:
        return self.count_connected / self.trials

    @property
    def fraction_property(self) -> float:
        return self.count_property / self.trials

    @property
    def fraction_certified(self) -> float:
        return self.count_certified / self.trials

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "trials": self.trials,
            "seed": self.seed,
            "count_connected": self.count_connected,
            "count_property": self.count_property,
            "count_certified": self.count_certified,
            "fraction_connected": self.fraction_connected,
            "fraction_property": self.fraction_property,
            "fraction_certified": self.fraction_certified,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=["trial", "m", "connected", "property", "certified"], lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: int(v) if isinstance(v, bool) else v for k, v in asdict(row).items()})
        return buf.getvalue()


def md1_fraction(n: int, p: float, trials: int, seed: int) -> ExperimentReport:
    """Count, over seeded G(n, p) samples, how often md = 1 can be certified.

    Per trial: sample, test connectivity, test that every vertex pair has three
    common neighbours, and try to build a closure certificate. The property must
    imply a certificate; a trial breaking that raises ImplicationViolation.
    """
    if trials < 1:
        raise DomainError("trials must be at least 1")
    _check_p(p)
    report = ExperimentReport(n, p, trials, seed)
    for t in range(trials):
        G = gnp_from_rng(n, p, trial_rng(seed, t))
        connected = G.n >= 1 and G.is_connected() and G.m >= 1
        prop = cert = False
        if connected:
            report.count_connected += 1
            prop = G.n >= 2 and has_three_common_neighbors(G)
            cert = md1_certificate(G) is not None
            report.count_property += prop
            report.count_certified += cert
            if prop and not cert:
                raise ImplicationViolation(f"trial {t}: every pair has 3 common neighbours but no certificate was found")
        report.rows.append(TrialRow(t, G.m, connected, prop, cert))
    return report
