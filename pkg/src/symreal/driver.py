"""Decide whether a symmetric system has a real solution, one orbit type at a time."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
import json
import logging
import time

from .critsys import (DEFAULT_BOUND, build_phi_a, condition_A_probe, critical_system,
                      derive_seed, sample_a)
from .realcount.decide import decisive_root
from .symmetry import Partition, apply_T_lambda, is_invariant, partitions_min_length, to_elementary
from .witness import build_witness
from .zerodim.param import c_lambda_bound, solve_zero_dim

log = logging.getLogger(__name__)


class SymmetryError(ValueError):
    """An input polynomial is not symmetric in all variables."""


class ConditionAViolation(ValueError):
    """The rank probe found a point of V(f) where the Jacobian drops rank."""


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    coefficient_bound: int = DEFAULT_BOUND
    max_resamples: int = 3
    partition_filter: tuple = None
    check_condition_a: bool = False
    emit_witness_data: bool = False
    workers: int = 1

    def __post_init__(self):
        if self.max_resamples < 1:
            raise ValueError("max_resamples must be at least 1")
        if self.coefficient_bound < 2:
            raise ValueError("coefficient_bound must be at least 2")
        if self.workers < 1:
            raise ValueError("workers must be positive")
        if self.partition_filter is not None:
            object.__setattr__(self, "partition_filter", tuple(
                p if isinstance(p, Partition) else Partition.parse(p) for p in self.partition_filter))


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class PartitionRecord:
    partition: str
    a: list = None
    degrees: list = None
    status: str = "skipped"
    attempts: int = 0
    deg_v: int = None
    c_bound: str = None
    decide: bool = None
    timings: dict = field(default_factory=dict, compare=False)

    def to_json(self):
        return {
            "partition": self.partition, "a": self.a, "degrees": self.degrees,
            "status": self.status, "attempts": self.attempts, "deg_v": self.deg_v,
            "c_bound": self.c_bound, "decide": self.decide, "timings": self.timings,
        }

    @classmethod
    def from_json(cls, d):
        return cls(**d)


@dataclass
class Verdict:
    empty: bool
    seed: int
    per_partition: list = field(default_factory=list)
    decisive: str = None
    unreliable: list = field(default_factory=list)
    witness: dict = None
    note: str = None

    def to_json(self):
        out = {
            "empty": self.empty,
            "seed": self.seed,
            "partitions": [r.to_json() for r in self.per_partition],
            "decisive": self.decisive,
            "unreliable": list(self.unreliable),
            "note": self.note,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out

    @classmethod
    def from_json(cls, d):
        return cls(d["empty"], d["seed"], [PartitionRecord.from_json(r) for r in d["partitions"]],
                   d.get("decisive"), list(d.get("unreliable", [])), d.get("witness"), d.get("note"))

    def dumps(self, **kw):
        return json.dumps(self.to_json(), **kw)


def check_symmetric(f):
    if not f:
        return
    n = f[0].nvars
    full = Partition(((1, n),))
    for idx, g in enumerate(f):
        if g.vars != f[0].vars:
            raise SymmetryError(f"polynomial {idx + 1} uses a different variable list")
        if not is_invariant(g, full):
            raise SymmetryError(f"polynomial {idx + 1} is not symmetric: {g}")


def process_partition(f, lam, cfg):
    """Run one orbit type. Returns (record, decisive root descriptor or None, parametrization)."""
    rec = PartitionRecord(str(lam))
    t0 = time.perf_counter()
    f_lam = [g for g in (apply_T_lambda(p, lam) for p in f) if g]
    if any(g.total_degree() == 0 for g in f_lam):
        rec.status, rec.decide, rec.degrees = "empty", True, [0]
        rec.timings = {"total": time.perf_counter() - t0}
        return rec, None, None
    zeta = [to_elementary(g, lam) for g in f_lam]
    rec.degrees = [g.total_degree() for g in f_lam]
    rewrite = time.perf_counter() - t0
    solve_time = 0.0
    report = None
    for attempt in range(cfg.max_resamples):
        spec = sample_a(lam, derive_seed(cfg.seed, lam, attempt), cfg.coefficient_bound)
        phi = build_phi_a(spec)
        rec.a = [[_fmt(x) for x in blk] for blk in spec.a]
        rec.attempts = attempt + 1
        ts = time.perf_counter()
        cs = critical_system(zeta, to_elementary(phi, lam), {"partition": str(lam)})
        report = solve_zero_dim(cs.equations, seed=derive_seed(cfg.seed, lam, attempt, "mu"))
        solve_time += time.perf_counter() - ts
        rec.status = report.status
        if report.finite:
            delta = max(rec.degrees + [phi.total_degree()])
            rec.c_bound = _fmt(c_lambda_bound(lam, rec.degrees, delta))
            break
        log.info("partition %s attempt %d: %s", lam, attempt, report.status)
    td = time.perf_counter()
    root = None
    if report.finite:
        R = report.param
        rec.deg_v = max(R.v.degree, 0)
        root = decisive_root(R, lam)
        rec.decide = root is None
    rec.timings = {"rewrite": rewrite, "solve": solve_time, "decide": time.perf_counter() - td}
    return rec, root, (report.param if report.finite else None)


def _job(args):
    f, lam, cfg = args
    rec, root, R = process_partition(f, lam, cfg)
    witness = None
    if root is not None and cfg.emit_witness_data:
        witness = build_witness(R, lam, root)
    return rec, witness


def _partitions(n, s, cfg):
    lams = partitions_min_length(n, s)
    if cfg.partition_filter is None:
        return lams
    for p in cfg.partition_filter:
        if p.n != n:
            raise ValueError(f"partition {p} is not a partition of {n}")
        if p.length < s:
            raise ValueError(f"partition {p} has length {p.length} < {s} equations")
    keep = set(cfg.partition_filter)
    return [lam for lam in lams if lam in keep]


def real_emptiness(f, cfg=None):
    """Verdict.empty is True iff no real point was found on any orbit type."""
    cfg = cfg or RunConfig()
    f = list(f)
    check_symmetric(f)
    eqs = [g for g in f if g]
    if not eqs:
        return Verdict(False, cfg.seed, note="no equations")
    if any(g.total_degree() == 0 for g in eqs):
        return Verdict(True, cfg.seed, note="nonzero constant equation")
    n, s = eqs[0].nvars, len(eqs)
    if s > n:
        raise ValueError(f"{s} equations in {n} variables: need at most as many equations as variables")
    if cfg.check_condition_a and not condition_A_probe(eqs, seed=cfg.seed):
        raise ConditionAViolation("the Jacobian of the input drops rank on its zero set")
    lams = _partitions(n, s, cfg)
    verdict = Verdict(True, cfg.seed)
    jobs = [(eqs, lam, cfg) for lam in lams]
    if cfg.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            futures = [pool.submit(_job, j) for j in jobs]
            for fut in futures:
                # results are consumed in iteration order, so the decisive one is deterministic
                if _absorb(verdict, *fut.result()):
                    for rest in futures:
                        rest.cancel()
                    break
    else:
        for j in jobs:
            if _absorb(verdict, *_job(j)):
                break
    return verdict


def _absorb(verdict, rec, witness):
    verdict.per_partition.append(rec)
    if rec.decide is None:
        verdict.unreliable.append(rec.partition)
        return False
    if rec.decide is False:
        verdict.empty = False
        verdict.decisive = rec.partition
        verdict.unreliable = []
        verdict.witness = witness
        return True
    return False


def verdict_witness(verdict):
    """The witness record of a non-empty verdict."""
    if verdict.empty:
        raise ValueError("an empty verdict has no witness")
    if verdict.witness is None:
        raise ValueError("witness data absent: run with emit_witness_data")
    return verdict.witness
