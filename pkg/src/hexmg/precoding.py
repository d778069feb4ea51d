"""Numerical certification of the cluster-wide zero-forcing precoder.

For one interior cluster we draw every channel matrix from a continuous
distribution, assemble the linear system that forces each base-station sector
to observe only its own slow stream, solve it, and measure the residual
cross-interference by direct substitution.  One precoder column block per
slow message, spread over all active antennas of the cluster.

Schemes differ in where interference between slow streams is removed:

* ``s3`` / ``s4``: at the transmitter side; every active sector is a nulling
  target, so the system is square and generically solvable.
* ``s5``: the transmitter only nulls slow streams at fast sectors; the
  remaining slow-on-slow interference is subtracted at the receivers, which
  verification models by excluding those pairs from the residual.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from .clustering import (
    FAST,
    MODE_MIXED,
    MODE_SLOW_ONLY,
    SLOW,
    Cluster,
    ClusterPlan,
    assign_messages,
    clusters,
)
from .lattice import Sector, build_network

SCHEME_MODES = {"s3": MODE_SLOW_ONLY, "s4": MODE_MIXED, "s5": MODE_MIXED}

_CONSISTENCY_TOL = 1e-8


class RankDeficientError(RuntimeError):
    """The constraint matrix lost generic rank (degenerate channel draw)."""


@dataclass(frozen=True, eq=False)
class ChannelRealization:
    seed: int
    m: int
    #: (receiving sector, transmitting sector) -> m x m real matrix
    entries: Dict[Tuple[Sector, Sector], np.ndarray]


@dataclass(frozen=True, eq=False)
class ZFSystem:
    scheme: str
    m: int
    active: Tuple[Sector, ...]
    messages: Tuple[Sector, ...]   # slow sectors, one message each
    fast: Tuple[Sector, ...]
    h_net: np.ndarray              # (m*n_active, m*n_active) block channel matrix
    target: np.ndarray             # (m*n_active, m*n_messages) pinned effective channels
    n_unknowns: int
    n_constraints: int


@dataclass(frozen=True, eq=False)
class Precoder:
    m: int
    active: Tuple[Sector, ...]
    messages: Tuple[Sector, ...]
    matrix: np.ndarray             # (m*n_active, m*n_messages)

    def block(self, sector: Sector) -> np.ndarray:
        """Rows of the precoder feeding one active user's antennas."""
        i = self.active.index(sector)
        return self.matrix[self.m * i : self.m * (i + 1), :]


@dataclass(frozen=True)
class NullingReport:
    max_cross_residual: float
    min_self_rank: int
    solvable: bool


@dataclass(frozen=True)
class TrialResult:
    seed: int
    solvable: bool
    max_cross_residual: float
    min_self_rank: int


def origin_cluster(plan: ClusterPlan) -> Cluster:
    """The cluster anchored at the origin master."""
    for cl in plan.clusters:
        if cl.master == (0, 0):
            return cl
    raise ValueError("plan has no cluster at the origin")


def sample_channels(plan: ClusterPlan, m: int, seed: int) -> ChannelRealization:
    """Deterministic standard-normal channel matrices for all links incident
    to the origin cluster (self links plus in-cluster interference links)."""
    if m < 1:
        raise ValueError("m must be positive")
    cl = origin_cluster(plan)
    members = sorted(cl.sectors)
    member_set = cl.sectors
    rng = np.random.default_rng(seed)
    entries: Dict[Tuple[Sector, Sector], np.ndarray] = {}
    for k in members:
        senders = [k] + sorted(s for s in plan.net.tx_neighbors[k] if s in member_set)
        for l in senders:
            entries[(k, l)] = rng.standard_normal((m, m))
    return ChannelRealization(seed=seed, m=m, entries=entries)


def build_zf_system(plan: ClusterPlan, ch: ChannelRealization, scheme: str) -> ZFSystem:
    """Assemble the nulling constraints for the origin cluster.

    Unknowns are all precoder entries.  Per message the constraints read
    ``sum_l H[k,l] B[l] = delta[k, message] * I`` over the constrained receive
    sectors k: all active sectors for s3/s4, fast sectors plus the message's
    own sector for s5.
    """
    if scheme not in SCHEME_MODES:
        raise ValueError(f"unknown precoding scheme {scheme!r}")
    if plan.assignment is None:
        raise ValueError("plan has no assignment; call assign_messages first")
    if plan.mode != SCHEME_MODES[scheme]:
        raise ValueError(f"scheme {scheme} needs a {SCHEME_MODES[scheme]} assignment")

    cl = origin_cluster(plan)
    active = tuple(sorted(cl.sectors))
    if not active:
        raise ValueError("empty cluster")
    slow = tuple(s for s in active if plan.assignment[s] == SLOW)
    fast = tuple(s for s in active if plan.assignment[s] == FAST)
    if not slow:
        raise ValueError("cluster carries no slow message")

    m = ch.m
    n = len(active)
    idx = {s: i for i, s in enumerate(active)}
    h_net = np.zeros((m * n, m * n))
    for (k, l), h in ch.entries.items():
        h_net[m * idx[k] : m * idx[k] + m, m * idx[l] : m * idx[l] + m] = h
    target = np.zeros((m * n, m * len(slow)))
    for j, s in enumerate(slow):
        i = idx[s]
        target[m * i : m * i + m, m * j : m * j + m] = np.eye(m)

    n_unknowns = m * m * n * len(slow)
    if scheme == "s5":
        n_constraints = m * m * len(slow) * (len(fast) + 1)
    else:
        n_constraints = m * m * n * len(slow)
    return ZFSystem(
        scheme=scheme,
        m=m,
        active=active,
        messages=slow,
        fast=fast,
        h_net=h_net,
        target=target,
        n_unknowns=n_unknowns,
        n_constraints=n_constraints,
    )


def solve_precoder(system: ZFSystem) -> Precoder:
    """Minimum-norm solve of the constraint system with pinned self gains.

    Raises :class:`RankDeficientError` when the constraint matrix is singular
    or the pinned gains are unreachable; for continuous channel laws this
    happens with probability zero.
    """
    m = system.m
    if system.scheme in ("s3", "s4"):
        try:
            b = np.linalg.solve(system.h_net, system.target)
        except np.linalg.LinAlgError as exc:
            raise RankDeficientError(str(exc)) from None
        resid = np.linalg.norm(system.h_net @ b - system.target)
        if not np.isfinite(b).all() or resid > _CONSISTENCY_TOL * max(
            1.0, float(np.linalg.norm(system.target))
        ):
            raise RankDeficientError(f"inconsistent system, residual {resid:.3e}")
        return Precoder(m=m, active=system.active, messages=system.messages, matrix=b)

    # s5: per message, null at the fast sectors and pin only the own gain
    idx = {s: i for i, s in enumerate(system.active)}
    if system.fast:
        fast_rows = np.concatenate(
            [np.arange(m * idx[s], m * idx[s] + m) for s in system.fast]
        )
    else:
        fast_rows = np.empty(0, dtype=int)
    b = np.zeros((m * len(system.active), m * len(system.messages)))
    for j, msg in enumerate(system.messages):
        own = np.arange(m * idx[msg], m * idx[msg] + m)
        rows = np.concatenate([fast_rows, own]).astype(int)
        a_j = system.h_net[rows, :]
        rhs = system.target[rows, m * j : m * j + m]
        sol, _, rank, _ = np.linalg.lstsq(a_j, rhs, rcond=None)
        if rank < a_j.shape[0]:
            raise RankDeficientError(f"row-rank deficiency for message {msg}")
        if np.linalg.norm(a_j @ sol - rhs) > _CONSISTENCY_TOL:
            raise RankDeficientError("inconsistent system")
        b[:, m * j : m * j + m] = sol
    return Precoder(m=m, active=system.active, messages=system.messages, matrix=b)


def effective_channels(
    precoder: Precoder, ch: ChannelRealization
) -> Dict[Tuple[Sector, Sector], np.ndarray]:
    """Effective channel from every message to every cluster sector, obtained
    by substituting the sampled channels into the precoder directly."""
    m = precoder.m
    idx = {s: i for i, s in enumerate(precoder.active)}
    out: Dict[Tuple[Sector, Sector], np.ndarray] = {}
    for k in precoder.active:
        total = np.zeros((m, m * len(precoder.messages)))
        for (rx, tx), h in ch.entries.items():
            if rx != k:
                continue
            i = idx[tx]
            total += h @ precoder.matrix[m * i : m * i + m, :]
        for j, msg in enumerate(precoder.messages):
            out[(k, msg)] = total[:, m * j : m * j + m]
    return out


def verify_nulling(
    precoder: Precoder,
    plan: ClusterPlan,
    ch: ChannelRealization,
    tol: float = 1e-9,
    scheme: str = "s4",
) -> NullingReport:
    """Check the scheme's nulling promises on the substituted channels.

    Every message-carrying sector must see its own stream at full rank m;
    every effective channel the scheme promises to remove (all unintended
    streams at slow sectors for s3/s4, the whole slow aggregate at fast
    sectors for s4/s5) must be negligible relative to the strongest intended
    gain.
    """
    if plan.assignment is None:
        raise ValueError("plan has no assignment")
    if scheme not in SCHEME_MODES:
        raise ValueError(f"unknown precoding scheme {scheme!r}")
    geff = effective_channels(precoder, ch)
    m = precoder.m
    self_norms: List[float] = []
    ranks: List[int] = []
    cross: List[float] = []
    for (k, msg), g in geff.items():
        if g.shape != (m, m):
            raise ValueError("dimension mismatch in effective channel")
        if k == msg:
            self_norms.append(float(np.linalg.norm(g, 2)))
            ranks.append(int(np.linalg.matrix_rank(g)))
            continue
        role = plan.assignment[k]
        if role == FAST or (role == SLOW and scheme != "s5"):
            cross.append(float(np.linalg.norm(g, 2)))
    max_self = max(self_norms) if self_norms else 0.0
    min_rank = min(ranks) if ranks else 0
    if max_self == 0.0:
        residual = float("inf") if cross and max(cross) > 0 else 0.0
        return NullingReport(residual, min_rank, False)
    residual = (max(cross) / max_self) if cross else 0.0
    return NullingReport(residual, min_rank, residual <= tol and min_rank == m)


def certification_plan(t: int, m: int, scheme: str = "s4") -> ClusterPlan:
    """Smallest lattice holding one interior cluster, with the assignment
    mode the scheme expects."""
    if scheme not in SCHEME_MODES:
        raise ValueError(f"unknown precoding scheme {scheme!r}")
    net = build_network(max(3 * t, t + 3), antennas_per_user=m)
    return assign_messages(clusters(net, t), SCHEME_MODES[scheme])


def run_trial(
    plan: ClusterPlan, m: int, seed: int, scheme: str = "s4", tol: float = 1e-9
) -> TrialResult:
    """One seeded end-to-end certification: sample, solve, substitute, check."""
    ch = sample_channels(plan, m, seed)
    system = build_zf_system(plan, ch, scheme)
    try:
        precoder = solve_precoder(system)
    except RankDeficientError:
        return TrialResult(seed, False, float("inf"), 0)
    report = verify_nulling(precoder, plan, ch, tol=tol, scheme=scheme)
    return TrialResult(
        seed, report.solvable, report.max_cross_residual, report.min_self_rank
    )


def run_trials(
    t: int, m: int, trials: int, seed: int = 0, scheme: str = "s4", tol: float = 1e-9
) -> List[TrialResult]:
    """Independent seeded certification trials for one (t, m) design point."""
    plan = certification_plan(t, m, scheme)
    return [run_trial(plan, m, seed + i, scheme, tol) for i in range(trials)]
