"""Dependency-checked decoding schedules for the virtual super receiver.

The outer-bound arguments claim that a super receiver observing one colour
class of base stations can replay the network's conferencing functions and
decode every message.  Each claim is a linear plan of steps, every step
consuming labelled resources produced earlier (or granted initially) and
producing new ones.  The validator checks resource availability, conferencing
round budgets, the total delay split, and the decoding goals.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import FrozenSet, Iterable, List, Optional, Tuple

from .partitions import FOUR, TWO, Partition

RX_CONF = "RX_CONF"
TX_CONF = "TX_CONF"
DECODE = "DECODE"
ENCODE = "ENCODE"
RECONSTRUCT = "RECONSTRUCT"

GENIE = "G"


def y(color: str) -> str:
    return f"Y[{color}]"


def x(color: str) -> str:
    return f"X[{color}]"


def mhat(color: str) -> str:
    return f"Mhat[{color}]"


def q_msg(src: str, dst: str, rnd: int) -> str:
    return f"Q[{src}->{dst}][{rnd}]"


def t_msg(src: str, dst: str, rnd: int) -> str:
    return f"T[{src}->{dst}][{rnd}]"


@dataclass(frozen=True)
class Step:
    kind: str
    name: str
    consumes: FrozenSet[str]
    produces: FrozenSet[str]
    round_index: int = 0


@dataclass(frozen=True)
class SchedulePlan:
    steps: Tuple[Step, ...]
    d_t: int
    d_r: int
    d: int
    initial: FrozenSet[str]
    goals: FrozenSet[str]

    def without_step(self, index: int) -> "SchedulePlan":
        """Copy of the plan with one step removed (for robustness checks)."""
        steps = self.steps[:index] + self.steps[index + 1 :]
        return replace(self, steps=steps)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: Tuple[str, ...]


def _step(kind, name, consumes: Iterable[str], produces: Iterable[str], rnd: int = 0) -> Step:
    return Step(kind, name, frozenset(consumes), frozenset(produces), rnd)


def _check_budgets(d_t: int, d_r: int, d: Optional[int]) -> int:
    if d_t < 0 or d_r < 0:
        raise ValueError("conferencing budgets must be non-negative")
    if d is None:
        d = d_t + d_r
    if d < 0:
        raise ValueError("total delay must be non-negative")
    return d


def schedule_two_color(
    part: Partition, d_t: int, d_r: int, d: Optional[int] = None
) -> SchedulePlan:
    """Super-receiver plan on the two-colour partition.

    Observed at the start: the red outputs, every conferencing message sent
    from white into red, and the genie term.  The plan replays red receiver
    conferencing, decodes red, replays red transmitter conferencing, rebuilds
    the red inputs, reconstructs the white outputs with the genie, replays
    the remaining receiver conferencing, and decodes white.
    """
    if part.kind != TWO:
        raise ValueError("two-colour schedule needs a two-colour partition")
    d = _check_budgets(d_t, d_r, d)
    initial = {y("red"), GENIE}
    initial.update(q_msg("white", "red", j) for j in range(1, d_r + 1))
    initial.update(t_msg("white", "red", j) for j in range(1, d_t + 1))

    steps: List[Step] = []
    for j in range(1, d_r + 1):
        prior = [q_msg("white", "red", i) for i in range(1, j)]
        prior += [q_msg("red", "red", i) for i in range(1, j)]
        steps.append(
            _step(
                RX_CONF,
                f"rx round {j}: red-side receiver messages",
                [y("red")] + prior,
                [q_msg("red", "red", j)],
                rnd=j,
            )
        )
    steps.append(
        _step(
            DECODE,
            "decode red messages",
            [y("red")]
            + [q_msg("white", "red", j) for j in range(1, d_r + 1)]
            + [q_msg("red", "red", j) for j in range(1, d_r + 1)],
            [mhat("red")],
        )
    )
    for j in range(1, d_t + 1):
        prior = [t_msg("white", "red", i) for i in range(1, j)]
        prior += [t_msg("red", "red", i) for i in range(1, j)]
        steps.append(
            _step(
                TX_CONF,
                f"tx round {j}: red-side transmitter messages",
                [mhat("red")] + prior,
                [t_msg("red", "red", j)],
                rnd=j,
            )
        )
    steps.append(
        _step(
            ENCODE,
            "re-encode red inputs",
            [mhat("red")]
            + [t_msg("white", "red", j) for j in range(1, d_t + 1)]
            + [t_msg("red", "red", j) for j in range(1, d_t + 1)],
            [x("red")],
        )
    )
    steps.append(
        _step(
            RECONSTRUCT,
            "reconstruct white outputs",
            [x("red"), y("red"), GENIE],
            [y("white")],
        )
    )
    for j in range(1, d_r + 1):
        prior = [q_msg("red", "white", i) for i in range(1, j)]
        prior += [q_msg("white", "white", i) for i in range(1, j)]
        steps.append(
            _step(
                RX_CONF,
                f"rx round {j}: white-side receiver messages",
                [y("white"), y("red")] + prior,
                [q_msg("red", "white", j), q_msg("white", "white", j)],
                rnd=j,
            )
        )
    steps.append(
        _step(
            DECODE,
            "decode white messages",
            [y("white")]
            + [q_msg("red", "white", j) for j in range(1, d_r + 1)]
            + [q_msg("white", "white", j) for j in range(1, d_r + 1)],
            [mhat("white")],
        )
    )
    return SchedulePlan(
        steps=tuple(steps),
        d_t=d_t,
        d_r=d_r,
        d=d,
        initial=frozenset(initial),
        goals=frozenset({mhat("red"), mhat("white")}),
    )


_FOUR_TX_PAIRS = (
    ("white", "pink"),
    ("pink", "white"),
    ("red", "pink"),
    ("pink", "red"),
    ("pink", "pink"),
    ("white", "white"),
)


def schedule_four_color(
    part: Partition, d_t: int, d_r: int, d: Optional[int] = None
) -> SchedulePlan:
    """Super-receiver plan on the four-colour partition.

    Observed at the start: red, pink and white outputs plus the genie term.
    Red messages are decoded from the red outputs and pink-to-red receiver
    messages alone; the blue outputs are reconstructed, after which full
    conferencing is replayed and the remaining colours are decoded.
    """
    if part.kind != FOUR:
        raise ValueError("four-colour schedule needs a four-colour partition")
    d = _check_budgets(d_t, d_r, d)
    initial = {y("red"), y("pink"), y("white"), GENIE}

    steps: List[Step] = []
    pairs = _FOUR_TX_PAIRS
    for j in range(1, d_r + 1):
        prior = [q_msg(a, b, i) for i in range(1, j) for a, b in pairs]
        steps.append(
            _step(
                RX_CONF,
                f"rx round {j}: observed-colour receiver messages",
                [y("red"), y("pink"), y("white")] + prior,
                [q_msg(a, b, j) for a, b in pairs],
                rnd=j,
            )
        )
    steps.append(
        _step(
            DECODE,
            "decode red messages",
            [y("red")] + [q_msg("pink", "red", j) for j in range(1, d_r + 1)],
            [mhat("red")],
        )
    )
    for j in range(1, d_t + 1):
        prior = [t_msg(a, b, i) for i in range(1, j) for a, b in pairs]
        steps.append(
            _step(
                TX_CONF,
                f"tx round {j}: transmitter messages",
                [mhat("red")] + prior,
                [t_msg(a, b, j) for a, b in pairs],
                rnd=j,
            )
        )
    steps.append(
        _step(
            ENCODE,
            "re-encode red inputs",
            [mhat("red")] + [t_msg("pink", "red", j) for j in range(1, d_t + 1)],
            [x("red")],
        )
    )
    steps.append(
        _step(
            RECONSTRUCT,
            "reconstruct blue outputs",
            [x("red"), y("red"), y("pink"), y("white"), GENIE],
            [y("blue")],
        )
    )
    for j in range(1, d_r + 1):
        prior = [q_msg("all", "all", i) for i in range(1, j)]
        steps.append(
            _step(
                RX_CONF,
                f"rx round {j}: full receiver conferencing",
                [y("red"), y("pink"), y("white"), y("blue")] + prior,
                [q_msg("all", "all", j)],
                rnd=j,
            )
        )
    steps.append(
        _step(
            DECODE,
            "decode pink, white and blue messages",
            [y("pink"), y("white"), y("blue")]
            + [q_msg("all", "all", j) for j in range(1, d_r + 1)],
            [mhat("pink"), mhat("white"), mhat("blue")],
        )
    )
    return SchedulePlan(
        steps=tuple(steps),
        d_t=d_t,
        d_r=d_r,
        d=d,
        initial=frozenset(initial),
        goals=frozenset({mhat("red"), mhat("pink"), mhat("white"), mhat("blue")}),
    )


def validate_schedule(plan: SchedulePlan) -> ValidationReport:
    """Machine-check a schedule: dependencies, round budgets, goals, delay."""
    violations: List[str] = []
    if plan.d_t + plan.d_r > plan.d:
        violations.append(
            f"delay split {plan.d_t}+{plan.d_r} exceeds total budget {plan.d}"
        )

    available = set(plan.initial)
    for i, step in enumerate(plan.steps):
        missing = step.consumes - available
        if missing:
            violations.append(
                f"step {i} ({step.name}): missing inputs {sorted(missing)}"
            )
        available |= step.produces

    # conferencing rounds: within budget, no repeats inside one phase
    # (a phase is a maximal run of steps of the same conferencing kind)
    i = 0
    while i < len(plan.steps):
        kind = plan.steps[i].kind
        if kind not in (RX_CONF, TX_CONF):
            i += 1
            continue
        j = i
        seen = set()
        budget = plan.d_r if kind == RX_CONF else plan.d_t
        while j < len(plan.steps) and plan.steps[j].kind == kind:
            rnd = plan.steps[j].round_index
            if not 1 <= rnd <= budget:
                violations.append(
                    f"step {j} ({plan.steps[j].name}): round {rnd} outside budget "
                    f"[1, {budget}]"
                )
            elif rnd in seen:
                violations.append(
                    f"step {j} ({plan.steps[j].name}): round {rnd} repeated in phase"
                )
            seen.add(rnd)
            j += 1
        i = j

    unmet = plan.goals - available
    if unmet:
        violations.append(f"goals never produced: {sorted(unmet)}")
    return ValidationReport(ok=not violations, violations=tuple(violations))
