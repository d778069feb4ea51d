import pytest

from hexmg.lattice import build_network
from hexmg.partitions import partition_four, partition_two
from hexmg.schedules import (
    DECODE,
    GENIE,
    RECONSTRUCT,
    RX_CONF,
    SchedulePlan,
    Step,
    schedule_four_color,
    schedule_two_color,
    validate_schedule,
)

PART2 = partition_two(build_network(2))
PART4 = partition_four(build_network(9), 3)


def test_canonical_two_color_validates():
    plan = schedule_two_color(PART2, 10, 10, 20)
    report = validate_schedule(plan)
    assert report.ok, report.violations


def test_canonical_four_color_validates():
    plan = schedule_four_color(PART4, 1, 2, 3)
    report = validate_schedule(plan)
    assert report.ok, report.violations


@pytest.mark.parametrize("d", [3, 20])
def test_all_delay_splits_validate(d):
    for d_t in range(d + 1):
        d_r = d - d_t
        assert validate_schedule(schedule_two_color(PART2, d_t, d_r, d)).ok
        assert validate_schedule(schedule_four_color(PART4, d_t, d_r, d)).ok


def test_zero_rx_rounds_still_decodes():
    plan = schedule_two_color(PART2, 4, 0, 4)
    assert validate_schedule(plan).ok


def test_swapped_phases_fail():
    plan = schedule_two_color(PART2, 2, 2, 4)
    decode_i = next(i for i, s in enumerate(plan.steps) if s.kind == DECODE)
    steps = list(plan.steps)
    steps.insert(0, steps.pop(decode_i))  # decode before conferencing
    swapped = SchedulePlan(
        steps=tuple(steps),
        d_t=plan.d_t,
        d_r=plan.d_r,
        d=plan.d,
        initial=plan.initial,
        goals=plan.goals,
    )
    report = validate_schedule(swapped)
    assert not report.ok
    assert any("missing inputs" in v for v in report.violations)


@pytest.mark.parametrize("builder,part", [(schedule_two_color, PART2), (schedule_four_color, PART4)])
def test_decode_and_reconstruct_deletions_always_violate(builder, part):
    plan = builder(part, 2, 2, 4)
    for i, step in enumerate(plan.steps):
        if step.kind in (DECODE, RECONSTRUCT):
            assert not validate_schedule(plan.without_step(i)).ok, step.name


def test_every_single_deletion_violates_in_canonical_plan():
    # every step's products are consumed later, so no deletion goes unnoticed
    plan = schedule_two_color(PART2, 2, 2, 4)
    for i in range(len(plan.steps)):
        assert not validate_schedule(plan.without_step(i)).ok


def test_genie_removal_breaks_reconstruct():
    for builder, part in ((schedule_two_color, PART2), (schedule_four_color, PART4)):
        plan = builder(part, 2, 2, 4)
        broken = SchedulePlan(
            steps=plan.steps,
            d_t=plan.d_t,
            d_r=plan.d_r,
            d=plan.d,
            initial=plan.initial - {GENIE},
            goals=plan.goals,
        )
        report = validate_schedule(broken)
        assert not report.ok
        assert any("reconstruct" in v for v in report.violations)


def test_budget_overflow_detected():
    plan = schedule_two_color(PART2, 1, 1, 2)
    extra = Step(
        kind=RX_CONF,
        name="one round too many",
        consumes=frozenset({"Y[red]"}),
        produces=frozenset({"Q[red->red][2]"}),
        round_index=2,
    )
    overloaded = SchedulePlan(
        steps=plan.steps[:1] + (extra,) + plan.steps[1:],
        d_t=plan.d_t,
        d_r=plan.d_r,
        d=plan.d,
        initial=plan.initial,
        goals=plan.goals,
    )
    report = validate_schedule(overloaded)
    assert any("outside budget" in v for v in report.violations)


def test_delay_split_checked():
    plan = schedule_two_color(PART2, 3, 3, 4)
    report = validate_schedule(plan)
    assert any("exceeds total budget" in v for v in report.violations)


def test_truncated_plan_misses_goal():
    plan = schedule_two_color(PART2, 1, 1, 2)
    truncated = SchedulePlan(
        steps=plan.steps[:-1],
        d_t=plan.d_t,
        d_r=plan.d_r,
        d=plan.d,
        initial=plan.initial,
        goals=plan.goals,
    )
    report = validate_schedule(truncated)
    assert any("goals never produced" in v for v in report.violations)


def test_negative_budgets_rejected():
    with pytest.raises(ValueError):
        schedule_two_color(PART2, -1, 2)
    with pytest.raises(ValueError):
        schedule_four_color(PART4, 1, -2)


def test_partition_kind_enforced():
    with pytest.raises(ValueError):
        schedule_two_color(PART4, 1, 1)
    with pytest.raises(ValueError):
        schedule_four_color(PART2, 1, 1)


def test_four_color_red_decode_uses_only_red_and_pink_to_red():
    plan = schedule_four_color(PART4, 2, 3, 5)
    decode_red = next(s for s in plan.steps if s.kind == DECODE and "red" in s.name)
    assert decode_red.consumes == frozenset(
        {"Y[red]"} | {f"Q[pink->red][{j}]" for j in range(1, 4)}
    )


def test_canonical_plan_shapes():
    d_t, d_r = 3, 4
    plan = schedule_two_color(PART2, d_t, d_r, 7)
    kinds = [s.kind for s in plan.steps]
    assert kinds.count(RX_CONF) == 2 * d_r
    assert kinds.count("TX_CONF") == d_t
    assert kinds.count(DECODE) == 2
    assert kinds.count("ENCODE") == 1
    assert kinds.count(RECONSTRUCT) == 1
    plan4 = schedule_four_color(PART4, d_t, d_r, 7)
    kinds4 = [s.kind for s in plan4.steps]
    assert kinds4.count(RX_CONF) == 2 * d_r
    assert kinds4.count("TX_CONF") == d_t
    assert kinds4.count(DECODE) == 2
    assert kinds4.count(RECONSTRUCT) == 1
