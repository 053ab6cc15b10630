import pytest

from habicht.instances import random_system, random_systems
from habicht.reduction import (
    PlanExecutionError,
    evaluate_plan,
    execute_plan,
    plan_reduction,
    render_plan,
)
from habicht.subresultant import InvalidIndexError, subresultant
from habicht.theorem import cluster_degree_drops

D556 = (5, 5, 6)


def test_strategy_a_plan():
    plan = plan_reduction(D556, (3, 2), "A")
    assert [s.params.w0 for s in plan.steps] == [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1)]
    assert all(s.params.k == 1 and s.params.i == 0 for s in plan.steps)
    assert plan.base == {(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (3, 0)}
    assert plan.steps[-1].produces == (3, 2)


def test_strategy_b_plan():
    plan = plan_reduction(D556, (3, 2), "B")
    assert [(s.params.w0, s.params.k) for s in plan.steps] == [((0, 0), 1), ((1, 0), 2)]
    assert plan.base == {(0, 0), (0, 1), (1, 0), (2, 0)}
    assert plan.steps[-1].params.epsilon == 4


@pytest.mark.parametrize("strategy", ["A", "B"])
def test_unit_target_single_step(strategy):
    plan = plan_reduction((4, 4, 4, 5), (1, 1, 1), strategy)
    assert len(plan.steps) == 1
    p = plan.steps[0].params
    assert (p.w0, p.k, p.i) == ((0, 0, 0), 1, 0)


def test_base_target_is_empty_plan():
    plan = plan_reduction(D556, (0, 3), "A")
    assert plan.steps == () and plan.base == {(0, 3)}
    F = random_system(D556, 0)
    assert execute_plan(F, plan) == {}
    assert evaluate_plan(F, plan) == subresultant(F, (0, 3)).poly


def test_plan_errors():
    with pytest.raises(InvalidIndexError):
        plan_reduction(D556, (3, 3), "A")
    with pytest.raises(ValueError):
        plan_reduction(D556, (1, 1), "C")
    with pytest.raises(ValueError):
        plan_reduction((3, 4), (2,), "A")


@pytest.mark.parametrize("target", [(3, 2), (2, 2), (1, 3), (4, 1)])
@pytest.mark.parametrize("strategy", ["A", "B"])
def test_plans_are_topological(target, strategy):
    plan = plan_reduction(D556, target, strategy)
    available = set(plan.base)
    for s in plan.steps:
        assert s.produces == s.params.u
        assert all(c in available for c in s.consumes)
        available.add(s.produces)
    assert plan.steps[-1].produces == target


def test_strategy_a_step_count_counts_interior_points():
    # interior points (all coordinates >= 1) in the box below the target
    for target in [(3, 2), (2, 2), (1, 3), (4, 1)]:
        plan = plan_reduction(D556, target, "A")
        expected = target[0] * target[1]
        assert len(plan.steps) == expected


@pytest.mark.parametrize("strategy", ["A", "B"])
def test_execute_and_rebuild(strategy):
    plan = plan_reduction(D556, (3, 2), strategy)
    for seed in range(10):
        F = random_system(D556, seed)
        reports = execute_plan(F, plan)
        assert set(reports) == {s.produces for s in plan.steps}
        assert all(r.equal for r in reports.values())
        assert evaluate_plan(F, plan) == subresultant(F, (3, 2)).poly


def test_execute_aborts_on_degenerate_step():
    plan = plan_reduction(D556, (3, 2), "A")
    for F in random_systems(D556, 6, 200, bound=1):
        if any(cluster_degree_drops(F, s.params) for s in plan.steps):
            with pytest.raises(PlanExecutionError) as info:
                execute_plan(F, plan)
            assert 0 <= info.value.step < len(plan.steps)
            return
    pytest.fail("no degenerate instance found")


def test_render_mentions_every_step():
    text = render_plan(plan_reduction(D556, (3, 2), "B"))
    assert "--k=2--> 32" in text and "r_10^4" in text
    assert text.splitlines()[-1] == "  base: 00, 01, 10, 20"
