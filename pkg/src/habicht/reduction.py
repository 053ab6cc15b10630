"""Reduction of a subresultant to the zero-coordinate frontier.

Each step applies the Habicht identity with i = 0 to express R_u through
the cluster at w0 = u - (k,...,k). Strategy "A" always uses k = 1;
strategy "B" uses the largest k that keeps w0 >= 0. Consumed indices
that still have every coordinate >= 1 are reduced recursively; those
with a zero coordinate form the base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .poly import Poly
from .subresultant import Index, InvalidIndexError, PolySystem, subresultant, subresultant_of
from .theorem import (
    HabichtParams,
    VerificationReport,
    cluster_degree_drops,
    derive_params,
    generic_degree,
    verify_identity,
)

__all__ = [
    "ReductionStep",
    "ReductionPlan",
    "PlanExecutionError",
    "plan_reduction",
    "execute_plan",
    "evaluate_plan",
    "render_plan",
]

STRATEGIES = ("A", "B")


class PlanExecutionError(RuntimeError):
    def __init__(self, step: int, produces: Index, reason: str):
        self.step = step
        self.produces = produces
        super().__init__(f"step {step} (producing {produces}): {reason}")


@dataclass(frozen=True)
class ReductionStep:
    params: HabichtParams

    @property
    def produces(self) -> Index:
        return self.params.u

    @property
    def consumes(self) -> tuple[Index, ...]:
        return self.params.members

    def as_dict(self) -> dict:
        return {
            "w0": list(self.params.w0), "k": self.params.k, "i": self.params.i,
            "epsilon": self.params.epsilon, "produces": list(self.produces),
            "consumes": [list(c) for c in self.consumes],
        }


@dataclass(frozen=True)
class ReductionPlan:
    target: Index
    strategy: str
    steps: tuple[ReductionStep, ...]
    base: frozenset[Index]

    def as_dict(self) -> dict:
        return {
            "target": list(self.target),
            "strategy": self.strategy,
            "steps": [s.as_dict() for s in self.steps],
            "base": [list(b) for b in sorted(self.base)],
        }


def _is_base(idx: Index) -> bool:
    return min(idx) == 0


def plan_reduction(d: Sequence[int], target: Sequence[int], strategy: str = "A") -> ReductionPlan:
    d = tuple(d)
    n = len(d) - 1
    target = tuple(int(x) for x in target)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if len(target) != n or any(x < 0 for x in target) or sum(target) > d[0]:
        raise InvalidIndexError(f"target {target} not in P({d[0]}, {n})")
    if _is_base(target):
        return ReductionPlan(target, strategy, (), frozenset({target}))
    if n < 2:
        # with one index coordinate the k = 1 step maps R_w to itself
        raise ValueError("reduction planning needs n >= 2")

    steps: dict[Index, ReductionStep] = {}
    base: set[Index] = set()
    pending = [target]
    while pending:
        u = pending.pop()
        if u in steps:
            continue
        k = 1 if strategy == "A" else min(u)
        w0 = tuple(x - k for x in u)
        step = ReductionStep(derive_params(d, w0, k, 0))
        steps[u] = step
        for c in step.consumes:
            if _is_base(c):
                base.add(c)
            elif c not in steps:
                pending.append(c)

    # |w0| strictly decreases along every dependency edge when n >= 2
    order = sorted(steps.values(), key=lambda s: (sum(s.params.w0), s.params.w0))
    return ReductionPlan(target, strategy, tuple(order), frozenset(base))


def execute_plan(F: PolySystem, plan: ReductionPlan) -> dict[Index, VerificationReport]:
    """Verify every step of the plan in order; keys are the produced indices."""
    reports: dict[Index, VerificationReport] = {}
    for pos, step in enumerate(plan.steps):
        drops = cluster_degree_drops(F, step.params)
        if drops:
            raise PlanExecutionError(pos, step.produces, f"degree drop in {drops}")
        report = verify_identity(F, step.params)
        reports[step.produces] = report
    return reports


def evaluate_plan(F: PolySystem, plan: ReductionPlan) -> Poly:
    """Rebuild R_target from the base subresultants alone.

    Each step forms the nested subresultant of already-known values and
    divides out r_{w0}^eps exactly.
    """
    known: dict[Index, Poly] = {b: subresultant(F, b).poly for b in plan.base}
    for pos, step in enumerate(plan.steps):
        p = step.params
        vals = [known[c] for c in step.consumes]
        r = vals[0].coeff(generic_degree(F, p.w0))
        if r == 0 and p.epsilon > 0:
            raise PlanExecutionError(pos, step.produces, f"r_{p.w0} vanishes")
        for idx, val in zip(step.consumes, vals):
            if not val or val.degree != generic_degree(F, idx):
                raise PlanExecutionError(pos, step.produces, f"degree drop in {idx}")
        nested = subresultant_of(vals, p.v).poly
        known[step.produces] = nested.exact_div(r ** p.epsilon)
    return known[plan.target]


def render_plan(plan: ReductionPlan) -> str:
    """Plain-text listing of the dependency structure, one step per line."""
    def fmt(idx: Index) -> str:
        return "".join(str(x) for x in idx) if all(x < 10 for x in idx) else str(idx)

    lines = [f"target {fmt(plan.target)}  strategy {plan.strategy}"]
    for s in plan.steps:
        p = s.params
        src = ", ".join(fmt(c) for c in s.consumes)
        lines.append(f"  [{src}] --k={p.k}--> {fmt(s.produces)}   (scale r_{fmt(p.w0)}^{p.epsilon})")
    lines.append("  base: " + ", ".join(fmt(b) for b in sorted(plan.base)))
    return "\n".join(lines)
