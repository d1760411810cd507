"""
Exhaustive backtracking with certificates.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from ..search.partition import map_ordered
from ..search.search_policy import SearchPolicy
from ..utils.types import Outcome, VisitAction
from .constraints import ConstraintSet
from .engine import WalkCheckpoint, symmetry_applies, walk
from .state import SearchState

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9


@dataclass(frozen=True)
class SearchCertificate:
    """Result of ``backtrack``.

    EXHAUSTED: every word satisfying the constraints has length at most
    ``longest_length`` (up to the recorded symmetry reduction); ``witness``
    is the lexicographically least word of that length.
    REACHED: ``witness`` has the target length.
    BUDGET: the node budget ran out at depth ``frontier_depth``; no claim.
    """

    constraints: ConstraintSet
    outcome: Outcome
    target: int
    nodes_expanded: int
    longest_length: int = 0
    witness: str = ""
    frontier_depth: int = 0
    symmetry: bool = False

    @property
    def nodes_advisory(self) -> bool:
        return True

    def record(self) -> Dict[str, Any]:
        """Canonical result record; node counts are reported separately."""
        record: Dict[str, Any] = {
            "outcome": self.outcome.value,
            "target": self.target,
            "symmetry": "first-occurrence" if self.symmetry else "none",
        }
        if self.outcome is Outcome.BUDGET:
            record["frontier_depth"] = self.frontier_depth
        else:
            record["longest_length"] = self.longest_length
            record["witness"] = self.witness
        return record


class _Tracker:
    """Visitor recording the longest word and stopping at the target."""

    def __init__(self, target: int, longest: int = -1, witness: str = ""):
        self.target = target
        self.longest = longest
        self.witness = witness
        self.reached = False

    def __call__(self, state: SearchState) -> VisitAction:
        n = len(state)
        if n > self.longest:
            self.longest = n
            self.witness = state.text
        if n >= self.target:
            self.reached = True
            return VisitAction.STOP
        return VisitAction.CONTINUE

    def snapshot(self) -> Dict[str, Any]:
        return {"longest": self.longest, "witness": self.witness}


def _run(
    constraints: ConstraintSet,
    target: int,
    budget: Optional[int],
    symmetry: bool,
    prefix: str = "",
    checkpoint_path: Optional[str] = None,
    checkpoint_every: int = 1_000_000,
    resume: Optional[WalkCheckpoint] = None,
) -> SearchCertificate:
    tracker = _Tracker(target)
    if resume is not None:
        tracker.longest = int(resume.extra.get("longest", -1))
        tracker.witness = str(resume.extra.get("witness", ""))
    result = walk(
        constraints,
        tracker,
        max_length=target,
        budget=budget,
        symmetry=symmetry,
        prefix=prefix,
        checkpoint_path=checkpoint_path,
        checkpoint_every=checkpoint_every,
        extra=tracker.snapshot,
        resume=resume,
    )
    if tracker.reached:
        outcome = Outcome.REACHED
    elif result.completed:
        outcome = Outcome.EXHAUSTED
    else:
        outcome = Outcome.BUDGET
    return SearchCertificate(
        constraints=constraints,
        outcome=outcome,
        target=target,
        nodes_expanded=result.nodes,
        longest_length=max(tracker.longest, 0),
        witness=tracker.witness,
        frontier_depth=len(result.frontier),
        symmetry=symmetry,
    )


_Task = Tuple[ConstraintSet, int, Optional[int], bool, str]


def _run_subtree(args: _Task) -> SearchCertificate:
    constraints, target, budget, symmetry, prefix = args
    return _run(constraints, target, budget, symmetry, prefix)


def _frontier(
    constraints: ConstraintSet, depth: int, symmetry: bool
) -> Tuple[List[str], SearchCertificate]:
    """Words of exactly ``depth`` letters, and the search of the shallow part."""
    found: List[str] = []
    tracker = _Tracker(depth + 1)

    def visit(state: SearchState) -> VisitAction:
        tracker(state)
        if len(state) == depth:
            found.append(state.text)
        return VisitAction.CONTINUE

    result = walk(constraints, visit, max_length=depth, symmetry=symmetry)
    shallow = SearchCertificate(
        constraints=constraints,
        outcome=Outcome.EXHAUSTED,
        target=depth,
        nodes_expanded=result.nodes,
        longest_length=max(tracker.longest, 0),
        witness=tracker.witness,
        symmetry=symmetry,
    )
    return found, shallow


def merge_certificates(
    constraints: ConstraintSet,
    target: int,
    shallow: SearchCertificate,
    parts: List[SearchCertificate],
    symmetry: bool,
) -> SearchCertificate:
    """Combine subtree results in subtree order."""
    nodes = shallow.nodes_expanded + sum(p.nodes_expanded for p in parts)
    for part in parts:
        if part.outcome is Outcome.REACHED:
            return SearchCertificate(
                constraints,
                Outcome.REACHED,
                target,
                nodes,
                longest_length=part.longest_length,
                witness=part.witness,
                symmetry=symmetry,
            )
    budget_parts = [p for p in parts if p.outcome is Outcome.BUDGET]
    if budget_parts:
        depth = min(p.frontier_depth for p in budget_parts)
        return SearchCertificate(
            constraints,
            Outcome.BUDGET,
            target,
            nodes,
            frontier_depth=depth,
            symmetry=symmetry,
        )
    best = shallow
    for part in parts:
        if part.longest_length > best.longest_length:
            best = part
    return SearchCertificate(
        constraints,
        Outcome.EXHAUSTED,
        target,
        nodes,
        longest_length=best.longest_length,
        witness=best.witness,
        symmetry=symmetry,
    )


def backtrack(
    c: ConstraintSet,
    target: int,
    budget: Optional[int] = DEFAULT_BUDGET,
    policy: Optional[SearchPolicy] = None,
    resume: Optional[WalkCheckpoint] = None,
) -> SearchCertificate:
    """Search for a word of length ``target`` satisfying ``c``.

    Args:
        c: Constraint set
        target: Length to reach
        budget: Maximal number of attempted extensions (per subtree when the
            tree is split)
        policy: Symmetry, splitting and checkpoint settings
        resume: Continue a checkpointed sequential search
    """
    if target < 1:
        raise ValueError(f"Target length must be at least 1, got {target}")
    policy = policy or SearchPolicy()
    symmetry = symmetry_applies(c, policy.symmetry)
    if resume is not None:
        symmetry = resume.symmetry

    if policy.parallel and resume is None and policy.split_depth < target:
        prefixes, shallow = _frontier(c, policy.split_depth, symmetry)
        logger.info(
            f"Split at depth {policy.split_depth} into {len(prefixes)} subtrees"
        )
        tasks = [(c, target, budget, symmetry, p) for p in prefixes]
        parts = map_ordered(_run_subtree, tasks, policy.jobs)
        certificate = merge_certificates(c, target, shallow, parts, symmetry)
    else:
        certificate = _run(
            c,
            target,
            budget,
            symmetry,
            checkpoint_path=policy.checkpoint_path,
            checkpoint_every=policy.checkpoint_every,
            resume=resume,
        )
    logger.info(
        f"Backtrack {c.name or 'search'}: {certificate.outcome.value}, "
        f"longest {certificate.longest_length}, {certificate.nodes_expanded} nodes"
    )
    return certificate
