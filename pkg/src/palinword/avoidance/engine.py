"""
Iterative depth-first walker over the words of a constraint set.

Letters are tried in ascending order, so words are visited in lexicographic
order and node counts are reproducible.  With symmetry reduction a child may
only use letters up to one more than the largest letter used so far, which
keeps exactly one word per class of letter renamings (the lexicographically
least one).
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from ..utils.types import VisitAction
from ..words.alphabet import letter_char
from .constraints import ConstraintSet
from .state import SearchState

logger = logging.getLogger(__name__)

CHECKPOINT_FORMAT = "palinword-checkpoint/1"

Visitor = Callable[[SearchState], VisitAction]


@dataclass
class WalkCheckpoint:
    """Resumable walker position."""

    constraints: List[str]
    prefix: str
    path: str
    next_letters: List[int]
    nodes: int
    max_length: Optional[int]
    symmetry: bool
    extra: Dict[str, Any] = field(default_factory=dict)
    format: str = CHECKPOINT_FORMAT

    def save(self, path: str) -> None:
        target = Path(path)
        tmp = target.with_suffix(target.suffix + ".tmp")
        tmp.write_text(json.dumps(asdict(self), indent=2, sort_keys=True), "utf-8")
        tmp.replace(target)
        logger.debug(f"Checkpoint written to {path} at {self.nodes} nodes")

    @classmethod
    def load(cls, path: str) -> "WalkCheckpoint":
        target = Path(path)
        if not target.exists():
            raise FileNotFoundError(f"Checkpoint not found: {path}")
        data = json.loads(target.read_text("utf-8"))
        if data.get("format") != CHECKPOINT_FORMAT:
            raise ValueError(f"Unsupported checkpoint format in {path}")
        return cls(**data)


@dataclass
class WalkResult:
    nodes: int
    completed: bool
    stopped: bool = False
    frontier: str = ""

    @property
    def budget_hit(self) -> bool:
        return not self.completed and not self.stopped


def _letter_limit(state: SearchState, symmetry: bool) -> int:
    size = state.constraints.alphabet.size
    if not symmetry:
        return size
    return min(size, state.max_letter + 2)


def symmetry_applies(constraints: ConstraintSet, requested: bool) -> bool:
    if not requested or not constraints.symmetry:
        return False
    if not constraints.is_permutation_invariant():
        logger.warning(
            f"Constraint set {constraints.name or constraints} is not invariant "
            f"under letter renaming; symmetry reduction disabled"
        )
        return False
    return True


def walk(
    constraints: ConstraintSet,
    visit: Visitor,
    max_length: Optional[int] = None,
    budget: Optional[int] = None,
    symmetry: bool = False,
    prefix: str = "",
    checkpoint_path: Optional[str] = None,
    checkpoint_every: int = 1_000_000,
    extra: Optional[Callable[[], Dict[str, Any]]] = None,
    resume: Optional[WalkCheckpoint] = None,
) -> WalkResult:
    """Visit every word satisfying ``constraints`` that extends ``prefix``.

    ``visit`` is called on each accepted node, the prefix itself included,
    and decides whether to descend.  ``budget`` bounds the number of
    attempted extensions; when it runs out the result carries the current
    word as frontier.

    Args:
        constraints: Constraint set defining the tree
        visit: Callback deciding how to continue at each node
        max_length: Nodes of this length are not extended
        budget: Maximal number of attempted extensions
        symmetry: Apply the first-occurrence symmetry reduction as given
            (callers check invariance, see ``symmetry_applies``)
        prefix: Root of the walk; must satisfy the constraints
        checkpoint_path: File receiving periodic checkpoints
        checkpoint_every: Nodes between checkpoints
        extra: Caller state stored with each checkpoint
        resume: Checkpoint to continue from
    """
    state = SearchState(constraints)
    nodes = 0
    if resume is not None:
        prefix = resume.prefix
        symmetry = resume.symmetry
        max_length = resume.max_length
        nodes = resume.nodes

    for letter in prefix:
        if not state.push(letter):
            raise ValueError(f"Prefix {prefix!r} violates {state.last_violation}")
    base = len(prefix)

    if resume is not None:
        for letter in resume.path:
            if not state.push(letter):
                raise ValueError(f"Checkpoint path violates {state.last_violation}")
        next_letters = list(resume.next_letters)
        logger.info(f"Resuming walk at {state.text!r} after {nodes} nodes")
    else:
        action = visit(state)
        if action is VisitAction.STOP:
            return WalkResult(nodes, completed=False, stopped=True)
        if action is VisitAction.SKIP or (
            max_length is not None and len(state) >= max_length
        ):
            return WalkResult(nodes, completed=True)
        next_letters = [0]

    since_checkpoint = 0
    while next_letters:
        if budget is not None and nodes >= budget:
            logger.warning(f"Node budget {budget} spent at {state.text!r}")
            if checkpoint_path:
                _checkpoint(
                    checkpoint_path,
                    state,
                    base,
                    next_letters,
                    nodes,
                    max_length,
                    symmetry,
                    extra,
                )
            return WalkResult(nodes, completed=False, frontier=state.text)
        if checkpoint_path and since_checkpoint >= checkpoint_every:
            _checkpoint(
                checkpoint_path,
                state,
                base,
                next_letters,
                nodes,
                max_length,
                symmetry,
                extra,
            )
            since_checkpoint = 0

        k = next_letters[-1]
        if k >= _letter_limit(state, symmetry):
            next_letters.pop()
            if len(state) > base:
                state.pop()
            continue
        next_letters[-1] = k + 1
        nodes += 1
        since_checkpoint += 1
        if not state.push(letter_char(k)):
            continue
        action = visit(state)
        if action is VisitAction.STOP:
            return WalkResult(nodes, completed=False, stopped=True, frontier=state.text)
        if action is VisitAction.SKIP or (
            max_length is not None and len(state) >= max_length
        ):
            state.pop()
            continue
        next_letters.append(0)

    logger.debug(f"Walk from {prefix!r} complete after {nodes} nodes")
    return WalkResult(nodes, completed=True)


def _checkpoint(
    path: str,
    state: SearchState,
    base: int,
    next_letters: List[int],
    nodes: int,
    max_length: Optional[int],
    symmetry: bool,
    extra: Optional[Callable[[], Dict[str, Any]]],
) -> None:
    WalkCheckpoint(
        constraints=state.constraints.describe(),
        prefix=state.text[:base],
        path=state.text[base:],
        next_letters=list(next_letters),
        nodes=nodes,
        max_length=max_length,
        symmetry=symmetry,
        extra=extra() if extra else {},
    ).save(path)
