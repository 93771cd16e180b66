"""Errors shared by the net modules.

Structural validation collects every violation before failing, so
ValidationError carries a list of Violation records rather than a single
message.  Semantic errors (firing, enumeration, decomposition) are
individual exception types.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Violation:
    """One structural defect found during validation.

    code is a stable machine-readable tag; subject names the offending
    node, arc, or component; detail is a human-readable explanation.
    """

    code: str
    subject: object
    detail: str

    def describe(self) -> str:
        return f"{self.code}({self.subject}): {self.detail}"


class NetError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NetError):
    """A net description violates its structural conditions."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("; ".join(v.describe() for v in self.violations))

    def codes(self) -> set:
        return {v.code for v in self.violations}


class UnknownNode(NetError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"unknown node: {node!r}")


class NotAStep(NetError):
    """A transition set is not a step (empty, unknown, or shared pre-places)."""


class StepNotEnabled(NetError):
    """A step cannot fire at the given marking.

    missing lists the unmarked pre-places; index locates the step inside a
    longer run when applicable; reason distinguishes the phase checks of
    two-level nets from plain token shortage.
    """

    def __init__(self, step, missing=(), index: Optional[int] = None,
                 reason: Optional[str] = None):
        self.step = frozenset(step)
        self.missing = frozenset(missing)
        self.index = index
        self.reason = reason
        parts = [f"step {sorted(self.step)} not enabled"]
        if index is not None:
            parts.append(f"at index {index}")
        if self.missing:
            parts.append(f"missing {sorted(self.missing)}")
        if reason:
            parts.append(f"({reason})")
        super().__init__(" ".join(parts))


class NotAStepSequence(NetError):
    """Replay of a step sequence failed; index is the offending position (0-based)."""

    def __init__(self, index: int, why: str = "replay failed"):
        self.index = index
        super().__init__(f"not a step sequence: {why} at step index {index}")


class NotWellFormed(NetError):
    """An operation that requires a well-formed input received an ill-formed one."""


class NotACsoNet(NetError):
    """An operation restricted to CSO-nets received a more general CSA-net."""


class NoDecomposition(NetError):
    """A step could not be split into sequentially executable syn-cycles."""


class UpperMarkingNotSingleton(NetError):
    """Phase consistency is undefined when an upper component does not hold
    exactly one token."""

    def __init__(self, component: int, tokens):
        self.component = component
        self.tokens = frozenset(tokens)
        super().__init__(
            f"upper component {component} holds {sorted(self.tokens)} "
            "instead of exactly one token")


class TransitionNeverFires(NetError):
    def __init__(self, transition):
        self.transition = transition
        super().__init__(f"transition {transition!r} occurs in no firing sequence")


class BoundExceeded(NetError):
    """An enumeration hit its bound; partial holds whatever was gathered."""

    def __init__(self, detail: str = "enumeration bound exceeded", partial=None):
        self.partial = partial
        super().__init__(detail)


class DocumentError(NetError):
    """A net document failed to parse; position is given when known."""

    def __init__(self, detail: str, line: Optional[int] = None,
                 col: Optional[int] = None, code: str = "syntax"):
        self.line = line
        self.col = col
        self.code = code
        where = f" at line {line}, column {col}" if line is not None else ""
        super().__init__(f"{detail}{where}")
