"""Exception types shared across the package.

The CLI maps these onto exit codes: input/format problems exit 2, while a
verifier answering "no" is not an error at all (exit 1 via normal output).
"""


class SimgadgetError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(SimgadgetError):
    """Malformed document or structurally invalid value (bad endpoints,
    duplicate edges, unknown labels, missing keys)."""


class InstanceValidationError(SimgadgetError):
    """A 3-partition instance violates one or more of its defining
    conditions.  ``problems`` lists every violated condition."""

    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("; ".join(problems))


class SizeLimitExceeded(SimgadgetError):
    """Input is larger than the configured cap for a brute-force routine."""


class InfeasibleParameters(SimgadgetError):
    """No legal value triple exists for the requested bound."""


class SolutionMismatch(SimgadgetError):
    """A supplied partition solution does not solve the instance the
    gadget construction was built from."""


class UnmappedVertex(SimgadgetError):
    """A drawing does not assign coordinates to every vertex."""


class MalformedDrawing(SimgadgetError):
    """A drawing fails verification, or verifies but lacks the crossing
    structure of a reduced instance (foreign input)."""


class NotAReducedInstance(SimgadgetError):
    """The expansion step was handed an instance that did not come out of
    the base reduction."""


class InconsistentStructure(SimgadgetError):
    """The two views of a crossing structure disagree."""


class UnknownEdge(SimgadgetError):
    """A crossing structure references an edge the instance does not have."""


class UnsupportedMode(SimgadgetError):
    """Figure emission was asked for a mode it does not implement."""
