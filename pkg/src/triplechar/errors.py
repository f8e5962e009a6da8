"""Exception hierarchy for the toolkit.

Every failure mode raised by the numerical routines derives from
:class:`TripleCharError` so callers (and the CLI) can distinguish a failed
certification from a programming error.
"""


class TripleCharError(Exception):
    """Base class for all toolkit errors."""


class InvalidPath(TripleCharError, ValueError):
    """Integration path violates its invariants (too short, repeated vertices)."""


class PreconditionViolation(TripleCharError, ValueError):
    """An operation precondition does not hold for the given inputs."""


class MismatchedEvaluationPoint(PreconditionViolation):
    """Wronskian of states attached to different evaluation points."""


class StepUnderflow(TripleCharError, RuntimeError):
    """Adaptive integrator needs a step below ``min_step``."""


class NonFiniteState(TripleCharError, FloatingPointError):
    """Integration state left the finite range despite rescaling."""


class BranchCutViolation(TripleCharError, ValueError):
    """Fractional power requested on the negative real axis where forbidden."""


class SeedInsufficient(TripleCharError, RuntimeError):
    """Asymptotic series truncation error too large at the seeding radius."""


class DegenerateWronskian(TripleCharError, RuntimeError):
    """Connection-coefficient solve hit a near-zero denominator Wronskian."""


class ZeroOnContour(TripleCharError, RuntimeError):
    """A zero of the sampled function sits (numerically) on the contour."""


class PhaseJumpUnresolved(TripleCharError, RuntimeError):
    """Phase unwrapping could not resolve a jump after full refinement."""


class NoZeroEnclosed(TripleCharError, RuntimeError):
    """Zero search started on a contour with winding number zero."""


class NewtonStalled(TripleCharError, RuntimeError):
    """Newton refinement failed to reach the requested residual."""


class SectorViolation(TripleCharError, ValueError):
    """Argument of a located zero outside the admissible sector."""


class EvaluationOutsideSubdominantMargin(TripleCharError, RuntimeError):
    """Solution-family argument drifted too close to a sector boundary."""


class KVanishes(TripleCharError, RuntimeError):
    """Growth-profile reference value vanishes; caller must switch reference."""


class GridTooCoarse(TripleCharError, ValueError):
    """Finite-difference self-test failed on the supplied grid."""


class InequalityFailsAtAllTau(TripleCharError, RuntimeError):
    """Energy inequality did not hold for any sampled weight parameter."""


class OriginSingular(TripleCharError, ValueError):
    """Trigonometric root formula evaluated at the excluded origin."""


class DomainViolation(TripleCharError, ValueError):
    """Series argument outside its radius of convergence."""


class SampleExhausted(TripleCharError, RuntimeError):
    """Sampling search ended without finding a requested witness."""
