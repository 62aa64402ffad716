"""Exception hierarchy shared across the package."""


class MinorforgeError(Exception):
    """Base class for all package errors."""


class ParseError(MinorforgeError):
    """Malformed graph text input."""


class InvalidDecomposition(MinorforgeError):
    """Branch sets overlap, are empty, or induce a disconnected subgraph."""


class NotAClique(MinorforgeError):
    """A vertex set claimed to be a clique is not one."""


class AlphaTooLarge(MinorforgeError):
    """The graph has an independent set of size three."""


class WrongOrder(MinorforgeError):
    """Vertex count not divisible by three where a seagull partition is asked for."""


class TooLarge(MinorforgeError):
    """Input exceeds the guard size of an exhaustive routine."""


class BudgetExhausted(MinorforgeError):
    """A backtracking search ran out of its node budget before deciding."""


class OddGroundSet(MinorforgeError):
    """Pairings need an even ground set."""


class RejectionExhausted(MinorforgeError):
    """Rejection sampling failed to hit the concentration event in time."""


class NotEnoughEdges(MinorforgeError):
    """The sampled pairing has fewer graph edges than the requested matching size."""


class NonpositiveDenominator(MinorforgeError):
    """The selection-probability formula was evaluated outside its domain."""


class InvalidHypotheses(MinorforgeError):
    """The expectation bound was requested although a hypothesis flag fails."""


class DomainError(MinorforgeError):
    """Argument outside the documented domain of a closed-form expression."""


class Ineligible(MinorforgeError):
    """The pipeline refuses the input (wrong order, alpha, or clique too large)."""


class SeagullFailure(MinorforgeError):
    """Seagull partition failed on leftover vertices; indicates a defect, not data."""


class NotCertifiable(MinorforgeError):
    """Certification was requested for a run whose hypothesis flags do not hold."""


class UnknownName(MinorforgeError):
    """Unknown named graph."""


class UnknownSuite(MinorforgeError):
    """Unknown Monte Carlo suite."""
