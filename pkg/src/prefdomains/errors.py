"""Exception types shared across the package.

Everything derives from PrefError so callers (and the CLI) can catch one
base class. Parse errors carry the offending line when available.
"""

from __future__ import annotations


class PrefError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(PrefError):
    """A profile or graph file line does not match the expected format."""


class DuplicateCandidate(PrefError):
    """A candidate name appears twice in a candidates declaration."""


class NotAPermutation(PrefError):
    """A vote is not a permutation of the declared candidate set."""


class UnknownCandidate(PrefError):
    """A name refers to no declared candidate."""


class EmptyCandidateSet(PrefError):
    """An operation would produce a profile with no candidates."""


class BadTriple(PrefError):
    """A candidate triple is not three distinct known candidates."""


class BadIndex(PrefError):
    """A vote index is out of range for the profile at hand."""


class NotGroupSeparable(PrefError):
    """No prefix/suffix split exists for a candidate set during tree building.

    The unsplittable candidate set is available as .candidates.
    """

    def __init__(self, candidates: frozenset[int]):
        self.candidates = frozenset(candidates)
        super().__init__(
            "no consistent split for candidates {%s}"
            % ",".join(str(c) for c in sorted(self.candidates))
        )


class LabelMismatch(PrefError):
    """A tree or order does not carry exactly the profile's candidates."""


class PreconditionViolated(PrefError):
    """An operation's documented precondition does not hold."""


class BadParams(PrefError):
    """Generator parameters are out of range or inconsistent."""


class BadK(PrefError):
    """A group or clique count k is out of range."""


class SizeMismatch(PrefError):
    """Two structures that must agree on size do not."""
