"""The seven recognized domains and their membership tests.

Each domain is characterized purely by what it forbids (see minors):

  sp     single-peaked          position 3 + four 2x4 patterns
  gs     group-separable        position 2 + one 2x4 pattern
  catgs  caterpillar gs         position 2 + four 2x4 patterns
  br     best-restricted        position 1
  mr     medium-restricted      position 2
  wr     worst-restricted       position 3
  vr     value-restricted       positions 1, 2 and 3

Membership answers are witnesses: None means member, otherwise a
MinorWitness citing votes and candidates of the queried profile.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable

from .errors import BadIndex
from .minors import (
    CATGS_PATTERNS,
    GS_PATTERNS,
    SP_PATTERNS,
    DomainSpec,
    MinorWitness,
    _explicit_minor_subset,
    _j_minor_subset,
)
from .profiles import Profile


class DomainId(str, Enum):
    SP = "sp"
    GS = "gs"
    CATGS = "catgs"
    BR = "br"
    MR = "mr"
    WR = "wr"
    VR = "vr"


_CATALOG: dict[DomainId, DomainSpec] = {
    DomainId.SP: DomainSpec("sp", frozenset({3}), SP_PATTERNS),
    DomainId.GS: DomainSpec("gs", frozenset({2}), GS_PATTERNS),
    DomainId.CATGS: DomainSpec("catgs", frozenset({2}), CATGS_PATTERNS),
    DomainId.BR: DomainSpec("br", frozenset({1}), ()),
    DomainId.MR: DomainSpec("mr", frozenset({2}), ()),
    DomainId.WR: DomainSpec("wr", frozenset({3}), ()),
    DomainId.VR: DomainSpec("vr", frozenset({1, 2, 3}), ()),
}


def coerce_domain(d: DomainId | str) -> DomainId:
    """Accept DomainId values or their names, case-insensitively."""
    if isinstance(d, DomainId):
        return d
    try:
        return DomainId(str(d).lower())
    except ValueError:
        raise ValueError("unknown domain %r" % (d,)) from None


def domain_spec(d: DomainId | str) -> DomainSpec:
    return _CATALOG[coerce_domain(d)]


def _witness(
    p: Profile, spec: DomainSpec, subset: frozenset[int] | None
) -> MinorWitness | None:
    # Position flags ascending, then catalog patterns in order; the first
    # hit wins, so full-profile and subset queries agree by construction.
    for j in sorted(spec.j_flags):
        w = _j_minor_subset(p, j, subset)
        if w is not None:
            return w
    for pat in spec.explicit_patterns:
        w = _explicit_minor_subset(p, pat, subset)
        if w is not None:
            return w
    return None


def is_member(p: Profile, d: DomainId | str) -> MinorWitness | None:
    """None when p lies in the domain, else a witness of what it contains."""
    return _witness(p, domain_spec(d), None)


def is_member_subset(
    p: Profile, d: DomainId | str, votes: Iterable[int]
) -> MinorWitness | None:
    """Membership of the subprofile keeping the given votes.

    The subprofile ranges over the full candidate set; cited indices refer
    to p. Runs off p's cached scan tables, so checking many subsets of one
    profile shares all triple work. Raises BadIndex for an out-of-range
    vote index; duplicate indices collapse.
    """
    subset = frozenset(votes)
    for i in subset:
        if not (0 <= i < p.n):
            raise BadIndex("vote index %r out of range" % (i,))
    return _witness(p, domain_spec(d), subset)


def all_domains() -> tuple[DomainId, ...]:
    return tuple(DomainId)
