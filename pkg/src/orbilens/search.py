"""Isospectral family search and the counting arguments behind it.

For ``n = q0 - 2`` the complement is a pair ``(q1, q2)`` and the character
polynomials depend only on which sets contain ``q1``, ``q2``, ``q1 + q2`` and
``q1 - q2``.  Counting those patterns against the number of classes gives a
pigeonhole certificate that some two classes share a spectrum.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Tuple

from .classes import CanonicalClass, enumerate_classes
from .residues import ZERO, build_system
from .spectra import SpectralInvariant, multiplicity_sequence, series_depth, spectral_invariant

__all__ = [
    "ExpressionPattern",
    "IsospectralFamily",
    "SufficiencyRecord",
    "find_families",
    "pattern",
    "realized_patterns",
    "realized_pattern_count",
    "pattern_bound",
    "sufficiency_check",
    "CROSS_CHECK_DEPTH",
]

CROSS_CHECK_DEPTH = 200


class CrossValidationError(RuntimeError):
    """Invariant and series methods disagree about a family."""


@dataclass(frozen=True, order=True)
class ExpressionPattern:
    """Set labels of ``{q1, q2}`` and of ``{q1 + q2, q1 - q2}``, each sorted."""

    entries: Tuple[str, str]
    sums: Tuple[str, str]

    def __str__(self) -> str:
        return f"q1,q2 in {self.entries}; q1+-q2 in {self.sums}"


def pattern(q: int, pair: Tuple[int, int]) -> ExpressionPattern:
    system = build_system(q)
    q1, q2 = pair
    if q1 % q == 0 or q2 % q == 0:
        raise ValueError(f"pattern needs nonzero entries, got {pair} mod {q}")
    if (q1 - q2) % q == 0 or (q1 + q2) % q == 0:
        raise ValueError(f"entries of {pair} coincide up to sign mod {q}")
    entries = tuple(sorted((system.stratum(q1), system.stratum(q2))))
    sums = tuple(sorted((system.stratum(q1 + q2), system.stratum(q1 - q2))))
    assert ZERO not in sums
    return ExpressionPattern(entries, sums)


def _supported_shape(q: int) -> Tuple[str, int, int]:
    """``(family, p, m)`` where family is one of odd-prime-power, 2^m, odd-semiprime, 2p."""
    system = build_system(q)
    if system.shape == "prime-power":
        p, m = system.primes[0], system.exponent
        return ("2^m" if p == 2 else "p^m", p, m)
    if system.shape == "semiprime":
        p1, p2 = system.primes
        return ("2p", p2, 1) if p1 == 2 else ("p1p2", p1, p2)
    raise ValueError(f"q={q} is neither a prime power nor a product of two distinct primes")


def realized_patterns(q: int) -> List[ExpressionPattern]:
    """Distinct patterns over every pair of distinct residues in ``[1, q0]``.

    Pairs are complements of ``(q0 - 2)``-tuples, so they need not be coprime
    to ``q`` themselves.
    """
    _supported_shape(q)
    q0 = build_system(q).q0
    return sorted({pattern(q, pr) for pr in combinations(range(1, q0 + 1), 2)})


def realized_pattern_count(q: int) -> int:
    return len(realized_patterns(q))


def pattern_bound(q: int) -> int:
    family, _, m = _supported_shape(q)
    return {"p^m": m * m, "2^m": (m - 1) ** 2, "p1p2": 11, "2p": 6}[family]


@dataclass(frozen=True)
class SufficiencyRecord:
    q: int
    form: str
    lhs: int
    rhs: int

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs


def sufficiency_check(q: int) -> SufficiencyRecord:
    """The pigeonhole condition ``lower_bound(q, q0 - 2) > pattern_bound(q)``, cleared of denominators."""
    family, _, m = _supported_shape(q)
    system = build_system(q)
    q0, r = system.q0, system.r
    if family == "p^m":
        return SufficiencyRecord(q, "q0*((2m^2+3) - q0) <= 2r(m^2+1)", q0 * (2 * m * m + 3 - q0), 2 * r * (m * m + 1))
    if family == "p1p2":
        return SufficiencyRecord(q, "q0*(25 - q0) <= 24r", q0 * (25 - q0), 24 * r)
    if family == "2^m":
        return SufficiencyRecord(q, "m^2 - 2m + 3 <= q0", m * m - 2 * m + 3, q0)
    return SufficiencyRecord(q, "q0*(15 - q0) <= 14r", q0 * (15 - q0), 14 * r)


@dataclass(frozen=True)
class IsospectralFamily:
    q: int
    n: int
    members: Tuple[CanonicalClass, ...]
    invariant: SpectralInvariant
    verified_to: int

    def __len__(self) -> int:
        return len(self.members)


def find_families(q: int, n: int, cross_check_depth: int = CROSS_CHECK_DEPTH) -> List[IsospectralFamily]:
    """Group the classes of ``n``-tuples by spectral invariant and keep groups of two or more.

    Every family is re-checked with multiplicities up to
    ``min(series_depth, cross_check_depth)``; a mismatch raises
    :class:`CrossValidationError`.  Families are ordered by size (largest
    first), then by their smallest member.
    """
    groups: Dict[SpectralInvariant, List[CanonicalClass]] = defaultdict(list)
    for c in enumerate_classes(q, n):
        groups[spectral_invariant(c)].append(c)

    depth = min(series_depth(q, n), cross_check_depth)
    families = []
    for inv, members in groups.items():
        if len(members) < 2:
            continue
        members = sorted(members)
        reference = multiplicity_sequence(members[0], depth).values
        for other in members[1:]:
            if multiplicity_sequence(other, depth).values != reference:
                raise CrossValidationError(
                    f"{members[0].tuple} and {other.tuple} share an invariant but not a spectrum"
                )
        families.append(IsospectralFamily(q, n, tuple(members), inv, depth))
    families.sort(key=lambda f: (-len(f.members), f.members[0]))
    return families
