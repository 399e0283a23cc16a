"""Rotation-parameter tuples and their isometry classes.

Two tuples describe isometric lens spaces exactly when one is a permutation of
``(e_1 l s_1, ..., e_n l s_n) mod q`` for a unit ``l`` and signs ``e_i``.
Folding each entry into ``[0, q0]`` and sorting absorbs the signs and the
permutation, so the canonical representative of a class is the
lexicographically smallest folded, sorted image over all units ``l``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import combinations
from math import comb, gcd
from typing import Iterable, List, Sequence, Tuple, Union

from .residues import ResidueSystem, build_system, fold, q_zero

__all__ = [
    "LensTuple",
    "CanonicalClass",
    "canonicalize",
    "is_isometric",
    "complement_w",
    "enumerate_classes",
    "lower_bound",
    "closed_form_bound",
    "orbit_bound",
]


@dataclass(frozen=True, order=True)
class LensTuple:
    """Folded, sorted rotation parameters of ``L(q: p_1, ..., p_n)``.

    The constructor only checks that the entries are folded and sorted.  Use
    :meth:`check` for the reduced/effective conditions; some operations
    (multiplicities, complements) legitimately work with tuples that fail them.
    """

    q: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        q0 = q_zero(self.q)
        if any(not 0 <= e <= q0 for e in self.entries):
            raise ValueError(f"entries {self.entries} are not folded into [0, {q0}]")
        if list(self.entries) != sorted(self.entries):
            raise ValueError(f"entries {self.entries} are not sorted")

    @classmethod
    def from_values(cls, q: int, values: Iterable[int]) -> "LensTuple":
        """Fold arbitrary integers mod ``q`` and sort them."""
        return cls(q, tuple(sorted(fold(v, q) for v in values)))

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def system(self) -> ResidueSystem:
        return build_system(self.q)

    @property
    def is_reduced(self) -> bool:
        """No zero entry and no two entries congruent up to sign."""
        return 0 not in self.entries and len(set(self.entries)) == self.n

    @property
    def is_effective(self) -> bool:
        return reduce(gcd, self.entries, self.q) == 1

    def check(self, *, effective: bool = True) -> "LensTuple":
        if 0 in self.entries:
            raise ValueError(f"{self}: entries must be nonzero mod q")
        if len(set(self.entries)) != self.n:
            raise ValueError(f"{self}: entries must be distinct up to sign mod q")
        if effective and not self.is_effective:
            raise ValueError(f"{self}: gcd of entries and q must be 1")
        return self

    def __str__(self) -> str:
        return f"L({self.q}: {', '.join(map(str, self.entries))})"


@dataclass(frozen=True, order=True)
class CanonicalClass:
    """An isometry class, stored as its lexicographically minimal representative."""

    tuple: LensTuple

    @property
    def q(self) -> int:
        return self.tuple.q

    @property
    def n(self) -> int:
        return self.tuple.n

    @property
    def entries(self) -> Tuple[int, ...]:
        return self.tuple.entries

    def __str__(self) -> str:
        return "[" + ", ".join(map(str, self.entries)) + "]"


def _half_units(q: int) -> List[int]:
    # l and -l give identical folds
    return [l for l in range(1, q_zero(q) + 1) if gcd(l, q) == 1]


@lru_cache(maxsize=65536)
def _canonical_entries(q: int, entries: Tuple[int, ...]) -> Tuple[int, ...]:
    best = entries
    for l in _half_units(q):
        image = tuple(sorted(fold(l * e, q) for e in entries))
        if image < best:
            best = image
    return best


def _as_tuple(t: Union[LensTuple, CanonicalClass]) -> LensTuple:
    return t.tuple if isinstance(t, CanonicalClass) else t


def canonicalize(t: Union[LensTuple, CanonicalClass]) -> CanonicalClass:
    t = _as_tuple(t)
    if 0 in t.entries:
        raise ValueError(f"{t}: the zero residue is not allowed in a class")
    return CanonicalClass(LensTuple(t.q, _canonical_entries(t.q, t.entries)))


def is_isometric(a: Union[LensTuple, CanonicalClass], b: Union[LensTuple, CanonicalClass]) -> bool:
    a, b = _as_tuple(a), _as_tuple(b)
    if a.q != b.q or a.n != b.n:
        raise ValueError(f"cannot compare {a} with {b}: q and n must agree")
    return canonicalize(a) == canonicalize(b)


def _complement(q: int, entries: Sequence[int]) -> Tuple[int, ...]:
    taken = set(entries)
    return tuple(x for x in range(1, q_zero(q) + 1) if x not in taken)


def complement_w(c: Union[LensTuple, CanonicalClass]) -> CanonicalClass:
    """Class of the complement of the entries inside ``[1, q0]``.

    Together with their negatives, a tuple and its complement cover every
    nonzero residue (for even ``q`` the self-negative ``q/2`` appears once).
    The complement need not be effective: ``L(25: 1..4, 6..9, 11, 12)`` maps to
    ``(5, 10)``.
    """
    t = _as_tuple(c).check(effective=False)
    if t.n >= q_zero(t.q):
        raise ValueError(f"{t}: complement is empty (n must be below q0={q_zero(t.q)})")
    return canonicalize(LensTuple(t.q, _complement(t.q, t.entries)))


def enumerate_classes(q: int, n: int) -> List[CanonicalClass]:
    """All isometry classes of effective reduced ``n``-tuples mod ``q``, sorted."""
    system = build_system(q)
    q0 = system.q0
    if not 1 <= n <= q0 - 1:
        raise ValueError(f"n must lie in [1, {q0 - 1}] for q={q}, got {n}")
    via_complement = 2 * n > q0
    size = q0 - n if via_complement else n
    seen = set()
    out = []
    for subset in combinations(range(1, q0 + 1), size):
        entries = _complement(q, subset) if via_complement else subset
        if reduce(gcd, entries, q) != 1:
            continue
        # the smaller side identifies the class equally well and is cheaper
        key = _canonical_entries(q, subset)
        if key in seen:
            continue
        seen.add(key)
        out.append(canonicalize(LensTuple(q, tuple(entries))))
    return sorted(out)


def lower_bound(q: int, n: int) -> Fraction:
    """Counting lower bound on the number of classes of ``n``-tuples.

    Classes are counted by how many non-unit entries ``t`` they hold: the
    normalized tuples ``1 = p_1 < ... <= q0`` with ``t`` non-units number
    ``C(q0-1-r, n-1-t) * C(r, t)`` and at most ``n - t`` of them share a class.
    """
    system = build_system(q)
    q0, r = system.q0, system.r
    if not 1 <= n <= q0 - 1:
        raise ValueError(f"n must lie in [1, {q0 - 1}] for q={q}, got {n}")
    k = q0 - n
    u = r - k if r > k else 0
    total = Fraction(0)
    for t in range(u, min(r, n - 1) + 1):
        total += Fraction(comb(q0 - 1 - r, n - 1 - t) * comb(r, t), n - t)
    return total


def closed_form_bound(q: int) -> Fraction:
    """``lower_bound(q, q0 - 2)`` simplified; needs ``r > 2`` and ``q0 - r > 2``."""
    system = build_system(q)
    q0, r = system.q0, system.r
    if r <= 2 or q0 - r <= 2:
        raise ValueError(f"closed form needs r > 2 and q0 - r > 2 (q={q}, r={r}, q0={q0})")
    return Fraction(r * (r - 1), 2 * (q0 - r)) + r + Fraction(q0 - r - 1, 2)


def orbit_bound(q: int, n: int) -> Fraction:
    """The weaker bound ``C(q0, n) / q0``."""
    q0 = build_system(q).q0
    return Fraction(comb(q0, n), q0)
