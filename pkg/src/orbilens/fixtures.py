"""Reference values for the worked examples, runnable as self-checks.

Each :class:`Fixture` recomputes one published value with the library and
compares it with the expected value recorded here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fnmatch import fnmatch
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .classes import (
    LensTuple,
    canonicalize,
    complement_w,
    enumerate_classes,
    is_isometric,
    lower_bound,
)
from .geometry import singular_signature
from .residues import build_system
from .search import (
    find_families,
    pattern,
    pattern_bound,
    realized_pattern_count,
    sufficiency_check,
)
from .spectra import (
    character_polynomial,
    extend_w,
    is_isospectral,
    multiplicity_sequence,
    series_depth,
    spectral_invariant,
)

__all__ = ["Fixture", "FixtureResult", "FIXTURES", "run_fixtures"]


@dataclass(frozen=True)
class FixtureResult:
    name: str
    claim: str
    passed: bool
    observed: str


@dataclass(frozen=True)
class Fixture:
    name: str
    claim: str
    check: Callable[[], Tuple[bool, str]]

    def run(self) -> FixtureResult:
        try:
            passed, observed = self.check()
        except Exception as exc:  # a crash is a failed fixture, not a crashed run
            passed, observed = False, f"{type(exc).__name__}: {exc}"
        return FixtureResult(self.name, self.claim, bool(passed), observed)


def L(q: int, *entries: int) -> LensTuple:
    return LensTuple.from_values(q, entries)


def _equal(observed, expected) -> Tuple[bool, str]:
    return observed == expected, repr(observed)


FIXTURES: List[Fixture] = []


def _add(name: str, claim: str, check: Callable[[], Tuple[bool, str]]) -> None:
    FIXTURES.append(Fixture(name, claim, check))


# residues

def _system_25():
    s = build_system(25)
    return _equal((len(s.units), s.members("B1"), s.r), (20, (5, 10, 15, 20), 2))


def _system_14():
    s = build_system(14)
    got = (s.units, s.members("B"), s.members("C"), s.r)
    return _equal(got, ((1, 3, 5, 9, 11, 13), (2, 4, 6, 8, 10, 12), (7,), 4))


def _system_21():
    s = build_system(21)
    return _equal((s.members("B"), s.members("C")), ((3, 6, 9, 12, 15, 18), (7, 14)))


_add("system-q25", "q=25: |A| = 20, B1 = {5,10,15,20}, r = 2", _system_25)
_add("system-q14", "q=14: A = {1,3,5,9,11,13}, B = evens, C = {7}, r = 4", _system_14)
_add("system-q21", "q=21: B = {3,...,18}, C = {7,14}", _system_21)


def _charsums():
    s = build_system(25)
    got = (s.character_sum("A", 1), s.character_sum("B1", 1), s.character_sum("A", 5),
           s.character_sum("B1", 5), s.character_sum("A", 0))
    return _equal(got, (0, -1, -5, 4, 20))


_add("charsum-q25", "q=25 sums over A, B1 at m=1, 5 and |A|: 0, -1, -5, 4, 20", _charsums)

# classes

_add("canonical-q9", "[1,3] is canonical for q=9",
     lambda: _equal(canonicalize(L(9, 1, 3)).entries, (1, 3)))
_add("isometric-q25-pair", "L(25:1..9,11) and L(25:1..4,6..11) are not isometric",
     lambda: _equal(is_isometric(L(25, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11), L(25, 1, 2, 3, 4, 6, 7, 8, 9, 10, 11)), False))
_add("complement-q14", "complement of (1,2,4,5,7) mod 14 is the class of (3,6)",
     lambda: _equal(complement_w(L(14, 1, 2, 4, 5, 7)), canonicalize(L(14, 3, 6))))
_add("classes-q9-n2", "q=9, n=2 has exactly the classes [1,2] and [1,3]",
     lambda: _equal([c.entries for c in enumerate_classes(9, 2)], [(1, 2), (1, 3)]))

for _q, _n, _count in [(10, 3, 6), (8, 2, 4), (16, 6, 9), (32, 14, 16)]:
    _add(f"class-count-q{_q}-n{_n}", f"q={_q}, n={_n} has {_count} classes",
         lambda q=_q, n=_n, c=_count: _equal(len(enumerate_classes(q, n)), c))

for _q, _n, _value in [(27, 11, Fraction(26, 3)), (35, 15, Fraction(34, 3)), (21, 8, Fraction(15, 2))]:
    _add(f"lower-bound-q{_q}", f"class lower bound for q={_q}, n={_n} is {_value}",
         lambda q=_q, n=_n, v=_value: _equal(lower_bound(q, n), v))

# character polynomials: (name, q, tuple whose complement is used, {label: coefficients})

_POLYS: List[Tuple[str, int, Sequence[int], Dict[str, Tuple[int, ...]]]] = [
    ("q25-k2-case1", 25, (1, 2, 3, 4, 6, 7, 8, 9, 11, 12),
     {"A": (20, 20, 20, 20, 20), "B1": (4, -16, 24, -16, 4)}),
    ("q25-k2-case3", 25, (1, 2, 3, 4, 5, 6, 7, 8, 9, 11),
     {"A": (20, 10, 40, 10, 20), "B1": (4, -6, 4, -6, 4)}),
    ("q25-k2-case4a", 25, (1, 2, 3, 4, 5, 6, 7, 8, 9, 10),
     {"A": (20, 0, 40, 0, 20), "B1": (4, 4, 4, 4, 4)}),
    ("q25-k2-case4b", 25, (1, 2, 3, 4, 5, 6, 7, 9, 10, 11),
     {"A": (20, 0, 30, 0, 20), "B1": (4, 4, 14, 4, 4)}),
    ("q27-case1", 27, (1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13),
     {"A": (18, 0, 36, 0, 18), "B1": (6, 6, 12, 6, 6), "B2": (2, -2, 0, -2, 2)}),
    ("q27-case2", 27, (1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13),
     {"A": (18, 0, 36, 0, 18), "B1": (6, 0, 6, 0, 6), "B2": (2, 4, 6, 4, 2)}),
    ("q35-case1", 35, (1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17),
     {"A": (24, 6, 52, 6, 24), "B": (6, 4, 8, 4, 6), "C": (4, -6, 4, -6, 4)}),
    ("q35-case2a", 35, (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17),
     {"A": (24, -4, 52, -4, 24), "B": (6, 4, 8, 4, 6), "C": (4, 4, 4, 4, 4)}),
    ("q35-case2b", 35, (1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17),
     {"A": (24, -4, 42, -4, 24), "B": (6, 4, 8, 4, 6), "C": (4, 4, 14, 4, 4)}),
    ("q14-case1", 14, (1, 2, 4, 5, 7),
     {"A": (6, 0, 16, 0, 6), "B": (6, 4, 8, 4, 6), "C": (1, 0, -2, 0, 1)}),
    ("q25-k3-2f", 25, (1, 4, 5, 6, 7, 8, 9, 10, 11),
     {"A": (20, 0, 30, 0, 30, 0, 20), "B1": (4, 6, 30, 20, 30, 6, 4)}),
    ("q25-k3-2h", 25, (1, 2, 3, 4, 5, 6, 7, 8, 10),
     {"A": (20, 0, 50, 10, 50, 0, 20), "B1": (4, 6, 10, 10, 10, 6, 4)}),
    ("q25-k3-2h-second", 25, (1, 3, 4, 5, 6, 7, 8, 9, 10),
     {"A": (20, 0, 50, -40, 50, 0, 20), "B1": (4, 6, 10, 10, 10, 6, 4)}),
    ("q25-k3-3c", 25, (1, 2, 3, 4, 5, 6, 7, 8, 9),
     {"A": (20, 10, 60, 20, 60, 10, 20), "B1": (4, -4, 0, 0, 0, -4, 4)}),
    ("q25-k3-3d", 25, (1, 2, 3, 4, 5, 6, 7, 8, 12),
     {"A": (20, 10, 50, 40, 50, 10, 20), "B1": (4, -4, 10, -20, 10, -4, 4)}),
    ("q25-k3-3e", 25, (1, 2, 3, 4, 6, 7, 8, 10, 12),
     {"A": (20, 10, 50, -10, 50, 10, 20), "B1": (4, -4, 10, -20, 10, -4, 4)}),
    ("q25-k3-case4", 25, (1, 2, 3, 4, 6, 7, 8, 9, 11),
     {"A": (20, 20, 40, 40, 40, 20, 20), "B1": (4, -14, 20, -20, 20, -14, 4)}),
]


def _poly_check(q, tup, expected):
    def check():
        comp = complement_w(L(q, *tup)).entries
        system = build_system(q)
        got = {lab: character_polynomial(system, comp, lab).coefficients for lab in expected}
        return _equal(got, expected)
    return check


for _name, _q, _tup, _exp in _POLYS:
    _add(f"poly-{_name}", f"character polynomials of L({_q}: {_tup})", _poly_check(_q, _tup, _exp))

for _name, _q, _pair, _label, _exp in [
    ("q25-5-10-A", 25, (5, 10), "A", (20, 20, 20, 20, 20)),
    ("q25-5-10-B1", 25, (5, 10), "B1", (4, -16, 24, -16, 4)),
    ("q25-10-12-A", 25, (10, 12), "A", (20, 10, 40, 10, 20)),
    ("q25-10-12-B1", 25, (10, 12), "B1", (4, -6, 4, -6, 4)),
    ("q14-3-6-A", 14, (3, 6), "A", (6, 0, 16, 0, 6)),
    ("q14-3-6-C", 14, (3, 6), "C", (1, 0, -2, 0, 1)),
]:
    _add(f"poly-pair-{_name}", f"polynomial over {_label} for {_pair} mod {_q}",
         lambda q=_q, p=_pair, lab=_label, e=_exp: _equal(
             character_polynomial(build_system(q), p, lab).coefficients, e))

# isospectrality

Q25_L1 = (1, 2, 3, 4, 5, 6, 7, 8, 9, 11)
Q25_L2 = (1, 2, 3, 4, 6, 7, 8, 9, 10, 11)
Q14_L1 = (1, 2, 4, 5, 7)
Q14_L2 = (1, 4, 5, 6, 7)

_add("invariant-q25-pair", "L(25:1..9,11) and L(25:1..4,6..11) have equal invariants",
     lambda: _equal(spectral_invariant(L(25, *Q25_L1)) == spectral_invariant(L(25, *Q25_L2)), True))
_add("invariant-q9", "L(9:1,2) and L(9:1,3) have different invariants",
     lambda: _equal(spectral_invariant(L(9, 1, 2)) == spectral_invariant(L(9, 1, 3)), False))
_add("isospectral-q14", "L(14:1,2,4,5,7) and L(14:1,4,5,6,7) are isospectral",
     lambda: _equal(is_isospectral(L(14, *Q14_L1), L(14, *Q14_L2)).isospectral, True))
_add("isospectral-q35", "the first q=35 pair is isospectral",
     lambda: _equal(is_isospectral(L(35, 1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17),
                                   L(35, 1, 2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17)).isospectral, True))
_add("isospectral-q9", "L(9:1,2) and L(9:1,3) are not isospectral",
     lambda: _equal(is_isospectral(L(9, 1, 2), L(9, 1, 3)).isospectral, False))


def _extended_q14():
    a, b = L(14, *Q14_L1), L(14, *Q14_L2)
    depth = series_depth(14, 5) + 6
    base_a, base_b = multiplicity_sequence(a, depth), multiplicity_sequence(b, depth)
    same = all(extend_w(base_a, w).values == extend_w(base_b, w).values for w in range(7))
    return same and not is_isometric(a, b), f"equal for W=0..6: {same}"


_add("extend-w-q14", "the q=14 pair stays isospectral and non-isometric in dimensions 9..15", _extended_q14)

# families

_FAMILIES = [
    ("q25-n10-case3", 25, 10, [Q25_L1, Q25_L2]),
    ("q25-n10-case4a", 25, 10, [(1, 2, 3, 4, 5, 6, 7, 8, 9, 10), (1, 2, 3, 4, 5, 6, 7, 8, 10, 11),
                                 (1, 2, 3, 4, 5, 6, 7, 10, 11, 12)]),
    ("q27-case1", 27, 11, [(1, 2, 4, 5, 6, 7, 9, 10, 11, 12, 13), (1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13),
                           (1, 2, 5, 6, 7, 8, 9, 10, 11, 12, 13)]),
    ("q27-case2", 27, 11, [(1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13), (1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13),
                           (1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13)]),
    ("q35-case1", 35, 15, [(1, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 15, 16, 17),
                           (1, 2, 4, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17)]),
    ("q35-case2a", 35, 15, [(1, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17),
                            (1, 3, 4, 5, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17)]),
    ("q35-case2b", 35, 15, [(1, 3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 14, 15, 16, 17),
                            (1, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17)]),
    ("q14-case1", 14, 5, [Q14_L1, Q14_L2]),
    ("q25-n9-eight", 25, 9, [(1, 2, 3, 4, 5, 6, 7, 8, 10), (1, 2, 3, 4, 5, 6, 7, 9, 10),
                             (1, 2, 3, 4, 5, 6, 8, 9, 10), (1, 2, 3, 4, 5, 7, 8, 9, 10),
                             (1, 2, 4, 5, 6, 7, 8, 9, 10), (1, 4, 5, 6, 7, 8, 9, 10, 12),
                             (1, 3, 5, 6, 7, 9, 10, 11, 12), (1, 2, 5, 6, 7, 8, 9, 10, 12)]),
    ("q25-n9-five", 25, 9, [(1, 2, 3, 4, 5, 6, 7, 8, 9), (1, 2, 3, 4, 5, 6, 7, 8, 11),
                            (1, 2, 3, 4, 5, 6, 7, 9, 12), (1, 3, 5, 6, 7, 8, 9, 11, 12),
                            (1, 2, 4, 5, 6, 7, 8, 9, 12)]),
]


def _family_check(q, n, tuples):
    def check():
        listed = {canonicalize(L(q, *t)) for t in tuples}
        if len(listed) != len(tuples):
            return False, f"only {len(listed)} distinct classes among {len(tuples)} listed tuples"
        found = [set(f.members) for f in find_families(q, n)]
        if listed not in found:
            return False, f"computed families: {[sorted(map(str, f)) for f in found]}"
        members = sorted(listed)
        for other in members[1:]:
            if not is_isospectral(members[0], other, "series", max_k=60):
                return False, f"series check failed for {other}"
        return True, f"family of {len(listed)}"
    return check


for _name, _q, _n, _tuples in _FAMILIES:
    _add(f"family-{_name}", f"{len(_tuples)} listed classes form one isospectral family (q={_q}, n={_n})",
         _family_check(_q, _n, _tuples))

for _q, _n in [(9, 2), (10, 3), (8, 2), (16, 6), (32, 14), (15, 5), (21, 8)]:
    _add(f"no-families-q{_q}-n{_n}", f"no isospectral non-isometric pair for q={_q}, n={_n}",
         lambda q=_q, n=_n: _equal([len(f) for f in find_families(q, n)], []))

# patterns and sufficiency

for _q, _pair, _exp in [
    (25, (5, 10), (("B1", "B1"), ("B1", "B1"))),
    (25, (10, 12), (("A", "B1"), ("A", "A"))),
    (14, (3, 6), (("A", "B"), ("A", "A"))),
]:
    _add(f"pattern-q{_q}-{_pair[0]}-{_pair[1]}", f"pattern of {_pair} mod {_q}",
         lambda q=_q, p=_pair, e=_exp: _equal((pattern(q, p).entries, pattern(q, p).sums), e))

for _q, _count, _bound in [(27, 7, 9), (15, 7, 11), (21, 9, 11), (35, 10, 11)]:
    _add(f"patterns-q{_q}", f"q={_q} realizes {_count} patterns (bound {_bound})",
         lambda q=_q, c=_count, b=_bound: _equal((realized_pattern_count(q), pattern_bound(q)), (c, b)))

for _q, _lhs, _rhs, _ok in [(33, 144, 144, True), (39, 114, 168, True), (35, 136, 120, False)]:
    _add(f"sufficiency-q{_q}", f"q={_q}: {_lhs} <= {_rhs} is {_ok}",
         lambda q=_q, l=_lhs, r=_rhs, ok=_ok: _equal(
             (sufficiency_check(q).lhs, sufficiency_check(q).rhs, sufficiency_check(q).satisfied), (l, r, ok)))

# singular sets: (d, number of fixed coordinates)

for _name, _q, _tup, _exp in [
    ("q25-manifold", 25, (1, 2, 3, 4, 6, 7, 8, 9, 11, 12), ()),
    ("q25-L1", 25, Q25_L1, ((5, 1),)),
    ("q25-L2", 25, Q25_L2, ((5, 1),)),
    ("q14-L1", 14, Q14_L1, ((2, 2), (7, 1))),
]:
    _add(f"singular-{_name}", f"singular strata of L({_q}: {_tup}) are {_exp}",
         lambda q=_q, t=_tup, e=_exp: _equal(tuple((s.d, s.count) for s in singular_signature(L(q, *t))), e))


def run_fixtures(pattern_: Optional[str] = None) -> List[FixtureResult]:
    """Run every fixture whose name matches the glob ``pattern_`` (all when ``None``)."""
    selected = [f for f in FIXTURES if pattern_ is None or fnmatch(f.name, pattern_)]
    if pattern_ is not None and not selected:
        raise KeyError(f"no fixture matches {pattern_!r}")
    return [f.run() for f in selected]
