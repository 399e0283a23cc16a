"""Residue arithmetic modulo q.

A :class:`ResidueSystem` partitions the nonzero residues mod ``q`` into the
unit set ``A`` and the non-unit strata.  Every stratum is the set of residues
with a fixed ``gcd(x, q)``, so sums of roots of unity over a stratum are
rational integers and can be evaluated exactly with a Moebius inversion over
divisors of ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import gcd
from typing import Dict, List, Tuple

__all__ = [
    "ResidueSystem",
    "build_system",
    "character_sum",
    "divisors",
    "factorize",
    "fold",
    "is_prime",
    "q_zero",
    "ZERO",
]

ZERO = "0"  # stratum label of the zero residue


def fold(x: int, q: int) -> int:
    """Return the representative of ``{x, -x}`` mod ``q`` in ``[0, q // 2]``."""
    if q < 2:
        raise ValueError(f"modulus must be >= 2, got {q}")
    r = x % q
    return min(r, q - r)


def q_zero(q: int) -> int:
    """Largest folded residue: ``(q - 1) // 2`` for odd ``q``, ``q // 2`` for even."""
    return q // 2


def factorize(n: int) -> Dict[int, int]:
    """Prime factorization by trial division."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def divisors(n: int) -> List[int]:
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


@dataclass(frozen=True)
class ResidueSystem:
    """Units and non-unit strata of ``Z/qZ``.

    ``strata`` maps a label to the sorted residues of that stratum.  Labels are
    ``B1 .. B{m-1}`` for ``q = p**m``, ``B``/``C`` for ``q = p1 * p2`` with
    ``p1 < p2`` (``B`` holds the multiples of ``p1``), and ``D{g}`` (exact gcd
    ``g``) otherwise.
    """

    q: int
    shape: str
    primes: Tuple[int, ...]
    exponent: int
    units: Tuple[int, ...]
    strata: Dict[str, Tuple[int, ...]] = field(compare=False)
    label_gcd: Dict[str, int] = field(compare=False, repr=False)

    @property
    def q0(self) -> int:
        return q_zero(self.q)

    @property
    def labels(self) -> Tuple[str, ...]:
        """``"A"`` followed by the stratum labels, in increasing gcd order."""
        return ("A",) + tuple(self.strata)

    @property
    def non_units(self) -> Tuple[int, ...]:
        return tuple(sorted(x for s in self.strata.values() for x in s))

    @property
    def r(self) -> int:
        """Number of non-units in ``[1, q0]``."""
        return sum(1 for x in self.non_units if x <= self.q0)

    def members(self, label: str) -> Tuple[int, ...]:
        if label == "A":
            return self.units
        try:
            return self.strata[label]
        except KeyError:
            raise KeyError(f"q={self.q} has no set {label!r}; known: {self.labels}") from None

    def size(self, label: str) -> int:
        return len(self.members(label))

    def stratum(self, x: int) -> str:
        """Label of the set containing residue ``x`` (``"0"`` for zero)."""
        g = gcd(x % self.q, self.q)
        if g == self.q:
            return ZERO
        if g == 1:
            return "A"
        return self._gcd_label[g]

    @cached_property
    def _gcd_label(self) -> Dict[int, str]:
        return {g: lab for lab, g in self.label_gcd.items()}

    def character_sum(self, label: str, m: int) -> int:
        """Exact value of ``sum(gamma**(m*l) for l in S)``, ``gamma = exp(2*pi*i/q)``."""
        g = 1 if label == "A" else self.label_gcd.get(label)
        if g is None:
            if label == ZERO:
                return 1
            raise KeyError(f"q={self.q} has no set {label!r}")
        return _exact_gcd_sum(self.q, g, m % self.q)


def _multiple_sum(q: int, d: int, m: int) -> int:
    # sum of gamma**(m*l) over multiples l of d in [1, q]
    period = q // d
    return period if m % period == 0 else 0


@lru_cache(maxsize=None)
def _exact_gcd_sum(q: int, g: int, m: int) -> int:
    # residues l in [1, q] with gcd(l, q) == g, by inclusion-exclusion over multiples
    return sum(
        _mobius(d // g) * _multiple_sum(q, d, m) for d in divisors(q) if d % g == 0
    )


@lru_cache(maxsize=None)
def build_system(q: int) -> ResidueSystem:
    """Classify ``q`` and materialize its unit set and strata.

    Raises ``ValueError`` for ``q < 7`` or prime ``q``.
    """
    if q < 7:
        raise ValueError(f"q must be at least 7 (so that q0 >= 4), got {q}")
    if is_prime(q):
        raise ValueError(f"q={q} is prime; lens spaces here need composite q")
    fac = factorize(q)
    primes = tuple(sorted(fac))
    residues = range(1, q)
    units = tuple(x for x in residues if gcd(x, q) == 1)

    if len(primes) == 1:
        p, m = primes[0], fac[primes[0]]
        shape = "prime-power"
        label_gcd = {f"B{j}": p**j for j in range(1, m)}
    elif len(primes) == 2 and all(e == 1 for e in fac.values()):
        shape, m = "semiprime", 1
        label_gcd = {"B": primes[0], "C": primes[1]}
    else:
        shape, m = "general", 1
        label_gcd = {f"D{g}": g for g in divisors(q)[1:-1]}

    strata = {
        lab: tuple(x for x in residues if gcd(x, q) == g) for lab, g in label_gcd.items()
    }
    return ResidueSystem(
        q=q,
        shape=shape,
        primes=primes,
        exponent=m,
        units=units,
        strata=strata,
        label_gcd=label_gcd,
    )


def character_sum(system: ResidueSystem, label: str, m: int) -> int:
    """Module-level alias of :meth:`ResidueSystem.character_sum`."""
    return system.character_sum(label, m)
