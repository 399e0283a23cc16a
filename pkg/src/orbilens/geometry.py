"""Singular sets of orbifold lens spaces.

The element ``g^{q/d}`` of order ``d`` rotates coordinate ``s`` by
``2*pi*p_s/d``, so it fixes exactly the complex coordinates with ``d | p_s``.
Their unit sphere ``S^{2c-1}`` is the fixed set; its image in the quotient is
the stratum with isotropy ``<g^{q/d}>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from .classes import CanonicalClass, LensTuple
from .residues import divisors

__all__ = ["StratumRecord", "SingularSignature", "singular_signature"]


@dataclass(frozen=True, order=True)
class StratumRecord:
    d: int
    count: int

    @property
    def sphere_dim(self) -> int:
        return 2 * self.count - 1

    @property
    def isotropy_order(self) -> int:
        return self.d

    def generator_power(self, q: int) -> int:
        """Exponent ``e`` with isotropy group ``<g^e>``."""
        return q // self.d

    def as_triple(self) -> Tuple[int, int, str]:
        return (self.d, self.count, f"S^{self.sphere_dim}")


@dataclass(frozen=True)
class SingularSignature:
    q: int
    strata: Tuple[StratumRecord, ...]

    @property
    def is_manifold(self) -> bool:
        return not self.strata

    def __iter__(self):
        return iter(self.strata)

    def __len__(self) -> int:
        return len(self.strata)

    def __str__(self) -> str:
        if not self.strata:
            return "manifold"
        return ", ".join(
            f"S^{s.sphere_dim} with isotropy <g^{s.generator_power(self.q)}>" for s in self.strata
        )


def singular_signature(t: Union[LensTuple, CanonicalClass]) -> SingularSignature:
    """One record per divisor ``d > 1`` of ``q`` that fixes at least one coordinate."""
    t = t.tuple if isinstance(t, CanonicalClass) else t
    t.check()
    records: List[StratumRecord] = []
    for d in divisors(t.q)[1:]:
        count = sum(1 for p in t.entries if p % d == 0)
        if count:
            records.append(StratumRecord(d, count))
    assert all(r.d != t.q for r in records)
    return SingularSignature(t.q, tuple(records))
