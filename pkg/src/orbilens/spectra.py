"""Exact spectral data of lens spaces.

The Laplacian on ``L(q: p_1..p_n)`` has eigenvalues ``k(k + 2n - 2)`` with
multiplicity ``dim H^k_G = dim P^k_G - dim P^{k-2}_G``, where ``dim P^k_G``
counts degree-``k`` monomials in ``z_s, conj(z_s)`` fixed by the generator,
i.e. exponent vectors with ``sum((i_s - j_s) * p_s) == 0 mod q``.

For ``q = p**m`` and ``q = p1 * p2`` the generating function of these
multiplicities is fixed by ``n`` and the character polynomials of the
complementary tuple, one per unit/stratum set; that tuple of polynomials is the
:class:`SpectralInvariant` used to group lens spaces into isospectral families.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .classes import CanonicalClass, LensTuple, complement_w
from .residues import ResidueSystem, build_system

__all__ = [
    "CharacterPolynomial",
    "SpectralInvariant",
    "MultiplicitySequence",
    "IsospectralityCertificate",
    "expand_product",
    "character_polynomial",
    "spectral_invariant",
    "invariant_monomial_counts",
    "multiplicity_sequence",
    "multiplicity",
    "spectrum",
    "extend_w",
    "is_isospectral",
    "series_depth",
]

GroupRingElement = Dict[int, int]


@dataclass(frozen=True)
class CharacterPolynomial:
    """``c_0 z^{2k} + c_1 z^{2k-1} + ... + c_{2k}`` summed over one residue set."""

    coefficients: Tuple[int, ...]
    source: str

    def __post_init__(self):
        c = self.coefficients
        if c != c[::-1]:
            raise ValueError(f"character polynomial over {self.source} is not palindromic: {c}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self) -> str:
        terms = []
        deg = self.degree
        for i, c in enumerate(self.coefficients):
            if c == 0:
                continue
            power = deg - i
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("z" if power == 1 else f"z^{power}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


@lru_cache(maxsize=4096)
def expand_product(q: int, entries: Tuple[int, ...]) -> Tuple[GroupRingElement, ...]:
    """Expand ``prod_i (z^2 - (e_{q_i} + e_{-q_i}) z + 1)`` over the group ring of ``Z/q``.

    Coefficients are returned from ``z^{2k}`` down to ``z^0``; each is a
    ``{residue: multiplicity}`` dict.  Callers must not mutate the result.
    """
    poly: List[GroupRingElement] = [{0: 1}]
    for x in entries:
        middle: GroupRingElement = defaultdict(int)
        middle[x % q] -= 1
        middle[(-x) % q] -= 1  # same key when x == -x mod q
        factor = ({0: 1}, middle, {0: 1})
        out: List[GroupRingElement] = [defaultdict(int) for _ in range(len(poly) + 2)]
        for i, a in enumerate(poly):
            for j, b in enumerate(factor):
                slot = out[i + j]
                for ra, va in a.items():
                    for rb, vb in b.items():
                        slot[(ra + rb) % q] += va * vb
        poly = [{r: v for r, v in c.items() if v} for c in out]
    return tuple(poly)


def character_polynomial(
    system: ResidueSystem, entries: Sequence[int], label: str
) -> CharacterPolynomial:
    """``sum_{l in S} prod_i (z - gamma^{q_i l})(z - gamma^{-q_i l})`` with exact coefficients."""
    expansion = expand_product(system.q, tuple(entries))
    coeffs = tuple(
        sum(v * system.character_sum(label, r) for r, v in c.items()) for c in expansion
    )
    assert coeffs[0] == system.size(label), (coeffs, label)
    return CharacterPolynomial(coeffs, label)


def series_depth(q: int, n: int) -> int:
    """Largest index that must agree for two generating functions to coincide.

    Multiplying a generating function by ``(1 - z^q)^{2n}`` leaves a polynomial
    of degree at most ``2n(q-1) + 2``; that factor has constant term 1.
    """
    return 2 * n * (q - 1) + 2


@dataclass(frozen=True)
class SpectralInvariant:
    """Complete spectral data for one lens space.

    ``kind`` is the residue-system shape.  For ``prime-power`` and ``semiprime``
    the data is the character polynomials of the complement over ``A`` and each
    stratum; for ``general`` (or an unsupported ``n``) it is the multiplicity
    prefix up to :func:`series_depth`.
    """

    q: int
    n: int
    kind: str
    polynomials: Tuple[CharacterPolynomial, ...] = ()
    multiplicities: Tuple[int, ...] = ()

    def named(self) -> List[Tuple[str, CharacterPolynomial]]:
        return [(_poly_name(self.kind, p.source), p) for p in self.polynomials]


def _poly_name(kind: str, label: str) -> str:
    if label == "A":
        return "psi"
    if kind == "prime-power":
        return f"alpha({label[1:]})"
    return {"B": "alpha", "C": "beta"}.get(label, label)


def spectral_invariant(t: Union[LensTuple, CanonicalClass]) -> SpectralInvariant:
    t = t.tuple if isinstance(t, CanonicalClass) else t
    t.check()
    system = build_system(t.q)
    if system.shape == "general" or not 2 <= t.n <= system.q0 - 2:
        values = multiplicity_sequence(t, series_depth(t.q, t.n)).values
        return SpectralInvariant(t.q, t.n, "general", multiplicities=values)
    comp = complement_w(t).entries
    polys = tuple(character_polynomial(system, comp, label) for label in system.labels)
    return SpectralInvariant(t.q, t.n, system.shape, polynomials=polys)


def invariant_monomial_counts(q: int, weights: Sequence[int], max_degree: int) -> List[int]:
    """Count exponent vectors with weighted sum ``== 0 mod q``, per total degree.

    Entry ``d`` of the result is the number of ``(a_1, ..., a_V) >= 0`` with
    ``sum(a) == d`` and ``sum(a_i * weights[i]) % q == 0``.  Each variable
    multiplies the table by ``1 / (1 - e_w z)``; after rotating row ``d`` by
    ``d * w`` that is a cumulative sum over degrees.
    """
    if max_degree < 0:
        return []
    rows = np.arange(max_degree + 1)[:, None]
    cols = np.arange(q)[None, :]
    table = np.zeros((max_degree + 1, q), dtype=object)
    table[:, :] = 0
    table[0, 0] = 1
    for w in weights:
        w %= q
        if w == 0:
            table = np.cumsum(table, axis=0)
            continue
        skewed = table[rows, (cols + rows * w) % q]
        skewed = np.cumsum(skewed, axis=0)
        table = skewed[rows, (cols - rows * w) % q]
    return [int(x) for x in table[:, 0]]


@dataclass(frozen=True)
class MultiplicitySequence:
    """``values[k]`` is the multiplicity of the eigenvalue ``k(k + 2n + W - 2)``."""

    q: int
    n: int
    W: int
    values: Tuple[int, ...]

    def eigenvalue(self, k: int) -> int:
        return k * (k + 2 * self.n + self.W - 2)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]


_cache_lock = threading.Lock()
_count_cache: Dict[Tuple[int, Tuple[int, ...], int], List[int]] = {}


def _monomial_counts(t: LensTuple, max_degree: int, W: int) -> List[int]:
    key = (t.q, t.entries, W)
    with _cache_lock:
        cached = _count_cache.get(key)
    if cached is not None and len(cached) > max_degree:
        return cached[: max_degree + 1]
    weights = [w for p in t.entries for w in (p, -p)] + [0] * W
    counts = invariant_monomial_counts(t.q, weights, max_degree)
    with _cache_lock:
        current = _count_cache.get(key)
        if current is None or len(current) < len(counts):
            _count_cache[key] = counts
    return counts


def multiplicity_sequence(
    t: Union[LensTuple, CanonicalClass], max_k: int, W: int = 0
) -> MultiplicitySequence:
    """Multiplicities ``m_0 .. m_{max_k}`` by exact lattice counting.

    Repeated or zero entries are allowed; ``W`` appends that many fixed real
    coordinates to the sphere.
    """
    t = t.tuple if isinstance(t, CanonicalClass) else t
    if W < 0:
        raise ValueError(f"W must be >= 0, got {W}")
    dims = _monomial_counts(t, max_k, W)
    values = tuple(dims[k] - (dims[k - 2] if k >= 2 else 0) for k in range(max_k + 1))
    return MultiplicitySequence(t.q, t.n, W, values)


def multiplicity(t: Union[LensTuple, CanonicalClass], k: int, W: int = 0) -> int:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return multiplicity_sequence(t, k, W).values[k]


def spectrum(
    t: Union[LensTuple, CanonicalClass], max_k: int, W: int = 0
) -> List[Tuple[int, int]]:
    """``(eigenvalue, multiplicity)`` pairs for ``k <= max_k`` with nonzero multiplicity."""
    if max_k < 0:
        raise ValueError(f"max_k must be >= 0, got {max_k}")
    seq = multiplicity_sequence(t, max_k, W)
    return [(seq.eigenvalue(k), m) for k, m in enumerate(seq.values) if m > 0]


def extend_w(m: MultiplicitySequence, W: int) -> MultiplicitySequence:
    """Append ``W`` fixed coordinates: divide the generating function by ``(1 - z)^W``."""
    if W < 0:
        raise ValueError(f"W must be >= 0, got {W}")
    if W == 0:
        return m
    kernel = [comb(j + W - 1, W - 1) for j in range(len(m.values))]
    values = tuple(
        sum(kernel[k - a] * m.values[a] for a in range(k + 1)) for k in range(len(m.values))
    )
    return MultiplicitySequence(m.q, m.n, m.W + W, values)


@dataclass(frozen=True)
class IsospectralityCertificate:
    isospectral: bool
    method: str
    depth: Optional[int] = None
    first_difference: Optional[Union[int, str]] = None
    reason: str = ""
    compared: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.isospectral


def is_isospectral(
    a: Union[LensTuple, CanonicalClass],
    b: Union[LensTuple, CanonicalClass],
    method: str = "invariant",
    max_k: Optional[int] = None,
) -> IsospectralityCertificate:
    """Decide isospectrality and explain the answer.

    ``invariant`` compares :class:`SpectralInvariant` values; ``series``
    compares multiplicities up to ``max_k`` (default :func:`series_depth`, which
    certifies equality of the whole spectrum).
    """
    a = a.tuple if isinstance(a, CanonicalClass) else a
    b = b.tuple if isinstance(b, CanonicalClass) else b
    if a.q != b.q:
        return IsospectralityCertificate(False, method, reason="different group orders")
    if a.n != b.n:
        return IsospectralityCertificate(False, method, reason="different dimensions")

    if method == "invariant":
        ia, ib = spectral_invariant(a), spectral_invariant(b)
        compared = {"a": ia, "b": ib}
        if ia.kind == "general":
            for k, (x, y) in enumerate(zip(ia.multiplicities, ib.multiplicities)):
                if x != y:
                    return IsospectralityCertificate(False, method, len(ia.multiplicities) - 1, k, compared=compared)
            return IsospectralityCertificate(True, method, len(ia.multiplicities) - 1, compared=compared)
        for (name, pa), (_, pb) in zip(ia.named(), ib.named()):
            if pa != pb:
                return IsospectralityCertificate(False, method, first_difference=name, compared=compared)
        return IsospectralityCertificate(True, method, compared=compared)

    if method == "series":
        depth = series_depth(a.q, a.n) if max_k is None else max_k
        sa = multiplicity_sequence(a, depth).values
        sb = multiplicity_sequence(b, depth).values
        for k, (x, y) in enumerate(zip(sa, sb)):
            if x != y:
                return IsospectralityCertificate(
                    False, method, depth, k, compared={"a": sa[k], "b": sb[k]}
                )
        return IsospectralityCertificate(True, method, depth)

    raise ValueError(f"unknown method {method!r}; use 'invariant' or 'series'")
