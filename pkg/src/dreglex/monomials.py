"""Monomials over a fixed ground ring, single-degree monomial sets, lex order,
strong stability, and the max-index decompositions that drive every lexsegment
construction in this library.

Conventions, fixed once and used everywhere:

* variables are 1-based (``x1 > x2 > ... > xn`` in the lex order);
* ``max_index(1) = 0`` for the unit monomial;
* canonical iteration order of a monomial set is lex-descending, so the
  "first N monomials" of a degree are always a lexsegment prefix.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator

from .errors import CapExceeded, DegreeMismatch, DomainError, FormatError, RingMismatch

DEFAULT_ENUMERATION_CAP = 10**6


@dataclass(frozen=True)
class GroundRing:
    """A standard graded polynomial ring, reduced to what the combinatorics
    needs: the number of variables.  No field is ever materialized."""

    num_vars: int

    def __post_init__(self) -> None:
        if self.num_vars < 1:
            raise DomainError(f"ground ring needs at least one variable, got {self.num_vars}")

    def one(self) -> Monomial:
        return Monomial((0,) * self.num_vars)

    def variable(self, i: int) -> Monomial:
        if not 1 <= i <= self.num_vars:
            raise DomainError(f"variable index {i} out of range 1..{self.num_vars}")
        e = [0] * self.num_vars
        e[i - 1] = 1
        return Monomial(tuple(e))

    def monomial(self, exponents: Iterable[int]) -> Monomial:
        m = Monomial(tuple(exponents))
        if m.num_vars != self.num_vars:
            raise RingMismatch(f"expected {self.num_vars} exponents, got {m.num_vars}")
        return m


class Monomial:
    """A monomial as a dense exponent vector.  Immutable and hashable; the
    ambient ring is determined by the vector length."""

    __slots__ = ("exponents",)

    def __init__(self, exponents: tuple[int, ...]):
        if any(e < 0 for e in exponents):
            raise DomainError(f"negative exponent in {exponents}")
        object.__setattr__(self, "exponents", tuple(exponents))

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def ring(self) -> GroundRing:
        return GroundRing(len(self.exponents))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def max_index(self) -> int:
        """Largest i with a positive exponent; 0 for the unit monomial."""
        for i in range(len(self.exponents) - 1, -1, -1):
            if self.exponents[i]:
                return i + 1
        return 0

    @property
    def min_index(self) -> int:
        """Smallest i with a positive exponent; 0 for the unit monomial."""
        for i, e in enumerate(self.exponents):
            if e:
                return i + 1
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, e in enumerate(self.exponents) if e)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def is_one(self) -> bool:
        return not any(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        _same_ring(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: Monomial) -> bool:
        _same_ring(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __floordiv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise DomainError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def times_var(self, i: int) -> Monomial:
        e = list(self.exponents)
        e[i - 1] += 1
        return Monomial(tuple(e))

    def div_var(self, i: int) -> Monomial:
        e = list(self.exponents)
        if e[i - 1] == 0:
            raise DomainError(f"x{i} does not divide {self}")
        e[i - 1] -= 1
        return Monomial(tuple(e))

    def exchange(self, p: int, q: int) -> Monomial:
        """The exchange move x_q -> x_p, i.e. self * x_p / x_q."""
        return self.div_var(q).times_var(p)

    def lcm(self, other: Monomial) -> Monomial:
        _same_ring(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self) -> int:
        return hash(self.exponents)

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r}, n={self.num_vars})"


def _same_ring(u: Monomial, v: Monomial) -> None:
    if u.num_vars != v.num_vars:
        raise RingMismatch(f"monomials over {u.num_vars} and {v.num_vars} variables")


def lex_compare(u: Monomial, v: Monomial) -> int:
    """Degree-lex comparison restricted to a single degree: +1 if u > v,
    0 if equal, -1 if u < v.  Rejects ring or degree mismatches."""
    _same_ring(u, v)
    if u.degree != v.degree:
        raise DegreeMismatch(f"degrees {u.degree} and {v.degree} differ")
    if u.exponents > v.exponents:
        return 1
    if u.exponents < v.exponents:
        return -1
    return 0


def count_monomials(num_vars: int, degree: int) -> int:
    """Number of monomials of the given degree in num_vars variables."""
    if degree < 0:
        return 0
    return comb(num_vars + degree - 1, degree)


def iter_degree_desc(num_vars: int, degree: int) -> Iterator[tuple[int, ...]]:
    """All exponent vectors of the given degree, lex-descending."""
    if num_vars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in iter_degree_desc(num_vars - 1, degree - e):
            yield (e,) + rest


class MonomialSet:
    """A finite, duplicate-free set of monomials sharing one degree.

    Iteration order is lex-descending (canonical)."""

    __slots__ = ("ring", "degree", "_members", "_member_set")

    def __init__(self, ring: GroundRing, degree: int, monomials: Iterable[Monomial] = ()):
        if degree < 0:
            raise DomainError(f"negative degree {degree}")
        members = set()
        for m in monomials:
            if m.num_vars != ring.num_vars:
                raise RingMismatch(f"monomial over {m.num_vars} variables in ring with {ring.num_vars}")
            if m.degree != degree:
                raise DegreeMismatch(f"{m} has degree {m.degree}, set declares {degree}")
            members.add(m)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_members", tuple(sorted(members, key=lambda m: m.exponents, reverse=True)))
        object.__setattr__(self, "_member_set", frozenset(members))

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("MonomialSet is immutable")

    @property
    def members(self) -> tuple[Monomial, ...]:
        return self._members

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self._members)

    def __len__(self) -> int:
        return len(self._members)

    def __contains__(self, m: Monomial) -> bool:
        return m in self._member_set

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialSet)
            and self.ring == other.ring
            and self.degree == other.degree
            and self._member_set == other._member_set
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.degree, self._member_set))

    def __repr__(self) -> str:
        body = ", ".join(format_monomial(m) for m in self._members)
        return f"MonomialSet(d={self.degree}, {{{body}}})"

    def union(self, other: MonomialSet) -> MonomialSet:
        if self.ring != other.ring or self.degree != other.degree:
            raise DomainError("union requires matching ring and degree")
        return MonomialSet(self.ring, self.degree, self._members + other._members)


def enumerate_degree(ring: GroundRing, degree: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """All monomials of the given degree, lex-descending; errors above the cap
    so callers can switch to counting formulas."""
    total = count_monomials(ring.num_vars, degree)
    if total > cap:
        raise CapExceeded(f"degree {degree} in {ring.num_vars} variables has {total} monomials > cap {cap}")
    return MonomialSet(ring, degree, (Monomial(e) for e in iter_degree_desc(ring.num_vars, degree)))


def lex_prefix(ring: GroundRing, degree: int, size: int, max_var: int | None = None) -> MonomialSet:
    """The lexsegment of the given size in degree ``degree``, restricted to the
    first ``max_var`` variables (default: all), embedded in ``ring``."""
    k = ring.num_vars if max_var is None else max_var
    if not 0 <= k <= ring.num_vars:
        raise DomainError(f"max_var {k} out of range 0..{ring.num_vars}")
    if size < 0:
        raise DomainError(f"negative prefix size {size}")
    if size == 0:
        return MonomialSet(ring, degree)
    if k == 0 or size > count_monomials(k, degree):
        raise DomainError(
            f"no lexsegment of size {size} in degree {degree} over {k} variables"
        )
    pad = (0,) * (ring.num_vars - k)
    picked = (
        Monomial(e + pad)
        for e in itertools.islice(iter_degree_desc(k, degree), size)
    )
    return MonomialSet(ring, degree, picked)


def is_lexsegment_set(V: MonomialSet, max_var: int | None = None) -> bool:
    """True iff V is an initial lex segment of its degree within the first
    ``max_var`` variables (default: the whole ring)."""
    k = V.ring.num_vars if max_var is None else max_var
    if any(m.max_index > k for m in V):
        return False
    if len(V) == 0:
        return True
    prefix = itertools.islice(iter_degree_desc(k, V.degree), len(V))
    pad = (0,) * (V.ring.num_vars - k)
    return all(Monomial(e + pad) in V for e in prefix)


def is_strongly_stable(V: MonomialSet) -> bool:
    """True iff every exchange move x_q -> x_p (p < q) on every member stays in V."""
    for m in V:
        for q in m.support:
            for p in range(1, q):
                if m.exchange(p, q) not in V:
                    return False
    return True


def strongly_stable_closure(V: MonomialSet) -> MonomialSet:
    """Smallest strongly stable superset of V in the same degree."""
    seen = set(V.members)
    frontier = list(V.members)
    while frontier:
        m = frontier.pop()
        for q in m.support:
            for p in range(1, q):
                w = m.exchange(p, q)
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return MonomialSet(V.ring, V.degree, seen)


def dk_decompose(V: MonomialSet) -> tuple[MonomialSet, ...]:
    """The decomposition by largest variable: entry k-1 holds
    { u / x_k : u in V, max(u) = k }, a set of degree d-1 monomials supported
    on x1..xk.  The union of x_k * D_k reconstructs V exactly."""
    if V.degree == 0 and len(V) > 0:
        raise DomainError("degree-0 sets have no max-index decomposition")
    buckets: list[list[Monomial]] = [[] for _ in range(V.ring.num_vars)]
    for m in V:
        k = m.max_index
        buckets[k - 1].append(m.div_var(k))
    d = max(V.degree - 1, 0)
    return tuple(MonomialSet(V.ring, d, b) for b in buckets)


def m_le_k(V: MonomialSet, k: int) -> MonomialSet:
    """The filtered subset { u in V : max(u) <= k }."""
    if not 1 <= k <= V.ring.num_vars:
        raise DomainError(f"k={k} out of range 1..{V.ring.num_vars}")
    return MonomialSet(V.ring, V.degree, (m for m in V if m.max_index <= k))


def restrict(m: Monomial, num_vars: int) -> Monomial:
    """Reinterpret m in the subring on the first num_vars variables."""
    if m.max_index > num_vars:
        raise RingMismatch(f"{m} is not supported on x1..x{num_vars}")
    return Monomial(m.exponents[:num_vars])


def extend(m: Monomial, num_vars: int) -> Monomial:
    """Embed m into a ring with more variables."""
    if num_vars < m.num_vars:
        raise RingMismatch(f"cannot shrink {m.num_vars} variables to {num_vars}")
    return Monomial(m.exponents + (0,) * (num_vars - m.num_vars))


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, ring: GroundRing) -> Monomial:
    """Parse the bit-exact monomial syntax: ``x<i>`` factors joined by ``*``,
    ``^`` for exponents, ``1`` for the unit monomial.  Whitespace is ignored."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise FormatError("empty monomial")
    if stripped == "1":
        return ring.one()
    exps = [0] * ring.num_vars
    for factor in stripped.split("*"):
        m = _FACTOR_RE.match(factor)
        if not m:
            raise FormatError(f"bad monomial factor {factor!r} in {text!r}")
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if not 1 <= i <= ring.num_vars:
            raise FormatError(f"variable x{i} outside ring with {ring.num_vars} variables")
        if e < 1:
            raise FormatError(f"exponent must be positive in {factor!r}")
        exps[i - 1] += e
    return Monomial(tuple(exps))


def format_monomial(m: Monomial) -> str:
    """Inverse of parse_monomial, canonical form (ascending variable index)."""
    parts = []
    for i, e in enumerate(m.exponents, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"
