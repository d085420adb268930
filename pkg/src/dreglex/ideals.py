"""Monomial ideals: minimal generators, exact Hilbert functions, degree slices
and truncations, structural predicates, and the two classical lexifications
(Macaulay's Lex and Kruskal-Katona's SqLex).

Hilbert counting strategy, in order of preference:

1. stable ideals: the generator decomposition
   H(I, t) = sum_u C(n - max(u) + t - deg(u), n - max(u));
2. inclusion-exclusion over generator-subset lcms (up to 20 generators,
   cached as a signed degree histogram);
3. direct slice enumeration under the cap;
otherwise the query fails with CapExceeded rather than guessing.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import CapExceeded, DomainError, FormatError, RingMismatch
from .macaulay import binom, up
from .monomials import (
    DEFAULT_ENUMERATION_CAP,
    GroundRing,
    Monomial,
    MonomialSet,
    count_monomials,
    enumerate_degree,
    format_monomial,
    is_lexsegment_set,
    lex_prefix,
    parse_monomial,
)

IE_MAX_GENERATORS = 20


def minimalize(ring: GroundRing, gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Divisibility-minimal subset of a generating set; idempotent."""
    unique = sorted(set(gens), key=lambda m: (m.degree, tuple(-e for e in m.exponents)))
    kept: list[Monomial] = []
    for m in unique:
        if m.num_vars != ring.num_vars:
            raise RingMismatch(f"generator over {m.num_vars} variables in ring with {ring.num_vars}")
        if not any(g.divides(m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """A monomial ideal kept in canonical form: a minimal generating set,
    sorted by degree and lex-descending within each degree.

    The zero ideal has no generators; the unit ideal is generated by 1 and is
    rejected by the operations whose mathematics assumes a proper ideal.
    """

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: GroundRing, gens: Iterable[Monomial] = ()):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", minimalize(ring, gens))
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("MonomialIdeal is immutable")

    @classmethod
    def zero(cls, ring: GroundRing) -> MonomialIdeal:
        return cls(ring)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(g.is_one for g in self.gens)

    @property
    def is_squarefree(self) -> bool:
        return all(g.is_squarefree for g in self.gens)

    @property
    def max_gen_degree(self) -> int:
        if self.is_zero:
            raise DomainError("the zero ideal has no generators")
        return max(g.degree for g in self.gens)

    @property
    def min_gen_degree(self) -> int:
        if self.is_zero:
            raise DomainError("the zero ideal has no generators")
        return min(g.degree for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        if m.num_vars != self.ring.num_vars:
            raise RingMismatch("monomial from a different ring")
        me = m.exponents
        for g in self.gens:
            ge = g.exponents
            if all(a <= b for a, b in zip(ge, me)):
                return True
        return False

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        if self.ring != other.ring:
            raise RingMismatch("cannot add ideals over different rings")
        return MonomialIdeal(self.ring, self.gens + other.gens)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MonomialIdeal)
            and self.ring == other.ring
            and self.gens == other.gens
        )

    def __hash__(self) -> int:
        return hash((self.ring, self.gens))

    def __repr__(self) -> str:
        body = ", ".join(format_monomial(g) for g in self.gens)
        return f"MonomialIdeal(n={self.ring.num_vars}, ({body}))"

    # -- slices and counting -------------------------------------------------

    def degree_slice(self, t: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
        """All degree-t members, lex-descending; errors above the cap."""
        if t < 0:
            raise DomainError(f"negative degree {t}")
        candidates = enumerate_degree(self.ring, t, cap)
        return MonomialSet(self.ring, t, (m for m in candidates if self.contains(m)))

    def hilbert(self, t: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
        """dim of the degree-t component of the ideal."""
        if t < 0:
            raise DomainError(f"negative degree {t}")
        if self.is_zero:
            return 0
        if self.is_unit:
            return count_monomials(self.ring.num_vars, t)
        n = self.ring.num_vars
        if self._is_stable_quick():
            return sum(
                binom(n - g.max_index + t - g.degree, n - g.max_index) for g in self.gens
            )
        hist = self._ie_histogram()
        if hist is not None:
            return sum(c * binom(n - 1 + t - deg, n - 1) for deg, c in hist.items())
        return len(self.degree_slice(t, cap))

    def hilbert_quotient(self, t: int, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
        """dim of the degree-t component of the quotient ring."""
        return count_monomials(self.ring.num_vars, t) - self.hilbert(t, cap)

    def _ie_histogram(self) -> dict[int, int] | None:
        """Signed count of generator-subset lcm degrees, or None when the
        generator count makes inclusion-exclusion unreasonable."""
        if "ie" in self._cache:
            return self._cache["ie"]
        if len(self.gens) > IE_MAX_GENERATORS:
            self._cache["ie"] = None
            return None
        hist: dict[int, int] = {}
        exps = [g.exponents for g in self.gens]
        n = self.ring.num_vars

        def walk(idx: int, current: tuple[int, ...] | None, sign: int) -> None:
            if idx == len(exps):
                if current is not None:
                    deg = sum(current)
                    hist[deg] = hist.get(deg, 0) + sign
                return
            walk(idx + 1, current, sign)
            g = exps[idx]
            nxt = g if current is None else tuple(max(a, b) for a, b in zip(current, g))
            walk(idx + 1, nxt, -sign)

        walk(0, None, -1)
        hist = {d: c for d, c in hist.items() if c}
        self._cache["ie"] = hist
        return hist

    # -- structural predicates -----------------------------------------------

    def _check_slices(self, closed_under, cap: int) -> bool:
        """Degreewise closure check up to the max generator degree; the
        closure conditions propagate to all higher degrees for monomial ideals
        generated below, so this is sufficient."""
        if self.is_zero:
            return True
        if self.is_unit:
            return True
        for t in range(self.min_gen_degree, self.max_gen_degree + 1):
            members = self.degree_slice(t, cap)
            for m in members:
                if not closed_under(m, members):
                    return False
        return True

    def is_stable(self, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
        """Closure under the single exchange replacing the largest variable."""
        if "stable" in self._cache:
            return self._cache["stable"]

        def closed(m: Monomial, members: MonomialSet) -> bool:
            q = m.max_index
            return all(m.exchange(p, q) in members for p in range(1, q))

        result = self._check_slices(closed, cap)
        self._cache["stable"] = result
        return result

    def is_strongly_stable(self, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
        """Closure under every exchange x_q -> x_p with p < q."""
        if "strongly_stable" in self._cache:
            return self._cache["strongly_stable"]

        def closed(m: Monomial, members: MonomialSet) -> bool:
            return all(
                m.exchange(p, q) in members for q in m.support for p in range(1, q)
            )

        result = self._check_slices(closed, cap)
        self._cache["strongly_stable"] = result
        if result:
            self._cache["stable"] = True
        return result

    def is_lexsegment(self, through_degree: int | None = None, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
        """True iff every degree slice up to the max generator degree (or the
        supplied degree) is an initial lex segment."""
        if self.is_zero or self.is_unit:
            return True
        limit = self.max_gen_degree if through_degree is None else through_degree
        return all(
            is_lexsegment_set(self.degree_slice(t, cap)) for t in range(1, limit + 1)
        )

    def _is_stable_quick(self) -> bool:
        """Stability as used to pick the fast Hilbert path.  Falls back to
        False (a slower counting path) if the check would exceed the cap; the
        public predicate stays undecided rather than inheriting that False."""
        if "stable" in self._cache:
            return self._cache["stable"]
        if self._cache.get("stable_capped"):
            return False
        try:
            return self.is_stable()
        except CapExceeded:
            self._cache["stable_capped"] = True
            return False

    # -- truncations -----------------------------------------------------------

    def truncate_geq(self, k: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
        """The ideal generated by all members of degree >= k."""
        if k < 0:
            raise DomainError(f"negative degree {k}")
        if self.is_zero:
            return self
        low = [g for g in self.gens if g.degree > k]
        return MonomialIdeal(self.ring, tuple(self.degree_slice(k, cap)) + tuple(low))

    def truncate_leq(self, k: int) -> MonomialIdeal:
        """The ideal generated by the generators of degree <= k."""
        if k < 0:
            raise DomainError(f"negative degree {k}")
        return MonomialIdeal(self.ring, tuple(g for g in self.gens if g.degree <= k))

    # -- squarefree slices -----------------------------------------------------

    def squarefree_slice(self, t: int) -> tuple[Monomial, ...]:
        """The squarefree degree-t members, lex-descending."""
        n = self.ring.num_vars
        if t < 0 or t > n:
            return ()
        out = []
        for supp in itertools.combinations(range(n), t):
            e = [0] * n
            for i in supp:
                e[i] = 1
            m = Monomial(tuple(e))
            if self.contains(m):
                out.append(m)
        out.sort(key=lambda m: m.exponents, reverse=True)
        return tuple(out)

    def is_squarefree_strongly_stable(self, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
        """Closure of the squarefree members under the squarefree exchange
        x_q -> x_p (p < q, p outside the support), checked degreewise up to the
        max generator degree."""
        if "sq_strongly_stable" in self._cache:
            return self._cache["sq_strongly_stable"]
        result = self._sq_strongly_stable_scan()
        self._cache["sq_strongly_stable"] = result
        return result

    def _sq_strongly_stable_scan(self) -> bool:
        if not self.is_squarefree:
            return False
        if self.is_zero or self.is_unit:
            return True
        for t in range(self.min_gen_degree, self.max_gen_degree + 1):
            members = set(self.squarefree_slice(t))
            for m in members:
                supp = set(m.support)
                for q in supp:
                    for p in range(1, q):
                        if p not in supp and m.exchange(p, q) not in members:
                            return False
        return True


# -- lexification ---------------------------------------------------------------


def lexify(I: MonomialIdeal, max_degree: int = 64) -> MonomialIdeal:
    """The unique lexsegment ideal with the Hilbert function of I.

    Built degree by degree: the degree-t slice is the lex prefix of size
    H(I, t), and new generators are the part of that prefix past the span of
    the previous slice (for a lex prefix of size a the span has size exactly
    up(a, n-1)).  Iteration stops at the first degree at or past the max
    generator degree of I whose next slice adds no generators; Gotzmann
    persistence then rules out generators in any higher degree.
    """
    if I.is_unit:
        raise DomainError("the unit ideal has no lexsegment companion here")
    if I.is_zero:
        return I
    n = I.ring.num_vars
    g = I.max_gen_degree
    gens: list[Monomial] = []
    prev_size = 0
    for t in range(1, max_degree + 1):
        size = I.hilbert(t)
        span = up(prev_size, n - 1)
        if span > size:
            raise DomainError(f"Hilbert data of {I!r} violates Macaulay growth at degree {t}")
        if size > span:
            prefix = lex_prefix(I.ring, t, size)
            gens.extend(prefix.members[span:])
        prev_size = size
        if t >= g and I.hilbert(t + 1) == up(size, n - 1):
            return MonomialIdeal(I.ring, gens)
    raise CapExceeded(
        f"lexsegment ideal not stabilized by degree {max_degree} "
        f"(partial result has generators through degree {gens[-1].degree if gens else 0})"
    )


def sq_prefix(ring: GroundRing, degree: int, size: int) -> tuple[Monomial, ...]:
    """The squarefree lexsegment of the given size in one degree."""
    n = ring.num_vars
    if size < 0 or size > binom(n, degree):
        raise DomainError(f"no squarefree lexsegment of size {size} in degree {degree} over {n} variables")
    out = []
    for supp in itertools.combinations(range(n), degree):
        if len(out) == size:
            break
        e = [0] * n
        for i in supp:
            e[i] = 1
        out.append(Monomial(tuple(e)))
    return tuple(out)


def sq_lexify(I: MonomialIdeal) -> MonomialIdeal:
    """The unique squarefree lexsegment ideal with the Hilbert function of I
    (Kruskal-Katona).  Matches the squarefree member count of I degree by
    degree; terminates by degree n."""
    if not I.is_squarefree:
        raise DomainError("sq_lexify needs a squarefree monomial ideal")
    if I.is_zero or I.is_unit:
        return I
    n = I.ring.num_vars
    gens: list[Monomial] = []
    prev: tuple[Monomial, ...] = ()
    for t in range(1, n + 1):
        size = len(I.squarefree_slice(t))
        span = set()
        for m in prev:
            for i in range(1, n + 1):
                if m.exponents[i - 1] == 0:
                    span.add(m.times_var(i))
        if len(span) > size:
            raise DomainError(f"squarefree counts of {I!r} violate Kruskal-Katona growth at degree {t}")
        prefix = sq_prefix(I.ring, t, size)
        if not span.issubset(prefix):
            raise DomainError(f"squarefree span is not a lex prefix at degree {t}; input data inconsistent")
        gens.extend(m for m in prefix if m not in span)
        prev = prefix
    return MonomialIdeal(I.ring, gens)


# -- text format ------------------------------------------------------------------


def parse_ideal(text: str) -> MonomialIdeal:
    """Parse the ideal file format: header ``n=<int>``, one monomial per line,
    ``#`` comments; an empty body is the zero ideal."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise FormatError("empty ideal file (missing n=<int> header)")
    header = lines[0]
    if not header.startswith("n="):
        raise FormatError(f"bad ideal header {header!r}")
    try:
        n = int(header[2:])
    except ValueError as exc:
        raise FormatError(f"bad ideal header {header!r}") from exc
    try:
        ring = GroundRing(n)
    except DomainError as exc:
        raise FormatError(str(exc)) from exc
    return MonomialIdeal(ring, (parse_monomial(ln, ring) for ln in lines[1:]))


def format_ideal(I: MonomialIdeal) -> str:
    lines = [f"n={I.ring.num_vars}"]
    lines.extend(format_monomial(g) for g in I.gens)
    return "\n".join(lines) + "\n"
