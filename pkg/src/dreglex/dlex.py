"""The d-regular lexsegment machinery: per-max-index generator counts of
degree-d strongly stable ideals, the d-linear lexsegment construction they
pin down, d-lexsegment ideals, the Hilbert-function characterization of
d-regular ideals, and the regularity range of a Hilbert function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .betti import BettiDiagram, ahh_betti, ek_betti
from .errors import DomainError
from .ideals import MonomialIdeal, lexify
from .koszul import koszul_betti
from .macaulay import HilbertSpec, binom, is_m_vector, up
from .monomials import (
    DEFAULT_ENUMERATION_CAP,
    GroundRing,
    MonomialSet,
    dk_decompose,
    is_lexsegment_set,
    is_strongly_stable,
    lex_prefix,
)


@dataclass(frozen=True)
class LSequence:
    """The vector (l_1, ..., l_n) counting generators by largest variable in a
    degree-d strongly stable generating set."""

    entries: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise DomainError("the attached degree must be positive")
        if any(v < 0 for v in self.entries):
            raise DomainError("counts must be nonnegative")

    @property
    def num_vars(self) -> int:
        return len(self.entries)

    @property
    def total(self) -> int:
        return sum(self.entries)


def l_sequence_of_set(V: MonomialSet) -> LSequence:
    """The max-index counts of a strongly stable single-degree set."""
    if V.degree < 1:
        raise DomainError("l-sequences are attached to positive degrees")
    if not is_strongly_stable(V):
        raise DomainError("l-sequences are only meaningful for strongly stable sets")
    counts = [0] * V.ring.num_vars
    for m in V:
        counts[m.max_index - 1] += 1
    return LSequence(tuple(counts), V.degree)


def l_sequence(I: MonomialIdeal) -> LSequence:
    """The max-index generator counts of a strongly stable ideal generated in
    a single degree."""
    if I.is_zero or I.is_unit:
        raise DomainError("need a nonzero, nonunit ideal generated in one degree")
    d = I.max_gen_degree
    if I.min_gen_degree != d:
        raise DomainError("generators must all have the same degree")
    V = MonomialSet(I.ring, d, I.gens)
    return l_sequence_of_set(V)


def is_admissible_l(l: LSequence) -> bool:
    """True iff some strongly stable degree-d generating set realizes l:
    an M-vector whose second entry is at most the degree."""
    if not is_m_vector(l.entries):
        return False
    if l.num_vars >= 2 and l.entries[1] > l.degree:
        return False
    return True


def dlinear_lex_from_l(l: LSequence, ring: GroundRing, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
    """The unique d-linear lexsegment ideal with the given counts: generated by
    the union over k of x_k * B_k, B_k the size-l_k lex prefix of degree d-1
    in the first k variables."""
    if l.num_vars != ring.num_vars:
        raise DomainError(f"sequence has {l.num_vars} slots, ring has {ring.num_vars} variables")
    if not is_admissible_l(l):
        raise DomainError(f"{l.entries} is not realizable in degree {l.degree}")
    d = l.degree
    gens = []
    for k in range(1, ring.num_vars + 1):
        size = l.entries[k - 1]
        if size > binom(k + d - 2, d - 1):
            raise DomainError(f"slot {k} asks for {size} monomials of degree {d - 1} in {k} variables")
        for b in lex_prefix(ring, d - 1, size, max_var=k):
            gens.append(b.times_var(k))
    return MonomialIdeal(ring, gens)


def is_dlinear_lex(V: MonomialSet) -> bool:
    """True iff V is strongly stable and every max-index slice D_k is a lex
    segment in the first k variables."""
    if len(V) == 0:
        return True
    if not is_strongly_stable(V):
        return False
    return all(
        is_lexsegment_set(Dk, max_var=k)
        for k, Dk in enumerate(dk_decompose(V), start=1)
    )


def hilbert_from_l(l: LSequence, num_vars: int, t: int) -> int:
    """Hilbert function of a degree-d-generated strongly stable ideal with
    counts l:  H(t) = sum_k l_k * C(n-k+t-d, n-k), valid for t >= d."""
    if t < l.degree:
        raise DomainError(f"the count formula only covers degrees >= {l.degree}")
    if l.num_vars != num_vars:
        raise DomainError("slot count does not match the ring")
    n = num_vars
    d = l.degree
    return sum(
        l.entries[k - 1] * binom(n - k + t - d, n - k) for k in range(1, n + 1)
    )


def l_from_hilbert_tail(H: HilbertSpec, d: int) -> LSequence:
    """Invert the count formula from the n tail values H(d), ..., H(d+n-1).

    Any further supplied values are verified against the recovered sequence;
    a mismatch, a fractional or a negative solution all mean no degree-d
    generated strongly stable ideal matches.
    """
    n = H.num_vars
    if d < 1:
        raise DomainError("d must be positive")
    if H.top < d + n - 1:
        raise DomainError(f"need H through degree {d + n - 1}, have {H.top}")
    rows = []
    rhs = []
    for m in range(n):
        rows.append([Fraction(binom(n - k + m, n - k)) for k in range(1, n + 1)])
        rhs.append(Fraction(H.value(d + m)))
    sol = _solve_exact(rows, rhs)
    if sol is None:
        raise DomainError("tail system is singular; no matching sequence")
    entries = []
    for x in sol:
        if x.denominator != 1 or x < 0:
            raise DomainError(
                f"tail {tuple(H.values[d:d + n])} is not the Hilbert tail of a degree-{d} strongly stable ideal"
            )
        entries.append(int(x))
    l = LSequence(tuple(entries), d)
    for t in range(d + n, H.top + 1):
        if hilbert_from_l(l, n, t) != H.value(t):
            raise DomainError(f"supplied H({t}) deviates from the sequence recovered from the tail")
    return l


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    n = len(rows)
    m = [rows[i][:] + [rhs[i]] for i in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c]), None)
        if pivot is None:
            return None
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [v * inv for v in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return [m[r][n] for r in range(n)]


@dataclass(frozen=True)
class Verdict:
    """Outcome of the Hilbert-function characterization: on success the
    witness sequence is attached, on failure the first broken condition."""

    admissible: bool
    witness_l: LSequence | None = None
    failed_condition: str | None = None


def characterize(H: HilbertSpec, d: int, exact: bool = False) -> Verdict:
    """Decide whether H is the Hilbert function of a nonzero, nonunit graded
    ideal of regularity <= d (or exactly d with ``exact``).

    Conditions, reported by the tag of the first failure:
      (i)(b)  the tail H(d), ..., H(d+n-1) comes from a max-index count vector
              and any extra values match it;
      (i)(a)  that vector is an M-vector with second entry <= d;
      (i)(c)  H(d-1) <= l_n;
      (ii)    H(0) = 0 and up(H(t), n-1) <= H(t+1) for t < d-1;
      (iii)   (exact only) up(H(d-1), n-1) < H(d).
    """
    if H.role != "ideal":
        raise DomainError("characterize needs an ideal-side Hilbert specification")
    n = H.num_vars
    if H.top < d + n - 1:
        raise DomainError(f"need H through degree {d + n - 1}, have {H.top}")
    try:
        l = l_from_hilbert_tail(H, d)
    except DomainError:
        return Verdict(False, failed_condition="(i)(b)")
    if not is_admissible_l(l):
        return Verdict(False, failed_condition="(i)(a)")
    if d >= 1 and H.value(d - 1) > l.entries[n - 1]:
        return Verdict(False, failed_condition="(i)(c)")
    if H.value(0) != 0:
        return Verdict(False, failed_condition="(ii)")
    for t in range(0, d - 1):
        if up(H.value(t), n - 1) > H.value(t + 1):
            return Verdict(False, failed_condition="(ii)")
    if exact and up(H.value(d - 1), n - 1) >= H.value(d):
        return Verdict(False, failed_condition="(iii)")
    return Verdict(True, witness_l=l)


def characterize_exact(H: HilbertSpec, d: int) -> Verdict:
    return characterize(H, d, exact=True)


def dlex_from_hilbert(H: HilbertSpec, d: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
    """The unique d-lexsegment ideal realizing an admissible H: plain lex
    prefixes below degree d plus the d-linear lexsegment part matching the
    recovered counts."""
    verdict = characterize(H, d)
    if not verdict.admissible:
        raise DomainError(f"H is not the Hilbert function of a {d}-regular ideal: condition {verdict.failed_condition}")
    ring = GroundRing(H.num_vars)
    n = H.num_vars
    gens = []
    prev_size = 0
    for t in range(1, d):
        size = H.value(t)
        span = up(prev_size, n - 1)
        if span > size:
            raise DomainError(f"H violates Macaulay growth between degrees {t - 1} and {t}")
        if size > span:
            gens.extend(lex_prefix(ring, t, size).members[span:])
        prev_size = size
    linear = dlinear_lex_from_l(verdict.witness_l, ring, cap)
    J = MonomialIdeal(ring, gens) + linear
    for t in range(0, H.top + 1):
        if J.hilbert(t, cap) != H.value(t):
            raise AssertionError(f"constructed ideal misses H({t}); construction bug or inconsistent input")
    return J


def regularity(I: MonomialIdeal, cap: int = DEFAULT_ENUMERATION_CAP) -> int:
    """Castelnuovo-Mumford regularity via the cheapest valid Betti backend."""
    return betti_auto(I, cap).regularity()


def betti_auto(I: MonomialIdeal, cap: int = DEFAULT_ENUMERATION_CAP) -> BettiDiagram:
    """EK for stable ideals, the squarefree generator formula for squarefree
    strongly stable ideals, otherwise the exact Koszul oracle."""
    if I.is_stable(cap):
        return ek_betti(I, cap)
    if I.is_squarefree and I.is_squarefree_strongly_stable(cap):
        return ahh_betti(I, cap)
    return koszul_betti(I, cap=cap)


def lexd(I: MonomialIdeal, d: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
    """The unique d-lexsegment ideal with the Hilbert function of I; defined
    exactly when reg(I) <= d."""
    if I.is_zero or I.is_unit:
        raise DomainError("need a nonzero, nonunit ideal")
    r = regularity(I, cap)
    if r > d:
        raise DomainError(f"reg(I) = {r} exceeds d = {d}")
    n = I.ring.num_vars
    values = tuple(I.hilbert(t, cap) for t in range(d + n))
    H = HilbertSpec(n, values, "ideal")
    return dlex_from_hilbert(H, d, cap)


def regularity_range(
    I: MonomialIdeal,
    max_degree: int = 64,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> dict[int, MonomialIdeal]:
    """Witnesses for every achievable regularity with the Hilbert function of
    I: r -> a monomial ideal of regularity exactly r, for r from reg(I) (the
    caller asserts the input realizes the minimum) up to reg(Lex(I)).

    Every witness is verified to have regularity exactly r via its stable
    Betti diagram.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("need a nonzero, nonunit ideal")
    a = regularity(I, cap)
    L = lexify(I, max_degree)
    b = ek_betti(L, cap).regularity()
    out: dict[int, MonomialIdeal] = {}
    for r in range(a, b + 1):
        witness = lexd(I, r, cap)
        got = ek_betti(witness, cap).regularity()
        if got != r:
            raise AssertionError(f"witness for r={r} has regularity {got}")
        out[r] = witness
    return out
