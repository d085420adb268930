"""Staircase regions of admissible Betti positions and the maximal-Betti
construction over them.

An extremal area is a finite staircase subset of {0..n-1} x {1, 2, ...} in
cell coordinates (homological index i, internal degree minus i).  Semi-convex
areas are the ones whose corners march diagonally away from a top corner; for
those, a strongly stable ideal admitting the area can be re-lexified degree by
degree into the unique ideal with maximal graded Betti numbers among all
ideals with the same Hilbert function admitting the area.
"""

from __future__ import annotations

import re

from .betti import BettiDiagram, ek_betti
from .dlex import LSequence, dlinear_lex_from_l, l_sequence_of_set
from .errors import DomainError, FormatError
from .ideals import MonomialIdeal
from .monomials import (
    DEFAULT_ENUMERATION_CAP,
    GroundRing,
    Monomial,
    MonomialSet,
    extend,
    is_strongly_stable,
    lex_prefix,
    m_le_k,
    restrict,
)

MAX_AREA_HEIGHT = 64


class ExtremalArea:
    """A staircase region stored by its extremal corners (ascending i,
    descending j).  Membership: (i, j) lies in the area iff some corner
    dominates it coordinatewise."""

    __slots__ = ("corners",)

    def __init__(self, points):
        pts = set()
        for (i, j) in points:
            if i < 0 or j < 1:
                raise DomainError(f"area point {(i, j)} outside [0..n-1] x [1..]")
            if j > MAX_AREA_HEIGHT:
                raise DomainError(f"area height {j} exceeds the storage bound {MAX_AREA_HEIGHT}")
            pts.add((i, j))
        if not pts:
            raise DomainError("an extremal area must be nonempty")
        corners = [
            p for p in pts
            if not any(q != p and q[0] >= p[0] and q[1] >= p[1] for q in pts)
        ]
        object.__setattr__(self, "corners", tuple(sorted(corners)))

    def __setattr__(self, *args):  # pragma: no cover - immutability guard
        raise AttributeError("ExtremalArea is immutable")

    @property
    def standard_representation(self) -> tuple[tuple[int, int], ...]:
        """Extremal points, ascending i and descending j."""
        return self.corners

    @property
    def max_i(self) -> int:
        return max(i for i, _ in self.corners)

    @property
    def max_j(self) -> int:
        return max(j for _, j in self.corners)

    def __contains__(self, point: tuple[int, int]) -> bool:
        i, j = point
        if i < 0 or j < 1:
            return False
        return any(i <= ci and j <= cj for ci, cj in self.corners)

    def cells(self) -> frozenset[tuple[int, int]]:
        out = set()
        for ci, cj in self.corners:
            out.update((i, j) for i in range(ci + 1) for j in range(1, cj + 1))
        return frozenset(out)

    def p_profile(self, j: int) -> int:
        """max { i : (i, j) in the area }, or -1 above the area."""
        tops = [ci for ci, cj in self.corners if cj >= j]
        return max(tops) if tops else -1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExtremalArea) and self.corners == other.corners

    def __hash__(self) -> int:
        return hash(self.corners)

    def __repr__(self) -> str:
        return f"ExtremalArea({format_area(self)!r})"

    # -- semi-convexity -------------------------------------------------------

    def top_points(self) -> tuple[tuple[int, int], ...]:
        """Corners maximizing i + j (the diagonal height of the area)."""
        best = max(i + j for i, j in self.corners)
        return tuple(p for p in self.corners if p[0] + p[1] == best)

    def is_semi_convex(self) -> bool:
        """True iff for some corner index r the j's step down by exactly one
        up to r and the i's step up by exactly one from r on."""
        cs = self.corners
        t = len(cs)
        for r in range(t):
            if all(cs[k][1] == cs[0][1] - k for k in range(r + 1)) and all(
                cs[k][0] == cs[r][0] + (k - r) for k in range(r, t)
            ):
                return True
        return False

    def reducible_points(self) -> frozenset[tuple[int, int]]:
        """Cells (i, j) with i > 0 whose upper-left diagonal neighbour
        (i-1, j+1) has left the area."""
        return frozenset(
            (i, j) for (i, j) in self.cells() if i > 0 and (i - 1, j + 1) not in self
        )

    def core_cells(self) -> frozenset[tuple[int, int]]:
        """The area minus its reducible points."""
        return self.cells() - self.reducible_points()

    def conv_hull(self) -> ExtremalArea:
        """The smallest semi-convex area containing this one: walk each corner
        diagonally toward a maximal-diagonal corner, collecting every
        intermediate corner.  Independent of which top corner is picked."""
        cs = self.corners
        best = max(i + j for i, j in cs)
        r = next(k for k, p in enumerate(cs) if p[0] + p[1] == best)
        ir, jr = cs[r]
        pts = [(ir, jr)]
        for k in range(r):
            ik, jk = cs[k]
            pts.extend((ik + p, jk - p) for p in range(jk - jr))
        for k in range(r + 1, len(cs)):
            ik, jk = cs[k]
            pts.extend((ik - p, jk + p) for p in range(ik - ir))
        return ExtremalArea(pts)


def parse_area(text: str) -> ExtremalArea:
    """Parse the corner-list syntax ``(i,j);(i,j);...``; whitespace ignored."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        raise FormatError("empty area")
    pts = []
    for part in stripped.split(";"):
        m = re.fullmatch(r"\((\d+),(\d+)\)", part)
        if not m:
            raise FormatError(f"bad area corner {part!r}")
        pts.append((int(m.group(1)), int(m.group(2))))
    try:
        return ExtremalArea(pts)
    except DomainError as exc:
        raise FormatError(str(exc)) from exc


def format_area(area: ExtremalArea) -> str:
    """Standard-representation order, inverse of parse_area."""
    return ";".join(f"({i},{j})" for i, j in area.corners)


def admits(diagram: BettiDiagram, area: ExtremalArea) -> bool:
    """True iff the diagram's support lies inside the area in cell
    coordinates (i, j - i)."""
    return all((i, j - i) in area for (i, j) in diagram.entries)


def relex_above(V: MonomialSet, r: int, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialSet:
    """The unique d-linear lexsegment set W with the same max-index counts as
    V at slots >= r whose members supported on the first r - 1 variables form
    the lex prefix of size |M_{<= r-1}(V)|.

    This is the degree-preserving re-lexification used by the maximal-Betti
    construction; V must be strongly stable.
    """
    n = V.ring.num_vars
    if not 1 < r <= n + 1:
        raise DomainError(f"r must lie in 2..{n + 1}")
    if not is_strongly_stable(V):
        raise DomainError("re-lexification needs a strongly stable set")
    if len(V) == 0:
        return V
    d = V.degree
    l_v = l_sequence_of_set(V)
    low_size = len(m_le_k(V, r - 1)) if r - 1 >= 1 else 0
    W1 = lex_prefix(V.ring, d, low_size, max_var=r - 1)
    low_counts = [0] * (r - 1)
    for m in W1:
        low_counts[m.max_index - 1] += 1
    entries = tuple(low_counts) + l_v.entries[r - 1:]
    ideal = dlinear_lex_from_l(LSequence(entries, d), V.ring, cap)
    return MonomialSet(V.ring, d, ideal.gens)


def lex_i_a(I: MonomialIdeal, area: ExtremalArea, cap: int = DEFAULT_ENUMERATION_CAP) -> MonomialIdeal:
    """The ideal with maximal graded Betti numbers among graded ideals sharing
    I's Hilbert function and admitting the semi-convex area.

    Degree by degree, with p_j the top homological index available at internal
    offset j: below the top corner the degree-j members supported on the first
    p_j + 1 variables are replaced by a plain lex prefix; from the top corner
    up they are re-lexified while preserving the max-index counts the area
    still constrains.  The sum of the resulting single-degree ideals is the
    answer; it is independent of the top-corner choice and of which strongly
    stable representative was supplied.
    """
    if I.is_zero or I.is_unit:
        raise DomainError("need a nonzero, nonunit ideal")
    if not area.is_semi_convex():
        raise DomainError("the construction needs a semi-convex area")
    if not I.is_strongly_stable(cap):
        raise DomainError("the construction starts from a strongly stable ideal")
    if area.max_i > I.ring.num_vars - 1:
        raise DomainError(f"area reaches homological index {area.max_i}, ring allows {I.ring.num_vars - 1}")
    diagram = ek_betti(I, cap)
    if not admits(diagram, area):
        raise DomainError("the ideal does not admit the area")
    top = min(area.top_points())  # smallest homological index
    return _construct_with_top(I, area, top, cap)


def _construct_with_top(
    I: MonomialIdeal,
    area: ExtremalArea,
    top: tuple[int, int],
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> MonomialIdeal:
    """The degreewise construction relative to one chosen top corner; the
    result is provably independent of the choice, which the tests verify."""
    j_r = top[1]
    j_1 = area.max_j
    parts: list[Monomial] = []
    for j in range(1, j_1 + 1):
        p_j = area.p_profile(j)
        members = [m for m in I.degree_slice(j, cap) if m.max_index <= p_j + 1]
        if not members:
            continue
        sub = GroundRing(p_j + 1)
        V = MonomialSet(sub, j, (restrict(m, p_j + 1) for m in members))
        if j < j_r:
            L = lex_prefix(sub, j, len(V))
        else:
            p_next = area.p_profile(j + 1) if j + 1 <= j_1 else -1
            if p_next + 1 > p_j:
                raise AssertionError("semi-convex profile must step down by at most one above the top corner")
            L = relex_above(V, p_next + 3, cap)
        parts.extend(extend(m, I.ring.num_vars) for m in L)
    return MonomialIdeal(I.ring, parts)
