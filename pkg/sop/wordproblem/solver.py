"""
Word problem solver for C(4) presentations.

The decision walks the pair (u, v) through the clean overlap prefix of u:
a leading part before the prefix must be shared literally by v, and a prefix
x·y at position 0 forces v to start with the head of some complement of the
same relation word. Each case step strictly lowers rho(u), so the walk
terminates; only the existential choices of a complement suffix branch, and
those are explored from an explicit stack so long words never deepen the
Python call stack.
"""

import logging
from functools import lru_cache
from typing import NamedTuple, Optional, Union

from sop.core.exceptions import PreconditionError
from sop.pieces.complements import complement_classes
from sop.pieces.conditions import XYZFactorization, factorizations, require_c, small_overlap_degree
from sop.pieces.table import compute_pieces
from sop.presentation.models import Presentation, Word
from sop.wordproblem.models import CaseLabel, EquivalenceTrace, OverlapPrefix
from sop.wordproblem.prefixes import HeadIndex, HeadOccurrence

logger = logging.getLogger(__name__)


class _Branch(NamedTuple):
    relation_word: Word
    u_tail: Word
    v_tail: Word


# steps of one walk, linked to the trail of the frame that spawned it
_Trail = Optional[tuple[tuple[CaseLabel, ...], "_Trail"]]


class _Frame(NamedTuple):
    z: Word
    u_tail: Word
    v_tail: Word
    trail: _Trail


def _unroll(trail: _Trail) -> list[CaseLabel]:
    segments: list[tuple[CaseLabel, ...]] = []
    while trail is not None:
        segment, trail = trail
        segments.append(segment)
    return [step for segment in reversed(segments) for step in segment]


def _common_suffix(a: Word, b: Word) -> Word:
    k = 0
    while k < len(a) and k < len(b) and a[len(a) - k - 1] == b[len(b) - k - 1]:
        k += 1
    return a[len(a) - k:]


class SmallOverlapSolver:
    """
    Prefix location, rho and word equivalence over one presentation.

    Construction requires C(3); the operations built on clean overlap
    prefixes require C(4) and check it on use.
    """

    def __init__(self, presentation: Presentation):
        require_c(presentation, 3, "word problem")
        self.presentation = presentation
        self.pieces = compute_pieces(presentation)
        self.degree = small_overlap_degree(presentation)
        self.factorizations: dict[Word, XYZFactorization] = factorizations(presentation)
        self.heads = HeadIndex(list(self.factorizations.values()))

        # relation word -> other members of its complement class, shortlex order
        self._complements: dict[Word, list[Word]] = {}
        for cls in complement_classes(presentation):
            for member in cls.members:
                self._complements[member] = cls.proper_complements(member)

        logger.debug(
            f"Solver ready: {len(self.factorizations)} relation words, degree {self.degree}"
        )

    # --- Preconditions ---

    def require_c4(self, operation: str) -> None:
        if self.degree < 4:
            require_c(self.presentation, 4, operation)

    def _check(self, *words: Word) -> None:
        for word in words:
            self.presentation.check_word(word)

    # --- Prefixes ---

    def _overlap_prefix(self, w: Word, occurrence: HeadOccurrence) -> OverlapPrefix:
        start, fact = occurrence
        return OverlapPrefix(
            leading=w[:start],
            x=fact.x,
            y=fact.y,
            source_relation_word=fact.relation_word,
            clean=self.heads.inner_head(w, occurrence) is None,
        )

    def first_relation_prefix(self, w: Word) -> Optional[OverlapPrefix]:
        """The shortest relation prefix of `w` with its own cleanliness flag."""
        self._check(w)
        occurrence = self.heads.shortest_relation_prefix(w)
        if occurrence is None:
            return None
        return self._overlap_prefix(w, occurrence)

    def clean_overlap_prefix(self, w: Word) -> Optional[OverlapPrefix]:
        """The clean overlap prefix of `w`; absent iff no relation word occurs in `w`."""
        self.require_c4("clean_overlap_prefix")
        self._check(w)
        occurrence = self.heads.clean_overlap_prefix(w)
        if occurrence is None:
            return None
        return self._overlap_prefix(w, occurrence)

    def _rho(self, w: Word) -> int:
        occurrence = self.heads.clean_overlap_prefix(w)
        if occurrence is None:
            return -1
        start, fact = occurrence
        return len(w) - start - len(fact.head)

    def rho(self, w: Word) -> int:
        """-1 without a clean overlap prefix, else the length of the suffix after it."""
        self.require_c4("rho")
        self._check(w)
        return self._rho(w)

    # --- Complements ---

    def _suffix_choices(self, r: Word) -> list[Word]:
        """Distinct z parts over the complement class of `r`, own z first."""
        choices = [self.factorizations[r].z]
        for other in self._complements[r]:
            z = self.factorizations[other].z
            if z not in choices:
                choices.append(z)
        return choices

    def _matching_complement(self, r: Word, v: Word) -> Optional[XYZFactorization]:
        """The complement of `r` (possibly `r` itself) whose head is a prefix of `v`."""
        matches = [
            self.factorizations[m]
            for m in [r, *self._complements[r]]
            if v[:len(self.factorizations[m].head)] == self.factorizations[m].head
        ]
        if len(matches) > 1:
            p = self.presentation
            raise PreconditionError(
                "several complements share a head prefix",
                condition="C(4)",
                relation_word=p.format_word(r),
                decomposition=[p.format_word(f.head) for f in matches],
            )
        return matches[0] if matches else None

    # --- Equivalence ---

    def _walk(self, u: Word, v: Word, steps: list[CaseLabel]) -> Union[bool, _Branch]:
        """
        Run the deterministic cases on (u, v).

        Returns the verdict, or the branch point of case 1 or case 3 where
        the remaining pair is z·u_tail against z·v_tail for some complement
        suffix z.
        """
        while True:
            if u == v:
                steps.append(CaseLabel.LITERAL_EQUAL)
                return True

            occurrence = self.heads.clean_overlap_prefix(u)
            if occurrence is None:
                steps.append(CaseLabel.NO_CLEAN_PREFIX)
                return False

            start, fact = occurrence
            if start > 0:
                steps.append(CaseLabel.DUMP_PREFIX)
                if v[:start] != u[:start]:
                    return False
                u, v = u[start:], v[start:]
                continue

            r = fact.relation_word
            other = self._matching_complement(r, v)
            if other is None:
                steps.append(CaseLabel.NO_CASE)
                return False

            u_rest = u[len(fact.head):]
            v_rest = v[len(other.head):]
            u_has_z = u_rest[:len(fact.z)] == fact.z
            v_has_z = v_rest[:len(other.z)] == other.z

            if other.relation_word == r:
                if u_has_z and v_has_z:
                    steps.append(CaseLabel.CASE1)
                    return _Branch(r, u_rest[len(fact.z):], v_rest[len(fact.z):])
                steps.append(CaseLabel.CASE2)
                u, v = u_rest, v_rest
                continue

            if u_has_z and v_has_z:
                steps.append(CaseLabel.CASE3)
                return _Branch(r, u_rest[len(fact.z):], v_rest[len(other.z):])
            if v_has_z:
                steps.append(CaseLabel.CASE4)
                u, v = u_rest, fact.z + v_rest[len(other.z):]
                continue
            if u_has_z:
                steps.append(CaseLabel.CASE5)
                u, v = other.z + u_rest[len(fact.z):], v_rest
                continue

            steps.append(CaseLabel.CASE6)
            z = _common_suffix(fact.z, other.z)
            if not z:
                return False
            z1 = fact.z[:len(fact.z) - len(z)]
            z2 = other.z[:len(other.z) - len(z)]
            if u_rest[:len(z1)] != z1 or v_rest[:len(z2)] != z2:
                return False
            u, v = u_rest[len(z1):], v_rest[len(z2):]
            if not self._possible_prefix(z, u):
                return False

    def _equivalent(self, u: Word, v: Word) -> tuple[bool, list[CaseLabel]]:
        """
        Depth-first search over the complement suffix choices of cases 1 and 3.

        Frames hold the shared tails and the chosen suffix, so a pending
        branch costs no copy of the words; the trail of a frame links back to
        the steps of its ancestors.
        """
        root: list[CaseLabel] = []
        outcome = self._walk(u, v, root)
        if isinstance(outcome, bool):
            return outcome, root

        stack: list[_Frame] = []
        seen: set[tuple[Word, Word, Word]] = set()

        def push(branch: _Branch, trail: _Trail) -> None:
            for z in reversed(self._suffix_choices(branch.relation_word)):
                key = (z, branch.u_tail, branch.v_tail)
                if key not in seen:
                    seen.add(key)
                    stack.append(_Frame(z, branch.u_tail, branch.v_tail, trail))

        push(outcome, (tuple(root), None))
        while stack:
            frame = stack.pop()
            steps: list[CaseLabel] = []
            outcome = self._walk(frame.z + frame.u_tail, frame.z + frame.v_tail, steps)
            if outcome is True:
                return True, _unroll(frame.trail) + steps
            if isinstance(outcome, _Branch):
                push(outcome, (tuple(steps), frame.trail))
        return False, root

    def explain(self, u: Word, v: Word) -> EquivalenceTrace:
        """Decide u ≡ v and record the case of every step."""
        self.require_c4("words_equivalent")
        self._check(u, v)
        verdict, steps = self._equivalent(u, v)
        logger.debug(f"Equivalence decided {verdict} in {len(steps)} steps")
        return EquivalenceTrace(steps=tuple(steps), verdict=verdict)

    def words_equivalent(self, u: Word, v: Word) -> bool:
        return self.explain(u, v).verdict

    # --- Possible prefixes ---

    def _possible_prefix(self, z: Word, u: Word) -> bool:
        while True:
            if u[:len(z)] == z:
                return True
            occurrence = self.heads.clean_overlap_prefix(u)
            if occurrence is None:
                return False

            start, fact = occurrence
            if start > 0:
                # every word equivalent to u starts with the same leading part
                if len(z) <= start or z[:start] != u[:start]:
                    return False
                z, u = z[start:], u[start:]
                continue

            # z is a piece, so it is a proper prefix of whichever head it starts
            r = fact.relation_word
            if not any(
                self.factorizations[m].head[:len(z)] == z for m in self._complements[r]
            ):
                return False
            z, u = fact.z, u[len(fact.head):]

    def is_possible_prefix(self, z: Word, u: Word) -> bool:
        """
        True iff z·w ≡ u for some word w.

        Raises:
            PreconditionError: the presentation is not C(4), or `z` is not a piece
        """
        self.require_c4("is_possible_prefix")
        self._check(z, u)
        if not self.pieces.is_piece(z):
            p = self.presentation
            raise PreconditionError(
                "possible prefix test requires a piece",
                condition="piece",
                relation_word=p.format_word(z),
            )
        return self._possible_prefix(z, u)


@lru_cache(maxsize=256)
def get_solver(p: Presentation) -> SmallOverlapSolver:
    """Cached solver per presentation."""
    return SmallOverlapSolver(p)


def first_relation_prefix(w: Word, p: Presentation) -> Optional[OverlapPrefix]:
    return get_solver(p).first_relation_prefix(w)


def clean_overlap_prefix(w: Word, p: Presentation) -> Optional[OverlapPrefix]:
    return get_solver(p).clean_overlap_prefix(w)


def rho(w: Word, p: Presentation) -> int:
    return get_solver(p).rho(w)


def words_equivalent(u: Word, v: Word, p: Presentation) -> bool:
    """
    Decide u ≡ v over a C(4) presentation.

    Raises:
        PreconditionError: p is not C(4)
        PresentationError: a word uses letters outside the alphabet
    """
    return get_solver(p).words_equivalent(u, v)


def explain_equivalence(u: Word, v: Word, p: Presentation) -> EquivalenceTrace:
    return get_solver(p).explain(u, v)


def is_possible_prefix(z: Word, u: Word, p: Presentation) -> bool:
    return get_solver(p).is_possible_prefix(z, u)
