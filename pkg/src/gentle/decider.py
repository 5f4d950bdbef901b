"""Derived-equivalence decisions from orbit invariants and AAG data.

The criterion is sufficient, never necessary: EQUIVALENT certifies a derived
equivalence, INCONCLUSIVE carries no non-equivalence claim.  Matching runs in
order of increasing cost: genus, then the boundary multiset of (stops,
winding) pairs, then the genus-dependent extras (nothing at genus 0, the gcd
invariant at genus 1, sigma and conditionally Arf at genus 2 and up), so a
verdict is monotone in the information consulted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra import GradedGentleAlgebra, NotDegreeZeroError, NotProperError
from .threads import AagInvariant, aag_invariants, enumerate_threads
from . import linefield


class NotSmoothError(ValueError):
    def __init__(self, side: str, witness):
        self.side = side
        self.witness = witness
        super().__init__(f"algebra {side} is not homologically smooth")


@dataclass(frozen=True)
class DecisionReport:
    verdict: str                      # "EQUIVALENT" | "INCONCLUSIVE"
    matched: tuple[str, ...]
    mismatch: str | None
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "matched": list(self.matched),
            "mismatch": self.mismatch,
            "notes": list(self.notes),
        }


def compare_algebras(a: GradedGentleAlgebra, b: GradedGentleAlgebra) -> DecisionReport:
    """Match the full orbit-invariant tuples of two smooth graded algebras."""
    analyses = []
    for side, algebra in (("A", a), ("B", b)):
        system = enumerate_threads(algebra)
        if system.forbidden_cycles:
            raise NotSmoothError(side, system.forbidden_cycles[0])
        analyses.append(linefield.analyze(algebra, system))
    an_a, an_b = analyses

    matched: list[str] = []
    notes: list[str] = []
    if an_a.genus != an_b.genus:
        return DecisionReport("INCONCLUSIVE", tuple(matched), "genus", tuple(notes))
    matched.append("genus")
    if an_a.boundary != an_b.boundary:
        return DecisionReport("INCONCLUSIVE", tuple(matched), "boundary", tuple(notes))
    matched.append("boundary")

    g = an_a.genus
    if g == 1:
        notes.append("consulted gcd invariant")
        ga, gb = linefield.gcd_invariant(an_a), linefield.gcd_invariant(an_b)
        if ga != gb:
            notes.append(f"gcd invariant {ga} != {gb}")
            return DecisionReport(
                "INCONCLUSIVE", tuple(matched), "gcd_invariant", tuple(notes)
            )
        matched.append("gcd_invariant")
    elif g >= 2:
        notes.append("consulted sigma")
        sa, sb = linefield.sigma(an_a), linefield.sigma(an_b)
        if sa != sb:
            return DecisionReport("INCONCLUSIVE", tuple(matched), "sigma", tuple(notes))
        matched.append("sigma")
        rs = [w + 2 for _, w in an_a.boundary]
        if all(r % 4 == 0 for r in rs) and sa == 0:
            notes.append("consulted arf")
            fa, fb = linefield.arf_invariant(an_a), linefield.arf_invariant(an_b)
            if fa != fb:
                return DecisionReport(
                    "INCONCLUSIVE", tuple(matched), "arf", tuple(notes)
                )
            matched.append("arf")
    return DecisionReport("EQUIVALENT", tuple(matched), None, tuple(notes))


def compare_by_aag(inv_a: AagInvariant, inv_b: AagInvariant) -> DecisionReport:
    """AAG-only sufficient criterion.

    Requires equal multisets and one of: the pairs sum to 4 (genus 0); they
    sum to 0 with coprime entries n_i - m_i + 2 (genus 1 with gcd invariant
    1); they sum to something negative with some n_i - m_i odd (higher genus
    with sigma forced to 1).
    """
    matched: list[str] = []
    notes: list[str] = []
    if inv_a.multiset != inv_b.multiset:
        return DecisionReport("INCONCLUSIVE", tuple(matched), "aag multiset", tuple(notes))
    matched.append("aag multiset")

    total = inv_a.genus_sum
    entries = [n - m + 2 for n, m in inv_a.pairs]
    if total == 4:
        matched.append("case (a): genus 0")
    elif total == 0 and entries and math.gcd(*entries) == 1:
        matched.append("case (b): genus 1, gcd 1")
    elif total < 0 and any((n - m) % 2 for n, m in inv_a.pairs):
        matched.append("case (c): higher genus, odd entry")
    else:
        notes.append(f"sum {total}, entries {sorted(entries)}")
        return DecisionReport(
            "INCONCLUSIVE", tuple(matched), "no AAG case applies", tuple(notes)
        )
    return DecisionReport("EQUIVALENT", tuple(matched), None, tuple(notes))


def compare_fd_by_aag(a: GradedGentleAlgebra, b: GradedGentleAlgebra) -> DecisionReport:
    """Finite-dimensional degree-zero criterion through Koszul duality.

    An EQUIVALENT verdict here certifies an equivalence of bounded derived
    categories of finite-dimensional modules.
    """
    for side, algebra in (("A", a), ("B", b)):
        if not algebra.is_degree_zero():
            raise NotDegreeZeroError(f"algebra {side} is not concentrated in degree 0")
        system = enumerate_threads(algebra)
        if system.permitted_cycles:
            raise NotProperError(f"algebra {side} is not proper")
    return compare_by_aag(aag_invariants(a), aag_invariants(b))
