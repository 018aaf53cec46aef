"""Closed-form realizability verdicts and excluded-ray enumeration.

The decision procedure: on genus at least one every admissible residue tuple
is realizable (in every connected component of the stratum).  On genus zero
the obstructions are exactly

* the zero tuple, when some zero order exceeds (sum of higher pole orders)
  minus (number of higher poles + 1), in strata without simple poles;
* primitive rays: with only simple poles, a tuple collinear over the reals
  whose primitive integer form has positive part summing to at most the
  largest zero order.

Cylinder circumference tuples of holomorphic strata reduce to the simple-pole
case; below the genus there is no obstruction, and past the closed-form cases
the question is delegated to a bounded search over stable configurations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence

from .core import (
    NON_COLLINEAR,
    PrimitiveRay,
    QQi,
    StratumSignature,
    collinear_normal_form,
    primitive_abs_profile,
    validate_residues,
    validate_stratum,
)

REASON_GENUS_POSITIVE = "genus-positive-surjective"
REASON_NON_COLLINEAR = "non-collinear"
REASON_MIXED = "mixed-poles-surjective"
REASON_ZERO_OK = "zero-vector-allowed"
REASON_ZERO_EXCLUDED = "zero-vector-excluded-by-large-zero"
REASON_EXCLUDED_RAY = "excluded-primitive-ray"
REASON_COLLINEAR_OK = "collinear-sum-exceeds-max-zero"
REASON_NON_COMMENSURABLE = "non-commensurable-collinear"
REASON_BELOW_GENUS = "below-genus-bound"
REASON_SEARCH_REALIZABLE = "search-realizable"
REASON_SEARCH_NONE = "search-not-realizable"

_NEGATIVE_REASONS = {REASON_ZERO_EXCLUDED, REASON_EXCLUDED_RAY, REASON_SEARCH_NONE}


@dataclass(frozen=True)
class Verdict:
    realizable: bool
    reason: str
    certificate_hint: str | None = None
    every_component: bool = False

    def __post_init__(self) -> None:
        if self.realizable == (self.reason in _NEGATIVE_REASONS):
            raise ValueError(f"reason {self.reason!r} contradicts realizable={self.realizable}")


class NeedsSearch:
    """Sentinel outcome: no closed form applies, run the stable-config search."""

    def __repr__(self) -> str:
        return "NEEDS_SEARCH"


NEEDS_SEARCH = NeedsSearch()


def _require_valid(sig: StratumSignature, residues: Sequence[QQi]) -> None:
    bad = validate_residues(sig, residues)
    if bad:
        raise ValueError("; ".join(bad))


def decide_realizable(sig: StratumSignature, residues: Sequence[QQi]) -> Verdict:
    """Decide whether a residue tuple is attained on the given stratum.

    Raises ValueError when (sig, residues) fails validation.
    """
    _require_valid(sig, residues)
    if sig.genus >= 1:
        return Verdict(True, REASON_GENUS_POSITIVE, "genus-reduction", every_component=True)

    nonzero = [r for r in residues if not r.is_zero()]
    if not nonzero:
        # All residues vanish; only higher poles present.
        bound = sig.pole_degree - (sig.p + 1)
        if sig.max_zero() <= bound:
            return Verdict(True, REASON_ZERO_OK, "zero-residue-chain")
        return Verdict(False, REASON_ZERO_EXCLUDED)

    if sig.p >= 1:
        form = collinear_normal_form(tuple(nonzero))
        if form is NON_COLLINEAR:
            return Verdict(True, REASON_NON_COLLINEAR, "residual-polygon")
        return Verdict(True, REASON_MIXED, "collinear-anchor-chain")

    # Only simple poles.
    form = collinear_normal_form(tuple(nonzero))
    if form is NON_COLLINEAR:
        return Verdict(True, REASON_NON_COLLINEAR, "residual-polygon")
    if not isinstance(form, PrimitiveRay):
        # Irrational collinear ratios cannot occur over Gaussian rationals,
        # but such tuples are always realizable.
        return Verdict(True, REASON_NON_COMMENSURABLE, "residual-polygon")
    if form.positive_sum <= sig.max_zero():
        return Verdict(False, REASON_EXCLUDED_RAY)
    hint = "connection-graph" if sig.n == 1 else (
        "blow-up-of-single-zero" if form.positive_sum > sig.s - 2 else "stable-tree"
    )
    return Verdict(True, REASON_COLLINEAR_OK, hint)


def _partitions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Partitions of `total` into exactly `parts` positive parts, descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(min(total - parts + 1, total), 0, -1):
        for rest in _partitions(total - first, parts - 1):
            if rest and rest[0] > first:
                continue
            yield (first,) + rest


def _block_sorted(ints: tuple[int, ...]) -> tuple[int, ...]:
    pos = sorted((m for m in ints if m > 0), reverse=True)
    neg = sorted((m for m in ints if m < 0), key=abs, reverse=True)
    return tuple(pos) + tuple(neg)


def _canonical_ray(ints: tuple[int, ...]) -> tuple[int, ...]:
    a = _block_sorted(ints)
    b = _block_sorted(tuple(-m for m in ints))
    return max(a, b)


def enumerate_excluded_rays(s: int, max_zero: int) -> tuple[PrimitiveRay, ...]:
    """All excluded primitive rays of length s, up to permutation and sign.

    These are the integer tuples with no zero entry, total sum zero, jointly
    coprime, whose positive part sums to at most ``max_zero``.  Entries are
    emitted sorted descending; representatives are deduplicated under global
    sign by keeping the lexicographically largest form, and the output is
    sorted lexicographically.
    """
    if s < 2:
        raise ValueError("a ray needs at least two entries")
    found: set[tuple[int, ...]] = set()
    for total in range(1, max(max_zero, 0) + 1):
        for s1 in range(1, s):
            s2 = s - s1
            if total < s1 or total < s2:
                continue
            for pos in _partitions(total, s1):
                for neg in _partitions(total, s2):
                    ints = pos + tuple(-y for y in neg)
                    g = 0
                    for m in ints:
                        g = gcd(g, abs(m))
                    if g != 1:
                        continue
                    found.add(_canonical_ray(ints))
    return tuple(
        PrimitiveRay(QQi(1), ints) for ints in sorted(found)
    )


def decide_cylinder_tuple(
    sig: StratumSignature, circumferences: Sequence[QQi]
) -> Verdict | NeedsSearch:
    """Decide whether a holomorphic stratum carries disjoint cylinders with
    the given circumference tuple (each entry taken up to sign).

    Below the genus every tuple works.  At the genus, on the single-zero
    stratum, the obstruction is the primitive integer profile with total at
    most 2g-2.  The remaining cases (t = g with several zeros, or t > g up
    to the maximal count g + n - 1) have no closed form here and are handed
    to the stable-configuration search.
    """
    bad = validate_stratum(sig)
    if bad:
        raise ValueError("; ".join(bad))
    if sig.p != 0 or sig.s != 0:
        raise ValueError("cylinder decision requires a holomorphic stratum")
    t = len(circumferences)
    if t < 1:
        raise ValueError("at least one circumference required")
    if any(c.is_zero() for c in circumferences):
        raise ValueError("circumferences must be nonzero")
    g, n = sig.genus, sig.n
    if t > g + n - 1:
        raise ValueError(
            f"{t} disjoint cylinders exceed the maximal count {g + n - 1}"
        )
    if t < g:
        return Verdict(True, REASON_BELOW_GENUS)
    if t == g and n == 1:
        profile = primitive_abs_profile(circumferences)
        if profile is None:
            return Verdict(True, REASON_NON_COLLINEAR)
        if sum(profile) <= 2 * g - 2:
            return Verdict(False, REASON_EXCLUDED_RAY)
        return Verdict(True, REASON_COLLINEAR_OK)
    return NEEDS_SEARCH


def search_cylinder_tuple(
    sig: StratumSignature,
    circumferences: Sequence[QQi],
    budget: int | None = None,
) -> Verdict:
    """Resolve a cylinder tuple, running the bounded search when needed."""
    outcome = decide_cylinder_tuple(sig, circumferences)
    if isinstance(outcome, Verdict):
        return outcome
    from . import graphs  # deferred: graphs depends on this module

    kwargs = {} if budget is None else {"budget": budget}
    config = graphs.find_cylinder_config(sig, circumferences, **kwargs)
    if config is None:
        return Verdict(False, REASON_SEARCH_NONE)
    return Verdict(True, REASON_SEARCH_REALIZABLE, "stable-tree")
