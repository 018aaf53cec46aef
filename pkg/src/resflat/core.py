"""Exact arithmetic and the basic vocabulary of the realizability problem.

Everything downstream (deciders, graph searches, flat-surface builders) works
over Gaussian rationals so that every comparison made by this package is
exact.  Floating point appears only in one place, the cone-angle check of the
surface verifier, where the totals are integer multiples of 2*pi by
construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction]


def _frac(x: Rat) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an int or Fraction, got {type(x).__name__}")


@dataclass(frozen=True)
class QQi:
    """A Gaussian rational a + b*i with exact rational parts.

    Instances are immutable and hashable; arithmetic is exact.  Fractions are
    kept reduced with positive denominators by the ``fractions`` module.
    """

    re: Fraction
    im: Fraction

    def __init__(self, re: Rat = 0, im: Rat = 0) -> None:
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __add__(self, other: "QQi") -> "QQi":
        return QQi(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "QQi") -> "QQi":
        return QQi(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "QQi":
        return QQi(-self.re, -self.im)

    def __mul__(self, other: "QQi | Rat") -> "QQi":
        if isinstance(other, QQi):
            return QQi(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        w = _frac(other)
        return QQi(self.re * w, self.im * w)

    __rmul__ = __mul__

    def __truediv__(self, other: "QQi | Rat") -> "QQi":
        if isinstance(other, QQi):
            n = other.norm2()
            if n == 0:
                raise ZeroDivisionError("division by zero Gaussian rational")
            conj = other.conjugate()
            num = self * conj
            return QQi(num.re / n, num.im / n)
        w = _frac(other)
        if w == 0:
            raise ZeroDivisionError("division by zero")
        return QQi(self.re / w, self.im / w)

    def conjugate(self) -> "QQi":
        return QQi(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"QQi({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = QQi(0)
ONE = QQi(1)
I = QQi(0, 1)


def cross(a: QQi, b: QQi) -> Fraction:
    """Planar cross product; 0 exactly when a and b are real-collinear."""
    return a.re * b.im - a.im * b.re


def dot(a: QQi, b: QQi) -> Fraction:
    return a.re * b.re + a.im * b.im


def real_ratio(a: QQi, b: QQi) -> Fraction | None:
    """The rational t with a = t*b, or None when a/b is not real.

    Collinear Gaussian rationals always have a rational ratio: a/b real means
    the imaginary part of a*conj(b) vanishes, and the real part is rational.
    """
    if b.is_zero():
        raise ZeroDivisionError("ratio with zero vector")
    if cross(a, b) != 0:
        return None
    return dot(a, b) / b.norm2()


def _is_upper(v: QQi) -> bool:
    # Half-plane classification for arguments taken in (-pi, pi]:
    # "upper" covers (0, pi], the rest covers (-pi, 0].
    return v.im > 0 or (v.im == 0 and v.re < 0)


def arg_cmp(a: QQi, b: QQi) -> int:
    """Exactly compare arg(a) and arg(b), both taken in (-pi, pi].

    Returns -1, 0 or 1.  Both vectors must be nonzero.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("argument of zero vector")
    ua, ub = _is_upper(a), _is_upper(b)
    if ua != ub:
        return 1 if ua else -1
    c = cross(b, a)
    if c > 0:
        return 1
    if c < 0:
        return -1
    return 0


def arg_float(v: QQi) -> float:
    return math.atan2(float(v.im), float(v.re))


@dataclass(frozen=True)
class StratumSignature:
    """Genus, zero orders, higher pole orders and simple pole count.

    Pole orders are stored positive: ``higher_poles=(3, 4)`` means two poles
    of orders -3 and -4.  A zero order 0 is a marked regular point; the only
    place it is needed is the stratum with a single marked point and simple
    poles.
    """

    genus: int
    zeros: tuple[int, ...]
    higher_poles: tuple[int, ...] = ()
    simple_poles: int = 0

    def __init__(
        self,
        genus: int,
        zeros: Iterable[int] = (),
        higher_poles: Iterable[int] = (),
        simple_poles: int = 0,
    ) -> None:
        object.__setattr__(self, "genus", int(genus))
        object.__setattr__(self, "zeros", tuple(int(a) for a in zeros))
        object.__setattr__(self, "higher_poles", tuple(int(b) for b in higher_poles))
        object.__setattr__(self, "simple_poles", int(simple_poles))

    @property
    def n(self) -> int:
        return len(self.zeros)

    @property
    def p(self) -> int:
        return len(self.higher_poles)

    @property
    def s(self) -> int:
        return self.simple_poles

    @property
    def pole_degree(self) -> int:
        """Sum of the higher pole orders."""
        return sum(self.higher_poles)

    @property
    def num_poles(self) -> int:
        return self.p + self.s

    def max_zero(self) -> int:
        return max(self.zeros) if self.zeros else 0

    def __str__(self) -> str:
        parts = [str(a) for a in self.zeros]
        parts += [str(-b) for b in self.higher_poles]
        parts += ["-1"] * self.simple_poles
        return f"H_{self.genus}({', '.join(parts)})"


def validate_stratum(sig: StratumSignature) -> tuple[str, ...]:
    """Check the structural identities of a signature.

    Returns a tuple of violation messages; empty means valid.  This is a
    total function, it never raises.
    """
    bad: list[str] = []
    if sig.genus < 0:
        bad.append(f"genus must be nonnegative, got {sig.genus}")
    if any(a < 0 for a in sig.zeros):
        bad.append("zero orders must be nonnegative")
    if any(b < 2 for b in sig.higher_poles):
        bad.append("higher pole orders must be at least 2")
    if sig.simple_poles < 0:
        bad.append("simple pole count must be nonnegative")
    if bad:
        return tuple(bad)
    degree = sum(sig.zeros) - sig.pole_degree - sig.simple_poles
    if degree != 2 * sig.genus - 2:
        bad.append(
            f"degree identity violated: sum of orders is {degree}, "
            f"expected {2 * sig.genus - 2}"
        )
    if sig.p == 0 and sig.s == 1:
        bad.append("empty stratum: a single simple pole violates the residue theorem")
    if sig.n == 0 and not (sig.genus == 1 and sig.num_poles == 0):
        bad.append("at least one zero (or marked point) is required here")
    return tuple(bad)


def residue_tuple(values: Iterable[QQi | Rat]) -> tuple[QQi, ...]:
    """Coerce a sequence of numbers into a tuple of Gaussian rationals."""
    out = []
    for v in values:
        out.append(v if isinstance(v, QQi) else QQi(v))
    return tuple(out)


def validate_residues(sig: StratumSignature, residues: Sequence[QQi]) -> tuple[str, ...]:
    """Check a candidate residue tuple against a signature.

    The tuple lists the higher pole residues first, then the simple pole
    residues.  Violations of the length, of the residue theorem and of the
    nonvanishing at simple poles are each reported distinctly.
    """
    bad = list(validate_stratum(sig))
    if bad:
        return tuple(bad)
    if len(residues) != sig.num_poles:
        bad.append(
            f"residue tuple has length {len(residues)}, expected {sig.num_poles}"
        )
        return tuple(bad)
    total = ZERO
    for r in residues:
        total = total + r
    if not total.is_zero():
        bad.append(f"residues sum to {total}, expected 0")
    for k in range(sig.p, sig.num_poles):
        if residues[k].is_zero():
            bad.append(f"zero residue at simple pole #{k - sig.p}")
    return tuple(bad)


class _Marker:
    def __init__(self, name: str) -> None:
        self._name = name

    def __repr__(self) -> str:
        return self._name


#: Returned by :func:`collinear_normal_form` when two entries span the plane.
NON_COLLINEAR = _Marker("NON_COLLINEAR")

#: Collinear entries with an irrational ratio.  Unreachable for Gaussian
#: rational inputs (the ratio of collinear Gaussian rationals is rational);
#: kept so callers can treat the outcome space uniformly.
NON_COMMENSURABLE = _Marker("NON_COMMENSURABLE")


@dataclass(frozen=True)
class PrimitiveRay:
    """A collinear tuple in normal form: direction times a primitive integer vector.

    The integers sum to zero, are jointly coprime, and the first entry is
    positive; the original tuple is ``direction * integers[k]`` entrywise.
    """

    direction: QQi
    integers: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.direction.is_zero():
            raise ValueError("ray direction must be nonzero")
        ints = self.integers
        if not ints or any(m == 0 for m in ints):
            raise ValueError("ray integers must be nonzero")
        if sum(ints) != 0:
            raise ValueError("ray integers must sum to zero")
        g = 0
        for m in ints:
            g = gcd(g, abs(m))
        if g != 1:
            raise ValueError("ray integers must be coprime")

    @property
    def positive_sum(self) -> int:
        return sum(m for m in self.integers if m > 0)

    def entries(self) -> tuple[QQi, ...]:
        return tuple(self.direction * m for m in self.integers)


def collinear_normal_form(entries: Sequence[QQi]):
    """Normal form of a tuple of nonzero Gaussian rationals on a real line.

    Returns a :data:`PrimitiveRay` when all entries lie on one real line
    through the origin, :data:`NON_COLLINEAR` otherwise.  The normal form is
    invariant under scaling every entry by a common nonzero Gaussian
    rational.  Zero entries are rejected (the caller filters them out).
    """
    entries = tuple(entries)
    if not entries:
        raise ValueError("empty tuple has no normal form")
    if any(e.is_zero() for e in entries):
        raise ValueError("zero entry: the ray normal form is undefined")
    base = entries[0]
    ratios: list[Fraction] = []
    for e in entries:
        t = real_ratio(e, base)
        if t is None:
            return NON_COLLINEAR
        ratios.append(t)
    scale = 1
    for t in ratios:
        scale = scale * t.denominator // gcd(scale, t.denominator)
    ints = [int(t * scale) for t in ratios]
    g = 0
    for m in ints:
        g = gcd(g, abs(m))
    ints = [m // g for m in ints]
    sign = 1 if ints[0] > 0 else -1
    ints = [sign * m for m in ints]
    direction = base * Fraction(sign * g, scale)
    ray_entries = tuple(direction * m for m in ints)
    assert ray_entries == entries, "normal form must reproduce the input exactly"
    if sum(ints) != 0:
        raise ValueError("collinear normal form requires entries summing to zero")
    return PrimitiveRay(direction, tuple(ints))


def primitive_abs_profile(entries: Sequence[QQi]) -> tuple[int, ...] | None:
    """Primitive positive integer profile of entries collinear up to sign.

    Used for tuples that are only defined modulo sign (cylinder
    circumferences): returns the multiset, sorted descending, of |m_k| for
    the primitive integer form, or None when the entries do not all lie on
    one real line through the origin.
    """
    entries = tuple(entries)
    if not entries:
        raise ValueError("empty tuple")
    if any(e.is_zero() for e in entries):
        raise ValueError("zero entry")
    base = entries[0]
    ratios = []
    for e in entries:
        t = real_ratio(e, base)
        if t is None:
            return None
        ratios.append(abs(t))
    scale = 1
    for t in ratios:
        scale = scale * t.denominator // gcd(scale, t.denominator)
    ints = [int(t * scale) for t in ratios]
    g = 0
    for m in ints:
        g = gcd(g, m)
    return tuple(sorted((m // g for m in ints), reverse=True))
