"""Flat pieces, glued surfaces, witness builders and certificates.

A surface is a list of pieces (polygons, higher-order polar parts, simple-pole
parts) plus a perfect matching of their finite boundary edges; matched edges
carry equal translation vectors.  The verifier recovers genus, cone-point
orders and exact pole residues from that data alone, so every constructed
witness is checked by machinery independent of the construction.

Conventions.  Each boundary edge is stored with a canonical direction that
keeps the piece interior on the left; two edges may be glued exactly when
their canonical vectors are opposite.  A polar part of order b >= 2 and type
tau in [1, b-1] consists of two boundary chains (top vectors with weakly
decreasing arguments, bottom vectors with weakly increasing arguments, each
chain with nonnegative real sum) wrapped around b half-plane sheets; its
corner angles acquire integer multiples of pi from the sheets, which is what
makes the cone-angle bookkeeping work without materializing anything
infinite.  Chain vectors must not point along the negative real axis, where
they would run back over the horizontal gluing rays.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .core import (
    NON_COLLINEAR,
    PrimitiveRay,
    QQi,
    StratumSignature,
    arg_cmp,
    arg_float,
    collinear_normal_form,
    cross,
    dot,
    residue_tuple,
    validate_residues,
)
from . import decide as _decide
from . import graphs as _graphs

TWO_PI = 2.0 * math.pi
ANGLE_TOL = 1e-9

_ONE = QQi(1)
_I = QQi(0, 1)


class VerificationError(Exception):
    """A surface or certificate failed verification."""

    def __init__(self, violations: Iterable[str]) -> None:
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class InternalBuildError(RuntimeError):
    """A builder produced output that failed its own verification (a bug)."""


# ---------------------------------------------------------------------------
# Pieces


@dataclass(frozen=True)
class Polygon:
    """A flat disk bounded by a closed edge chain, counterclockwise."""

    edges: tuple[QQi, ...]

    def __init__(self, edges: Iterable[QQi]) -> None:
        object.__setattr__(self, "edges", tuple(edges))


@dataclass(frozen=True)
class PolarPart:
    """Neighborhood of a pole of order >= 2, with two boundary chains."""

    order: int
    pole_type: int
    top: tuple[QQi, ...]
    bottom: tuple[QQi, ...]

    def __init__(
        self, order: int, pole_type: int, top: Iterable[QQi], bottom: Iterable[QQi]
    ) -> None:
        object.__setattr__(self, "order", int(order))
        object.__setattr__(self, "pole_type", int(pole_type))
        object.__setattr__(self, "top", tuple(top))
        object.__setattr__(self, "bottom", tuple(bottom))


@dataclass(frozen=True)
class SimplePolePart:
    """A half-infinite cylinder over a boundary chain; simple pole at the end."""

    vectors: tuple[QQi, ...]

    def __init__(self, vectors: Iterable[QQi]) -> None:
        object.__setattr__(self, "vectors", tuple(vectors))


Piece = Polygon | PolarPart | SimplePolePart


def _turn(u: QQi, v: QQi) -> float:
    """Signed turn from u to v in [-pi, pi); exact reversals map to -pi."""
    cr = cross(u, v)
    dt = dot(u, v)
    if cr == 0:
        return 0.0 if dt > 0 else -math.pi
    return math.atan2(float(cr), float(dt))


def _interior(u: QQi, v: QQi) -> float:
    """Interior angle at a corner entered along u and left along v."""
    return math.pi - _turn(u, v)


def _validate_chain(vectors: tuple[QQi, ...], decreasing: bool, label: str) -> None:
    for v in vectors:
        if v.is_zero():
            raise ValueError(f"{label} chain contains a zero vector")
        if v.im == 0 and v.re < 0:
            raise ValueError(f"{label} chain vector points along the negative real axis")
    for a, b in zip(vectors, vectors[1:]):
        c = arg_cmp(a, b)
        if decreasing and c < 0:
            raise ValueError(f"{label} chain arguments must be weakly decreasing")
        if not decreasing and c > 0:
            raise ValueError(f"{label} chain arguments must be weakly increasing")
    if vectors:
        total = QQi(0)
        for v in vectors:
            total = total + v
        if total.re < 0:
            raise ValueError(f"{label} chain sum must have nonnegative real part")


def validate_piece(piece: Piece) -> None:
    """Local validity checks; raises ValueError with the violated condition."""
    if isinstance(piece, Polygon):
        if len(piece.edges) < 3:
            raise ValueError("polygon needs at least three edges")
        total = QQi(0)
        for e in piece.edges:
            if e.is_zero():
                raise ValueError("polygon edge is zero")
            total = total + e
        if not total.is_zero():
            raise ValueError("polygon edges do not close up")
        winding = sum(
            _turn(piece.edges[k - 1], piece.edges[k]) for k in range(len(piece.edges))
        )
        if abs(winding - TWO_PI) > 1e-7:
            raise ValueError("polygon boundary does not wind once counterclockwise")
    elif isinstance(piece, PolarPart):
        if piece.order < 2:
            raise ValueError("polar part order must be at least 2")
        if not (1 <= piece.pole_type <= piece.order - 1):
            raise ValueError("polar part type must lie in [1, order-1]")
        if not piece.top and not piece.bottom:
            raise ValueError("polar part needs a nonempty boundary chain")
        _validate_chain(piece.top, decreasing=True, label="top")
        _validate_chain(piece.bottom, decreasing=False, label="bottom")
    elif isinstance(piece, SimplePolePart):
        if not piece.vectors:
            raise ValueError("simple-pole part needs at least one vector")
        for v in piece.vectors:
            if v.is_zero():
                raise ValueError("simple-pole chain contains a zero vector")
        vs = piece.vectors
        for a, b in zip(vs, vs[1:]):
            if cross(a, b) == 0 and dot(a, b) < 0:
                raise ValueError("simple-pole chain backtracks")
        if len(vs) >= 2 and cross(vs[-1], vs[0]) == 0 and dot(vs[-1], vs[0]) < 0:
            raise ValueError("simple-pole chain wraps onto itself")
    else:
        raise ValueError(f"unknown piece type {type(piece).__name__}")


def slot_canonicals(piece: Piece) -> tuple[QQi, ...]:
    """Boundary edge vectors directed with the piece interior on the left.

    Slot order: polygon edges as given; polar top chain then bottom chain
    (bottom slots are reversed in direction, not in index); simple-pole chain
    as given.
    """
    if isinstance(piece, Polygon):
        return piece.edges
    if isinstance(piece, PolarPart):
        return piece.top + tuple(-w for w in piece.bottom)
    return piece.vectors


def _cycle_and_corners(piece: Piece) -> tuple[tuple[int, ...], tuple[float, ...]]:
    """Boundary cycle of slot ids and the corner angle entering each slot.

    corners[k] is the interior angle at the vertex between cycle[k-1] and
    cycle[k].  For polar parts the left/right wrap corners include the
    half-plane contributions 2*pi*tau and 2*pi*(order - tau).
    """
    if isinstance(piece, Polygon):
        cyc = tuple(range(len(piece.edges)))
        angs = tuple(
            _interior(piece.edges[k - 1], piece.edges[k]) for k in range(len(piece.edges))
        )
        return cyc, angs
    if isinstance(piece, SimplePolePart):
        vs = piece.vectors
        cyc = tuple(range(len(vs)))
        angs = tuple(_interior(vs[k - 1], vs[k]) for k in range(len(vs)))
        return cyc, angs
    b, tau = piece.order, piece.pole_type
    top, bot = piece.top, piece.bottom
    l, lp = len(top), len(bot)
    cyc = tuple(range(l)) + tuple(range(l + lp - 1, l - 1, -1))
    angs: list[float] = []
    for pos, sid in enumerate(cyc):
        if l and lp:
            if sid == 0:
                ang = TWO_PI * tau + arg_float(bot[0]) - arg_float(top[0])
            elif sid == l + lp - 1:
                ang = TWO_PI * (b - tau) + arg_float(top[-1]) - arg_float(bot[-1])
            elif sid < l:
                ang = _interior(top[sid - 1], top[sid])
            else:
                j = sid - l
                ang = _interior(-bot[j + 1], -bot[j])
        elif l:
            if pos == 0:
                ang = TWO_PI * (b - 1) + math.pi + arg_float(top[-1]) - arg_float(top[0])
            else:
                ang = _interior(top[sid - 1], top[sid])
        else:
            if pos == 0:
                ang = TWO_PI * (b - 1) + math.pi + arg_float(bot[0]) - arg_float(bot[-1])
            else:
                j = sid - l
                ang = _interior(-bot[j + 1], -bot[j])
        angs.append(ang)
    return cyc, tuple(angs)


NOT_A_POLE = None


def residue_of_piece(piece: Piece) -> QQi | None:
    """Exact residue of the pole a piece carries; None for polygons."""
    if isinstance(piece, Polygon):
        return NOT_A_POLE
    if isinstance(piece, PolarPart):
        total = QQi(0)
        for v in piece.top:
            total = total + v
        for w in piece.bottom:
            total = total - w
        return total
    total = QQi(0)
    for v in piece.vectors:
        total = total + v
    return total


def pole_order_of_piece(piece: Piece) -> int | None:
    if isinstance(piece, Polygon):
        return None
    if isinstance(piece, PolarPart):
        return -piece.order
    return -1


# ---------------------------------------------------------------------------
# Surfaces and the verifier


Slot = tuple[int, int]  # (piece index, slot index)


@dataclass(frozen=True)
class FlatSurface:
    pieces: tuple[Piece, ...]
    pairings: tuple[tuple[Slot, Slot], ...]

    def __init__(
        self,
        pieces: Iterable[Piece],
        pairings: Iterable[tuple[Slot, Slot]] = (),
    ) -> None:
        object.__setattr__(self, "pieces", tuple(pieces))
        object.__setattr__(
            self,
            "pairings",
            tuple((tuple(a), tuple(b)) for a, b in pairings),
        )


@dataclass(frozen=True)
class Profile:
    """Invariants read off a closed surface: genus, cone orders, poles.

    ``zero_orders`` is sorted descending and includes order-0 entries for
    marked regular points.  ``poles`` lists (order, residue) pairs with order
    -b or -1, in piece order for verified surfaces.
    """

    genus: int
    zero_orders: tuple[int, ...]
    poles: tuple[tuple[int, QQi], ...]

    def pole_orders(self) -> tuple[int, ...]:
        return tuple(o for o, _ in self.poles)

    def residues(self) -> tuple[QQi, ...]:
        return tuple(r for _, r in self.poles)


def verify_surface(surface: FlatSurface, *, angle_tol: float = ANGLE_TOL) -> Profile:
    """Check a glued surface and return its invariants.

    Verifies: local piece validity, exact vector equality across the
    matching (canonical vectors of matched slots are opposite), completeness
    of the matching, connectivity, cone angles within ``angle_tol`` of
    multiples of 2*pi, and the degree identity.  Genus comes from the Euler
    characteristic of the induced cell complex.  Raises VerificationError.
    """
    violations: list[str] = []
    pieces = surface.pieces
    if not pieces:
        raise VerificationError(("surface has no pieces",))
    for idx, pc in enumerate(pieces):
        try:
            validate_piece(pc)
        except ValueError as exc:
            violations.append(f"piece {idx}: {exc}")
    if violations:
        raise VerificationError(violations)

    canon: dict[Slot, QQi] = {}
    for i, pc in enumerate(pieces):
        for k, vec in enumerate(slot_canonicals(pc)):
            canon[(i, k)] = vec

    partner: dict[Slot, Slot] = {}
    for num, (a, b) in enumerate(surface.pairings):
        for end in (a, b):
            if end not in canon:
                violations.append(f"pairing {num}: no such edge slot {end}")
            elif end in partner:
                violations.append(f"pairing {num}: slot {end} is matched twice")
        if violations:
            raise VerificationError(violations)
        if a == b:
            violations.append(f"pairing {num}: slot {a} glued to itself")
            raise VerificationError(violations)
        if canon[a] != -canon[b]:
            violations.append(
                f"pairing {num}: vector mismatch, {canon[a]} against {canon[b]}"
            )
        partner[a] = b
        partner[b] = a
    unmatched = sorted(sl for sl in canon if sl not in partner)
    if unmatched:
        violations.append(f"unmatched boundary edges: {unmatched}")
    if violations:
        raise VerificationError(violations)

    parent = list(range(len(pieces)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in surface.pairings:
        parent[find(a[0])] = find(b[0])
    if len({find(i) for i in range(len(pieces))}) != 1:
        raise VerificationError(("surface is disconnected",))

    corner_into: dict[Slot, tuple[Slot, float]] = {}
    for i, pc in enumerate(pieces):
        cyc, angs = _cycle_and_corners(pc)
        for pos, sid in enumerate(cyc):
            corner_into[(i, sid)] = ((i, cyc[pos - 1]), angs[pos])

    seen: set[Slot] = set()
    orbit_angles: list[float] = []
    for start in sorted(canon):
        if start in seen:
            continue
        total = 0.0
        cur = start
        guard = 0
        while True:
            seen.add(cur)
            prev_slot, ang = corner_into[cur]
            total += ang
            cur = partner[prev_slot]
            guard += 1
            if guard > 4 * len(canon):
                raise VerificationError(("vertex walk failed to close",))
            if cur == start:
                break
        orbit_angles.append(total)

    orders: list[int] = []
    for total in orbit_angles:
        k = round(total / TWO_PI)
        if k < 1 or abs(total - TWO_PI * k) > angle_tol * max(TWO_PI, abs(total)):
            violations.append(
                f"cone angle {total:.12f} is not a positive multiple of 2*pi"
            )
        else:
            orders.append(k - 1)
    if violations:
        raise VerificationError(violations)

    poles: list[tuple[int, QQi]] = []
    for i, pc in enumerate(pieces):
        order = pole_order_of_piece(pc)
        if order is None:
            continue
        res = residue_of_piece(pc)
        if order == -1 and res.is_zero():
            violations.append(f"piece {i}: zero residue at a simple pole")
        poles.append((order, res))
    if violations:
        raise VerificationError(violations)

    chi = len(pieces) + len(orbit_angles) - len(surface.pairings)
    if chi % 2 or chi > 2:
        raise VerificationError((f"Euler characteristic {chi} is not of a closed surface",))
    genus = (2 - chi) // 2

    degree = sum(orders) + sum(o for o, _ in poles)
    if degree != 2 * genus - 2:
        raise VerificationError(
            (f"degree identity fails: orders sum to {degree}, expected {2 * genus - 2}",)
        )
    return Profile(genus, tuple(sorted(orders, reverse=True)), tuple(poles))


def profile_matches(
    profile: Profile, sig: StratumSignature, residues: Sequence[QQi]
) -> bool:
    """Exact agreement of a profile with prescribed invariants.

    Zero orders are compared as multisets of positive orders; declared
    order-0 marked points must be covered by marked points of the profile,
    and surplus marked points are tolerated (marking a regular point does not
    change the differential).  Poles are compared as a multiset of
    (order, residue) pairs.
    """
    if profile.genus != sig.genus:
        return False
    want_pos = Counter(a for a in sig.zeros if a > 0)
    have_pos = Counter(a for a in profile.zero_orders if a > 0)
    if want_pos != have_pos:
        return False
    want_marked = sum(1 for a in sig.zeros if a == 0)
    have_marked = sum(1 for a in profile.zero_orders if a == 0)
    if want_marked > have_marked:
        return False
    want_poles = Counter(
        [(-b, residues[k]) for k, b in enumerate(sig.higher_poles)]
        + [(-1, residues[sig.p + k]) for k in range(sig.s)]
    )
    return want_poles == Counter(profile.poles)


# ---------------------------------------------------------------------------
# Certificates


@dataclass(frozen=True)
class BlowUpZero:
    zero_index: int
    parts: tuple[int, ...]


@dataclass(frozen=True)
class SewHandle:
    zero_index: int


Surgery = BlowUpZero | SewHandle


@dataclass(frozen=True)
class FamilyInfo:
    """Closed-form loop bookkeeping for the genus-1 zero-residue families."""

    name: str
    pole_orders: tuple[int, ...] = ()
    taus: tuple[int, ...] = ()


def family_loop_indices(family: FamilyInfo) -> tuple[int, int] | None:
    """Winding indices (alpha, beta) of the family's symplectic loop basis."""
    if family.name == "zero-residue-chain":
        return (0, sum(family.taus))
    if family.name == "double-pole-handle-chain":
        return (1, len(family.pole_orders))
    if family.name == "double-pole-two-handles":
        return (2, len(family.pole_orders) - 1)
    return None


@dataclass(frozen=True)
class ConstructionCertificate:
    """Base surfaces, node pairings, surgeries and the claimed invariants.

    Node pairings reference simple poles of the bases by (base index, pole
    index within that base's verified profile); paired poles carry opposite
    residues and disappear from the assembled profile.  Surgeries act on the
    claimed profile by bookkeeping: a blow-up splits a zero, a handle raises
    genus by one and a chosen zero's order by two.  Zero indices refer to the
    current zero tuple, sorted descending, at each step.
    """

    bases: tuple[FlatSurface, ...]
    node_pairs: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    surgeries: tuple[Surgery, ...]
    claimed: Profile
    claimed_rotation: int | None = None
    family: FamilyInfo | None = None


def _assemble(profiles: Sequence[Profile], node_pairs) -> Profile:
    violations: list[str] = []
    used: set[tuple[int, int]] = set()
    for num, (a, b) in enumerate(node_pairs):
        for end in (a, b):
            bi, pi = end
            if not (0 <= bi < len(profiles)) or not (0 <= pi < len(profiles[bi].poles)):
                violations.append(f"node pairing {num}: no pole {end}")
                raise VerificationError(violations)
            if end in used:
                violations.append(f"node pairing {num}: pole {end} used twice")
            used.add(end)
        oa, ra = profiles[a[0]].poles[a[1]]
        ob, rb = profiles[b[0]].poles[b[1]]
        if oa != -1 or ob != -1:
            violations.append(f"node pairing {num}: both poles must be simple")
        elif not (ra + rb).is_zero() or ra.is_zero():
            violations.append(
                f"node pairing {num}: node residues must be opposite and nonzero"
            )
    if violations:
        raise VerificationError(violations)

    parent = list(range(len(profiles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (ba, _), (bb, _) in node_pairs:
        parent[find(ba)] = find(bb)
    if len({find(i) for i in range(len(profiles))}) != 1:
        raise VerificationError(("assembled configuration is disconnected",))

    genus = sum(p.genus for p in profiles) + len(node_pairs) - len(profiles) + 1
    if genus < 0:
        raise VerificationError((f"assembled genus {genus} is negative",))
    zeros = tuple(
        sorted((a for p in profiles for a in p.zero_orders), reverse=True)
    )
    poles = tuple(
        (o, r)
        for bi, p in enumerate(profiles)
        for pi, (o, r) in enumerate(p.poles)
        if (bi, pi) not in used
    )
    return Profile(genus, zeros, poles)


def _apply_surgery(profile: Profile, surgery: Surgery, step: int) -> Profile:
    zeros = list(profile.zero_orders)
    if isinstance(surgery, BlowUpZero):
        if not (0 <= surgery.zero_index < len(zeros)):
            raise VerificationError((f"surgery {step}: zero index out of range",))
        order = zeros.pop(surgery.zero_index)
        if not surgery.parts or any(x <= 0 for x in surgery.parts):
            raise VerificationError((f"surgery {step}: blow-up parts must be positive",))
        if sum(surgery.parts) != order:
            raise VerificationError(
                (f"surgery {step}: parts sum to {sum(surgery.parts)}, zero has order {order}",)
            )
        zeros.extend(surgery.parts)
        return Profile(profile.genus, tuple(sorted(zeros, reverse=True)), profile.poles)
    if isinstance(surgery, SewHandle):
        if not (0 <= surgery.zero_index < len(zeros)):
            raise VerificationError((f"surgery {step}: zero index out of range",))
        zeros[surgery.zero_index] += 2
        return Profile(
            profile.genus + 1, tuple(sorted(zeros, reverse=True)), profile.poles
        )
    raise VerificationError((f"surgery {step}: unknown operation {surgery!r}",))


def blow_up_zero(
    cert: ConstructionCertificate, zero_index: int, parts: Sequence[int]
) -> ConstructionCertificate:
    """Split a zero of the claimed profile into parts of the same total order.

    Pole orders, residues and genus are unchanged.  Raises ValueError when
    the parts do not sum to the chosen zero's order.
    """
    parts = tuple(int(x) for x in parts)
    zeros = cert.claimed.zero_orders
    if not (0 <= zero_index < len(zeros)):
        raise ValueError(f"no zero with index {zero_index}")
    if not parts or any(x <= 0 for x in parts):
        raise ValueError("blow-up parts must be positive integers")
    if sum(parts) != zeros[zero_index]:
        raise ValueError(
            f"parts sum to {sum(parts)} but the zero has order {zeros[zero_index]}"
        )
    step = BlowUpZero(zero_index, parts)
    return replace(
        cert,
        surgeries=cert.surgeries + (step,),
        claimed=_apply_surgery(cert.claimed, step, len(cert.surgeries)),
        claimed_rotation=None,
    )


def sew_handle(cert: ConstructionCertificate, zero_index: int) -> ConstructionCertificate:
    """Raise genus by one and the chosen zero's order by two; residues fixed."""
    zeros = cert.claimed.zero_orders
    if not (0 <= zero_index < len(zeros)):
        raise ValueError(f"no zero with index {zero_index}")
    step = SewHandle(zero_index)
    return replace(
        cert,
        surgeries=cert.surgeries + (step,),
        claimed=_apply_surgery(cert.claimed, step, len(cert.surgeries)),
        claimed_rotation=None,
    )


def verify_certificate(cert: ConstructionCertificate) -> Profile:
    """Re-derive a certificate's profile and check it against the claim.

    Every base surface is verified from scratch; node pairings and surgeries
    are then folded in by their transformation rules.  For a claimed
    rotation number the certificate must be a pristine genus-1 family base:
    the claim must divide the gcd of all orders and must equal the family's
    closed-form gcd including the loop indices.
    """
    base_profiles: list[Profile] = []
    for i, base in enumerate(cert.bases):
        try:
            base_profiles.append(verify_surface(base))
        except VerificationError as exc:
            raise VerificationError(tuple(f"base {i}: {v}" for v in exc.violations))
    profile = _assemble(base_profiles, cert.node_pairs)
    for step, surgery in enumerate(cert.surgeries):
        profile = _apply_surgery(profile, surgery, step)

    if profile.genus != cert.claimed.genus:
        raise VerificationError(
            (f"claimed genus {cert.claimed.genus}, derived {profile.genus}",)
        )
    if profile.zero_orders != cert.claimed.zero_orders:
        raise VerificationError(
            (
                f"claimed zero orders {cert.claimed.zero_orders}, "
                f"derived {profile.zero_orders}",
            )
        )
    if Counter(profile.poles) != Counter(cert.claimed.poles):
        raise VerificationError(("claimed poles differ from the derived poles",))

    if cert.claimed_rotation is not None:
        _check_rotation(cert, profile)
    return profile


def _check_rotation(cert: ConstructionCertificate, profile: Profile) -> None:
    rot = cert.claimed_rotation
    if profile.genus != 1:
        raise VerificationError(("rotation numbers apply to genus-1 certificates",))
    if rot is None or rot < 1:
        raise VerificationError((f"invalid rotation number {rot}",))
    orders = [a for a in profile.zero_orders] + [abs(o) for o, _ in profile.poles]
    g0 = 0
    for x in orders:
        g0 = math.gcd(g0, x)
    if g0 % rot:
        raise VerificationError(
            (f"rotation {rot} does not divide gcd of the orders {g0}",)
        )
    if cert.surgeries:
        raise VerificationError(
            ("rotation claims require a pristine family base, no surgeries",)
        )
    if cert.family is None:
        raise VerificationError(("no family bookkeeping supports the rotation claim",))
    indices = family_loop_indices(cert.family)
    if indices is None:
        raise VerificationError((f"unknown family {cert.family.name!r}",))
    rot_family = g0
    for ind in indices:
        rot_family = math.gcd(rot_family, ind)
    if rot_family != rot:
        raise VerificationError(
            (f"family bookkeeping yields rotation {rot_family}, claimed {rot}",)
        )


# ---------------------------------------------------------------------------
# Elementary builders


def _cert_of(
    surface: FlatSurface,
    *,
    rotation: int | None = None,
    family: FamilyInfo | None = None,
) -> ConstructionCertificate:
    claimed = verify_surface(surface)
    return ConstructionCertificate((surface,), (), (), claimed, rotation, family)


def _flat_torus() -> FlatSurface:
    square = Polygon((_ONE, _I, -_ONE, -_I))
    return FlatSurface((square,), (((0, 0), (0, 2)), ((0, 1), (0, 3))))


def _one_pole_self_chain(order: int, tau: int = 1) -> FlatSurface:
    piece = PolarPart(order, tau, (_ONE,), (_ONE,))
    return FlatSurface((piece,), (((0, 0), (0, 1)),))


def _two_zero_chain(orders: Sequence[int], taus: Sequence[int]) -> FlatSurface:
    pieces = [PolarPart(b, t, (_ONE,), (_ONE,)) for b, t in zip(orders, taus)]
    p = len(pieces)
    pairings = [((i, 0), ((i + 1) % p, 1)) for i in range(p)]
    return FlatSurface(tuple(pieces), tuple(pairings))


def _genus1_chain(orders: Sequence[int], taus: Sequence[int]) -> FlatSurface:
    pieces: list[Piece] = [
        PolarPart(b, t, (_ONE,), (_ONE,)) for b, t in zip(orders, taus)
    ]
    p = len(pieces)
    pieces.append(Polygon((_ONE, _I, -_ONE, -_I)))
    pairings = [((i, 0), (i + 1, 1)) for i in range(p - 1)]
    pairings += [((p - 1, 0), (p, 2)), ((p, 0), (0, 1)), ((p, 1), (p, 3))]
    return FlatSurface(tuple(pieces), tuple(pairings))


def _genus1_special_two(orders: Sequence[int]) -> FlatSurface:
    if any(b != 2 for b in orders) or len(orders) < 2:
        raise ValueError("this family needs at least two poles, all of order 2")
    p = len(orders)
    pieces: list[Piece] = [PolarPart(2, 1, (_ONE,), (_ONE,)) for _ in range(p - 1)]
    pieces.append(PolarPart(2, 1, (_I, _ONE), (_ONE, _I)))
    sp = p - 1
    pairings = [((j, 0), (j + 1, 1)) for j in range(p - 2)]
    pairings += [((p - 2, 0), (sp, 2)), ((sp, 1), (0, 1)), ((sp, 0), (sp, 3))]
    return FlatSurface(tuple(pieces), tuple(pairings))


def _genus1_special_three(orders: Sequence[int]) -> FlatSurface:
    if any(b != 2 for b in orders) or len(orders) < 3:
        raise ValueError("this family needs at least three poles, all of order 2")
    p = len(orders)
    pieces: list[Piece] = [PolarPart(2, 1, (_ONE,), (_ONE,)) for _ in range(p - 2)]
    sp = p - 2
    pieces.append(PolarPart(2, 1, (_I, _ONE), (_ONE, _I)))
    pieces.append(PolarPart(2, 1, (_I,), (_I,)))
    vr = p - 1
    pairings = [((j, 0), (j + 1, 1)) for j in range(p - 3)]
    pairings += [
        ((p - 3, 0), (sp, 2)),
        ((sp, 1), (0, 1)),
        ((sp, 0), (vr, 1)),
        ((vr, 0), (sp, 3)),
    ]
    return FlatSurface(tuple(pieces), tuple(pairings))


def _choose_taus(orders: Sequence[int], total: int) -> tuple[int, ...]:
    """Types tau_i in [1, b_i - 1] with the prescribed total, greedily."""
    caps = [b - 1 for b in orders]
    if not (len(orders) <= total <= sum(caps)):
        raise ValueError(f"no admissible types reach total {total}")
    taus = []
    rest = total
    for i, cap in enumerate(caps):
        later_min = len(caps) - i - 1
        later_max = sum(caps[i + 1 :])
        t = min(cap, rest - later_min)
        t = max(t, rest - later_max, 1)
        taus.append(t)
        rest -= t
    assert rest == 0 and all(1 <= t <= c for t, c in zip(taus, caps))
    return tuple(taus)


def _sorted_by_arg(values: Sequence[QQi]) -> list[int]:
    """Indices sorted by ascending argument in (-pi, pi], ties by index."""

    def cmp(i: int, j: int) -> int:
        c = arg_cmp(values[i], values[j])
        return c if c else (i > j) - (i < j)

    return sorted(range(len(values)), key=cmp_to_key(cmp))


class _ChainWriter:
    """Splices pole pieces, trivial parts and a terminal slot into pairings."""

    def __init__(self, pairings: list) -> None:
        self.pairings = pairings

    def run(
        self,
        start: tuple[Slot, QQi],
        trivials: Sequence[tuple[int, QQi]],
        terminal: Slot,
    ) -> None:
        slot, exposure = start
        for piece_idx, u in trivials:
            # Trivial part (u; u): top slot 0 has canonical +u, bottom slot 1
            # has canonical -u.  Enter through whichever slot opposes the
            # current exposure, leave through the other.
            if exposure == u:
                self.pairings.append((slot, (piece_idx, 1)))
                slot, exposure = (piece_idx, 0), u
            elif exposure == -u:
                self.pairings.append((slot, (piece_idx, 0)))
                slot, exposure = (piece_idx, 1), -u
            else:
                raise InternalBuildError("trivial part does not fit the chain")
        self.pairings.append((slot, terminal))


def _general_nonzero_surface(
    sig: StratumSignature, residues: Sequence[QQi]
) -> FlatSurface:
    """Single zero, residues not all collinear: residual polygon plus parts.

    Each nonzero-residue pole contributes a one-chain polar part (or a
    half-infinite cylinder when simple) glued to the matching polygon edge;
    zero-residue higher poles contribute trivial parts spliced into the first
    nonzero chain.
    """
    nonzero = [k for k, r in enumerate(residues) if not r.is_zero()]
    zero_higher = [k for k in range(sig.p) if residues[k].is_zero()]
    if len(nonzero) < 2:
        raise ValueError("need at least two nonzero residues")

    edge_order = _sorted_by_arg([-residues[k] for k in nonzero])
    polygon = Polygon(tuple(-residues[nonzero[t]] for t in edge_order))
    pieces: list[Piece] = [None] * (1 + sig.p + sig.s)  # type: ignore[list-item]
    pieces[0] = polygon

    host = nonzero[0]
    u_host = residues[host] if residues[host].re >= 0 else -residues[host]
    trivial_ids: list[tuple[int, QQi]] = []
    for k in range(sig.p + sig.s):
        r = residues[k]
        if k < sig.p:
            b = sig.higher_poles[k]
            if r.is_zero():
                pieces[1 + k] = PolarPart(b, 1, (u_host,), (u_host,))
                trivial_ids.append((1 + k, u_host))
            elif r.re >= 0:
                pieces[1 + k] = PolarPart(b, 1, (r,), ())
            else:
                pieces[1 + k] = PolarPart(b, 1, (), (-r,))
        else:
            pieces[1 + k] = SimplePolePart((r,))

    pairings: list = []
    writer = _ChainWriter(pairings)
    for t, pos in enumerate(edge_order):
        k = nonzero[pos]
        trivials = trivial_ids if k == host else ()
        writer.run(((1 + k, 0), residues[k]), trivials, (0, t))
    return FlatSurface(tuple(pieces), tuple(pairings))


def _collinear_mixed_surface(
    sig: StratumSignature, residues: Sequence[QQi]
) -> FlatSurface:
    """Single zero, collinear residues, at least one higher-order pole.

    The first higher pole anchors the construction: its two chains list the
    negated negative residues on top and the positive residues below, so its
    own residue comes out right and every other pole glues to it along a
    full-residue segment.
    """
    if sig.p < 1:
        raise ValueError("an anchor pole of order at least 2 is required")
    nonzero = [k for k, r in enumerate(residues) if not r.is_zero()]
    ray = collinear_normal_form(tuple(residues[k] for k in nonzero))
    if not isinstance(ray, PrimitiveRay):
        raise ValueError("residues are not collinear")
    direction = ray.direction
    ints = list(ray.integers)
    if direction.re < 0 or (direction.re == 0 and direction.im < 0):
        direction = -direction
        ints = [-m for m in ints]
    t_of = dict(zip(nonzero, ints))

    anchor = 0  # pole position of the first higher pole
    negs = [k for k in nonzero if t_of[k] < 0 and k != anchor]
    poss = [k for k in nonzero if t_of[k] > 0 and k != anchor]
    top = tuple(-residues[k] for k in negs)
    bottom = tuple(residues[k] for k in poss)

    pieces: list[Piece] = [None] * (sig.p + sig.s)  # type: ignore[list-item]
    pieces[anchor] = PolarPart(sig.higher_poles[0], 1, top, bottom)

    host = (negs + poss)[0]
    u_host = abs(t_of[host]) * direction
    trivial_ids: list[tuple[int, QQi]] = []
    for k in range(sig.p + sig.s):
        if k == anchor:
            continue
        r = residues[k]
        if k < sig.p:
            b = sig.higher_poles[k]
            if r.is_zero():
                pieces[k] = PolarPart(b, 1, (u_host,), (u_host,))
                trivial_ids.append((k, u_host))
            elif t_of[k] > 0:
                pieces[k] = PolarPart(b, 1, (r,), ())
            else:
                pieces[k] = PolarPart(b, 1, (), (-r,))
        else:
            pieces[k] = SimplePolePart((r,))

    pairings: list = []
    writer = _ChainWriter(pairings)
    for pos, k in enumerate(negs):
        trivials = trivial_ids if k == host else ()
        writer.run(((k, 0), residues[k]), trivials, (anchor, pos))
    for pos, k in enumerate(poss):
        trivials = trivial_ids if k == host else ()
        writer.run(((k, 0), residues[k]), trivials, (anchor, len(negs) + pos))
    return FlatSurface(tuple(pieces), tuple(pairings))


def _connection_graph_surface(residues: Sequence[QQi]) -> FlatSurface:
    """Single zero, only simple poles, collinear residues, via a connection graph."""
    ray = collinear_normal_form(tuple(residues))
    if not isinstance(ray, PrimitiveRay):
        raise ValueError("residues are not collinear")
    graph = _graphs.find_connection_graph(ray)
    if graph is None:
        raise InternalBuildError("no connection graph although the decider says realizable")
    schedule = _graphs.removal_order(graph)

    plus_pos = [k for k, m in enumerate(ray.integers) if m > 0]
    minus_pos = [k for k, m in enumerate(ray.integers) if m < 0]
    vertex_of: dict[int, tuple[str, int]] = {}
    for i, k in enumerate(plus_pos):
        vertex_of[k] = ("+", i)
    for j, k in enumerate(minus_pos):
        vertex_of[k] = ("-", j)

    incident: dict[tuple[str, int], list[tuple[int, Fraction]]] = {
        v: [] for v in graph.vertices
    }
    for e_num, (leaf, nb, length) in enumerate(schedule):
        incident[leaf].append((e_num, length))
        incident[nb].append((e_num, length))

    pieces: list[Piece] = []
    slot_of_edge: dict[tuple[int, str], Slot] = {}
    for k in range(len(residues)):
        v = vertex_of[k]
        sign = 1 if v[0] == "+" else -1
        vectors = []
        for pos, (e_num, length) in enumerate(incident[v]):
            vectors.append(ray.direction * (sign * length))
            slot_of_edge[(e_num, v[0])] = (k, pos)
        pieces.append(SimplePolePart(tuple(vectors)))
    pairings = [
        (slot_of_edge[(e_num, "+")], slot_of_edge[(e_num, "-")])
        for e_num in range(len(schedule))
    ]
    return FlatSurface(tuple(pieces), tuple(pairings))


def _torus_with_hole(residues: Sequence[QQi]) -> FlatSurface:
    """Genus one, a single zero, simple poles with the given residues.

    A large square torus is slit along the convex chain of the residues
    (degenerate when they are collinear); half-infinite cylinders glue to the
    slit.  The hole is reached from a square corner through a doubled cut
    edge, which is angle-neutral.
    """
    s = len(residues)
    if s < 2:
        raise ValueError("need at least two simple poles")
    mag = Fraction(0)
    for r in residues:
        mag += abs(r.re) + abs(r.im)
    side = 4 * (mag + 1)
    big = QQi(side)

    order = _sorted_by_arg(list(residues))
    hole = [residues[i] for i in order]
    # Re-root the convex cycle at its bottom-most vertex so the cut, coming
    # up from the square corner, meets the hole from outside.
    pos = QQi(0)
    best = (Fraction(0), Fraction(0))
    jmin = 0
    for j, h in enumerate(hole[:-1], start=1):
        pos = pos + h
        key = (pos.im, pos.re)
        if key < best:
            best = key
            jmin = j
    hole = hole[jmin:] + hole[:jmin]
    order = order[jmin:] + order[:jmin]
    walk = [-hole[s - 1 - k] for k in range(s)]
    walk_idx = [order[s - 1 - k] for k in range(s)]

    d = None
    for num, den in ((0, 1), (1, 3), (1, 5), (2, 5), (1, 7), (3, 7), (2, 7)):
        cand = QQi(side / 2 + Fraction(num, den), side / 2)
        if cross(cand, walk[0]) != 0 and cross(cand, walk[-1]) != 0:
            d = cand
            break
    if d is None:
        raise InternalBuildError("no cut direction avoided the hole edges")

    edges = (d,) + tuple(walk) + (-d, big, QQi(0, side), -big, QQi(0, -side))
    pieces: list[Piece] = [Polygon(edges)]
    for r in residues:
        pieces.append(SimplePolePart((r,)))

    pairings = [
        ((0, 0), (0, s + 1)),
        ((0, s + 2), (0, s + 4)),
        ((0, s + 3), (0, s + 5)),
    ]
    for k in range(s):
        pairings.append(((0, 1 + k), (1 + walk_idx[k], 0)))
    return FlatSurface(tuple(pieces), tuple(pairings))


def _triangle_distribution(
    targets: tuple[int, int, int], other_orders: Sequence[int]
) -> list[dict[int, int]]:
    """Distribute each pole's order over two of three corners, hitting targets.

    Corner keys are 0, 1, 2 with target valences ``targets``; the greedy
    sweep moves edges from corner 1 to corner 2 pole by pole, then rebalances
    corner 0.  Every pole ends with multiplicity >= 1 at exactly two corners.
    """
    q = len(other_orders)
    mult = [{0: 1, 1: b - 1} for b in other_orders]
    val = [q, sum(b - 1 for b in other_orders), 0]
    i0 = None
    for i, b in enumerate(other_orders):
        if val[1] - (b - 1) >= targets[1]:
            mult[i] = {0: 1, 2: b - 1}
            val[1] -= b - 1
            val[2] += b - 1
        else:
            i0 = i
            k = val[1] - targets[1]
            assert 0 <= k < b - 1
            mult[i] = {1: b - 1 - k, 2: k + 1}
            val[1] = targets[1]
            val[2] += k + 1
            val[0] -= 1
            break
    if i0 is None:
        raise InternalBuildError("corner distribution never balanced the second corner")
    for j in range(i0 + 1, q):
        if val[0] > targets[0]:
            b = other_orders[j]
            mult[j] = {2: 1, 1: b - 1}
            val[0] -= 1
            val[2] += 1
            val[1] += b - 1
    if tuple(val) != targets:
        raise InternalBuildError(f"corner valences {val} missed targets {targets}")
    for m in mult:
        if len(m) != 2 or any(x < 1 for x in m.values()):
            raise InternalBuildError("a pole must meet exactly two corners")
    return mult


def _triangle_surface(sig: StratumSignature) -> FlatSurface:
    """Three zeros, zero residues, large zeros: triangle with polar chains."""
    if sig.n != 3 or sig.s != 0:
        raise ValueError("triangle construction needs three zeros and no simple poles")
    orders = sig.higher_poles
    try:
        anchor_pos = orders.index(2)
    except ValueError:
        raise InternalBuildError("no double pole available for the triangle anchor")
    others = [(k, b) for k, b in enumerate(orders) if k != anchor_pos]

    ranking = sorted(range(3), key=lambda i: sig.zeros[i])
    targets = (sig.zeros[ranking[0]], sig.zeros[ranking[1]], sig.zeros[ranking[2]])
    mult = _triangle_distribution(targets, [b for _, b in others])

    v1, v2, v3 = _I, _ONE, _ONE + _I
    chain_vec = {frozenset((0, 1)): v1, frozenset((0, 2)): v2, frozenset((1, 2)): v3}
    tau_corner = {frozenset((0, 1)): 1, frozenset((1, 2)): 1, frozenset((0, 2)): 0}

    pieces: list[Piece] = [None] * (1 + len(orders))  # type: ignore[list-item]
    pieces[0] = Polygon((-v1, v3, -v2))
    pieces[1 + anchor_pos] = PolarPart(2, 1, (v1, v2), (v3,))
    chains: dict[frozenset, list[tuple[int, QQi, int]]] = {
        key: [] for key in chain_vec
    }
    for (pole_pos, b), m in zip(others, mult):
        pair = frozenset(m)
        tau = m[tau_corner[pair]]
        u = chain_vec[pair]
        pieces[1 + pole_pos] = PolarPart(b, tau, (u,), (u,))
        chains[pair].append((1 + pole_pos, u, tau))

    pairings: list = []
    writer = _ChainWriter(pairings)
    anchor_piece = 1 + anchor_pos
    # Chains start at the anchor's three boundary segments and end on the
    # triangle; slot 0 of the triangle is -v1, slot 1 is +v3, slot 2 is -v2.
    writer.run(
        ((anchor_piece, 0), v1),
        [(pid, u) for pid, u, _ in chains[frozenset((0, 1))]],
        (0, 0),
    )
    writer.run(
        ((anchor_piece, 1), v2),
        [(pid, u) for pid, u, _ in chains[frozenset((0, 2))]],
        (0, 2),
    )
    writer.run(
        ((anchor_piece, 2), -v3),
        [(pid, u) for pid, u, _ in chains[frozenset((1, 2))]],
        (0, 1),
    )
    return FlatSurface(tuple(pieces), tuple(pairings))


# ---------------------------------------------------------------------------
# Witness dispatch


def _positive_parts(zeros: Sequence[int]) -> tuple[int, ...]:
    return tuple(a for a in zeros if a > 0)


def _blow_to_target(
    cert: ConstructionCertificate, zeros: Sequence[int]
) -> ConstructionCertificate:
    """Blow the certificate's largest zero into the prescribed positive orders."""
    parts = _positive_parts(zeros)
    if len(parts) <= 1:
        return cert
    total = sum(parts)
    idx = cert.claimed.zero_orders.index(total)
    return blow_up_zero(cert, idx, parts)


def _zero_residue_cert(sig: StratumSignature) -> ConstructionCertificate:
    orders = sig.higher_poles
    total_b = sig.pole_degree
    p = sig.p
    zeros = sorted(_positive_parts(sig.zeros), reverse=True)
    if len(zeros) == 0:
        # Only marked points; a single double pole carries them.
        return _cert_of(_one_pole_self_chain(orders[0], 1))
    if len(zeros) == 1:
        if p != 1:
            raise InternalBuildError("single large zero with several poles is excluded")
        return _cert_of(_one_pole_self_chain(orders[0], 1))
    if len(zeros) == 2:
        taus = _choose_taus(orders, zeros[0] + 1)
        return _cert_of(_two_zero_chain(orders, taus))
    lo1, lo2 = sorted(zeros)[:2]
    if len(zeros) == 3 and lo1 + lo2 > total_b - p - 1:
        sub = StratumSignature(0, tuple(zeros), orders)
        return _cert_of(_triangle_surface(sub))
    rest = sorted(zeros)[2:]
    sub = StratumSignature(0, tuple(rest + [lo1 + lo2]), orders)
    cert = _zero_residue_cert(sub)
    idx = cert.claimed.zero_orders.index(lo1 + lo2)
    return blow_up_zero(cert, idx, (lo1, lo2))


def _single_zero_nonzero_cert(
    sig: StratumSignature, residues: Sequence[QQi]
) -> ConstructionCertificate:
    nonzero = tuple(r for r in residues if not r.is_zero())
    form = collinear_normal_form(nonzero)
    if form is NON_COLLINEAR:
        return _cert_of(_general_nonzero_surface(sig, residues))
    if sig.p >= 1:
        return _cert_of(_collinear_mixed_surface(sig, residues))
    return _cert_of(_connection_graph_surface(residues))


def _stable_assembly_cert(
    sig: StratumSignature,
    residues: Sequence[QQi],
    config: "_graphs.StableConfigTree",
) -> ConstructionCertificate:
    bases: list[FlatSurface] = []
    profiles: list[Profile] = []
    half_slot: dict[tuple[int, int], tuple[int, int]] = {}
    for c_idx, comp in enumerate(config.components):
        comp_res = tuple(residues[i] for i in comp.pole_indices) + tuple(
            res for _, res in comp.node_edges
        )
        surf = _connection_graph_surface(comp_res)
        bases.append(surf)
        profiles.append(verify_surface(surf))
        for k, (other, _) in enumerate(comp.node_edges):
            half_slot[(c_idx, other)] = (c_idx, len(comp.pole_indices) + k)
    node_pairs = tuple(
        (half_slot[(u, v)], half_slot[(v, u)]) for u, v in config.edges
    )
    claimed = _assemble(profiles, node_pairs)
    return ConstructionCertificate(tuple(bases), node_pairs, (), claimed, None, None)


def _genus0_cert(
    sig: StratumSignature, residues: Sequence[QQi]
) -> ConstructionCertificate:
    if all(r.is_zero() for r in residues):
        return _zero_residue_cert(sig)
    if sig.n == 1 and sig.zeros[0] > 0:
        return _single_zero_nonzero_cert(sig, residues)
    base_sig = StratumSignature(0, (sum(sig.zeros),), sig.higher_poles, sig.s)
    if _decide.decide_realizable(base_sig, residues).realizable:
        cert = _single_zero_nonzero_cert(base_sig, residues)
        return _blow_to_target(cert, sig.zeros)
    config = _graphs.find_stable_config(sig, residues)
    if config is None:
        raise InternalBuildError(
            "no stable configuration although the decider says realizable"
        )
    return _stable_assembly_cert(sig, residues, config)


def _genus1_zero_residue_cert(
    orders: Sequence[int], rotation: int | None
) -> ConstructionCertificate:
    orders = tuple(orders)
    p = len(orders)
    a = sum(orders)
    if rotation is None:
        taus = tuple([1] * p)
        family = FamilyInfo("zero-residue-chain", orders, taus)
        return _cert_of(_genus1_chain(orders, taus), family=family)
    rot = int(rotation)
    g0 = a
    for b in orders:
        g0 = math.gcd(g0, b)
    if rot < 1 or g0 % rot:
        raise ValueError(f"rotation {rot} does not divide gcd of the orders")
    if p == 1 and rot == orders[0]:
        raise ValueError("the rotation number of this family is a strict divisor")
    for total in range(p, sum(orders) - p + 1):
        if math.gcd(g0, total) == rot:
            taus = _choose_taus(orders, total)
            family = FamilyInfo("zero-residue-chain", orders, taus)
            return _cert_of(
                _genus1_chain(orders, taus), rotation=rot, family=family
            )
    if all(b == 2 for b in orders):
        if rot == 1:
            family = FamilyInfo("double-pole-handle-chain", orders)
            return _cert_of(
                _genus1_special_two(orders), rotation=rot, family=family
            )
        if rot == 2:
            family = FamilyInfo("double-pole-two-handles", orders)
            return _cert_of(
                _genus1_special_three(orders), rotation=rot, family=family
            )
    raise ValueError(f"no family realizes rotation {rot} on this stratum")


def _genus1_cert(
    sig: StratumSignature, residues: Sequence[QQi], rotation: int | None
) -> ConstructionCertificate:
    if sig.p == 0 and sig.s == 0:
        if rotation is not None:
            raise ValueError("rotation claims need poles of order at least 2")
        return _cert_of(_flat_torus())
    if sig.p == 0:
        if rotation is not None:
            raise ValueError("rotation bookkeeping covers zero-residue families only")
        cert = _cert_of(_torus_with_hole(residues))
        return _blow_to_target(cert, sig.zeros)
    if all(r.is_zero() for r in residues):
        cert = _genus1_zero_residue_cert(sig.higher_poles, rotation)
        if len(_positive_parts(sig.zeros)) > 1:
            if rotation is not None:
                raise ValueError("rotation claims require the single-zero family base")
            cert = _blow_to_target(cert, sig.zeros)
        return cert
    if rotation is not None:
        raise ValueError("rotation bookkeeping covers zero-residue families only")
    a0 = sig.pole_degree + sig.s - 2
    base_sig = StratumSignature(0, (a0,), sig.higher_poles, sig.s)
    cert = _single_zero_nonzero_cert(base_sig, residues)
    cert = sew_handle(cert, cert.claimed.zero_orders.index(a0))
    return _blow_to_target(cert, sig.zeros)


def _higher_genus_cert(
    sig: StratumSignature, residues: Sequence[QQi], rotation: int | None
) -> ConstructionCertificate:
    if rotation is not None:
        raise ValueError("rotation numbers apply to genus-1 certificates")
    g = sig.genus
    if sig.p == 0 and sig.s == 0:
        cert = _cert_of(_flat_torus())
        for _ in range(g - 1):
            cert = sew_handle(cert, 0)
        return _blow_to_target(cert, sig.zeros)
    if sig.p == 0:
        cert = _cert_of(_torus_with_hole(residues))
        for _ in range(g - 1):
            cert = sew_handle(cert, 0)
        return _blow_to_target(cert, sig.zeros)
    if all(r.is_zero() for r in residues):
        cert = _genus1_zero_residue_cert(sig.higher_poles, None)
        for _ in range(g - 1):
            cert = sew_handle(cert, 0)
        return _blow_to_target(cert, sig.zeros)
    a0 = sig.pole_degree + sig.s - 2
    base_sig = StratumSignature(0, (a0,), sig.higher_poles, sig.s)
    cert = _single_zero_nonzero_cert(base_sig, residues)
    cert = sew_handle(cert, cert.claimed.zero_orders.index(a0))
    for _ in range(g - 1):
        cert = sew_handle(cert, 0)
    return _blow_to_target(cert, sig.zeros)


def build_witness(
    sig: StratumSignature,
    residues: Sequence[QQi] = (),
    *,
    rotation: int | None = None,
) -> ConstructionCertificate | None:
    """Construct a verified certificate for (sig, residues), or None.

    Returns None exactly when the residue tuple is not realizable on the
    stratum.  The returned certificate always passes
    :func:`verify_certificate` and reproduces the prescribed invariants; a
    failure of that round trip raises InternalBuildError.  For genus-1
    zero-residue strata a ``rotation`` number may be prescribed, selecting a
    connected component.
    """
    residues = residue_tuple(residues)
    bad = validate_residues(sig, residues)
    if bad:
        raise ValueError("; ".join(bad))
    if not _decide.decide_realizable(sig, residues).realizable:
        return None
    if sig.genus == 0:
        if rotation is not None:
            raise ValueError("rotation numbers apply to genus-1 certificates")
        cert = _genus0_cert(sig, residues)
    elif sig.genus == 1:
        cert = _genus1_cert(sig, residues, rotation)
    else:
        cert = _higher_genus_cert(sig, residues, rotation)
    final = verify_certificate(cert)
    if not profile_matches(final, sig, residues):
        raise InternalBuildError(
            f"builder output does not reproduce the request: got {final}, "
            f"wanted {sig} with residues {tuple(map(str, residues))}"
        )
    return cert
