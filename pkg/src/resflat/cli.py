"""Command-line front end: JSON in, JSON out, deterministic output.

Subcommands: decide, witness, verify, table, oracle-check, cylinders.
Exit status 0 means realizable / verified / full agreement, 1 means not
realizable / violation / disagreement, 2 means a malformed document, a
validation error or an exhausted search budget.

Document formats (format_version "1").  Rationals are [numerator,
denominator] pairs in lowest terms with positive denominators; a bare
integer is accepted on input.  Gaussian rationals are {"re": rational,
"im": rational}; bare integers and rationals are accepted and taken real.
Strata are {"genus", "zeros", "poles", "simple_poles"} with positive pole
orders.  A surface document lists pieces and pairings of edge slots; slot
k of a polygon is its k-th edge, slots of a polar part list the top chain
then the bottom chain, slots of a simple-pole part are its chain vectors.
Matched slots carry equal vectors with the two pieces on opposite sides.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from fractions import Fraction
from math import gcd
from typing import Any

from .core import QQi, StratumSignature, residue_tuple
from . import decide as _decide
from . import graphs as _graphs
from . import surfaces as _surfaces

FORMAT_VERSION = "1"


class DocumentError(Exception):
    def __init__(self, path: str, message: str) -> None:
        self.path = path
        super().__init__(f"{path}: {message}")


# ---------------------------------------------------------------------------
# JSON codecs


def _frac_to_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _frac_from_json(doc: Any, path: str) -> Fraction:
    if isinstance(doc, bool):
        raise DocumentError(path, "expected a rational, got a boolean")
    if isinstance(doc, int):
        return Fraction(doc)
    if isinstance(doc, list) and len(doc) == 2 and all(isinstance(v, int) for v in doc):
        if doc[1] == 0:
            raise DocumentError(path, "zero denominator")
        return Fraction(doc[0], doc[1])
    raise DocumentError(path, "expected an integer or a [numerator, denominator] pair")


def _qqi_to_json(z: QQi) -> dict:
    return {"re": _frac_to_json(z.re), "im": _frac_to_json(z.im)}


def _qqi_from_json(doc: Any, path: str) -> QQi:
    if isinstance(doc, dict):
        extra = set(doc) - {"re", "im"}
        if extra:
            raise DocumentError(path, f"unexpected fields {sorted(extra)}")
        re = _frac_from_json(doc.get("re", 0), path + ".re")
        im = _frac_from_json(doc.get("im", 0), path + ".im")
        return QQi(re, im)
    return QQi(_frac_from_json(doc, path))


def _stratum_to_json(sig: StratumSignature) -> dict:
    return {
        "genus": sig.genus,
        "zeros": list(sig.zeros),
        "poles": list(sig.higher_poles),
        "simple_poles": sig.simple_poles,
    }


def _int_list(doc: Any, path: str) -> list[int]:
    if not isinstance(doc, list) or any(
        isinstance(v, bool) or not isinstance(v, int) for v in doc
    ):
        raise DocumentError(path, "expected a list of integers")
    return list(doc)


def _stratum_from_json(doc: Any, path: str) -> StratumSignature:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected a stratum object")
    if not isinstance(doc.get("genus"), int) or isinstance(doc.get("genus"), bool):
        raise DocumentError(path + ".genus", "expected an integer")
    zeros = _int_list(doc.get("zeros", []), path + ".zeros")
    poles = _int_list(doc.get("poles", []), path + ".poles")
    simple = doc.get("simple_poles", 0)
    if isinstance(simple, bool) or not isinstance(simple, int):
        raise DocumentError(path + ".simple_poles", "expected an integer")
    return StratumSignature(doc["genus"], zeros, poles, simple)


def _residues_from_json(doc: Any, path: str) -> tuple[QQi, ...]:
    if not isinstance(doc, list):
        raise DocumentError(path, "expected a list")
    return tuple(_qqi_from_json(v, f"{path}[{k}]") for k, v in enumerate(doc))


def _piece_to_json(piece: _surfaces.Piece) -> dict:
    if isinstance(piece, _surfaces.Polygon):
        return {"kind": "polygon", "edges": [_qqi_to_json(e) for e in piece.edges]}
    if isinstance(piece, _surfaces.PolarPart):
        return {
            "kind": "polar_part",
            "order": piece.order,
            "type": piece.pole_type,
            "top": [_qqi_to_json(v) for v in piece.top],
            "bottom": [_qqi_to_json(v) for v in piece.bottom],
        }
    return {
        "kind": "simple_pole_part",
        "vectors": [_qqi_to_json(v) for v in piece.vectors],
    }


def _piece_from_json(doc: Any, path: str) -> _surfaces.Piece:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise DocumentError(path, "expected a piece object with a 'kind'")
    kind = doc["kind"]
    if kind == "polygon":
        return _surfaces.Polygon(_residues_from_json(doc.get("edges"), path + ".edges"))
    if kind == "polar_part":
        if not isinstance(doc.get("order"), int) or not isinstance(doc.get("type"), int):
            raise DocumentError(path, "polar parts need integer 'order' and 'type'")
        return _surfaces.PolarPart(
            doc["order"],
            doc["type"],
            _residues_from_json(doc.get("top", []), path + ".top"),
            _residues_from_json(doc.get("bottom", []), path + ".bottom"),
        )
    if kind == "simple_pole_part":
        return _surfaces.SimplePolePart(
            _residues_from_json(doc.get("vectors"), path + ".vectors")
        )
    raise DocumentError(path + ".kind", f"unknown piece kind {kind!r}")


def _slot_from_json(doc: Any, path: str) -> tuple[int, int]:
    pair = _int_list(doc, path)
    if len(pair) != 2:
        raise DocumentError(path, "expected [piece, slot]")
    return (pair[0], pair[1])


def _surface_to_json(surface: _surfaces.FlatSurface) -> dict:
    return {
        "pieces": [_piece_to_json(p) for p in surface.pieces],
        "pairings": [[list(a), list(b)] for a, b in surface.pairings],
    }


def _surface_from_json(doc: Any, path: str) -> _surfaces.FlatSurface:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected a surface object")
    pieces_doc = doc.get("pieces")
    if not isinstance(pieces_doc, list):
        raise DocumentError(path + ".pieces", "expected a list")
    pieces = [
        _piece_from_json(p, f"{path}.pieces[{k}]") for k, p in enumerate(pieces_doc)
    ]
    pairings_doc = doc.get("pairings", [])
    if not isinstance(pairings_doc, list):
        raise DocumentError(path + ".pairings", "expected a list")
    pairings = []
    for k, pair in enumerate(pairings_doc):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"{path}.pairings[{k}]", "expected [[piece, slot], [piece, slot]]")
        pairings.append(
            (
                _slot_from_json(pair[0], f"{path}.pairings[{k}][0]"),
                _slot_from_json(pair[1], f"{path}.pairings[{k}][1]"),
            )
        )
    return _surfaces.FlatSurface(pieces, pairings)


def _profile_to_json(profile: _surfaces.Profile) -> dict:
    return {
        "genus": profile.genus,
        "zeros": list(profile.zero_orders),
        "poles": [
            {"order": o, "residue": _qqi_to_json(r)} for o, r in profile.poles
        ],
    }


def _profile_from_json(doc: Any, path: str) -> _surfaces.Profile:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected a profile object")
    zeros = tuple(_int_list(doc.get("zeros", []), path + ".zeros"))
    poles_doc = doc.get("poles", [])
    if not isinstance(poles_doc, list):
        raise DocumentError(path + ".poles", "expected a list")
    poles = []
    for k, pd in enumerate(poles_doc):
        if not isinstance(pd, dict) or not isinstance(pd.get("order"), int):
            raise DocumentError(f"{path}.poles[{k}]", "expected an object with 'order'")
        poles.append(
            (pd["order"], _qqi_from_json(pd.get("residue", 0), f"{path}.poles[{k}].residue"))
        )
    genus = doc.get("genus")
    if isinstance(genus, bool) or not isinstance(genus, int):
        raise DocumentError(path + ".genus", "expected an integer")
    return _surfaces.Profile(genus, zeros, tuple(poles))


def _certificate_to_json(cert: _surfaces.ConstructionCertificate) -> dict:
    surgeries = []
    for sg in cert.surgeries:
        if isinstance(sg, _surfaces.BlowUpZero):
            surgeries.append(
                {"op": "blow_up_zero", "zero": sg.zero_index, "parts": list(sg.parts)}
            )
        else:
            surgeries.append({"op": "sew_handle", "zero": sg.zero_index})
    family = None
    if cert.family is not None:
        family = {
            "name": cert.family.name,
            "pole_orders": list(cert.family.pole_orders),
            "taus": list(cert.family.taus),
        }
    return {
        "format_version": FORMAT_VERSION,
        "kind": "certificate",
        "bases": [_surface_to_json(s) for s in cert.bases],
        "node_pairings": [[list(a), list(b)] for a, b in cert.node_pairs],
        "surgeries": surgeries,
        "claimed_profile": _profile_to_json(cert.claimed),
        "claimed_rotation": cert.claimed_rotation,
        "family": family,
    }


def _certificate_from_json(doc: Any, path: str = "$") -> _surfaces.ConstructionCertificate:
    if not isinstance(doc, dict):
        raise DocumentError(path, "expected a certificate object")
    bases_doc = doc.get("bases")
    if not isinstance(bases_doc, list) or not bases_doc:
        raise DocumentError(path + ".bases", "expected a nonempty list of surfaces")
    bases = tuple(
        _surface_from_json(b, f"{path}.bases[{k}]") for k, b in enumerate(bases_doc)
    )
    node_pairs = []
    for k, pair in enumerate(doc.get("node_pairings", [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise DocumentError(f"{path}.node_pairings[{k}]", "expected a pair")
        node_pairs.append(
            (
                _slot_from_json(pair[0], f"{path}.node_pairings[{k}][0]"),
                _slot_from_json(pair[1], f"{path}.node_pairings[{k}][1]"),
            )
        )
    surgeries = []
    for k, sg in enumerate(doc.get("surgeries", [])):
        spath = f"{path}.surgeries[{k}]"
        if not isinstance(sg, dict) or "op" not in sg:
            raise DocumentError(spath, "expected an object with an 'op'")
        if not isinstance(sg.get("zero"), int):
            raise DocumentError(spath + ".zero", "expected an integer")
        if sg["op"] == "blow_up_zero":
            surgeries.append(
                _surfaces.BlowUpZero(
                    sg["zero"], tuple(_int_list(sg.get("parts"), spath + ".parts"))
                )
            )
        elif sg["op"] == "sew_handle":
            surgeries.append(_surfaces.SewHandle(sg["zero"]))
        else:
            raise DocumentError(spath + ".op", f"unknown surgery {sg['op']!r}")
    claimed = _profile_from_json(doc.get("claimed_profile"), path + ".claimed_profile")
    rotation = doc.get("claimed_rotation")
    if rotation is not None and (isinstance(rotation, bool) or not isinstance(rotation, int)):
        raise DocumentError(path + ".claimed_rotation", "expected an integer or null")
    family = None
    fam_doc = doc.get("family")
    if fam_doc is not None:
        if not isinstance(fam_doc, dict) or not isinstance(fam_doc.get("name"), str):
            raise DocumentError(path + ".family", "expected an object with a 'name'")
        family = _surfaces.FamilyInfo(
            fam_doc["name"],
            tuple(_int_list(fam_doc.get("pole_orders", []), path + ".family.pole_orders")),
            tuple(_int_list(fam_doc.get("taus", []), path + ".family.taus")),
        )
    return _surfaces.ConstructionCertificate(
        bases, tuple(node_pairs), tuple(surgeries), claimed, rotation, family
    )


def _verdict_to_json(verdict: _decide.Verdict) -> dict:
    return {
        "realizable": verdict.realizable,
        "reason": verdict.reason,
        "certificate_hint": verdict.certificate_hint,
        "every_component": verdict.every_component,
    }


# ---------------------------------------------------------------------------
# I/O helpers


def _read_document(source: str) -> Any:
    text = sys.stdin.read() if source == "-" else open(source, "r", encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"line {exc.lineno} column {exc.colno}", exc.msg
        ) from None


def _write_document(doc: Any, out: str | None) -> None:
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _request_pair(doc: Any) -> tuple[StratumSignature, tuple[QQi, ...]]:
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected an object with 'stratum' and 'residues'")
    sig = _stratum_from_json(doc.get("stratum"), "$.stratum")
    residues = _residues_from_json(doc.get("residues", []), "$.residues")
    return sig, residues


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_decide(args: argparse.Namespace) -> int:
    sig, residues = _request_pair(_read_document(args.input))
    verdict = _decide.decide_realizable(sig, residues)
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": "verdict",
        "stratum": _stratum_to_json(sig),
        "verdict": _verdict_to_json(verdict),
    }
    _write_document(doc, args.output)
    return 0 if verdict.realizable else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    doc_in = _read_document(args.input)
    sig, residues = _request_pair(doc_in)
    rotation = doc_in.get("rotation") if isinstance(doc_in, dict) else None
    if rotation is not None and (isinstance(rotation, bool) or not isinstance(rotation, int)):
        raise DocumentError("$.rotation", "expected an integer or null")
    cert = _surfaces.build_witness(sig, residues, rotation=rotation)
    if cert is None:
        verdict = _decide.decide_realizable(sig, residues)
        _write_document(
            {
                "format_version": FORMAT_VERSION,
                "kind": "verdict",
                "stratum": _stratum_to_json(sig),
                "verdict": _verdict_to_json(verdict),
            },
            args.output,
        )
        return 1
    doc = _certificate_to_json(cert)
    _write_document(doc, args.output)
    if args.svg:
        _emit_svg(cert, args.svg)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    cert = _certificate_from_json(_read_document(args.input))
    try:
        profile = _surfaces.verify_certificate(cert)
    except _surfaces.VerificationError as exc:
        _write_document(
            {
                "format_version": FORMAT_VERSION,
                "kind": "violation",
                "violations": list(exc.violations),
            },
            args.output,
        )
        return 1
    _write_document(
        {
            "format_version": FORMAT_VERSION,
            "kind": "profile",
            "profile": _profile_to_json(profile),
        },
        args.output,
    )
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.input:
        doc = _read_document(args.input)
        if not isinstance(doc, dict):
            raise DocumentError("$", "expected an object")
        s_min = doc.get("s_min", 2)
        s_max = doc.get("s_max")
        max_zero = doc.get("max_zero")
    else:
        s_min, s_max, max_zero = args.s_min, args.s_max, args.max_zero
    if not isinstance(s_min, int) or not isinstance(s_max, int) or s_max < s_min:
        raise DocumentError("$.s_min/s_max", "expected integers with s_min <= s_max")
    rows = []
    for s in range(s_min, s_max + 1):
        bound = max_zero if max_zero is not None else s - 2
        rays = _decide.enumerate_excluded_rays(s, bound)
        rows.append(
            {
                "s": s,
                "max_zero": bound,
                "count": len(rays),
                "rays": [list(ray.integers) for ray in rays],
            }
        )
    _write_document(
        {"format_version": FORMAT_VERSION, "kind": "excluded-ray-table", "rows": rows},
        args.output,
    )
    return 0


def _oracle_cases(s_max: int, entry_bound: int):
    values = [v for v in range(-entry_bound, entry_bound + 1) if v]
    for s in range(2, s_max + 1):
        for combo in itertools.combinations_with_replacement(values, s):
            if sum(combo) != 0:
                continue
            g = 0
            for m in combo:
                g = gcd(g, abs(m))
            if g != 1:
                continue
            if not any(m > 0 for m in combo) or not any(m < 0 for m in combo):
                continue
            yield combo


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.input:
        doc = _read_document(args.input)
        if not isinstance(doc, dict):
            raise DocumentError("$", "expected an object")
        s_max = doc.get("s_max", args.s_max)
        entry_bound = doc.get("entry_bound", args.entry_bound)
        mode = doc.get("mode", args.mode)
    else:
        s_max, entry_bound, mode = args.s_max, args.entry_bound, args.mode
    cases = 0
    disagreements = []
    for combo in _oracle_cases(s_max, entry_bound):
        cases += 1
        sig = StratumSignature(0, (len(combo) - 2,), (), len(combo))
        closed = _decide.decide_realizable(sig, residue_tuple(combo)).realizable
        brute = _graphs.find_connection_graph(combo, mode=mode) is not None
        if closed != brute:
            disagreements.append(
                {"tuple": list(combo), "closed_form": closed, "brute_force": brute}
            )
    agreement = "100%" if not disagreements else (
        f"{100.0 * (cases - len(disagreements)) / cases:.4f}%"
    )
    _write_document(
        {
            "format_version": FORMAT_VERSION,
            "kind": "oracle-check",
            "mode": mode,
            "cases": cases,
            "disagreements": disagreements,
            "agreement": agreement,
        },
        args.output,
    )
    return 0 if not disagreements else 1


def _cmd_cylinders(args: argparse.Namespace) -> int:
    doc = _read_document(args.input)
    if not isinstance(doc, dict):
        raise DocumentError("$", "expected an object")
    sig = _stratum_from_json(doc.get("stratum"), "$.stratum")
    lam = _residues_from_json(doc.get("circumferences"), "$.circumferences")
    outcome = _decide.decide_cylinder_tuple(sig, lam)
    via = "closed-form"
    if isinstance(outcome, _decide.NeedsSearch):
        via = "search"
        kwargs = {} if args.budget is None else {"budget": args.budget}
        config = _graphs.find_cylinder_config(sig, lam, **kwargs)
        if config is None:
            verdict = _decide.Verdict(False, _decide.REASON_SEARCH_NONE)
        else:
            verdict = _decide.Verdict(
                True, _decide.REASON_SEARCH_REALIZABLE, "stable-tree"
            )
    else:
        verdict = outcome
    _write_document(
        {
            "format_version": FORMAT_VERSION,
            "kind": "verdict",
            "stratum": _stratum_to_json(sig),
            "via": via,
            "verdict": _verdict_to_json(verdict),
        },
        args.output,
    )
    return 0 if verdict.realizable else 1


# ---------------------------------------------------------------------------
# SVG emission (informational only, never parsed back)


def _piece_drawing(piece: _surfaces.Piece) -> tuple[list, tuple[float, float, float, float]]:
    """Line segments [(x1, y1, x2, y2, slot_id)] and a bounding box."""
    segs = []
    if isinstance(piece, _surfaces.Polygon):
        x = y = 0.0
        for k, e in enumerate(piece.edges):
            nx, ny = x + float(e.re), y + float(e.im)
            segs.append((x, y, nx, ny, k))
            x, y = nx, ny
    elif isinstance(piece, _surfaces.PolarPart):
        x = y = 0.0
        for k, v in enumerate(piece.top):
            nx, ny = x + float(v.re), y + float(v.im)
            segs.append((x, y, nx, ny, k))
            x, y = nx, ny
        x, y = 0.0, -1.0
        for j, w in enumerate(piece.bottom):
            nx, ny = x + float(w.re), y + float(w.im)
            segs.append((x, y, nx, ny, len(piece.top) + j))
            x, y = nx, ny
    else:
        x = y = 0.0
        for k, v in enumerate(piece.vectors):
            nx, ny = x + float(v.re), y + float(v.im)
            segs.append((x, y, nx, ny, k))
            x, y = nx, ny
    xs = [c for s in segs for c in (s[0], s[2])] or [0.0]
    ys = [c for s in segs for c in (s[1], s[3])] or [0.0]
    return segs, (min(xs), min(ys), max(xs), max(ys))


def _emit_svg(cert: _surfaces.ConstructionCertificate, path: str) -> None:
    """Draw the pieces of every base with shared labels on matched edges."""
    scale = 40.0
    pad = 30.0
    elements = []
    cursor_x = 0.0
    max_y = 0.0
    for surface in cert.bases:
        labels = {}
        for num, (a, b) in enumerate(surface.pairings):
            labels[a] = num
            labels[b] = num
        for idx, piece in enumerate(surface.pieces):
            segs, (x0, y0, x1, y1) = _piece_drawing(piece)
            w = max(x1 - x0, 1.0)
            h = (y1 - y0) * scale
            for sx, sy, ex, ey, slot in segs:
                a = (cursor_x + (sx - x0) * scale, 20.0 + (y1 - sy) * scale)
                b = (cursor_x + (ex - x0) * scale, 20.0 + (y1 - ey) * scale)
                elements.append(
                    f'<line x1="{a[0]:.1f}" y1="{a[1]:.1f}" x2="{b[0]:.1f}" '
                    f'y2="{b[1]:.1f}" stroke="black" stroke-width="1.5"/>'
                )
                tag = labels.get((idx, slot))
                if tag is not None:
                    mx, my = (a[0] + b[0]) / 2, (a[1] + b[1]) / 2 - 4
                    elements.append(
                        f'<text x="{mx:.1f}" y="{my:.1f}" font-size="11" '
                        f'text-anchor="middle" fill="crimson">{tag}</text>'
                    )
            name = type(piece).__name__
            elements.append(
                f'<text x="{cursor_x:.1f}" y="{h + 40.0:.1f}" '
                f'font-size="10" fill="gray">{name} #{idx}</text>'
            )
            max_y = max(max_y, h + 60.0)
            cursor_x += w * scale + pad
        cursor_x += 2 * pad
    width = max(cursor_x, 100.0)
    height = max(max_y, 100.0)
    body = "\n".join(elements)
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {width:.0f} '
        f'{height:.0f}" width="{width:.0f}" height="{height:.0f}">\n'
        f'<rect width="100%" height="100%" fill="white"/>\n{body}\n</svg>\n'
    )
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(svg)


# ---------------------------------------------------------------------------
# Entry point


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resflat",
        description=(
            "Decide, construct and verify realizability of prescribed "
            "zero/pole orders and residues of meromorphic abelian differentials."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, needs_input: bool = True):
        cmd = sub.add_parser(name)
        if needs_input:
            cmd.add_argument("input", help="input JSON document, or - for stdin")
        else:
            cmd.add_argument(
                "input", nargs="?", default=None, help="optional input JSON document"
            )
        cmd.add_argument("-o", "--output", default=None, help="output path (default stdout)")
        return cmd

    add("decide")
    w = add("witness")
    w.add_argument("--svg", default=None, help="also draw the base surfaces to this SVG file")
    add("verify")
    t = add("table", needs_input=False)
    t.add_argument("--s-min", type=int, default=2)
    t.add_argument("--s-max", type=int, default=6)
    t.add_argument("--max-zero", type=int, default=None)
    o = add("oracle-check", needs_input=False)
    o.add_argument("--s-max", type=int, default=7)
    o.add_argument("--entry-bound", type=int, default=5)
    o.add_argument("--mode", choices=("universal", "existential"), default="universal")
    c = add("cylinders")
    c.add_argument("--budget", type=int, default=None, help="search budget")
    return parser


_COMMANDS = {
    "decide": _cmd_decide,
    "witness": _cmd_witness,
    "verify": _cmd_verify,
    "table": _cmd_table,
    "oracle-check": _cmd_oracle_check,
    "cylinders": _cmd_cylinders,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _graphs.SearchBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
