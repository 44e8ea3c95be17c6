"""Instance files: the JSON schema the CLI speaks.

Keys: "name", "dim", "faces" [{"id","codim"}], "inclusions"
[[child,parent]] (child inside parent, codim difference one), optional
"lambda" {facet: [n bits]}, optional "triangulation" {"points": count,
"simplices": [{"verts": [...], "carrier": id}]} listing every simplex
of every dimension.  Parsing returns a fully validated Instance or
raises InputError carrying all witnesses found.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .charfunc import CharFunction, validate_lambda
from .complexes import CarrierComplex, validate_carriers
from .errors import InputError
from .gf2 import Vec
from .poset import FacePoset, validate

TOP_KEYS = {"name", "dim", "faces", "inclusions", "lambda", "triangulation"}


@dataclass
class Instance:
    name: str
    poset: FacePoset
    lam: CharFunction | None
    triangulation: CarrierComplex | None


def parse_instance(data: object) -> Instance:
    errors: list[str] = []
    if not isinstance(data, dict):
        raise InputError("instance must be a JSON object")
    for key in data:
        if key not in TOP_KEYS:
            errors.append(f"unknown key {key!r}")
    for key in ("name", "dim", "faces", "inclusions"):
        if key not in data:
            errors.append(f"missing key {key!r}")
    if errors:
        raise InputError(errors)

    name = data["name"]
    n = data["dim"]
    if not isinstance(name, str):
        errors.append("name must be a string")
    if not isinstance(n, int) or n < 0:
        errors.append("dim must be a non-negative integer")
    codims: dict[str, int] = {}
    for entry in data["faces"]:
        if not isinstance(entry, dict) or set(entry) != {"id", "codim"}:
            errors.append(f"face entry {entry!r} must be {{id, codim}}")
            continue
        fid, k = entry["id"], entry["codim"]
        if not isinstance(fid, str) or not isinstance(k, int):
            errors.append(f"face entry {entry!r} has wrong types")
            continue
        if fid in codims:
            errors.append(f"duplicate face id {fid!r}")
        codims[fid] = k
    covers: set[tuple[str, str]] = set()
    for pair in data["inclusions"]:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, str) for x in pair)
        ):
            errors.append(f"inclusion {pair!r} must be [child, parent]")
            continue
        child, parent = pair
        for x in (child, parent):
            if x not in codims:
                errors.append(f"inclusion {pair!r} names unknown face {x!r}")
        covers.add((child, parent))
    if errors:
        raise InputError(errors)

    try:
        poset = FacePoset(n, codims, covers)
    except ValueError as exc:
        raise InputError(str(exc))
    rep = validate(poset)
    if not rep.sound:
        raise InputError(rep.structural + rep.simplicial + rep.nice)

    lam = None
    if "lambda" in data:
        raw = data["lambda"]
        if not isinstance(raw, dict):
            raise InputError("lambda must be an object mapping facet to bit list")
        values: dict[str, Vec] = {}
        for fid, bits in sorted(raw.items()):
            if not isinstance(bits, list) or len(bits) != n or any(
                b not in (0, 1) for b in bits
            ):
                errors.append(f"lambda[{fid!r}] must be a list of {n} bits")
                continue
            values[fid] = Vec.from_bits(bits)
        if errors:
            raise InputError(errors)
        lam = CharFunction(n, values)
        lrep = validate_lambda(poset, lam)
        if not lrep.ok:
            raise InputError(lrep.witnesses())

    tri = None
    if "triangulation" in data:
        raw = data["triangulation"]
        if (
            not isinstance(raw, dict)
            or set(raw) != {"points", "simplices"}
            or not isinstance(raw.get("points"), int)
        ):
            raise InputError("triangulation must be {points, simplices}")
        simplices: dict[tuple[int, ...], str] = {}
        for entry in raw["simplices"]:
            if not isinstance(entry, dict) or set(entry) != {"verts", "carrier"}:
                errors.append(f"simplex entry {entry!r} must be {{verts, carrier}}")
                continue
            verts, carrier = entry["verts"], entry["carrier"]
            if (
                not isinstance(verts, list)
                or not verts
                or any(not isinstance(v, int) for v in verts)
                or sorted(set(verts)) != verts
            ):
                errors.append(f"simplex verts {verts!r} must be a sorted list of distinct ints")
                continue
            if any(v < 0 or v >= raw["points"] for v in verts):
                errors.append(f"simplex {verts!r} uses points outside 0..{raw['points'] - 1}")
                continue
            key = tuple(verts)
            if key in simplices:
                errors.append(f"simplex {verts!r} listed twice")
            if carrier not in codims:
                errors.append(f"simplex {verts!r} carried by unknown face {carrier!r}")
                continue
            simplices[key] = carrier
        if errors:
            raise InputError(errors)
        tri = CarrierComplex(poset, raw["points"], simplices)
        crep = validate_carriers(tri, require_face_dims=True)
        if not crep.ok:
            raise InputError(crep.witnesses())
    return Instance(name, poset, lam, tri)


def load_instance(path: str | Path) -> Instance:
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")
    return parse_instance(data)


def serialize_instance(inst: Instance) -> dict:
    p = inst.poset
    out: dict = {
        "name": inst.name,
        "dim": p.n,
        "faces": [{"id": f, "codim": p.codim(f)} for f in p.faces()],
        "inclusions": sorted([c, q] for c, q in p.covers),
    }
    if inst.lam is not None:
        out["lambda"] = {F: inst.lam.vec(F).to_bits() for F in sorted(inst.lam.values)}
    if inst.triangulation is not None:
        tri = inst.triangulation
        out["triangulation"] = {
            "points": tri.n_points,
            "simplices": [
                {"verts": list(sx), "carrier": tri.simplices[sx]}
                for sx in sorted(tri.simplices, key=lambda s: (len(s), s))
            ],
        }
    return out


def save_instance(inst: Instance, path: str | Path) -> None:
    Path(path).write_text(json.dumps(serialize_instance(inst), indent=1) + "\n")
