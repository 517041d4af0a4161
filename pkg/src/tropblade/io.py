"""JSON encodings for collections, arrangements, L-vectors, Plücker vectors and blade cells."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bladecomplex import BladeArrangement, LVector
from .cyclic import CyclicGround, KSubset
from .errors import SizeError, TropBladeError
from .separation import WCollection, validate_collection
from .tropical import PluckerVector


class FormatError(TropBladeError):
    """Malformed or inconsistent JSON input."""


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(text: Any) -> Fraction:
    try:
        return Fraction(str(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational number: {text!r}") from exc


def _ground(n: int, level) -> CyclicGround:
    return CyclicGround.of(int(n), [int(x) for x in level])


def collection_to_json(W: WCollection) -> dict:
    return {
        "n": W.n,
        "k": W.k,
        "level": sorted(W.ground.removed),
        "sets": [list(s.members) for s in W.sorted()],
    }


def collection_from_json(data: dict) -> WCollection:
    try:
        ground = _ground(data["n"], data.get("level", []))
        sets = [KSubset.of([int(x) for x in s], ground) for s in data["sets"]]
        k = int(data["k"]) if "k" in data else None
    except (KeyError, TypeError) as exc:
        raise FormatError(f"collection JSON needs 'n' and 'sets': {exc}") from exc
    return validate_collection(sets, ground, k)


def arrangement_to_json(arr: BladeArrangement) -> dict:
    return {
        "n": arr.ground.n,
        "level": sorted(arr.level),
        "terms": [{"set": list(s.members), "weight": fraction_str(w)} for s, w in arr.sorted_terms()],
    }


def arrangement_from_json(data: dict, size: int | None = None) -> BladeArrangement:
    try:
        ground = _ground(data["n"], data.get("level", []))
        terms = {}
        for t in data["terms"]:
            s = KSubset.of([int(x) for x in t["set"]], ground)
            terms[s] = terms.get(s, Fraction(0)) + parse_fraction(t.get("weight", 1))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"arrangement JSON needs 'n' and 'terms': {exc}") from exc
    sizes = {len(s) for s in terms} | ({size} if size is not None else set())
    if len(sizes) > 1:
        raise SizeError(f"arrangement mixes subset sizes {sorted(sizes)}")
    if not sizes:
        raise FormatError("an empty arrangement needs an explicit size")
    return BladeArrangement(ground, sizes.pop(), terms)


def lvector_to_json(c: LVector) -> dict:
    return {
        "n": c.ground.n,
        "level": sorted(c.level),
        "size": c.size,
        "coefficients": {",".join(map(str, s.members)): fraction_str(w) for s, w in sorted(c.coeffs.items(), key=lambda kv: kv[0].mask)},
        "frozen": arrangement_to_json(c.frozen)["terms"],
    }


def plucker_to_json(p: PluckerVector) -> dict:
    return {
        "n": p.n,
        "k": p.k,
        "entries": {",".join(map(str, s.members)): fraction_str(v) for s, v in p.sorted_items()},
    }


def plucker_from_json(data: dict) -> PluckerVector:
    try:
        n, k = int(data["n"]), int(data["k"])
        ground = CyclicGround(n)
        entries = {}
        for key, v in data["entries"].items():
            labels = [int(x) for x in key.split(",")]
            if len(labels) != k:
                raise SizeError(f"entry {key!r} does not have {k} labels")
            entries[KSubset.of(labels, ground)] = parse_fraction(v)
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        if isinstance(exc, TropBladeError):
            raise
        raise FormatError(f"Plücker JSON needs 'n', 'k' and 'entries': {exc}") from exc
    return PluckerVector(n, k, entries)


def cells_to_json(J: KSubset, cells) -> dict:
    return {
        "blade": list(J.members),
        "cells": [[list(s.members) for s in sorted(c, key=lambda s: s.mask)] for c in cells],
    }


def load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from exc


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False)

