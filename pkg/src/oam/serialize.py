"""JSON and text formats shared by the library and the CLI."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from . import bits
from .arithmetic import Multiplicity
from .chirotope import Chirotope
from .matroid import Matroid
from .realization import IntegerMatrix, IntegerRepresentation, RationalRealization


class FormatError(ValueError):
    pass


def dumps(obj: Any) -> str:
    """Canonical JSON: sorted keys, no insignificant whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def matroid_to_json(mat: Matroid) -> dict:
    out = {"n": mat.n, "bases": [list(bits.elements(b)) for b in mat.sorted_bases()]}
    if mat.labels is not None and mat.labels != tuple(range(1, mat.n + 1)):
        out["labels"] = list(mat.labels)
    return out


def matroid_from_json(d: dict) -> Matroid:
    try:
        n = int(d["n"])
        bases = frozenset(bits.mask(b) for b in d["bases"])
        labels = tuple(int(v) for v in d["labels"]) if "labels" in d else None
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad matroid object: {exc}") from exc
    return Matroid(n, bases, labels)


def multiplicity_to_json(m: Multiplicity) -> dict:
    return {"n": m.n, "m": {str(s): str(v) for s, v in enumerate(m.table)}}


def multiplicity_from_json(d: dict) -> Multiplicity:
    try:
        n = int(d["n"])
        table = d["m"]
        values = [int(table[str(s)]) for s in range(1 << n)]
    except KeyError as exc:
        raise FormatError(f"multiplicity table is missing subset {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad multiplicity object: {exc}") from exc
    if len(table) != 1 << n:
        raise FormatError("multiplicity table has keys outside the power set")
    return Multiplicity(n, tuple(values))


def chirotope_to_json(chi: Chirotope) -> dict:
    return {"n": chi.n, "r": chi.r,
            "signs": {",".join(map(str, bits.elements(s))): v for s, v in chi.signs.items()}}


def chirotope_from_json(d: dict) -> Chirotope:
    try:
        n, r = int(d["n"]), int(d["r"])
        signs = {}
        for key, v in d["signs"].items():
            tup = tuple(int(t) for t in key.split(",")) if key else ()
            if len(tup) != r:
                raise ValueError(f"key {key!r} does not have {r} elements")
            sign, s = bits.tuple_to_mask(tup)
            if not sign:
                raise ValueError(f"key {key!r} repeats an element")
            signs[s] = sign * int(v)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"bad chirotope object: {exc}") from exc
    return Chirotope(n, r, signs)


def bundle_to_json(matroid: Matroid, m: Multiplicity, chi: Chirotope | None = None) -> dict:
    out = {"matroid": matroid_to_json(matroid), "m": multiplicity_to_json(m)}
    if chi is not None:
        out["chi"] = chirotope_to_json(chi)
    return out


def bundle_from_json(d: dict) -> tuple[Matroid, Multiplicity, Chirotope | None]:
    if not isinstance(d, dict) or "matroid" not in d or "m" not in d:
        raise FormatError("bundle needs 'matroid' and 'm'")
    chi = chirotope_from_json(d["chi"]) if d.get("chi") is not None else None
    return matroid_from_json(d["matroid"]), multiplicity_from_json(d["m"]), chi


def parse_matrix(text: str) -> IntegerMatrix:
    """Either JSON ``{"rows": [...], "n": optional}`` or ``r n`` then r rows."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            d = json.loads(stripped)
            return IntegerMatrix.of(d["rows"], d.get("n"))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad matrix JSON: {exc}") from exc
    lines = [ln.split() for ln in stripped.splitlines() if ln.strip()]
    try:
        r, n = map(int, lines[0])
        rows = [list(map(int, ln)) for ln in lines[1:]]
    except (IndexError, ValueError) as exc:
        raise FormatError(f"bad matrix text: {exc}") from exc
    if len(rows) != r or any(len(row) != n for row in rows):
        raise FormatError(f"header says {r}x{n} but body differs")
    try:
        return IntegerMatrix.of(rows, n)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def matrix_to_text(mat: IntegerMatrix) -> str:
    lines = [f"{mat.r} {mat.n}"] + [" ".join(map(str, row)) for row in mat.rows]
    return "\n".join(lines) + "\n"


def _frac(v: Fraction) -> str:
    return str(Fraction(v))


def realization_to_json(real: RationalRealization) -> dict:
    return {"anchor": list(bits.elements(real.anchor)),
            "rows": [[_frac(v) for v in row] for row in real.matrix()]}


def representation_to_json(rep: IntegerRepresentation) -> dict:
    return {
        "anchor": list(bits.elements(rep.anchor)),
        "lattice_basis": [list(row) for row in rep.lattice_basis],
        "coordinates": [list(row) for row in rep.coordinates],
        "torsion_order": rep.torsion,
        "torsion_divisors": list(rep.elementary_divisors),
        "index": rep.index,
        "n": rep.n,
    }
