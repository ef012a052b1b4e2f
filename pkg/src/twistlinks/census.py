"""Enumeration of the braid-index-3 T-link classes beta(x,y,z) with their invariants."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .braidword import closure_shape
from .jones3 import jones_xy_fulltwists
from .polyhalf import HalfLaurent
from .tlink import CanonicalForm3, braid_index, parse_canonical, parse_tlink, representative_forms, torus_detect

CSV_COLUMNS = ["canonical", "x", "y", "z", "braid_index", "components", "writhe", "jones", "torus", "tlink_forms"]


@dataclass(frozen=True)
class CensusRow:
    canonical: CanonicalForm3
    tlink_forms: tuple[str, ...]
    braid_index: int
    components: int
    writhe: int
    jones: str
    torus: str | None

    def to_dict(self) -> dict:
        c = self.canonical
        return {
            "canonical": str(c),
            "x": c.x,
            "y": c.y,
            "z": c.z,
            "braid_index": self.braid_index,
            "components": self.components,
            "writhe": self.writhe,
            "jones": self.jones,
            "torus": self.torus,
            "tlink_forms": list(self.tlink_forms),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRow":
        c = parse_canonical(d["canonical"])
        if (c.x, c.y, c.z) != (int(d["x"]), int(d["y"]), int(d["z"])):
            raise ValueError(f"inconsistent census row {d}")
        forms = d["tlink_forms"]
        if isinstance(forms, str):
            forms = forms.split("|") if forms else []
        for f in forms:
            parse_tlink(f)
        torus = d.get("torus") or None
        return cls(c, tuple(forms), int(d["braid_index"]), int(d["components"]), int(d["writhe"]), d["jones"], torus)

    def polynomial(self) -> HalfLaurent:
        return HalfLaurent.from_json(self.jones)


def census_row(c: CanonicalForm3) -> CensusRow:
    forms = representative_forms(c)
    b = braid_index(forms[0])[0]
    shape = closure_shape(c.braid())
    torus = torus_detect(c)
    return CensusRow(
        canonical=c,
        tlink_forms=tuple(str(L) for L in forms),
        braid_index=b,
        components=shape.components,
        writhe=shape.writhe,
        jones=jones_xy_fulltwists(c.x, c.y, c.z).jones().to_json(),
        torus=None if torus is None else f"T({torus[0]},{torus[1]})",
    )


def census_classes(x_max: int, y_max: int, z_max: int) -> list[CanonicalForm3]:
    """Canonical triples within the bounds, ordered by (z, x, y)."""
    if min(x_max, y_max) < 0 or z_max < 3:
        raise ValueError("need x_max, y_max >= 0 and z_max >= 3")
    return [
        CanonicalForm3(x, y, z)
        for z in range(3, z_max + 1, 3)
        for x in range(x_max + 1)
        for y in range(min(x, y_max) + 1)
    ]


def build_census(x_max: int, y_max: int, z_max: int, workers: int = 1) -> list[CensusRow]:
    classes = census_classes(x_max, y_max, z_max)
    if workers > 1 and len(classes) > 1:
        with ProcessPoolExecutor(workers) as ex:
            return list(ex.map(census_row, classes, chunksize=max(1, len(classes) // (4 * workers))))
    return [census_row(c) for c in classes]


def dump_census(rows: list[CensusRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_dict() for r in rows], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, delimiter=";", lineterminator="\n")
        w.writeheader()
        for r in rows:
            d = r.to_dict()
            d["tlink_forms"] = "|".join(d["tlink_forms"])
            d["torus"] = d["torus"] or ""
            w.writerow(d)
        return buf.getvalue()
    raise ValueError(f"unknown census format {fmt!r}")


def load_census(text: str, fmt: str) -> list[CensusRow]:
    if fmt == "json":
        return [CensusRow.from_dict(d) for d in json.loads(text)]
    if fmt == "csv":
        return [CensusRow.from_dict(d) for d in csv.DictReader(io.StringIO(text), delimiter=";")]
    raise ValueError(f"unknown census format {fmt!r}")


def run_census(x_max: int, y_max: int, z_max: int, out: str, fmt: str = "json", workers: int = 1) -> int:
    rows = build_census(x_max, y_max, z_max, workers)
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(dump_census(rows, fmt))
    return len(rows)
