"""JSON and CSV encodings of a :class:`MixedHodgeTable`.

JSON::

    {"g0": 1, "k": 1, "pieces": [{"i": 0, "w": 0, "p": 0, "q": 0, "dim": "1"}, ...]}

CSV has the header ``i,w,p,q,dim``.  In both formats rows are sorted by
``(i, w, p, q)`` and ``dim`` is written as a decimal string, so values of any
size survive the trip.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .mhs_core import MixedHodgeTable

CSV_FIELDS = ("i", "w", "p", "q", "dim")


def table_rows(table: MixedHodgeTable) -> list[dict]:
    return [
        {"i": k.degree, "w": k.weight, "p": k.hodge_p, "q": k.hodge_q, "dim": str(v)}
        for k, v in table.items()
    ]


def to_json(table: MixedHodgeTable, g0: int, k: int) -> str:
    payload = {"g0": g0, "k": k, "pieces": table_rows(table)}
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> tuple[MixedHodgeTable, int, int]:
    payload = json.loads(text)
    pieces = {
        (int(r["i"]), int(r["w"]), int(r["p"]), int(r["q"])): int(r["dim"])
        for r in payload["pieces"]
    }
    return MixedHodgeTable(pieces), int(payload["g0"]), int(payload["k"])


def to_csv(table: MixedHodgeTable) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(table_rows(table))
    return buf.getvalue()


def from_csv(text: str) -> MixedHodgeTable:
    reader = csv.DictReader(io.StringIO(text))
    return MixedHodgeTable(
        {
            (int(r["i"]), int(r["w"]), int(r["p"]), int(r["q"])): int(r["dim"])
            for r in reader
        }
    )


def load_table(path: str | Path) -> MixedHodgeTable:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".csv":
        return from_csv(text)
    return from_json(text)[0]
