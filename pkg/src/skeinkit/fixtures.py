"""Bundled knot fixtures and their loader."""

from __future__ import annotations

import csv
import io
import warnings
from dataclasses import dataclass
from importlib import resources

from .diagram import is_adequate, parse_pd
from .errors import InconsistentInput, InputError

COLUMNS = ("name", "pd_code", "crossing_number", "adequate")
OPTIONAL = ("writhe",)

# amphicheiral adequate prime knots with at most 12 crossings
AMPHICHEIRAL_ADEQUATE = (
    "4_1", "6_3", "8_3", "8_9", "8_18", "10_17", "10_33", "10_37", "10_43",
    "10_45", "10_99", "10_123", "12a_435", "12a_471", "12a_477", "12a_499",
    "12a_506", "12a_510", "12a_1019", "12a_1039", "12a_1105", "12a_1127",
    "12a_1202", "12a_1273", "12a_1275", "12a_1281", "12a_1287", "12a_1288",
)


@dataclass(frozen=True)
class FixtureRecord:
    name: str
    pd_code: str
    crossing_number: int
    adequate: bool
    writhe: int = None

    def diagram(self):
        return parse_pd(self.pd_code, name=self.name)


def bundled_path():
    return resources.files("skeinkit") / "data" / "fixtures.csv"


def _records(text, source):
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise InputError(f"{source}: empty fixture file")
    fields = [f.strip() for f in reader.fieldnames]
    missing = [c for c in COLUMNS if c not in fields]
    if missing:
        raise InputError(f"{source}: missing column(s) {missing}")
    extra = [f for f in fields if f not in COLUMNS + OPTIONAL]
    if extra:
        warnings.warn(f"{source}: ignoring unknown column(s) {extra}", stacklevel=3)
    for row in reader:
        row = {k.strip(): (v or "").strip() for k, v in row.items() if k}
        flag = row["adequate"].upper()
        if flag not in ("Y", "N"):
            raise InputError(f"{source}: {row['name']}: adequate must be Y or N")
        wr = row.get("writhe", "")
        yield FixtureRecord(row["name"], row["pd_code"], int(row["crossing_number"]),
                            flag == "Y", int(wr) if wr else None)


def check_record(rec):
    """Parse the record and compare declared values with computed ones."""
    d = rec.diagram()
    problems = []
    if d.c != rec.crossing_number:
        problems.append(f"diagram has {d.c} crossings, declared {rec.crossing_number}")
    if is_adequate(d) != rec.adequate:
        problems.append(f"adequacy computed {is_adequate(d)}, declared {rec.adequate}")
    if rec.writhe is not None and d.writhe != rec.writhe:
        problems.append(f"writhe computed {d.writhe}, declared {rec.writhe}")
    if problems:
        raise InconsistentInput(f"{rec.name}: " + "; ".join(problems))
    return d


def load_fixtures(path=None, check=True):
    """Records from ``path`` (default: the bundled table)."""
    if path is None:
        text = bundled_path().read_text()
        source = "bundled fixtures"
    else:
        with open(path, newline="") as fh:
            text = fh.read()
        source = str(path)
    recs = list(_records(text, source))
    if check:
        for r in recs:
            check_record(r)
    return recs


def fixture(name):
    for r in load_fixtures(check=False):
        if r.name == name:
            return r.diagram()
    raise KeyError(name)
