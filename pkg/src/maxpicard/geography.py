"""Geography of the constructions: admissible pairs ``(K^2, chi)``, the region
the family-A construction fills, parameter solvers, rational slopes, and
coverage of the two Horikawa lines ``K^2 = 2 chi - 6`` and ``K^2 = 2 chi - 5``.

All region tests are integer comparisons.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .constructions import FamilyParams, closed_form_invariants
from .errors import InconsistencyError, ParameterError, RegionError

Triple = Tuple[int, int, int]


def is_admissible(k2: int, chi: int) -> bool:
    return k2 >= 1 and chi >= 1 and 2 * chi - 6 <= k2 <= 9 * chi


def in_theorem_region(k2: int, chi: int) -> bool:
    return is_admissible(k2, chi) and 2 * k2 <= 5 * chi - 22


def in_region_by_offset(k2: int, chi: int) -> bool:
    """The same region written as ``K^2 = 2 chi - 6 + k`` with ``chi >= 2k + 10``."""
    k = k2 - (2 * chi - 6)
    return is_admissible(k2, chi) and k >= 0 and chi >= 2 * k + 10


def _round_trip(family: str, triple: Triple, k2: int, chi: int) -> Triple:
    params = FamilyParams(family, *triple)
    problems = params.violations()
    if problems:
        raise InconsistencyError(f"solver produced invalid parameters {triple}: {problems}")
    inv = closed_form_invariants(params)
    if (inv.k2, inv.chi) != (k2, chi):
        raise InconsistencyError(f"{triple} gives ({inv.k2}, {inv.chi}), not ({k2}, {chi})")
    return triple


def solve_family_a(k2: int, chi: int) -> Triple:
    """Family-A parameters realizing a pair of the theorem region."""
    if not in_theorem_region(k2, chi):
        raise RegionError(f"({k2}, {chi}) is outside the region 2K^2 <= 5chi - 22")
    k = k2 - (2 * chi - 6)
    a, b = divmod(chi - (2 * k + 1), 3)
    triple = (a, b, k) if (b - k) % 2 == 0 else (a - 1, b + 3, k)
    return _round_trip("A", triple, k2, chi)


def solve_family_b(k2: int, chi: int) -> Triple:
    k = k2 - (2 * chi - 6)
    if k < 0 or not is_admissible(k2, chi):
        raise RegionError(f"({k2}, {chi}) is not an admissible pair with K^2 >= 2chi - 6")
    if chi < 3 * k + 25:
        raise RegionError(f"({k2}, {chi}) needs chi >= 3k + 25 = {3 * k + 25}")
    rest = chi - (3 * k + 1)
    n = rest // 5
    if (rest - n) % 2:
        n -= 1
    b = rest - 5 * n
    return _round_trip("B", (n, k + b, k), k2, chi)


def density_witness(q) -> Tuple[int, int, int]:
    """A region pair with ``K^2 / chi = q`` exactly, for ``2 < q < 5/2``.

    Returns ``(K^2, chi, lambda)`` with the smallest admissible multiplier.
    """
    q = Fraction(q)
    if not Fraction(2) < q < Fraction(5, 2):
        raise RegionError(f"slope {q} is not in the open interval (2, 5/2)")
    r = q - 2
    a, b = r.numerator, r.denominator
    delta = b - 2 * a
    lam = -(-22 // delta)
    chi, k2 = b * lam, (a + 2 * b) * lam
    if not in_theorem_region(k2, chi) or Fraction(k2, chi) != q:
        raise InconsistencyError(f"density witness ({k2}, {chi}) failed its postcondition")
    return k2, chi, lam


# ---------------------------------------------------------------------------
# extra cases and Horikawa lines
# ---------------------------------------------------------------------------

# pairs on the Horikawa lines outside the solvers' ranges, with witnesses
FAMILY_A_TABLE: Dict[Tuple[int, int], Triple] = {
    (6, 6): (1, 2, 0),
    (8, 7): (2, 0, 0),
    (12, 9): (2, 2, 0),
    (3, 4): (0, 1, 1),
    (9, 7): (1, 1, 1),
    (13, 9): (1, 3, 1),
    (15, 10): (2, 1, 1),
}

FAMILY_B_TABLE: Dict[Tuple[int, int], Triple] = {
    (6, 6): (1, 0, 0),
    (10, 8): (1, 2, 0),
    (16, 11): (2, 0, 0),
    (20, 13): (2, 2, 0),
    (24, 15): (2, 4, 0),
    (26, 16): (3, 0, 0),
    (30, 18): (3, 2, 0),
    (34, 20): (3, 4, 0),
    (36, 21): (4, 0, 0),
    (38, 22): (3, 6, 0),
    (40, 23): (4, 2, 0),
    (3, 4): (0, 1, 1),
    (13, 9): (1, 1, 1),
    (17, 11): (1, 3, 1),
    (23, 14): (2, 1, 1),
    (27, 16): (2, 3, 1),
    (31, 18): (2, 5, 1),
    (33, 19): (3, 1, 1),
    (37, 21): (3, 3, 1),
    (41, 23): (3, 5, 1),
    (43, 24): (4, 1, 1),
    (45, 25): (3, 7, 1),
    (47, 26): (4, 3, 1),
}

EXTRA_TABLES = {"A": FAMILY_A_TABLE, "B": FAMILY_B_TABLE}

FAMILY_A = "FamilyA"
FAMILY_B = "FamilyB"
M13 = "Lemma_M13"
M55 = "Lemma_M55_external"
M76 = "Lemma_M76"
PERSSON = "Persson_external"
OPEN = "Open"

_FAMILY_OF = {FAMILY_A: "A", FAMILY_B: "B"}


@dataclass(frozen=True)
class Source:
    kind: str
    witness: Optional[Triple] = None
    via: Optional[str] = None

    def to_json(self) -> dict:
        out = {"source": self.kind}
        if self.witness is not None:
            out.update(dict(zip("nmk", self.witness)))
            out["via"] = self.via
        return out


@dataclass(frozen=True)
class CoverageVerdict:
    k2: int
    chi: int
    source: Source
    additional: Tuple[Source, ...] = ()

    def __post_init__(self):
        for s in (self.source,) + self.additional:
            if s.kind in _FAMILY_OF:
                _round_trip(_FAMILY_OF[s.kind], s.witness, self.k2, self.chi)

    @property
    def is_open(self) -> bool:
        return self.source.kind == OPEN

    def to_json(self) -> dict:
        return {
            "k2": self.k2,
            "chi": self.chi,
            **self.source.to_json(),
            "additional": [s.to_json() for s in self.additional],
        }


def _family_sources(k2: int, chi: int) -> List[Source]:
    out = []
    if in_theorem_region(k2, chi):
        out.append(Source(FAMILY_A, solve_family_a(k2, chi), "solver"))
    elif (k2, chi) in FAMILY_A_TABLE:
        out.append(Source(FAMILY_A, FAMILY_A_TABLE[(k2, chi)], "table"))
    try:
        out.append(Source(FAMILY_B, solve_family_b(k2, chi), "solver"))
    except RegionError:
        if (k2, chi) in FAMILY_B_TABLE:
            out.append(Source(FAMILY_B, FAMILY_B_TABLE[(k2, chi)], "table"))
    return out


def horikawa_coverage(chi: int, line: str) -> CoverageVerdict:
    """Which construction gives maximal Picard number on a Horikawa line."""
    line = line.lower()
    if line not in ("even", "odd"):
        raise ParameterError(f"line must be 'even' or 'odd', got {line!r}")
    k2 = 2 * chi - (6 if line == "even" else 5)
    if not is_admissible(k2, chi):
        raise RegionError(f"({k2}, {chi}) is not admissible")
    sources = _family_sources(k2, chi)
    if line == "even":
        if chi % 6:
            # below chi = 12 the classical double covers carry the line except at 6, 7, 9
            if chi >= 12 or chi in (6, 7, 9):
                sources.append(Source(PERSSON))
            else:
                sources.insert(0, Source(PERSSON))
    else:
        fixed = {3: M13, 5: M55, 6: M76}
        if chi in fixed:
            sources.insert(0, Source(fixed[chi]))
    if not sources:
        return CoverageVerdict(k2, chi, Source(OPEN))
    return CoverageVerdict(k2, chi, sources[0], tuple(sources[1:]))


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

SWEEP_COLUMNS = ("chi", "k2", "admissible", "in_region", "family", "n", "m", "k", "h11")


def _rows_for_chi(chi: int) -> List[dict]:
    rows = []
    for k2 in range(max(1, 2 * chi - 6), 9 * chi + 1):
        row = {
            "chi": chi,
            "k2": k2,
            "admissible": True,
            "in_region": in_theorem_region(k2, chi),
            "family": None,
            "n": None,
            "m": None,
            "k": None,
            "h11": None,
        }
        if row["in_region"]:
            n, m, k = solve_family_a(k2, chi)
            h11 = closed_form_invariants(FamilyParams("A", n, m, k)).h11
            row.update(family="A", n=n, m=m, k=k, h11=h11)
        rows.append(row)
    return rows


def sweep(max_chi: int, workers: int = 1) -> List[dict]:
    """Every admissible pair with ``chi <= max_chi``, ordered by ``(chi, K^2)``."""
    if max_chi < 1:
        raise ParameterError(f"max_chi must be at least 1, got {max_chi}")
    chis = range(1, max_chi + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_rows_for_chi, chis, chunksize=max(1, max_chi // (4 * workers))))
    else:
        parts = [_rows_for_chi(c) for c in chis]
    return [row for part in parts for row in part]


def sweep_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if row[k] is None else str(row[k]).lower() if isinstance(row[k], bool) else row[k]) for k in SWEEP_COLUMNS})
    return buf.getvalue()


def sweep_json(rows: Sequence[dict]) -> str:
    return json.dumps({"columns": list(SWEEP_COLUMNS), "rows": list(rows)}, indent=None)
