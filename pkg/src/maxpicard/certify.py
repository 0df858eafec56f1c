"""Exact integer ranks and the Picard-maximality certificate.

If a surface ``X`` maps onto a smooth rational surface ``Y`` and its
singularities are ADE, then the pull-backs of numerically independent
divisors on ``Y`` and the exceptional curves of the minimal resolution span
a lattice of rank ``census rank + (independent divisors)``, since the two
families are orthogonal and each block is nondegenerate.  This gives a lower
bound for the Picard number; ``rho <= h11`` bounds it from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InconsistencyError
from .singularities import SingularityCensus


def matrix_rank(m: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [[int(v) for v in row] for row in m]
    if not a:
        return 0
    ncols = len(a[0])
    if any(len(row) != ncols for row in a):
        raise ValueError("rows of unequal length")
    nrows = len(a)
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                a[r][c] = (p * a[r][c] - a[r][col] * a[rank][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class Certificate:
    census_rank: int
    independent_divisors: int
    extra_rank: int
    lower_bound: int
    h11: int
    maximal: bool

    def __post_init__(self):
        if self.lower_bound != self.census_rank + self.independent_divisors + self.extra_rank:
            raise InconsistencyError("lower bound is not the sum of its parts")
        if self.lower_bound > self.h11:
            raise InconsistencyError(
                f"Picard lower bound {self.lower_bound} exceeds h11 = {self.h11}"
            )
        if self.maximal != (self.lower_bound == self.h11):
            raise InconsistencyError("maximal flag disagrees with the bound")

    def to_json(self) -> dict:
        return {
            "census_rank": self.census_rank,
            "independent_divisors": self.independent_divisors,
            "extra_rank": self.extra_rank,
            "lower_bound": self.lower_bound,
            "h11": self.h11,
            "maximal": self.maximal,
        }


def rank_lower_bound(
    census: SingularityCensus, independent_divisors: int, extra_rank: int = 0
) -> int:
    if independent_divisors < 0 or extra_rank < 0:
        raise ValueError("divisor counts must be nonnegative")
    return census.total_rank + independent_divisors + extra_rank


def certify(
    census: SingularityCensus,
    independent_divisors: int,
    h11: int,
    extra_matrix: Optional[Sequence[Sequence[int]]] = None,
) -> Certificate:
    """Certificate from raw data; the extra rank is recomputed from its matrix."""
    extra = matrix_rank(extra_matrix) if extra_matrix is not None else 0
    bound = rank_lower_bound(census, independent_divisors, extra)
    if bound > h11:
        raise InconsistencyError(
            f"Picard lower bound {bound} exceeds h11 = {h11}: census or invariants are wrong"
        )
    return Certificate(
        census_rank=census.total_rank,
        independent_divisors=independent_divisors,
        extra_rank=extra,
        lower_bound=bound,
        h11=h11,
        maximal=bound == h11,
    )


def certify_maximal(record) -> Certificate:
    """Certificate for anything with ``census``, ``independent_divisors``,
    ``invariants`` and optionally ``extra_matrix`` attributes."""
    extra_matrix = getattr(record, "extra_matrix", None)
    cert = certify(record.census, record.independent_divisors, record.invariants.h11, extra_matrix)
    declared = getattr(record, "extra_rank", cert.extra_rank)
    if declared != cert.extra_rank:
        raise InconsistencyError(
            f"declared extra rank {declared} but the matrix has rank {cert.extra_rank}"
        )
    return cert
