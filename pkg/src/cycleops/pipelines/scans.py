"""
Parameter scans streamed as records: the independence family over a range of (n, m, t) and the
non-membership search over m.

Functions:
    independence_points(n_min, n_max, m_max, t) -> Iterator[Tuple[int, int, int]]
    independence_scan(n_min, n_max, m_max, t, workers) -> Iterator[ScanRecord]
    lemma2_scan(n, i, m_max, scan_all, workers) -> Iterator[ScanRecord]
    summary_table(records) -> PrettyTable
"""

import logging
from typing import Iterable, Iterator, Optional, Tuple

from prettytable import PrettyTable

from .. import CycleOpsInvalidParameters
from ..linear.lemmas import independence_check, lemma2_membership, lemma2_rank
from ..models.certificate import ScanRecord
from .sweep import ordered_sweep

LOGGER = logging.getLogger(__name__)

NON_MEMBER = "non-member"


def independence_points(n_min: int, n_max: int, m_max: int, t: Optional[int] = None) -> Iterator[Tuple[int, int, int]]:
    """
    Yields (m, n, t) for n_min <= n <= n_max, n < m <= m_max and every t >= 1 with 2t < m, or only
    the given t where 2t < m.
    """
    if n_min < 3 or n_max < n_min:
        raise CycleOpsInvalidParameters(f"the scan needs 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if t is not None and t < 1:
        raise CycleOpsInvalidParameters(f"t must be >= 1, got {t}")
    for n in range(n_min, n_max + 1):
        for m in range(n + 1, m_max + 1):
            for s in range(1, (m - 1) // 2 + 1):
                if t is None or s == t:
                    yield m, n, s


def _independence_record(point: Tuple[int, int, int]) -> ScanRecord:
    m, n, t = point
    report = independence_check(m, n, t)
    return ScanRecord(
        params={"n": n, "m": m, "t": t},
        verdict="independent" if report.independent else "dependent",
        rank=report.rank,
    )


def independence_scan(
    n_min: int, n_max: int, m_max: int, t: Optional[int] = None, workers: int = 1
) -> Iterator[ScanRecord]:
    """
    Yields one record per point of independence_points, in order.
    """
    for _, record in ordered_sweep(_independence_record, independence_points(n_min, n_max, m_max, t), workers):
        yield record


def _lemma2_record(point: Tuple[int, int, int]) -> ScanRecord:
    n, i, m = point
    member = lemma2_membership(n, i, m)
    return ScanRecord(
        params={"n": n, "i": i, "m": m}, verdict="member" if member else NON_MEMBER, rank=lemma2_rank(n, i, m)
    )


def lemma2_scan(n: int, i: int, m_max: int, scan_all: bool = False, workers: int = 1) -> Iterator[ScanRecord]:
    """
    Yields one record per m from n+1 to m_max, stopping after the first non-member unless scan_all.
    """
    if not 1 <= i < n - 3:
        raise CycleOpsInvalidParameters(f"the non-membership scan needs 1 <= i < n-3, got n={n}, i={i}")
    for _, record in ordered_sweep(_lemma2_record, ((n, i, m) for m in range(n + 1, m_max + 1)), workers):
        yield record
        if record.verdict == NON_MEMBER and not scan_all:
            return


def summary_table(records: Iterable[ScanRecord]) -> PrettyTable:
    """
    Tabulates scan records, one row per record, one column per parameter.
    """
    rows = list(records)
    params = list(rows[0].params) if rows else []
    table = PrettyTable()
    table.field_names = params + ["verdict", "rank"]
    for record in rows:
        table.add_row([record.params[name] for name in params] + [record.verdict, record.rank])
    return table
