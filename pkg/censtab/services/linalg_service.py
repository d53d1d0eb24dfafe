import time
from typing import List, Sequence

from censtab.core.exceptions import InvalidInputError
from censtab.core.linalg.matrix import ExactMatrix
from censtab.core.linalg.normal_forms import smith_normal_form
from censtab.core.linalg.ring import ZZ
from censtab.core.utils.logger import get_logger
from censtab.schemas.reports import SnfReportSchema
from monitoring.metrics import metrics_collector

logger = get_logger(__name__)


def parse_matrix(rows: Sequence[Sequence[int]]) -> ExactMatrix:
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise InvalidInputError("matrix must be a list of rows")
    widths = {len(row) for row in rows}
    if len(widths) > 1:
        raise InvalidInputError(f"matrix rows have different lengths {sorted(widths)}")
    for row in rows:
        for entry in row:
            if isinstance(entry, bool) or not isinstance(entry, int):
                raise InvalidInputError(f"matrix entries must be integers, got {entry!r}")
    return ExactMatrix.from_rows(rows, ZZ, widths.pop() if widths else 0)


def snf_report(rows: List[List[int]]) -> SnfReportSchema:
    """Smith normal form with its transforms."""
    started = time.perf_counter()
    matrix = parse_matrix(rows)
    u, d, v = smith_normal_form(matrix)
    diagonal = [d.entries[i][i] for i in range(min(d.nrows, d.ncols))]
    duration = time.perf_counter() - started
    metrics_collector.record_check("snf", True, duration, 1)
    logger.info(f"SNF of a {matrix.nrows}x{matrix.ncols} matrix: {diagonal}")
    return SnfReportSchema(
        matrix=matrix.tolist(),
        U=u.tolist(),
        D=d.tolist(),
        V=v.tolist(),
        diagonal=diagonal,
        wall_time=duration,
    )
