"""
Evaluation of independent sweep points, in-process or in a process pool, yielded in input order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, List, Tuple, TypeVar

Point = TypeVar("Point")
Result = TypeVar("Result")

LOGGER = logging.getLogger(__name__)


def ordered_sweep(
    func: Callable[[Point], Result], points: Iterable[Point], workers: int = 1
) -> Iterator[Tuple[Point, Result]]:
    """
    Yields (point, func(point)) in the order of points.

    With workers > 1 the points are evaluated in chunks of `workers` by a process pool; a chunk is
    yielded only once all of it is evaluated, so a consumer that stops early sees exactly what the
    sequential run would have shown. func must be a picklable module-level function.
    """
    if workers <= 1:
        for point in points:
            yield point, func(point)
        return

    LOGGER.debug("Sweeping with %s worker processes", workers)
    with ProcessPoolExecutor(max_workers=workers) as executor:
        chunk: List[Point] = []
        for point in points:
            chunk.append(point)
            if len(chunk) == workers:
                yield from zip(chunk, executor.map(func, chunk))
                chunk = []
        if chunk:
            yield from zip(chunk, executor.map(func, chunk))
