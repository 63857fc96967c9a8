from __future__ import annotations

import asyncio
import logging
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from ..const.const import LOGGER

ItemT = TypeVar("ItemT")
ResultT = TypeVar("ResultT")


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    LOGGER.setLevel(level)
    if not any(getattr(h, "_frlab_handler", False) for h in LOGGER.handlers):
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s"))
        setattr(handler, "_frlab_handler", True)
        LOGGER.addHandler(handler)
    for handler in LOGGER.handlers:
        handler.setLevel(level)


async def gather_ordered(
    func: Callable[[ItemT], ResultT],
    items: Sequence[ItemT],
    workers: int,
) -> list[ResultT]:
    """Map func over items on a bounded process pool; results keep input order."""
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        futures = [loop.run_in_executor(pool, func, item) for item in items]
        return list(await asyncio.gather(*futures))
