import multiprocessing as mp
from typing import Callable, Iterable, List, TypeVar

from tqdm import tqdm

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    desc: str = "Working",
    progress: bool = False,
) -> List[R]:
    """Map ``func`` over ``items`` keeping input order.

    ``func`` must be a module-level callable when ``workers > 1``.
    """
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in tqdm(items, desc=desc, disable=not progress)]

    results = []
    with mp.Pool(min(workers, len(items))) as pool:
        with tqdm(total=len(items), desc=desc, disable=not progress) as pbar:
            for result in pool.imap(func, items, chunksize=8):
                results.append(result)
                pbar.update(1)
    return results
