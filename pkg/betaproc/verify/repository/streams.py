from concurrent.futures import ThreadPoolExecutor

import numpy as np
from tqdm import tqdm


def replicate_rng(seed: int, *key: int) -> np.random.Generator:
    """
    Independent random stream for one replicate.

    The stream is seeded by SeedSequence([seed, *key]); experiments use
    key = (replicate,) or (n, replicate), so every (seed, key) pair maps to
    one fixed stream whatever the thread count.
    """
    return np.random.default_rng(np.random.SeedSequence([int(seed)] + [int(part) for part in key]))


def run_replicates(task, seed: int, count: int, threads: int = 1, key: tuple = (),
                   progress: bool = False) -> list:
    """
    Runs task(rng) for replicates 0..count-1 and returns results in replicate order.

    Parameters:
    ----------
    task : callable
        Receives the replicate's Generator.
    seed : int
        Master seed.
    count : int
        Number of replicates.
    threads : int
        Worker cap; 1 runs inline.
    key : tuple
        Stream key prefix placed before the replicate index.
    progress : bool
        Show a tqdm progress bar.
    """
    def run(index):
        return task(replicate_rng(seed, *key, index))

    if threads is None or threads <= 1:
        return [run(index) for index in tqdm(range(count), disable=not progress)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(tqdm(pool.map(run, range(count)), total=count, disable=not progress))
