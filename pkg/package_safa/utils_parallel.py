"""A Python module to provide the utilities for parallel processing."""

from multiprocessing import Pool

import psutil

from package_safa.common_types import (Callable, Final, Sequence,
                                       TypeVarItem, TypeVarResult)
from package_safa.default_logger import DefaultLogger
from package_safa.utils_name import create_function_name_logger

MIN_ITEMS_PER_PROCESS: Final[int] = 64


def set_num_process() -> int:
    """Set the number of processes for multiprocessing.

    Returns
    -------
    int
        The number of processes for multiprocessing.

    Examples
    --------
    >>> from package_safa.utils_parallel import set_num_process
    >>> set_num_process() >= 1
    True
    """

    num_process_physical: int | None = psutil.cpu_count(logical=False)
    num_process_logical: int | None = psutil.cpu_count(logical=True)

    if (num_process_physical is None) or (num_process_logical is None):
        return 1

    if num_process_physical == 1:
        return 1

    if num_process_physical == num_process_logical:
        return num_process_physical - 1

    return num_process_physical


def parallel_map(func: Callable[[TypeVarItem], TypeVarResult],
                 items: Sequence[TypeVarItem],
                 num_process: int = 1) -> list[TypeVarResult]:
    """Apply a function to every item, in order, using a process pool.

    Parameters
    ----------
    func : Callable[[TypeVarItem], TypeVarResult]
        A picklable function (module-level, or a functools.partial of one).
    items : Sequence[TypeVarItem]
        The inputs.
    num_process : int, optional, default 1
        The number of processes. The work runs in the current process when
        this is 1 or when there are too few items to be worth a pool.

    Returns
    -------
    list[TypeVarResult]
        The results, in the order of `items`.

    Raises
    ------
    InvalidArgumentError
        If `num_process` is not positive.

    Examples
    --------
    >>> from package_safa.utils_parallel import parallel_map
    >>> parallel_map(abs, [-1, 2, -3])
    [1, 2, 3]
    """

    if num_process <= 0:
        logger: DefaultLogger = create_function_name_logger()
        logger.error('Invalid argument: num_process must be positive')

    if (num_process == 1) \
            or (len(items) < num_process * MIN_ITEMS_PER_PROCESS):
        return [func(item) for item in items]

    chunk_size: int = max(1, len(items) // (4 * num_process))
    with Pool(processes=num_process) as pool:
        return pool.map(func, items, chunksize=chunk_size)
