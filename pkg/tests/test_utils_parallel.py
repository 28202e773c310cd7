from functools import partial

import pytest

from package_safa.common_errors import InvalidArgumentError
from package_safa.safa_core import DataWord
from package_safa.safa_fixtures import lang_fd
from package_safa.utils_parallel import (MIN_ITEMS_PER_PROCESS, parallel_map,
                                         set_num_process)


def test_set_num_process_is_positive() -> None:
    assert set_num_process() >= 1


def test_parallel_map_keeps_order() -> None:
    items = list(range(-5, 5))
    assert parallel_map(abs, items, 1) == [abs(item) for item in items]


def test_parallel_map_with_pool() -> None:
    words = [DataWord((('a', index % 3), ('a', index % 5)))
             for index in range(2 * MIN_ITEMS_PER_PROCESS)]
    expected = [lang_fd(w) for w in words]
    assert parallel_map(partial(lang_fd, letter='a'), words, 2) == expected


def test_parallel_map_rejects_non_positive_process_count() -> None:
    with pytest.raises(InvalidArgumentError):
        parallel_map(abs, [1], 0)
