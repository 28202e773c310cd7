"""A Python module to define type aliases.

Examples
--------
>>> from package_safa.common_types import Item
>>> item: Item = ('a', 1)
>>> print(item)
('a', 1)
"""

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from typing import Any, Final, NoReturn, Self, TypeVar, cast

import numpy as np
import numpy.typing as npt

type StateId = str
type Letter = str
type DataValue = int
type Item = tuple[Letter, DataValue]
type SetContents = tuple[frozenset[DataValue], ...]
type Occupancy = tuple[bool, ...]
type Renaming = Mapping[DataValue, DataValue]

type ArrayInt = npt.NDArray[np.int_]
type ArrayBool = npt.NDArray[np.bool_]

TypeVarItem = TypeVar('TypeVarItem')
TypeVarResult = TypeVar('TypeVarResult')
